"""
Hurwitz-type correlators of the generalized dessin partition function.

Three routes to the same numbers:
  - Burnside character sums (disconnected counts, any degree the tables allow)
  - brute-force enumeration of permutation tuples (the oracle, small degree)
  - exp/log of the power-sum generating series (connected from disconnected)

Counts are normalized as (1/d!) * #tuples; a tuple (alpha_1..alpha_r, alpha)
with alpha_i of cycle type with k_i cycles and alpha of cycle type mu,
multiplying to the identity, contributes to N_k(mu).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from shared.characters import character, warm_tables
from shared.defaults import ENGINE_DEFAULTS
from shared.errors import ContractViolation, SizeLimitError
from shared.parallel import parallel_map
from shared.partitions import (
    EMPTY,
    Partition,
    dim_irrep,
    format_partition,
    partitions_of,
    z_factor,
)
from shared.vpoly import VPoly, format_vpoly, product_over_variables

logger = logging.getLogger(__name__)

SCHUR = "schur"
POWERSUM = "powersum"
NON_INTEGRAL = "non-integral"


# ─────────────────────────────────────────────────────────
# GRADED SERIES
# ─────────────────────────────────────────────────────────

class GradedSeries:
    """Truncated series sum_{|lam| <= D} c_lam(v) b_lam, b = s or p; keyed by degree."""

    def __init__(self, basis, arity, truncation, data=None):
        if basis not in (SCHUR, POWERSUM):
            raise ContractViolation(f"unknown basis {basis!r}")
        if truncation < 0:
            raise ContractViolation(f"truncation must be nonnegative, got {truncation}")
        self.basis = basis
        self.arity = arity
        self.truncation = truncation
        self._data = {}
        for d, terms in (data or {}).items():
            for lam, coeff in terms.items():
                self._put(d, lam, coeff)

    def _put(self, d, lam, coeff):
        if lam.size != d:
            raise ContractViolation(f"{format_partition(lam)} stored at degree {d}")
        if d > self.truncation:
            return
        if not isinstance(coeff, VPoly):
            coeff = VPoly.constant(coeff, self.arity)
        if coeff.arity != self.arity:
            raise ContractViolation(f"coefficient arity {coeff.arity} != series arity {self.arity}")
        if coeff:
            self._data.setdefault(d, {})[lam] = coeff
        elif d in self._data:
            self._data[d].pop(lam, None)
            if not self._data[d]:
                del self._data[d]

    @classmethod
    def one(cls, basis, arity, truncation):
        return cls(basis, arity, truncation, {0: {EMPTY: VPoly.one(arity)}})

    @classmethod
    def from_slices(cls, basis, arity, truncation, slices):
        return cls(basis, arity, truncation, dict(enumerate(slices)))

    def coefficient(self, lam):
        return self._data.get(lam.size, {}).get(lam, VPoly.zero(self.arity))

    def slice(self, d):
        return dict(self._data.get(d, {}))

    def degrees(self):
        return sorted(self._data)

    def items(self):
        for d in sorted(self._data):
            for lam in sorted(self._data[d]):
                yield lam, self._data[d][lam]

    def _check(self, other):
        if other.basis != self.basis or other.arity != self.arity:
            raise ContractViolation(
                f"series mismatch: {self.basis}/{self.arity} vs {other.basis}/{other.arity}"
            )

    def add(self, other):
        self._check(other)
        out = GradedSeries(self.basis, self.arity, min(self.truncation, other.truncation), self._data)
        for lam, c in other.items():
            out._put(lam.size, lam, out.coefficient(lam) + c)
        return out

    def scale(self, c):
        return GradedSeries(self.basis, self.arity, self.truncation,
                            {d: {lam: p.scale(c) for lam, p in t.items()} for d, t in self._data.items()})

    def mul(self, other):
        """Truncated product; power-sum basis only (p_lam p_nu = p_{lam u nu})."""
        self._check(other)
        if self.basis != POWERSUM:
            raise ContractViolation("series product is only defined in the power-sum basis")
        D = min(self.truncation, other.truncation)
        out = GradedSeries(POWERSUM, self.arity, D)
        for a in self.degrees():
            for b in other.degrees():
                if a + b > D:
                    continue
                _accumulate_product(out, self._data[a], other._data[b], a + b)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, GradedSeries)
            and self.basis == other.basis
            and self.arity == other.arity
            and self.truncation == other.truncation
            and self._data == other._data
        )

    def first_difference(self, other):
        """First index (in the total order) where two series differ, or None."""
        keys = sorted({lam for lam, _ in self.items()} | {lam for lam, _ in other.items()})
        for lam in keys:
            if self.coefficient(lam) != other.coefficient(lam):
                return lam
        return None

    def to_json_terms(self, degree=None):
        degrees = [degree] if degree is not None else list(range(self.truncation + 1))
        return [
            {
                "degree": d,
                "basis": self.basis,
                "terms": [
                    {"index": format_partition(lam), "coeff": format_vpoly(self._data[d][lam])}
                    for lam in sorted(self._data.get(d, {}))
                ],
            }
            for d in degrees
        ]


def _accumulate_product(out, left, right, d):
    for lam, p in left.items():
        for nu, q in right.items():
            idx = lam + nu
            out._put(d, idx, out.coefficient(idx) + p * q)


def _graded_product(left, right, arity):
    """Product of two homogeneous power-sum slices, as a plain dict."""
    acc = {}
    for lam, p in left.items():
        for nu, q in right.items():
            idx = lam + nu
            acc[idx] = acc.get(idx, VPoly.zero(arity)) + p * q
    return {k: v for k, v in acc.items() if v}


def _require_powersum(g):
    if g.basis != POWERSUM:
        raise ContractViolation(f"expected a power-sum series, got {g.basis}")


def series_log(g):
    """log of a power-sum series with constant term 1; uses d F_d = d G_d - sum j F_j G_{d-j}."""
    _require_powersum(g)
    if g.coefficient(EMPTY) != VPoly.one(g.arity):
        raise ContractViolation("series_log needs degree-0 coefficient 1")
    F = {}
    for d in range(1, g.truncation + 1):
        acc = {lam: p.scale(d) for lam, p in g.slice(d).items()}
        for j in range(1, d):
            if not F.get(j):
                continue
            for idx, c in _graded_product(F[j], g.slice(d - j), g.arity).items():
                acc[idx] = acc.get(idx, VPoly.zero(g.arity)) - c.scale(j)
        F[d] = {lam: p.scale(Fraction(1, d)) for lam, p in acc.items() if p}
    return GradedSeries(POWERSUM, g.arity, g.truncation, F)


def series_exp(g):
    """exp of a power-sum series with zero constant term; d G_d = sum j F_j G_{d-j}."""
    _require_powersum(g)
    if g.coefficient(EMPTY):
        raise ContractViolation("series_exp needs degree-0 coefficient 0")
    G = {0: {EMPTY: VPoly.one(g.arity)}}
    for d in range(1, g.truncation + 1):
        acc = {}
        for j in range(1, d + 1):
            Fj = g.slice(j)
            if not Fj or not G.get(d - j):
                continue
            for idx, c in _graded_product(Fj, G[d - j], g.arity).items():
                acc[idx] = acc.get(idx, VPoly.zero(g.arity)) + c.scale(j)
        G[d] = {lam: p.scale(Fraction(1, d)) for lam, p in acc.items() if p}
    return GradedSeries(POWERSUM, g.arity, g.truncation, G)


# ─────────────────────────────────────────────────────────
# RAMIFICATION PROFILES / GENUS
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class RamificationProfile:
    profiles: tuple

    def __post_init__(self):
        profiles = tuple(self.profiles)
        if not profiles:
            raise ContractViolation("a ramification profile needs at least one partition")
        sizes = {p.size for p in profiles}
        if len(sizes) != 1:
            raise ContractViolation(
                "profiles must have equal size: " + " | ".join(format_partition(p) for p in profiles)
            )
        if profiles[0].size < 1:
            raise ContractViolation("profiles must have size at least 1")
        object.__setattr__(self, "profiles", profiles)

    @property
    def degree(self):
        return self.profiles[0].size

    def __str__(self):
        return "|".join(format_partition(p) for p in self.profiles)


def _genus_from(twice_g_minus_2):
    if twice_g_minus_2 % 2:
        return NON_INTEGRAL
    return twice_g_minus_2 // 2 + 1


def riemann_hurwitz_genus(rp=None, *, r=None, k=None, mu=None):
    """Genus from 2g - 2 = d(m - 2) - sum l(mu_i); NON_INTEGRAL when the parity fails.

    Pass either a RamificationProfile or (r, k, mu) for a correlator, whose
    m = r + 1 profiles have lengths k_1..k_r and l(mu).
    """
    if rp is not None:
        m = len(rp.profiles)
        return _genus_from(rp.degree * (m - 2) - sum(p.length for p in rp.profiles))
    if r is None or k is None or mu is None:
        raise ContractViolation("riemann_hurwitz_genus needs a profile or (r, k, mu)")
    return _genus_from(mu.size * (r - 1) - sum(k) - mu.length)


def genus_admissible(g):
    return g != NON_INTEGRAL and g >= 0


# ─────────────────────────────────────────────────────────
# BURNSIDE ROUTE
# ─────────────────────────────────────────────────────────

def burnside_disconnected(rp, cache=None):
    """sum_eta (dim/d!)^2 prod_i |C_i| chi^eta(C_i)/dim."""
    d = rp.degree
    d_fact = factorial(d)
    total = Fraction(0)
    for eta in partitions_of(d):
        dim = dim_irrep(eta)
        term = Fraction(dim, d_fact) ** 2
        for mu in rp.profiles:
            term *= Fraction(d_fact * character(eta, mu, cache), z_factor(mu) * dim)
            if not term:
                break
        total += term
    return total


_LENGTH_SUMS = {}


def _length_sum(eta, k, cache):
    """sum over nu |- |eta| with l(nu) = k of chi^eta(C_nu)/z_nu."""
    key = (eta, k, getattr(cache, "path", None))
    if key not in _LENGTH_SUMS:
        _LENGTH_SUMS[key] = sum(
            (Fraction(character(eta, nu, cache), z_factor(nu)) for nu in partitions_of(eta.size, k)),
            Fraction(0),
        )
    return _LENGTH_SUMS[key]


def _eta_weight(eta, mu, r, cache):
    d = mu.size
    return Fraction(factorial(d), dim_irrep(eta)) ** (r - 1) * Fraction(character(eta, mu, cache), z_factor(mu))


def _check_counts(r, k):
    if r < 1:
        raise ContractViolation(f"arity must be at least 1, got {r}")
    if len(k) != r:
        raise ContractViolation(f"count vector {tuple(k)} does not have length r={r}")


def n_bullet(r, k, mu, cache=None):
    """Disconnected correlator N_k(mu) by the Burnside sum; 0 outside 1 <= k_i <= |mu|."""
    _check_counts(r, k)
    d = mu.size
    if d == 0 or any(ki < 1 or ki > d for ki in k):
        return Fraction(0)
    total = Fraction(0)
    for eta in partitions_of(d):
        term = _eta_weight(eta, mu, r, cache)
        for ki in k:
            if not term:
                break
            term *= _length_sum(eta, ki, cache)
        total += term
    return total


def _disconnected_coefficient(args):
    r, mu, cache = args
    d = mu.size
    acc = VPoly.zero(r)
    for eta in partitions_of(d):
        w = _eta_weight(eta, mu, r, cache)
        if not w:
            continue
        univariate = [Fraction(0)] + [_length_sum(eta, k, cache) for k in range(1, d + 1)]
        acc = acc + product_over_variables(univariate, r, w)
    return acc


def disconnected_series(r, D, cache=None, jobs=1):
    """Z in the power-sum basis up to degree D: coefficient of p_mu is sum_k N_k(mu) v^k."""
    if D < 0:
        raise ContractViolation(f"truncation must be nonnegative, got {D}")
    if r < 1:
        raise ContractViolation(f"arity must be at least 1, got {r}")
    series = GradedSeries.one(POWERSUM, r, D)
    mus = [mu for d in range(1, D + 1) for mu in partitions_of(d)]
    if jobs > 1:
        warm_tables(D, cache)
    coeffs = parallel_map(_disconnected_coefficient, [(r, mu, cache) for mu in mus], jobs=jobs)
    for mu, c in zip(mus, coeffs):
        series._put(mu.size, mu, c)
    return series


_LOG_MEMO = {}


def connected_series(r, D, cache=None, jobs=1):
    """log Z in the power-sum basis, memoized per (r, D, cache)."""
    key = (r, D, getattr(cache, "path", None))
    if key not in _LOG_MEMO:
        logger.info(f"Calculando log Z para r={r}, D={D}")
        _LOG_MEMO[key] = series_log(disconnected_series(r, D, cache, jobs))
    return _LOG_MEMO[key]


def n_circ(r, k, mu, cache=None):
    """Connected correlator: coefficient of v^k in the p_mu-coefficient of log Z."""
    _check_counts(r, k)
    d = mu.size
    if d == 0 or any(ki < 1 or ki > d for ki in k):
        return Fraction(0)
    return connected_series(r, d, cache).coefficient(mu).coefficient(tuple(k))


def generating_polynomial(r, mu, connected=True, cache=None):
    """sum_k N_k(mu) prod v_i^{k_i} as a VPoly."""
    if connected:
        return connected_series(r, mu.size, cache).coefficient(mu)
    return _disconnected_coefficient((r, mu, cache))


# ─────────────────────────────────────────────────────────
# PERMUTATION ORACLE
# ─────────────────────────────────────────────────────────

def _class_elements(d, cycle_type):
    """All permutations of {0..d-1} (as image tuples) with the given cycle type."""
    out = []

    def build(perm, unused, lengths):
        if not unused:
            out.append(tuple(perm))
            return
        first = min(unused)
        rest = unused - {first}
        for length in sorted(set(lengths), reverse=True):
            remaining = list(lengths)
            remaining.remove(length)
            for tail in _ordered_choices(sorted(rest), length - 1):
                cycle = (first,) + tail
                for i, x in enumerate(cycle):
                    perm[x] = cycle[(i + 1) % length]
                build(perm, rest - set(tail), remaining)

    build([None] * d, frozenset(range(d)), list(cycle_type.parts))
    return out


def _ordered_choices(pool, n):
    if n == 0:
        yield ()
        return
    for i, x in enumerate(pool):
        for tail in _ordered_choices(pool[:i] + pool[i + 1:], n - 1):
            yield (x,) + tail


_CLASS_CACHE = {}


def class_elements(cycle_type):
    key = cycle_type
    if key not in _CLASS_CACHE:
        _CLASS_CACHE[key] = _class_elements(cycle_type.size, cycle_type)
    return _CLASS_CACHE[key]


def cycle_type(perm):
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            n += 1
        lengths.append(n)
    return Partition.from_unsorted(lengths)


def _compose(p, q):
    """(p * q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def _is_transitive(perms, d):
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i in range(d):
            a, b = find(i), find(p[i])
            if a != b:
                parent[a] = b
    root = find(0)
    return all(find(i) == root for i in range(d))


def _oracle_chunk(args):
    profile_parts, head_chunk, connected = args
    profiles = [Partition(p) for p in profile_parts]
    d = profiles[0].size
    target = profiles[-1]
    middle = [class_elements(p) for p in profiles[1:-1]]
    identity = tuple(range(d))
    count = 0
    for head in head_chunk:
        for rest in product(*middle):
            prod_perm = head
            for p in rest:
                prod_perm = _compose(prod_perm, p)
            # the last permutation is forced to be the inverse of the product
            if cycle_type(prod_perm) != target:
                continue
            if connected and not _is_transitive((head,) + rest, d):
                continue
            count += 1
    return count


def _oracle(rp, connected, jobs):
    d = rp.degree
    limit = ENGINE_DEFAULTS["oracle_max_degree"]
    if d > limit:
        raise SizeLimitError(f"oracle degree {d} exceeds bound {limit}")
    if len(rp.profiles) == 1:
        only = rp.profiles[0]
        ok = only == Partition((1,) * d) and (not connected or d == 1)
        return Fraction(1 if ok else 0, factorial(d))
    heads = class_elements(rp.profiles[0])
    chunks = [heads[i::max(jobs, 1)] for i in range(max(jobs, 1))]
    chunks = [c for c in chunks if c]
    parts = tuple(p.parts for p in rp.profiles)
    counts = parallel_map(_oracle_chunk, [(parts, c, connected) for c in chunks], jobs=jobs)
    return Fraction(sum(counts), factorial(d))


def oracle_disconnected(rp, jobs=1):
    """(1/d!) #{(alpha_1..alpha_m): prod = e, alpha_i in C_i} by enumeration."""
    return _oracle(rp, False, jobs)


def oracle_connected(rp, jobs=1):
    """As oracle_disconnected, keeping only tuples that generate a transitive group."""
    return _oracle(rp, True, jobs)


def oracle_correlator(r, k, mu, connected=False, jobs=1):
    """N_k(mu) summed over all profile tuples with the prescribed lengths, by enumeration."""
    _check_counts(r, k)
    d = mu.size
    if d == 0 or any(ki < 1 or ki > d for ki in k):
        return Fraction(0)
    total = Fraction(0)
    for choice in product(*(partitions_of(d, ki) for ki in k)):
        rp = RamificationProfile(tuple(choice) + (mu,))
        total += _oracle(rp, connected, jobs)
    return total


def hurwitz_number(rp, connected=False, cache=None, jobs=1):
    """Hurwitz number of a full profile list with its Riemann-Hurwitz genus."""
    value = oracle_connected(rp, jobs) if connected else burnside_disconnected(rp, cache)
    return {
        "profiles": str(rp),
        "connected": connected,
        "genus": riemann_hurwitz_genus(rp),
        "value": value,
    }
