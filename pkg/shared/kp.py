"""
KP affine coordinates of Z and connected correlators from the cycle formula.

  A(z, w) = sum_{n,m >= 0} a_{n,m} z^{-n-1} w^{-m-1}
  a_{n,m} = (-1)^n / ((m+n+1) m! n!) * prod_i prod_{j=-n..m} (v_i + j)

The connected generating polynomial of mu = (mu_1..mu_l) is 1/z_mu times the
coefficient of prod z_i^{-mu_i-1} in
  (-1)^{l-1} sum_{l-cycles} prod_i Ahat(z_{c_i}, z_{c_{i+1}}) - delta_{l,2}/(z_1-z_2)^2
where Ahat adds the kernel 1/(z_a - z_b) to A, expanded by the label order:
  a < b:  sum_k  z_a^{-1-k} z_b^k
  a > b: -sum_k  z_a^k z_b^{-1-k}
Extraction is done on exponents only; no Laurent series are built.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial

from shared.errors import ContractViolation, SizeLimitError
from shared.hurwitz import SCHUR
from shared.parallel import parallel_map
from shared.partitions import Partition, frobenius, z_factor
from shared.vpoly import VPoly, product_over_variables, shifted_product

logger = logging.getLogger(__name__)

CYCLIC = "cyclic"
LITERAL = "literal"


def shifted_block(r, low, high, scale=1):
    """scale * prod_i prod_{j=low..high} (v_i + j)."""
    return product_over_variables(shifted_product(range(low, high + 1)), r, scale)


# ─────────────────────────────────────────────────────────
# AFFINE COORDINATES
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class AffineMatrix:
    r: int
    D: int
    entries: dict = field(compare=True, hash=False)

    def entry(self, n, m):
        if n < 0 or m < 0:
            raise ContractViolation(f"affine index ({n},{m}) must be nonnegative")
        if n + m + 1 > self.D:
            raise SizeLimitError(f"affine entry ({n},{m}) beyond truncation {self.D}")
        return self.entries[(n, m)]

    def to_json(self):
        return {
            "r": self.r,
            "D": self.D,
            "entries": [
                {"n": n, "m": m, "value": str(self.entries[(n, m)])}
                for (n, m) in sorted(self.entries, key=lambda nm: (nm[0] + nm[1], nm[0]))
            ],
        }


def affine_entry(r, n, m):
    scale = Fraction((-1) ** n, (m + n + 1) * factorial(m) * factorial(n))
    return shifted_block(r, -n, m, scale)


def affine_coords(r, D):
    """Every a_{n,m} with n + m + 1 <= D."""
    if D < 1:
        raise ContractViolation(f"affine truncation must be at least 1, got {D}")
    entries = {
        (n, w - 1 - n): affine_entry(r, n, w - 1 - n)
        for w in range(1, D + 1)
        for n in range(w)
    }
    return AffineMatrix(r, D, entries)


# ─────────────────────────────────────────────────────────
# CYCLE EXTRACTION
# ─────────────────────────────────────────────────────────

def _kernel_step(a, b, alpha):
    """Kernel term of Ahat(z_a, z_b) with z_a-exponent alpha: (sign, z_b-exponent) or None."""
    if a < b:
        k = -1 - alpha
        return (1, k) if k >= 0 else None
    k = alpha
    return (-1, -1 - k) if k >= 0 else None


class _Extractor:
    """Walks the factors of one cycle (or chain), propagating exponents variable by variable."""

    def __init__(self, mu, am):
        self.mu = mu.parts
        self.am = am
        self.budget = mu.size
        self.arity = am.r
        self.one = VPoly.one(am.r)

    def _a(self, n, m):
        return self.am.entry(n, m)

    # -- cyclic closure ------------------------------------------------
    def cycle_sum(self, cycle):
        l = len(cycle)
        total = VPoly.zero(self.arity)
        for start in range(l):
            # factors before `start` are kernel terms, factor `start` is the first A term
            order = [(start + t) % l for t in range(l)]
            first_var = cycle[start]
            for w in range(1, self.budget + 1):
                for n0 in range(w):
                    m0 = w - 1 - n0
                    coeff = self._a(n0, m0)
                    total = total + self._walk_cycle(
                        cycle, order, start, 1, -m0 - 1, coeff, w, -n0 - 1, first_var
                    )
        return total

    def _walk_cycle(self, cycle, order, start, t, beta_prev, coeff, used, alpha_first, first_var):
        l = len(cycle)
        if t == l:
            if alpha_first + beta_prev == -self.mu[first_var] - 1:
                return coeff
            return VPoly.zero(self.arity)
        pos = order[t]
        var = cycle[pos]
        nxt = cycle[(pos + 1) % l]
        alpha = -self.mu[var] - 1 - beta_prev
        total = VPoly.zero(self.arity)
        # positions before the start are kernel terms by construction
        if pos > start:
            total = total + self._a_branch(cycle, order, start, t, alpha, coeff, used, alpha_first, first_var)
        step = _kernel_step(var, nxt, alpha)
        if step is not None:
            sign, beta = step
            total = total + self._walk_cycle(
                cycle, order, start, t + 1, beta, coeff.scale(sign), used, alpha_first, first_var
            )
        return total

    def _a_branch(self, cycle, order, start, t, alpha, coeff, used, alpha_first, first_var):
        total = VPoly.zero(self.arity)
        n = -alpha - 1
        if n < 0:
            return total
        for m in range(0, self.budget - used - n):
            w = n + m + 1
            total = total + self._walk_cycle(
                cycle, order, start, t + 1, -m - 1, coeff * self._a(n, m), used + w, alpha_first, first_var
            )
        return total

    # -- literal closure: last factor is A(z_c, z_c) -------------------
    def chain_sum(self, cycle):
        return self._walk_chain(cycle, 0, None, self.one, 0)

    def _walk_chain(self, cycle, pos, beta_prev, coeff, used):
        l = len(cycle)
        var = cycle[pos]
        incoming = 0 if beta_prev is None else beta_prev
        if pos == l - 1:
            # A(z, z): n + m + 2 = mu + 1 + incoming
            s = self.mu[var] + 1 + incoming
            total = VPoly.zero(self.arity)
            for n in range(0, s - 1):
                m = s - 2 - n
                if used + n + m + 1 > self.budget:
                    continue
                total = total + coeff * self._a(n, m)
            return total
        alpha = -self.mu[var] - 1 - incoming
        nxt = cycle[pos + 1]
        total = VPoly.zero(self.arity)
        n = -alpha - 1
        if n >= 0:
            for m in range(0, self.budget - used - n):
                total = total + self._walk_chain(cycle, pos + 1, -m - 1, coeff * self._a(n, m), used + n + m + 1)
        step = _kernel_step(var, nxt, alpha)
        if step is not None:
            sign, beta = step
            total = total + self._walk_chain(cycle, pos + 1, beta, coeff.scale(sign), used)
        return total


def _double_pole_coefficient(mu):
    """[z1^{-mu1-1} z2^{-mu2-1}] of sum_k (k+1) z1^{-2-k} z2^k."""
    k = -mu[1] - 1
    if k >= 0 and -2 - k == -mu[0] - 1:
        return k + 1
    return 0


def _cycle_task(args):
    mu_parts, am, cycle, closure = args
    ex = _Extractor(Partition(mu_parts), am)
    return ex.cycle_sum(cycle) if closure == CYCLIC else ex.chain_sum(cycle)


def zhou_npoint(mu, am, closure=CYCLIC, jobs=1):
    """Connected generating polynomial sum_k N_k(mu) v^k from the affine coordinates."""
    if mu.length < 1:
        raise ContractViolation("zhou_npoint needs a nonempty partition")
    if mu.size > am.D:
        raise SizeLimitError(f"|mu| = {mu.size} exceeds affine truncation {am.D}")
    if closure not in (CYCLIC, LITERAL):
        raise ContractViolation(f"unknown cycle closure {closure!r}")
    l = mu.length
    cycles = [(0,) + rest for rest in permutations(range(1, l))]
    parts = parallel_map(_cycle_task, [(mu.parts, am, c, closure) for c in cycles], jobs=jobs)
    total = VPoly.zero(am.r)
    for p in parts:
        total = total + p
    total = total.scale((-1) ** (l - 1))
    if l == 2:
        total = total - _double_pole_coefficient(mu.parts)
    return total.scale(Fraction(1, z_factor(mu)))


# ─────────────────────────────────────────────────────────
# CLOSED FORMS
# ─────────────────────────────────────────────────────────

def one_point_closed(n, r):
    """(1/n) sum_{k+l=n-1} (-1)^k prod_i prod_{j=-k..l} (v_i+j) / ((k+l+1) k! l!)."""
    if n < 1:
        raise ContractViolation(f"part size must be positive, got {n}")
    total = VPoly.zero(r)
    for k in range(n):
        l = n - 1 - k
        total = total + shifted_block(r, -k, l, Fraction((-1) ** k, (k + l + 1) * factorial(k) * factorial(l)))
    return total.scale(Fraction(1, n))


def two_point_closed(n1, n2, r):
    """Kernel-difference sums minus the A*A term, over n1 n2 (1 + delta)."""
    if not n1 >= n2 >= 1:
        raise ContractViolation(f"two_point_closed needs n1 >= n2 >= 1, got ({n1},{n2})")
    total = VPoly.zero(r)
    for k in range(n1):
        denom = (n1 + n2) * factorial(n1 - 1 - k) * factorial(n2 + k)
        total = total + shifted_block(r, k + 1 - n1, n2 + k, Fraction((-1) ** (n1 - 1 - k), denom))
        total = total - shifted_block(r, -n2 - k, n1 - 1 - k, Fraction((-1) ** (n2 + k), denom))
    for l in range(n1):
        for k in range(n2):
            left = shifted_block(
                r, l + 1 - n1, n2 - 1 - k,
                Fraction((-1) ** (n1 - 1 - l), (n1 + n2 - k - l - 1) * factorial(n2 - 1 - k) * factorial(n1 - 1 - l)),
            )
            right = shifted_block(r, -k, l, Fraction((-1) ** k, (l + k + 1) * factorial(l) * factorial(k)))
            total = total - left * right
    return total.scale(Fraction(1, n1 * n2 * (2 if n1 == n2 else 1)))


# ─────────────────────────────────────────────────────────
# SCHUR COEFFICIENTS <-> AFFINE COORDINATES
# ─────────────────────────────────────────────────────────

def _determinant(matrix, arity):
    """Laplace expansion along the first row; matrices here are at most diagonal-length square."""
    k = len(matrix)
    if k == 0:
        return VPoly.one(arity)
    if k == 1:
        return matrix[0][0]
    total = VPoly.zero(arity)
    for j in range(k):
        if not matrix[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * _determinant(minor, arity)
        total = total + term if j % 2 == 0 else total - term
    return total


def schur_coefficient_from_affine(mu, am):
    """Coefficient of s_mu for mu = (m|n): (-1)^{n_1+..+n_k} det(a_{n_i, m_j})."""
    if mu.size > am.D:
        raise SizeLimitError(f"|mu| = {mu.size} exceeds affine truncation {am.D}")
    m, n = frobenius(mu)
    matrix = [[am.entry(ni, mj) for mj in m] for ni in n]
    return _determinant(matrix, am.r).scale((-1) ** sum(n))


def affine_from_schur(g):
    """Read a_{n,m} = (-1)^n [s_{(m+1, 1^n)}] off a Schur-basis series."""
    if g.basis != SCHUR:
        raise ContractViolation(f"expected a Schur-basis series, got {g.basis}")
    if g.truncation < 1:
        raise ContractViolation("affine coordinates need truncation at least 1")
    entries = {}
    for w in range(1, g.truncation + 1):
        for n in range(w):
            m = w - 1 - n
            hook = Partition((m + 1,) + (1,) * n)
            entries[(n, m)] = g.coefficient(hook).scale((-1) ** n)
    return AffineMatrix(g.arity, g.truncation, entries)
