"""
Cut-and-join operators on the Schur basis and the flows that build Z.

The degree-raising operators P_{-1}^{(k)} add one box to a Schur index:
    P_{-1}^{(k)} s_mu = sum_{mu + box} k [c(box)]_{k-1} s_{mu + box}
and the combination sum_k a_k(v) P_{-1}^{(k)} adds a box weighted by
prod_i (c(box) + v_i). Z is exp(s * combined)(1); the s-grading is the
series degree, so degree d carries the factor 1/d! and no symbolic s.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from shared.characters import (
    character,
    hook_content_poly,
    principal_eval,
)
from shared.errors import ContractViolation
from shared.hurwitz import POWERSUM, SCHUR, GradedSeries
from shared.parallel import parallel_map
from shared.partitions import (
    EMPTY,
    add_box,
    addable_boxes,
    contents,
    falling_factorial,
    partitions_of,
    partitions_up_to,
    remove_box,
    removable_boxes,
    z_factor,
)
from shared.vpoly import (
    VPoly,
    elementary_symmetric,
    product_over_variables,
    shifted_product,
)

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────
# a_k(v) COEFFICIENTS
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class OperatorSpec:
    """a_1..a_{r+1} with sum_k k a_k [x]_{k-1} = prod_i (x + v_i)."""

    r: int
    coefficients: tuple

    def a(self, k):
        return self.coefficients[k - 1]

    def relation_residual(self):
        """LHS - RHS of the defining relation, in arity r+1 with x as the last variable."""
        n = self.r + 1
        x = VPoly.variable(self.r, n)
        positions = list(range(self.r))
        lhs = VPoly.zero(n)
        for k, ak in enumerate(self.coefficients, start=1):
            term = ak.embed(n, positions).scale(k)
            for j in range(k - 1):
                term = term * (x - j)
            lhs = lhs + term
        rhs = VPoly.one(n)
        for i in range(self.r):
            rhs = rhs * (x + VPoly.variable(i, n))
        return lhs - rhs

    def to_json(self):
        return {"r": self.r, "a": [str(c) for c in self.coefficients]}


def a_coeffs_closed(r):
    """Closed form: a_k = (-1)^{k-1}/k! e_r + (1/k) sum_j (sum_i (-1)^{i+k-1} i^{r-j}/(i!(k-1-i)!)) e_j."""
    if r < 1:
        raise ContractViolation(f"arity must be at least 1, got {r}")
    e = [elementary_symmetric(r, j) for j in range(r + 1)]
    coeffs = []
    for k in range(1, r + 2):
        ak = e[r].scale(Fraction((-1) ** (k - 1), factorial(k)))
        for j in range(r + 1):
            inner = sum(
                (Fraction((-1) ** (i + k - 1) * i ** (r - j), factorial(i) * factorial(k - 1 - i))
                 for i in range(1, k)),
                Fraction(0),
            )
            if inner:
                ak = ak + e[j].scale(inner / k)
        coeffs.append(ak)
    return OperatorSpec(r, tuple(coeffs))


def a_coeffs_from_relation(r):
    """Triangular solve: at x = 0..r only a_1..a_{x+1} survive the falling factorials."""
    if r < 1:
        raise ContractViolation(f"arity must be at least 1, got {r}")
    e = [elementary_symmetric(r, j) for j in range(r + 1)]
    coeffs = []
    for x in range(r + 1):
        rhs = VPoly.zero(r)
        for j in range(r + 1):
            rhs = rhs + e[j].scale(x ** (r - j))
        for k, ak in enumerate(coeffs, start=1):
            rhs = rhs - ak.scale(k * falling_factorial(x, k - 1))
        coeffs.append(rhs.scale(Fraction(1, (x + 1) * factorial(x))))
    return OperatorSpec(r, tuple(coeffs))


# ─────────────────────────────────────────────────────────
# OPERATORS ON THE SCHUR BASIS
# ─────────────────────────────────────────────────────────

def _require_schur(g):
    if g.basis != SCHUR:
        raise ContractViolation(f"expected a Schur-basis series, got {g.basis}")


@lru_cache(maxsize=None)
def content_weight(r, c):
    """prod_i (v_i + c)."""
    return product_over_variables([Fraction(c), Fraction(1)], r)


def _raise_slice(terms, arity, weight):
    """Add one box to every index; weight(content) -> VPoly or Rational."""
    out = {}
    for lam, coeff in terms.items():
        for b in addable_boxes(lam):
            w = weight(b.col - b.row)
            if not w:
                continue
            nu = add_box(lam, b)
            out[nu] = out.get(nu, VPoly.zero(arity)) + coeff * w
    return {k: v for k, v in out.items() if v}


def _lower_slice(terms, arity, weight):
    out = {}
    for lam, coeff in terms.items():
        for b in removable_boxes(lam):
            w = weight(b.col - b.row)
            if not w:
                continue
            nu = remove_box(lam, b)
            out[nu] = out.get(nu, VPoly.zero(arity)) + coeff * w
    return {k: v for k, v in out.items() if v}


def _map_slices(g, fn, shift):
    out = {}
    for d in g.degrees():
        for lam, c in fn(g.slice(d)).items():
            out.setdefault(lam.size, {})[lam] = c
    return GradedSeries(SCHUR, g.arity, max(g.truncation + shift, 0), out)


def apply_p_minus1(k, g):
    """P_{-1}^{(k)}: add a box with weight k [c]_{k-1}."""
    _require_schur(g)
    if k < 1:
        raise ContractViolation(f"operator order must be at least 1, got {k}")
    return _map_slices(
        g, lambda t: _raise_slice(t, g.arity, lambda c: Fraction(k * falling_factorial(c, k - 1))), 1
    )


def apply_combined(ops, g):
    """sum_k a_k P_{-1}^{(k)} via the hook-content form: add a box with weight prod_i (c + v_i)."""
    _require_schur(g)
    r = ops.r if isinstance(ops, OperatorSpec) else int(ops)
    if r != g.arity:
        raise ContractViolation(f"operator arity {r} != series arity {g.arity}")
    return _map_slices(g, lambda t: _raise_slice(t, r, lambda c: content_weight(r, c)), 1)


def series_times_poly(g, p):
    return GradedSeries(g.basis, g.arity, g.truncation,
                        {d: {lam: c * p for lam, c in g.slice(d).items()} for d in g.degrees()})


def apply_combined_by_orders(ops, g):
    """Same operator as apply_combined, summed order by order with the a_k coefficients."""
    _require_schur(g)
    total = GradedSeries(SCHUR, g.arity, g.truncation + 1)
    for k, ak in enumerate(ops.coefficients, start=1):
        total = total.add(series_times_poly(apply_p_minus1(k, g), ak))
    return total


def apply_lowering(order, g):
    """Box-removing operators: order 1 is d/dt_1 (weight 1), order 2 is L_1 (weight = content)."""
    _require_schur(g)
    if order == 1:
        weight = lambda c: Fraction(1)  # noqa: E731
    elif order == 2:
        weight = lambda c: Fraction(c)  # noqa: E731
    else:
        raise ContractViolation(f"lowering operators exist for order 1 and 2 only, got {order}")
    return _map_slices(g, lambda t: _lower_slice(t, g.arity, weight), -1)


# ─────────────────────────────────────────────────────────
# BUILDING Z
# ─────────────────────────────────────────────────────────

def _raise_chunk(args):
    r, chunk = args
    return _raise_slice(dict(chunk), r, lambda c: content_weight(r, c))


def z_flow(r, D, jobs=1):
    """exp(s * combined)(1) degree by degree: slice_{d+1} = combined(slice_d) / (d+1)."""
    if D < 0:
        raise ContractViolation(f"truncation must be nonnegative, got {D}")
    current = {EMPTY: VPoly.one(r)}
    slices = [current]
    for d in range(D):
        items = sorted(current.items())
        n = max(1, min(jobs, len(items)))
        parts = parallel_map(_raise_chunk, [(r, items[i::n]) for i in range(n)], jobs=jobs)
        merged = {}
        for part in parts:
            for lam, c in part.items():
                merged[lam] = merged.get(lam, VPoly.zero(r)) + c
        current = {lam: c.scale(Fraction(1, d + 1)) for lam, c in merged.items() if c}
        slices.append(current)
        logger.debug(f"z_flow r={r}: grau {d + 1} com {len(current)} termos")
    return GradedSeries.from_slices(SCHUR, r, D, slices)


def z_direct_coefficient(eta, r):
    """prod_box prod_i (v_i + c(box)) / prod hooks."""
    return product_over_variables(shifted_product(contents(eta)), r, principal_eval(eta))


def z_direct(r, D):
    """Schur expansion of Z: coefficient of s_eta from contents and hooks."""
    if D < 0:
        raise ContractViolation(f"truncation must be nonnegative, got {D}")
    data = {}
    for eta in partitions_up_to(D):
        c = z_direct_coefficient(eta, r)
        if c:
            data.setdefault(eta.size, {})[eta] = c
    return GradedSeries(SCHUR, r, D, data)


def cut_and_join_residual(ops, g):
    """First degree d where (d+1) Z_{d+1} != (sum_k a_k P_{-1}^{(k)}) Z_d, else None."""
    _require_schur(g)
    for d in range(g.truncation):
        source = GradedSeries(SCHUR, g.arity, d, {d: g.slice(d)})
        lhs = {lam: c.scale(d + 1) for lam, c in g.slice(d + 1).items()}
        rhs = apply_combined_by_orders(ops, source).slice(d + 1)
        if lhs != rhs:
            return d
    return None


# ─────────────────────────────────────────────────────────
# BASIS CONVERSION
# ─────────────────────────────────────────────────────────

def schur_series_to_powersum(g, cache=None):
    _require_schur(g)
    out = GradedSeries(POWERSUM, g.arity, g.truncation)
    for eta, coeff in g.items():
        for lam in partitions_of(eta.size):
            chi = character(eta, lam, cache)
            if chi:
                out._put(lam.size, lam, out.coefficient(lam) + coeff.scale(Fraction(chi, z_factor(lam))))
    return out


def powersum_series_to_schur(g, cache=None):
    if g.basis != POWERSUM:
        raise ContractViolation(f"expected a power-sum series, got {g.basis}")
    out = GradedSeries(SCHUR, g.arity, g.truncation)
    for mu, coeff in g.items():
        for lam in partitions_of(mu.size):
            chi = character(lam, mu, cache)
            if chi:
                out._put(lam.size, lam, out.coefficient(lam) + coeff.scale(chi))
    return out


# ─────────────────────────────────────────────────────────
# VIRASORO FLOW (one variable)
# ─────────────────────────────────────────────────────────

def virasoro_flow(D):
    """exp(s (L_{-1} + v t_1))(1) with L_{-1} = P_{-1}^{(2)}/2 and t_1 = P_{-1}^{(1)}."""
    if D < 0:
        raise ContractViolation(f"truncation must be nonnegative, got {D}")
    v = VPoly.variable(0, 1)
    current = GradedSeries.one(SCHUR, 1, 0)
    slices = [current.slice(0)]
    for d in range(D):
        step = apply_p_minus1(2, current).scale(Fraction(1, 2)).add(series_times_poly(apply_p_minus1(1, current), v))
        nxt = {lam: c.scale(Fraction(1, d + 1)) for lam, c in step.slice(d + 1).items()}
        slices.append(nxt)
        current = GradedSeries(SCHUR, 1, d + 1, {d + 1: nxt})
    return GradedSeries.from_slices(SCHUR, 1, D, slices)


def euler_identity_residual(lam):
    """(L_1 + v d/dt_1) s_lam at t_k = v/k, minus |lam| s_lam(t_k = v/k); zero VPoly when it holds."""
    v = VPoly.variable(0, 1)
    g = GradedSeries(SCHUR, 1, lam.size, {lam.size: {lam: VPoly.one(1)}})
    lowered = apply_lowering(2, g).add(series_times_poly(apply_lowering(1, g), v))
    total = VPoly.zero(1)
    for nu, c in lowered.items():
        total = total + c * hook_content_poly(nu)
    return total - hook_content_poly(lam).scale(lam.size)
