"""
Exact polynomial fits of sampled correlators.

Two families are fitted:
  - n -> n! * N_{n-lam_1,..,n-lam_k,n,..,n}((mu, 1^{n-|mu|}))  (disconnected,
    a polynomial of degree <= |mu| + 2|lam| in n)
  - mu -> z_mu * N°_{|mu|-k_1,..,|mu|-k_{r-1},k_r}(mu)  (connected, conjectured
    polynomial in the parts of mu for |mu| > max k_i)

All solves are exact. A fit that disagrees with a sample is reported in the
FitReport (status "counter-evidence"), never raised.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from math import comb, factorial, prod

import pandas as pd
import sympy as sp

from shared.characters import warm_tables
from shared.defaults import FIT_DEFAULTS
from shared.errors import ContractViolation
from shared.hurwitz import (
    generating_polynomial,
    genus_admissible,
    n_bullet,
    riemann_hurwitz_genus,
)
from shared.kp import affine_coords, one_point_closed, two_point_closed, zhou_npoint
from shared.parallel import parallel_map
from shared.partitions import EMPTY, Partition, format_partition, partitions_of, z_factor
from shared.vpoly import format_rational

logger = logging.getLogger(__name__)

N, N1, N2 = sp.symbols("n n1 n2")
VARIABLES = {1: (N,), 2: (N1, N2)}

FIT_OK = "ok"
COUNTER_EVIDENCE = "counter-evidence"
INSUFFICIENT = "insufficient-data"

ROUTE_CLOSED = "closed"
ROUTE_ZHOU = "zhou"
ROUTE_LOG = "log"
ROUTES = (ROUTE_CLOSED, ROUTE_ZHOU, ROUTE_LOG)


def _sym(value):
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def _frac(value):
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _evaluate(expr, variables, point):
    return _frac(sp.sympify(expr).subs(dict(zip(variables, point))))


def _total_degree(expr, variables):
    expr = sp.expand(expr)
    if expr == 0:
        return 0
    return sp.Poly(expr, *variables).total_degree()


def _forward_differences(values):
    """[Delta^d f(0) for d = 0..len-1] from f(0), f(1), ..."""
    row = list(values)
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


# ─────────────────────────────────────────────────────────
# BINOMIAL BASIS
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class BinomialExpansion:
    """sum c_d C(n, d), or sum c_{d1,d2} C(n1, d1) C(n2, d2) when dimension is 2."""
    dimension: int
    coefficients: dict = field(hash=False)

    def _index(self, key):
        return (key,) if self.dimension == 1 else key

    @property
    def variables(self):
        return VARIABLES[self.dimension]

    def evaluate(self, point):
        total = Fraction(0)
        for key, c in self.coefficients.items():
            total += c * prod(comb(x, d) for x, d in zip(point, self._index(key)))
        return total

    @property
    def nonneg_integral(self):
        return all(c.denominator == 1 and c >= 0 for c in self.coefficients.values())

    def reconstructs(self, samples):
        return all(self.evaluate(point) == value for point, value in samples)

    def to_text(self):
        if not self.coefficients:
            return "0"
        names = [str(v) for v in self.variables]
        out = ""
        for key in sorted(self.coefficients, reverse=True):
            c = self.coefficients[key]
            basis = "*".join(
                f"C({name},{d})" for name, d in zip(names, self._index(key)) if d
            )
            mag = abs(c)
            if not basis:
                body = format_rational(mag)
            elif mag == 1:
                body = basis
            else:
                body = f"{format_rational(mag)}*{basis}"
            if not out:
                out = f"-{body}" if c < 0 else body
            else:
                out += f" - {body}" if c < 0 else f" + {body}"
        return out

    def to_json(self):
        def key_text(key):
            return str(key) if self.dimension == 1 else ",".join(str(d) for d in key)

        return {
            "dimension": self.dimension,
            "coefficients": {
                key_text(key): format_rational(self.coefficients[key])
                for key in sorted(self.coefficients)
            },
            "text": self.to_text(),
        }


def binomial_expansion_1d(expr, variable=N):
    degree = _total_degree(expr, (variable,))
    values = [_evaluate(expr, (variable,), (i,)) for i in range(degree + 1)]
    diffs = _forward_differences(values)
    return BinomialExpansion(1, {d: c for d, c in enumerate(diffs) if c})


def binomial_expansion_2d(expr, variables=(N1, N2)):
    """Product-basis coefficients from mixed forward differences at the origin."""
    expr = sp.expand(expr)
    if expr == 0:
        return BinomialExpansion(2, {})
    x1, x2 = variables
    d1, d2 = sp.degree(expr, x1), sp.degree(expr, x2)
    grid = [[_evaluate(expr, variables, (i, j)) for j in range(d2 + 1)] for i in range(d1 + 1)]
    rows = [_forward_differences(row) for row in grid]
    coeffs = {}
    for j in range(d2 + 1):
        column = _forward_differences([rows[i][j] for i in range(d1 + 1)])
        for i, c in enumerate(column):
            if c:
                coeffs[(i, j)] = c
    return BinomialExpansion(2, coeffs)


def binomial_expansion(expr, variables):
    if len(variables) == 1:
        return binomial_expansion_1d(expr, variables[0])
    if len(variables) == 2:
        return binomial_expansion_2d(expr, variables)
    raise ContractViolation(f"binomial expansion only for 1 or 2 variables, got {len(variables)}")


# ─────────────────────────────────────────────────────────
# NEWTON INTERPOLATION
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class NewtonFit:
    polynomial: sp.Expr
    degree: int
    binomial: BinomialExpansion
    # (argument, observed, predicted) for samples the polynomial misses
    offending: tuple = ()

    @property
    def consistent(self):
        return not self.offending


def newton_fit(points, degree=None, variable=N):
    """
    Exact interpolation through (n, value) points.

    Without `degree` every point is used and the result is the unique
    polynomial of minimal degree through all of them. With `degree` only the
    first degree+1 points (by argument) are interpolated; the rest are checked
    and any mismatch is returned in `offending`.
    """
    points = sorted((int(x), Fraction(y)) for x, y in points)
    if not points:
        raise ContractViolation("newton_fit needs at least one point")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ContractViolation(f"newton_fit arguments must be distinct: {xs}")
    if degree is not None and len(points) < degree + 1:
        raise ContractViolation(f"degree {degree} needs {degree + 1} points, got {len(points)}")

    used = points if degree is None else points[:degree + 1]
    table = [y for _, y in used]
    newton = [table[0]]
    for j in range(1, len(used)):
        table = [(table[i + 1] - table[i]) / (used[i + j][0] - used[i][0]) for i in range(len(table) - 1)]
        newton.append(table[0])

    expr = sp.Integer(0)
    basis = sp.Integer(1)
    for j, c in enumerate(newton):
        if c:
            expr += _sym(c) * basis
        basis *= variable - used[j][0]
    expr = sp.expand(expr)

    offending = []
    for x, y in points[len(used):]:
        predicted = _evaluate(expr, (variable,), (x,))
        if predicted != y:
            offending.append((x, y, predicted))
    return NewtonFit(
        polynomial=expr,
        degree=_total_degree(expr, (variable,)),
        binomial=binomial_expansion_1d(expr, variable),
        offending=tuple(offending),
    )


# ─────────────────────────────────────────────────────────
# MULTIVARIATE SOLVE
# ─────────────────────────────────────────────────────────

def _monomials(nvars, degree):
    return [
        e for e in cartesian(range(degree + 1), repeat=nvars)
        if sum(e) <= degree
    ]


def _solve_exact(samples, degree, variables):
    """
    Fit total degree <= `degree` on the shortest prefix of `samples` that pins
    the coefficients, then check the rest.

    Returns (expr, offending, determined). `determined` is False when the
    samples cannot fix every coefficient.
    """
    monos = _monomials(len(variables), degree)
    if len(samples) < len(monos):
        return None, [], False
    rows = [[prod(sp.Integer(x) ** e for x, e in zip(point, mono)) for mono in monos] for point, _ in samples]
    rhs = [_sym(value) for _, value in samples]
    cut = len(monos)
    while True:
        A = sp.Matrix(rows[:cut])
        b = sp.Matrix(rhs[:cut])
        try:
            solution, params = A.gauss_jordan_solve(b)
        except ValueError:
            point, value = samples[cut - 1]
            return None, [(point, value, None)], True
        if params.shape[0] == 0:
            break
        cut += 1
        if cut > len(samples):
            return None, [], False
    expr = sp.expand(sum(
        solution[i, 0] * prod(v ** e for v, e in zip(variables, mono))
        for i, mono in enumerate(monos)
    ))
    offending = []
    for point, value in samples[cut:]:
        predicted = _evaluate(expr, variables, point)
        if predicted != value:
            offending.append((point, value, predicted))
    return expr, offending, True


def _fit_at_degree(samples, degree, variables):
    if len(variables) == 1:
        if len(samples) < degree + 1:
            return None, [], False
        fit = newton_fit([(p[0], v) for p, v in samples], degree, variables[0])
        return fit.polynomial, [((x,), y, pred) for x, y, pred in fit.offending], True
    return _solve_exact(samples, degree, variables)


# ─────────────────────────────────────────────────────────
# REPORT
# ─────────────────────────────────────────────────────────

@dataclass
class FitReport:
    kind: str
    parameters: dict
    variables: tuple
    status: str = INSUFFICIENT
    fitted: object = None
    degree_used: int = None
    training: list = field(default_factory=list)
    holdout: list = field(default_factory=list)
    holdout_verified: list = field(default_factory=list)
    binomial: BinomialExpansion = None
    nonneg_integral: bool = None
    offending: list = field(default_factory=list)
    degrees_tried: list = field(default_factory=list)
    skipped_vanishing: int = 0
    known: object = None
    known_match: bool = None

    @property
    def ok(self):
        return self.status == FIT_OK

    def to_frame(self):
        """One row per sample with its role and the fitted prediction."""
        rows = []
        for role, samples in (("training", self.training), ("holdout", self.holdout)):
            for point, value in samples:
                predicted = None if self.fitted is None else _evaluate(self.fitted, self.variables, point)
                rows.append({
                    "point": ",".join(str(x) for x in point),
                    "role": role,
                    "value": format_rational(value),
                    "predicted": None if predicted is None else format_rational(predicted),
                    "match": predicted == value if predicted is not None else None,
                })
        return pd.DataFrame(rows, columns=["point", "role", "value", "predicted", "match"])

    def to_json(self):
        def sample_json(point, value, role):
            return {"point": list(point), "value": format_rational(value), "role": role}

        return {
            "kind": self.kind,
            "parameters": self.parameters,
            "status": self.status,
            "variables": [str(v) for v in self.variables],
            "degree_used": self.degree_used,
            "degrees_tried": list(self.degrees_tried),
            "fitted": None if self.fitted is None else {
                "monomial": str(self.fitted),
                "binomial": None if self.binomial is None else self.binomial.to_text(),
            },
            "binomial": None if self.binomial is None else self.binomial.to_json(),
            "nonneg_integral": self.nonneg_integral,
            "samples": (
                [sample_json(p, v, "training") for p, v in self.training]
                + [sample_json(p, v, "holdout") for p, v in self.holdout]
            ),
            "holdout_verified": list(self.holdout_verified),
            "offending": [
                {
                    "point": list(point),
                    "observed": format_rational(observed),
                    "predicted": None if predicted is None else format_rational(predicted),
                }
                for point, observed, predicted in self.offending
            ],
            "skipped_vanishing": self.skipped_vanishing,
            "known_closed_form": None if self.known is None else str(self.known),
            "known_match": self.known_match,
        }


def _finish(report, expr):
    """Fill in the fields derived from an accepted polynomial."""
    report.status = FIT_OK
    report.fitted = expr
    report.degree_used = _total_degree(expr, report.variables)
    report.holdout_verified = [True] * len(report.holdout)
    if len(report.variables) <= 2:
        report.binomial = binomial_expansion(expr, report.variables)
        report.nonneg_integral = report.binomial.nonneg_integral
        if not report.binomial.reconstructs(report.training + report.holdout):
            raise ContractViolation("binomial expansion does not reproduce the fitted samples")
    return report


def _check_holdout(expr, variables, holdout):
    checks = []
    for point, value in holdout:
        predicted = _evaluate(expr, variables, point)
        checks.append((point, value, predicted))
    return checks


# ─────────────────────────────────────────────────────────
# DISCONNECTED (STANLEY-TYPE) POLYNOMIALITY
# ─────────────────────────────────────────────────────────

def _stanley_sample(args):
    r, lam_parts, mu_parts, n, cache = args
    k = tuple(n - p for p in lam_parts) + (n,) * (r - len(lam_parts))
    full = Partition(mu_parts + (1,) * (n - sum(mu_parts)))
    return factorial(n) * n_bullet(r, k, full, cache)


def stanley_start(lam, mu):
    """First sample size: n >= |mu| and every n - lam_i >= 1."""
    return max(mu.size, lam[0] + 1 if lam else 1, 1)


def stanley_fit(r, lam, mu=EMPTY, n_samples=None, holdout=None, cache=None, jobs=1):
    """Fit n -> n! N_{n-lam,n..n}((mu,1^{n-|mu|})) with degree <= |mu| + 2|lam|."""
    if r < 1:
        raise ContractViolation(f"arity must be at least 1, got {r}")
    if lam.length > r:
        raise ContractViolation(f"l(lambda) = {lam.length} exceeds r = {r}")
    holdout = FIT_DEFAULTS["holdout"] if holdout is None else holdout
    bound = mu.size + 2 * lam.size
    n_samples = bound + 1 if n_samples is None else n_samples
    if n_samples < bound + 1:
        raise ContractViolation(f"degree bound {bound} needs at least {bound + 1} samples, got {n_samples}")
    if holdout < 0:
        raise ContractViolation(f"holdout must be nonnegative, got {holdout}")

    start = stanley_start(lam, mu)
    ns = list(range(start, start + n_samples + holdout))
    logger.info(f"Stanley fit r={r} lambda={format_partition(lam)} mu={format_partition(mu)}: n={ns[0]}..{ns[-1]}")
    if jobs > 1:
        warm_tables(ns[-1], cache)
    values = parallel_map(_stanley_sample, [(r, lam.parts, mu.parts, n, cache) for n in ns], jobs=jobs)
    samples = [((n,), v) for n, v in zip(ns, values)]

    report = FitReport(
        kind="stanley",
        parameters={
            "r": r,
            "lambda": format_partition(lam),
            "mu": format_partition(mu),
            "degree_bound": bound,
            "n_samples": n_samples,
            "holdout": holdout,
        },
        variables=VARIABLES[1],
        training=samples[:n_samples],
        holdout=samples[n_samples:],
        degrees_tried=[bound],
    )
    fit = newton_fit([(p[0], v) for p, v in report.training], bound)
    checks = _check_holdout(fit.polynomial, report.variables, report.holdout)
    bad = [((x,), y, pred) for x, y, pred in fit.offending] + [c for c in checks if c[1] != c[2]]
    if bad:
        report.status = COUNTER_EVIDENCE
        report.offending = bad
        report.holdout_verified = [c[1] == c[2] for c in checks]
        logger.warning(f"Stanley fit inconsistente em {len(bad)} pontos")
        return report
    return _finish(report, fit.polynomial)


# ─────────────────────────────────────────────────────────
# CONNECTED POLYNOMIALITY CONJECTURE
# ─────────────────────────────────────────────────────────

def vanishing_filter(r, k, mu):
    """True when the Riemann-Hurwitz genus is a nonnegative integer (the correlator may be nonzero)."""
    return genus_admissible(riemann_hurwitz_genus(r=r, k=tuple(k), mu=mu))


def conjecture_counts(k, size):
    """(|mu|-k_1, .., |mu|-k_{r-1}, k_r)."""
    return tuple(size - ki for ki in k[:-1]) + (k[-1],)


def degree_guess(k):
    """2(k_1 + .. + k_{r-1}): the disconnected degree bound with lambda = (k_1..k_{r-1})."""
    return 2 * sum(k[:-1])


def sample_grid(length, nmax, floor):
    """Partitions of length `length` with floor < |mu| <= nmax, ordered by size."""
    return sorted(
        mu for d in range(floor + 1, nmax + 1)
        for mu in partitions_of(d, length)
    )


def default_nmax(k, length, holdout):
    """Default |mu| bound whose training samples pin a fit of degree degree_guess(k).

    One part: degree_guess + 1 sizes above max(k), then `holdout` more.
    Two parts: every size up to guess + 1 + max(guess + 1, max(k)) trains
    (enough points on each line n2 = const), the holdout sits above it.
    """
    guess = degree_guess(k)
    floor = max(k)
    if length == 1:
        return max(FIT_DEFAULTS["nmax_one_point"], floor + guess + 1 + holdout)
    train = guess + 1 + max(guess + 1, floor)
    nmax = train
    while len(sample_grid(2, nmax, train)) < holdout:
        nmax += 1
    return max(FIT_DEFAULTS["nmax_two_point"], nmax)


def correlator_polynomial(route, r, mu, cache=None):
    """Connected generating polynomial of mu by the chosen route."""
    if route == ROUTE_CLOSED and mu.length == 1:
        return one_point_closed(mu[0], r)
    if route == ROUTE_CLOSED and mu.length == 2:
        return two_point_closed(mu[0], mu[1], r)
    if route in (ROUTE_CLOSED, ROUTE_ZHOU):
        return zhou_npoint(mu, affine_coords(r, mu.size))
    if route == ROUTE_LOG:
        return generating_polynomial(r, mu, connected=True, cache=cache)
    raise ContractViolation(f"unknown route {route!r}; expected one of {ROUTES}")


def _conjecture_sample(args):
    route, r, k, parts, cache = args
    mu = Partition(parts)
    counts = conjecture_counts(k, mu.size)
    if not vanishing_filter(r, counts, mu):
        return Fraction(0), True
    poly = correlator_polynomial(route, r, mu, cache)
    return z_factor(mu) * poly.coefficient(counts), False


def conjecture_fit(r, k, length=1, nmax=None, holdout=None, route=ROUTE_CLOSED,
                   cache=None, jobs=1, degree_slack=None):
    """
    Fit mu -> z_mu N°_{|mu|-k_1,..,k_r}(mu) over partitions of the given length.

    Degrees are tried from degree_guess(k) upward (at most `degree_slack`
    extra); the first degree consistent with every training sample and every
    held-out sample is accepted.
    """
    k = tuple(int(x) for x in k)
    if r < 1 or len(k) != r:
        raise ContractViolation(f"count vector {k} does not have length r={r}")
    if any(x < 1 for x in k):
        raise ContractViolation(f"counts must be positive: {k}")
    if length not in VARIABLES:
        raise ContractViolation(f"conjecture fits support 1 or 2 parts, got {length}")
    if route not in ROUTES:
        raise ContractViolation(f"unknown route {route!r}; expected one of {ROUTES}")
    holdout = FIT_DEFAULTS["holdout"] if holdout is None else holdout
    if holdout < 1:
        raise ContractViolation(f"conjecture fits need at least one held-out point, got {holdout}")
    if nmax is None:
        nmax = default_nmax(k, length, holdout)
    slack = FIT_DEFAULTS["degree_slack"] if degree_slack is None else degree_slack

    grid = sample_grid(length, nmax, max(k))
    if len(grid) <= holdout:
        raise ContractViolation(f"only {len(grid)} sample partitions up to |mu| = {nmax}")
    logger.info(f"Conjecture fit r={r} k={k} l={length}: {len(grid)} amostras via {route}")
    if route == ROUTE_LOG and jobs > 1:
        warm_tables(nmax, cache)
    results = parallel_map(_conjecture_sample, [(route, r, k, mu.parts, cache) for mu in grid], jobs=jobs)
    samples = [(mu.parts, value) for mu, (value, _) in zip(grid, results)]
    variables = VARIABLES[length]

    report = FitReport(
        kind="conjecture",
        parameters={
            "r": r,
            "k": list(k),
            "length": length,
            "nmax": nmax,
            "holdout": holdout,
            "route": route,
        },
        variables=variables,
        training=samples[:-holdout],
        holdout=samples[-holdout:],
        skipped_vanishing=sum(1 for _, skipped in results if skipped),
    )
    report.known = KNOWN_CLOSED_FORMS.get((r, k, length))

    guess = degree_guess(k)
    attempted = False
    for degree in range(guess, guess + slack + 1):
        expr, offending, determined = _fit_at_degree(report.training, degree, variables)
        if not determined:
            logger.info(f"Grau {degree}: amostras insuficientes")
            break
        attempted = True
        report.degrees_tried.append(degree)
        if expr is None:
            report.offending = offending
            continue
        checks = _check_holdout(expr, variables, report.holdout)
        bad = offending + [c for c in checks if c[1] != c[2]]
        if not bad:
            _finish(report, expr)
            report.offending = []
            if report.known is not None:
                report.known_match = sp.expand(expr - report.known) == 0
            return report
        report.offending = bad
        report.holdout_verified = [c[1] == c[2] for c in checks]

    report.status = COUNTER_EVIDENCE if attempted else INSUFFICIENT
    logger.warning(f"Conjecture fit r={r} k={k} l={length}: {report.status}")
    return report


# ─────────────────────────────────────────────────────────
# CLOSED FORMS FROM THE LITERATURE
# ─────────────────────────────────────────────────────────

def _C(x, d):
    return sp.expand(sp.expand_func(sp.binomial(x, d)))


_H = sp.Rational(1, 2)

# (r, k, length) -> z_mu * N°_{|mu|-k_1,..,k_r}(mu) as a polynomial in n or (n1, n2)
KNOWN_CLOSED_FORMS = {
    (1, (1,), 1): sp.Integer(1),
    (1, (1,), 2): sp.Integer(0),
    (2, (1, 1), 1): sp.Integer(0),
    (2, (1, 2), 1): _C(N, 2),
    (2, (2, 1), 1): _C(N, 4) + _C(N, 3),
    (3, (1, 1, 1), 1): sp.expand(N**2 * (N - 1) * (N + 1) / 12),
    (3, (1, 2, 2), 1): sp.expand((N - 2) * (N - 1)**2 * N**2 * (N + 1) / 24),
    (3, (2, 2, 1), 1): sp.expand((N - 2) * (N - 1)**2 * N**2 * (N + 1) * (9 * N**2 - N - 18) / 2880),
    (2, (1, 1), 2): N1 * N2,
    (2, (2, 2), 2): sp.expand(_H * N1 * N2 * (N1**2 + N2**2 + N1 * N2 - 2 * N1 - 2 * N2 + 1)),
    (2, (3, 1), 2): sp.expand(N1 * N2 / 24 * (
        N1**4 + (2 * N2 - 4) * N1**3 + (2 * N2**2 - 6 * N2 + 3) * N1**2
        + (2 * N2**3 - 6 * N2**2 + 2 * N2 + 4) * N1
        + (N2**4 - 4 * N2**3 + 3 * N2**2 + 4 * N2 - 4)
    )),
    (2, (3, 3), 2): sp.expand(N1 * N2 / 12 * (
        N1**4 + 2 * (N2 - 3) * N1**3 + (4 * N2**2 - 12 * N2 + 13) * N1**2
        + 2 * (N2**3 - 6 * N2**2 + 10 * N2 - 6) * N1
        + (N2**4 - 6 * N2**3 + 13 * N2**2 - 12 * N2 + 4)
    )),
    (2, (4, 2), 2): sp.expand(N1 * N2 / 72 * (
        N1**6 + 3 * (N2 - 3) * N1**5 + 2 * (3 * N2**2 - 12 * N2 + 14) * N1**4
        + sp.Rational(3, 2) * (5 * N2**3 - 26 * N2**2 + 41 * N2 - 20) * N1**3
        + (6 * N2**4 - 39 * N2**3 + 78 * N2**2 - 45 * N2 - 11) * N1**2
        + sp.Rational(3, 2) * (2 * N2**5 - 16 * N2**4 + 41 * N2**3 - 30 * N2**2 - 19 * N2 + 26) * N1
        + (N2**6 - 9 * N2**5 + 28 * N2**4 - 30 * N2**3 - 11 * N2**2 + 39 * N2 - 18)
    )),
    (3, (1, 1, 2), 2): sp.expand(N1 * N2 * (N1**2 + (N2 - 1) * N1 + (N2**2 - N2))),
    (3, (2, 1, 1), 2): sp.expand(N1 * N2 / 24 * (
        3 * N1**4 + 2 * (3 * N2 - 2) * N1**3 + 3 * (2 * N2**2 - 2 * N2 - 1) * N1**2
        + 2 * (3 * N2**3 - 3 * N2**2 - 3 * N2 + 2) * N1
        + (3 * N2**4 - 4 * N2**3 - 3 * N2**2 + 4 * N2)
    )),
}


def known_closed_form(r, k, length):
    return KNOWN_CLOSED_FORMS.get((r, tuple(k), length))
