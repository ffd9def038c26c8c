"""
Exact rationals and sparse multivariate polynomials in v1..vr.

Every correlator value in the package is a VPoly (or a plain Rational).
Terms are stored as {exponent tuple: Fraction} with no zero coefficients,
so two polynomials of equal arity are equal iff their term maps are equal.
Text rendering lists terms in graded-lex order (highest total degree first,
ties broken lexicographically) with rationals written as "a/b".
"""
import re
from fractions import Fraction
from itertools import combinations, product
from types import MappingProxyType

from shared.errors import ContractViolation

Rational = Fraction


def _graded_lex_key(exponents):
    return (-sum(exponents), tuple(-e for e in exponents))


def to_rational(value):
    """Coerce int / Fraction / "a/b" text to an exact Rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ContractViolation(f"not an exact rational: {value!r}")


def format_rational(value):
    """Render an exact rational as "a" or "a/b"."""
    return str(Fraction(value))


class VPoly:
    """Immutable sparse polynomial over Q in `arity` variables v1..v_arity."""

    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, arity, terms=None):
        if arity < 0:
            raise ContractViolation(f"arity must be nonnegative, got {arity}")
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise ContractViolation(
                    f"exponent vector {exps} does not match arity {arity}"
                )
            if any(e < 0 for e in exps):
                raise ContractViolation(f"negative exponent in {exps}")
            c = to_rational(coeff)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.arity = arity
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, arity, terms):
        obj = cls.__new__(cls)
        obj.arity = arity
        obj._terms = terms
        obj._hash = None
        return obj

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, arity):
        return cls._trusted(arity, {})

    @classmethod
    def constant(cls, value, arity):
        c = to_rational(value)
        return cls._trusted(arity, {(0,) * arity: c} if c else {})

    @classmethod
    def one(cls, arity):
        return cls.constant(1, arity)

    @classmethod
    def variable(cls, index, arity):
        """The variable v_{index+1} (0-based index)."""
        if not 0 <= index < arity:
            raise ContractViolation(f"variable index {index} outside arity {arity}")
        exps = [0] * arity
        exps[index] = 1
        return cls._trusted(arity, {tuple(exps): Fraction(1)})

    @classmethod
    def from_univariate(cls, coeffs, arity, index):
        """Polynomial sum_e coeffs[e] * v_{index+1}^e."""
        if not 0 <= index < arity:
            raise ContractViolation(f"variable index {index} outside arity {arity}")
        terms = {}
        for e, c in enumerate(coeffs):
            c = to_rational(c)
            if c:
                exps = [0] * arity
                exps[index] = e
                terms[tuple(exps)] = c
        return cls._trusted(arity, terms)

    # ------------------------------------------------------------------
    # Read access
    # ------------------------------------------------------------------
    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: _graded_lex_key(kv[0]))

    def coefficient(self, exponents):
        exponents = tuple(exponents)
        if len(exponents) != self.arity:
            raise ContractViolation(
                f"exponent vector {exponents} does not match arity {self.arity}"
            )
        return self._terms.get(exponents, Fraction(0))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, VPoly):
            return VPoly.constant(other, self.arity)
        if other.arity != self.arity:
            raise ContractViolation(
                f"arity mismatch: {self.arity} vs {other.arity}"
            )
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return VPoly._trusted(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return VPoly._trusted(self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value):
        c = to_rational(value)
        if not c:
            return VPoly.zero(self.arity)
        return VPoly._trusted(self.arity, {e: k * c for e, k in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, VPoly):
            return self.scale(other)
        other = self._check(other)
        if not self._terms or not other._terms:
            return VPoly.zero(self.arity)
        out = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                out[exps] = out.get(exps, 0) + ca * cb
        return VPoly._trusted(self.arity, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ContractViolation(f"power must be a nonnegative integer: {exponent!r}")
        result = VPoly.one(self.arity)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def evaluate(self, point):
        point = [to_rational(x) for x in point]
        if len(point) != self.arity:
            raise ContractViolation(
                f"point of length {len(point)} for arity {self.arity}"
            )
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term *= x ** e
            total += term
        return total

    def embed(self, arity, positions):
        """Re-index into a larger arity; variable i goes to positions[i]."""
        if len(positions) != self.arity:
            raise ContractViolation("positions must list one slot per variable")
        terms = {}
        for exps, c in self._terms.items():
            new = [0] * arity
            for e, p in zip(exps, positions):
                new[p] += e
            terms[tuple(new)] = terms.get(tuple(new), 0) + c
        return VPoly(arity, terms)

    # ------------------------------------------------------------------
    # Equality / hashing / text
    # ------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, VPoly):
            return self.arity == other.arity and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == VPoly.constant(other, self.arity)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_vpoly(self)

    def __repr__(self):
        return f"VPoly({self.arity}, {format_vpoly(self)!r})"

    @classmethod
    def parse(cls, text, arity):
        return parse_vpoly(text, arity)


# ─────────────────────────────────────────────────────────
# TEXT FORM
# ─────────────────────────────────────────────────────────

def _format_monomial(exps):
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"v{i + 1}")
        elif e > 1:
            parts.append(f"v{i + 1}^{e}")
    return "*".join(parts)


def format_vpoly(p):
    """Canonical text: graded-lex terms, rationals as a/b, e.g. "v1^2 - 1/2*v2"."""
    if p.is_zero():
        return "0"
    out = []
    for idx, (exps, c) in enumerate(p.items()):
        mono = _format_monomial(exps)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


_FACTOR_VAR = re.compile(r"^v(\d+)(?:\^(\d+))?$")
_FACTOR_NUM = re.compile(r"^\d+(?:/\d+)?$")


def parse_vpoly(text, arity):
    """Inverse of format_vpoly (accepts any spacing)."""
    compact = text.replace(" ", "")
    if compact in ("", "0"):
        return VPoly.zero(arity)
    terms = {}
    for chunk in re.split(r"(?=[+-])", compact):
        if not chunk:
            continue
        sign = -1 if chunk[0] == "-" else 1
        body = chunk.lstrip("+-")
        coeff = Fraction(sign)
        exps = [0] * arity
        for factor in body.split("*"):
            if _FACTOR_NUM.match(factor):
                coeff *= Fraction(factor)
                continue
            m = _FACTOR_VAR.match(factor)
            if not m:
                raise ContractViolation(f"cannot parse factor {factor!r} in {text!r}")
            idx = int(m.group(1)) - 1
            if not 0 <= idx < arity:
                raise ContractViolation(f"variable v{idx + 1} outside arity {arity}")
            exps[idx] += int(m.group(2) or 1)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return VPoly(arity, terms)


# ─────────────────────────────────────────────────────────
# FUNCTIONAL API
# ─────────────────────────────────────────────────────────

def vpoly_add(p, q):
    return p + q


def vpoly_mul(p, q):
    return p * q


def vpoly_scale(p, c):
    return p.scale(c)


def vpoly_eval(p, point):
    return p.evaluate(point)


def elementary_symmetric(r, j):
    """e_j(v1..vr); e_0 = 1."""
    if not 0 <= j <= r:
        raise ContractViolation(f"elementary_symmetric needs 0 <= j <= r, got j={j}, r={r}")
    terms = {}
    for chosen in combinations(range(r), j):
        exps = [0] * r
        for i in chosen:
            exps[i] = 1
        terms[tuple(exps)] = Fraction(1)
    return VPoly._trusted(r, terms)


def shifted_product(shifts):
    """Coefficients (low to high) of prod_{s in shifts} (x + s)."""
    coeffs = [Fraction(1)]
    for s in shifts:
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for e, c in enumerate(coeffs):
            nxt[e] += c * s
            nxt[e + 1] += c
        coeffs = nxt
    return coeffs


def product_over_variables(univariate, arity, scale=1):
    """scale * prod_{i=1..arity} f(v_i) for one univariate f given low-to-high."""
    nonzero = [(e, to_rational(c)) for e, c in enumerate(univariate) if c]
    scale = to_rational(scale)
    if not nonzero or not scale:
        return VPoly.zero(arity)
    terms = {}
    for combo in product(nonzero, repeat=arity):
        coeff = scale
        for _, c in combo:
            coeff *= c
        terms[tuple(e for e, _ in combo)] = coeff
    return VPoly._trusted(arity, terms)
