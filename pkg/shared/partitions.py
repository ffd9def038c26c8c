"""
Integer partitions and Young-diagram combinatorics.

Partitions are immutable value objects ordered by size and then
reverse-lexicographically, so (3) < (2,1) < (1,1,1) < (4).
Boxes are 1-based (row, col), content = col - row.
"""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from math import factorial, prod

from shared.errors import ContractViolation


@total_ordering
@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ContractViolation(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ContractViolation(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts):
        return cls(tuple(parts))

    @classmethod
    def from_unsorted(cls, parts):
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def sort_key(self):
        return (self.size, tuple(-p for p in self.parts))

    def __lt__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return format_partition(self)

    def __add__(self, other):
        """Union of parts (the index of p_mu * p_nu)."""
        return Partition.from_unsorted(self.parts + tuple(other))


EMPTY = Partition()


@dataclass(frozen=True, order=True)
class Box:
    row: int
    col: int


# ─────────────────────────────────────────────────────────
# TEXT FORM
# ─────────────────────────────────────────────────────────

def format_partition(lam):
    return ",".join(str(p) for p in lam.parts) if lam.parts else "[]"


def parse_partition(text):
    """Read "2,1", "[2,1]", "(2,1)", "2 1" or "[]" into a Partition."""
    cleaned = str(text).strip().strip("[]()").replace(" ", ",")
    if not cleaned:
        return EMPTY
    try:
        parts = tuple(int(tok) for tok in cleaned.split(",") if tok)
    except ValueError as exc:
        raise ContractViolation(f"cannot parse partition {text!r}") from exc
    return Partition(parts)


# ─────────────────────────────────────────────────────────
# DIAGRAM
# ─────────────────────────────────────────────────────────

def transpose(lam):
    if not lam.parts:
        return EMPTY
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def frobenius(lam):
    """(m | n) with m_i = lam_i - i and n_i = lam^t_i - i, i up to the diagonal length."""
    lt = transpose(lam)
    k = sum(1 for i, p in enumerate(lam.parts, start=1) if p >= i)
    m = tuple(lam.parts[i] - (i + 1) for i in range(k))
    n = tuple(lt.parts[i] - (i + 1) for i in range(k))
    return m, n


def from_frobenius(m, n):
    """Inverse of frobenius."""
    if len(m) != len(n):
        raise ContractViolation("Frobenius arms and legs must have equal length")
    k = len(m)
    if any(m[i] <= m[i + 1] for i in range(k - 1)) or any(n[i] <= n[i + 1] for i in range(k - 1)):
        raise ContractViolation(f"Frobenius data must be strictly decreasing: ({m}|{n})")
    if k and (m[-1] < 0 or n[-1] < 0):
        raise ContractViolation(f"Frobenius data must be nonnegative: ({m}|{n})")
    rows = [m[i] + i + 1 for i in range(k)]
    # rows below the diagonal block are read from the legs
    below = []
    for row in range(k + 1, (n[0] + 1 if k else 0) + 1):
        below.append(sum(1 for j in range(k) if n[j] + j + 1 >= row))
    return Partition(tuple(rows + [b for b in below if b]))


def boxes(lam):
    return [Box(i, j) for i, p in enumerate(lam.parts, start=1) for j in range(1, p + 1)]


def contains_box(lam, b):
    return 1 <= b.row <= len(lam.parts) and 1 <= b.col <= lam.parts[b.row - 1]


def _require_box(lam, b):
    if not contains_box(lam, b):
        raise ContractViolation(f"box ({b.row},{b.col}) outside diagram {format_partition(lam)}")


def hook_length(lam, b):
    _require_box(lam, b)
    lt = transpose(lam)
    return (lam.parts[b.row - 1] - b.col) + (lt.parts[b.col - 1] - b.row) + 1


def content(lam, b):
    _require_box(lam, b)
    return b.col - b.row


def contents(lam):
    return [b.col - b.row for b in boxes(lam)]


@lru_cache(maxsize=None)
def hooks(lam):
    lt = transpose(lam)
    return tuple(
        (lam.parts[i - 1] - j) + (lt.parts[j - 1] - i) + 1
        for i, p in enumerate(lam.parts, start=1)
        for j in range(1, p + 1)
    )


def hook_product(lam):
    return prod(hooks(lam))


# ─────────────────────────────────────────────────────────
# NUMERIC ATTRIBUTES
# ─────────────────────────────────────────────────────────

def multiplicities(lam):
    """{part: multiplicity}."""
    return dict(Counter(lam.parts))


@lru_cache(maxsize=None)
def z_factor(lam):
    return prod(i ** m * factorial(m) for i, m in multiplicities(lam).items())


@lru_cache(maxsize=None)
def dim_irrep(lam):
    return factorial(lam.size) // hook_product(lam)


def sign(lam):
    return -1 if (lam.size - lam.length) % 2 else 1


def falling_factorial(a, k):
    if k < 0:
        raise ContractViolation(f"falling factorial order must be nonnegative, got {k}")
    out = 1
    for j in range(k):
        out *= a - j
    return out


# ─────────────────────────────────────────────────────────
# ADDING AND REMOVING BOXES
# ─────────────────────────────────────────────────────────

def addable_boxes(lam):
    """Outer corners, top to bottom: every box whose addition keeps a partition."""
    parts = lam.parts
    out = []
    for i in range(len(parts) + 1):
        current = parts[i] if i < len(parts) else 0
        above = parts[i - 1] if i > 0 else None
        if above is None or current < above:
            out.append(Box(i + 1, current + 1))
    return out


def removable_boxes(lam):
    """Inner corners, top to bottom."""
    parts = lam.parts
    return [
        Box(i + 1, p)
        for i, p in enumerate(parts)
        if i == len(parts) - 1 or parts[i + 1] < p
    ]


def add_box(lam, b):
    parts = list(lam.parts)
    if b not in addable_boxes(lam):
        raise ContractViolation(f"box ({b.row},{b.col}) is not addable to {format_partition(lam)}")
    if b.row > len(parts):
        parts.append(1)
    else:
        parts[b.row - 1] += 1
    return Partition(tuple(parts))


def remove_box(lam, b):
    parts = list(lam.parts)
    if b not in removable_boxes(lam):
        raise ContractViolation(f"box ({b.row},{b.col}) is not removable from {format_partition(lam)}")
    parts[b.row - 1] -= 1
    return Partition(tuple(p for p in parts if p))


@lru_cache(maxsize=None)
def standard_tableaux_count(lam):
    """Count of standard Young tableaux, by peeling off the largest entry."""
    if not lam.parts:
        return 1
    return sum(standard_tableaux_count(remove_box(lam, b)) for b in removable_boxes(lam))


# ─────────────────────────────────────────────────────────
# ENUMERATION
# ─────────────────────────────────────────────────────────

@lru_cache(maxsize=None)
def _partitions_bounded(d, largest):
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions_bounded(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(d, length=None):
    """All partitions of d in reverse-lex order, optionally of a fixed length."""
    if d < 0:
        return []
    out = [Partition(p) for p in _partitions_bounded(d, d)]
    if length is not None:
        out = [p for p in out if p.length == length]
    return out


def partitions_up_to(D):
    """Every partition of size 0..D, in the total order."""
    return [p for d in range(D + 1) for p in partitions_of(d)]
