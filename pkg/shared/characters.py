"""
Symmetric-group characters and the Schur / power-sum change of basis.

  - mn_character: Murnaghan-Nakayama rule on beta-numbers, memoized
  - CharTable:    exact table for one degree (numpy object matrix)
  - char_table:   in-memory memo -> on-disk cache -> compute
  - hook_content_eval / principal_eval: the two closed Schur evaluations
"""
import logging
from fractions import Fraction
from functools import lru_cache

import numpy as np
import pandas as pd

from shared.defaults import ENGINE_DEFAULTS
from shared.errors import ContractViolation, SizeLimitError
from shared.parallel import parallel_map
from shared.partitions import (
    Partition,
    contents,
    dim_irrep,
    format_partition,
    hook_product,
    partitions_of,
    z_factor,
)
from shared.vpoly import VPoly, shifted_product

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────
# MURNAGHAN-NAKAYAMA
# ─────────────────────────────────────────────────────────

@lru_cache(maxsize=None)
def _mn(shape, cls):
    if not cls:
        return 1 if not shape else 0
    k, rest = cls[0], cls[1:]
    L = len(shape)
    beta = [shape[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in bset:
            continue
        # leg length of the strip = beta-numbers jumped over
        height = sum(1 for x in beta if t < x < b)
        new_beta = sorted((bset - {b}) | {t}, reverse=True)
        new_shape = tuple(x - (L - 1 - i) for i, x in enumerate(new_beta))
        new_shape = tuple(p for p in new_shape if p > 0)
        total += (-1 if height % 2 else 1) * _mn(new_shape, rest)
    return total


def mn_character(lam, mu):
    """chi^lam evaluated on the class of cycle type mu."""
    if lam.size != mu.size:
        raise ContractViolation(
            f"character needs |lambda| = |mu|, got {format_partition(lam)} and {format_partition(mu)}"
        )
    return _mn(lam.parts, mu.parts)


# ─────────────────────────────────────────────────────────
# CHARACTER TABLE
# ─────────────────────────────────────────────────────────

class CharTable:
    """chi^lam(C_mu) for all lam, mu of one degree; rows lam, columns mu."""

    def __init__(self, d, partitions, values):
        self.d = d
        self.partitions = list(partitions)
        self.values = values
        self._index = {p: i for i, p in enumerate(self.partitions)}

    def value(self, lam, mu):
        try:
            return self.values[self._index[lam], self._index[mu]]
        except KeyError as exc:
            raise ContractViolation(
                f"{format_partition(lam)}/{format_partition(mu)} not of degree {self.d}"
            ) from exc

    def row(self, lam):
        return self.values[self._index[lam], :]

    def column(self, mu):
        return self.values[:, self._index[mu]]

    def __eq__(self, other):
        return (
            isinstance(other, CharTable)
            and self.d == other.d
            and self.partitions == other.partitions
            and bool(np.array_equal(self.values, other.values))
        )

    def to_frame(self):
        labels = [format_partition(p) for p in self.partitions]
        return pd.DataFrame(self.values.tolist(), index=labels, columns=labels)

    def check_orthogonality(self):
        """Column orthogonality and chi(C_{1^d}) = dim, plus the first failing pair."""
        gram = self.values.T.dot(self.values)
        expected = np.diag([z_factor(p) for p in self.partitions]).astype(object)
        column_ok = bool(np.array_equal(gram, expected))
        first_bad = None
        if not column_ok:
            bad = np.argwhere(gram != expected)[0]
            first_bad = [format_partition(self.partitions[bad[0]]), format_partition(self.partitions[bad[1]])]

        identity = Partition((1,) * self.d) if self.d else Partition()
        dims = self.column(identity)
        dimension_ok = all(dims[i] == dim_irrep(p) for i, p in enumerate(self.partitions))
        return {
            "d": self.d,
            "column_orthogonality": column_ok,
            "identity_column_is_dimension": dimension_ok,
            "first_failure": first_bad,
        }


def _character_row(args):
    lam_parts, d = args
    return [_mn(lam_parts, mu.parts) for mu in partitions_of(d)]


def compute_char_table(d, jobs=1):
    """Compute the table from scratch (no cache)."""
    if d < 0:
        raise ContractViolation(f"degree must be nonnegative, got {d}")
    limit = ENGINE_DEFAULTS["char_table_max_degree"]
    if d > limit:
        raise SizeLimitError(f"character table degree {d} exceeds bound {limit}")
    parts = partitions_of(d)
    rows = parallel_map(_character_row, [(p.parts, d) for p in parts], jobs=jobs)
    values = np.empty((len(parts), len(parts)), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            values[i, j] = int(v)
    return CharTable(d, parts, values)


_MEMO = {}


def char_table(d, cache=None, jobs=1):
    """Table for degree d: process memo, then the on-disk cache, else compute and persist."""
    key = (d, getattr(cache, "path", None))
    if key in _MEMO:
        return _MEMO[key]
    table = None
    if cache is not None:
        from store.char_tables import get_table, upsert_table

        table = get_table(cache, d)
        if table is None:
            logger.info(f"Cache miss: tabela de caracteres d={d}")
            table = compute_char_table(d, jobs=jobs)
            upsert_table(cache, table)
    else:
        table = compute_char_table(d, jobs=jobs)
    _MEMO[key] = table
    return table


def warm_tables(D, cache=None, jobs=1):
    """Fill the memo and the on-disk cache for every degree <= D before workers start."""
    if cache is None:
        return
    for d in range(D + 1):
        char_table(d, cache, jobs=jobs)


def clear_memo():
    _MEMO.clear()


def character(lam, mu, cache=None):
    """chi^lam(C_mu) from the cached table when a cache is given."""
    if cache is None:
        return mn_character(lam, mu)
    return char_table(lam.size, cache).value(lam, mu)


# ─────────────────────────────────────────────────────────
# CHANGE OF BASIS
# ─────────────────────────────────────────────────────────

def schur_to_powersum(mu, cache=None):
    """s_mu = sum_lam chi^mu(C_lam)/z_lam p_lam; zero coefficients dropped."""
    out = {}
    for lam in partitions_of(mu.size):
        c = Fraction(character(mu, lam, cache), z_factor(lam))
        if c:
            out[lam] = c
    return out


def powersum_to_schur(mu, cache=None):
    """p_mu = sum_lam chi^lam(C_mu) s_lam."""
    out = {}
    for lam in partitions_of(mu.size):
        c = character(lam, mu, cache)
        if c:
            out[lam] = Fraction(c)
    return out


# ─────────────────────────────────────────────────────────
# EVALUATIONS
# ─────────────────────────────────────────────────────────

def hook_content_eval(mu, r=1, index=0):
    """s_mu(t_k = v/k) in the variable v_{index+1}: (numerator VPoly, hook product)."""
    numerator = VPoly.from_univariate(shifted_product(contents(mu)), r, index)
    return numerator, hook_product(mu)


def hook_content_poly(mu, r=1, index=0):
    """hook_content_eval as a single VPoly."""
    numerator, hooks = hook_content_eval(mu, r, index)
    return numerator.scale(Fraction(1, hooks))


def character_route_eval(mu, r=1, index=0, cache=None):
    """sum_lam chi^mu(C_lam)/z_lam v^{l(lam)}: s_mu with every p_k set to v."""
    coeffs = [Fraction(0)] * (mu.size + 1)
    for lam, c in schur_to_powersum(mu, cache).items():
        coeffs[lam.length] += c
    return VPoly.from_univariate(coeffs, r, index)


def principal_eval(eta):
    """s_eta(p_1 = 1, p_k = 0 for k >= 2) = 1 / prod hooks."""
    return Fraction(1, hook_product(eta))


def principal_eval_by_characters(eta, cache=None):
    ones = Partition((1,) * eta.size) if eta.size else Partition()
    return schur_to_powersum(eta, cache).get(ones, Fraction(0))
