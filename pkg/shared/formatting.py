"""
Text forms for everything that ends up in a JSON document.
Rationals become "a/b", VPolys their canonical graded-lex text, partitions "2,1".
"""
from fractions import Fraction

import sympy as sp

from shared.partitions import Partition, format_partition
from shared.vpoly import VPoly, format_rational, format_vpoly


def to_jsonable(value):
    """Recursively convert engine values into JSON-safe primitives."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, VPoly):
        return format_vpoly(value)
    if isinstance(value, Partition):
        return format_partition(value)
    if isinstance(value, sp.Basic):
        return str(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return to_jsonable(value.to_json())
    return str(value)


def format_counts(k):
    return ",".join(str(x) for x in k)


def format_genus(g):
    return g if isinstance(g, int) else str(g)
