"""
Validacao de entrada da linha de comando.
Parsers for partitions, count vectors and profile lists.
Every validator returns (is_valid, value, error_message); engines never see raw text.
"""
import re

from shared.errors import ContractViolation
from shared.hurwitz import RamificationProfile
from shared.partitions import EMPTY, parse_partition

_INT_LIST = re.compile(r"^\s*\d+(\s*[, ]\s*\d+)*\s*$")


# ══════════════════════════════════════════════════════════
# PARTITIONS
# ══════════════════════════════════════════════════════════

def validate_partition(text, allow_empty=True):
    """Validate a partition such as "2,1", "[2,1]" or "[]".
    Returns (is_valid, partition, error_message).
    """
    if text is None or not str(text).strip().strip("[]()"):
        if allow_empty:
            return True, EMPTY, ""
        return False, None, "Particao vazia nao permitida"
    try:
        lam = parse_partition(text)
    except ContractViolation as exc:
        return False, None, f"Particao invalida {text!r}: {exc}"
    return True, lam, ""


# ══════════════════════════════════════════════════════════
# COUNT VECTORS
# ══════════════════════════════════════════════════════════

def validate_counts(text, r=None):
    """Validate a comma-separated vector of positive counts, optionally of length r.
    Returns (is_valid, counts_tuple, error_message).
    """
    raw = str(text or "").strip().strip("[]()")
    if not raw:
        return False, None, "Vetor de contagens vazio"
    if not _INT_LIST.match(raw):
        return False, None, f"Vetor de contagens invalido: {text!r}"
    counts = tuple(int(tok) for tok in re.split(r"[,\s]+", raw) if tok)
    if any(c < 1 for c in counts):
        return False, counts, "Contagens devem ser positivas"
    if r is not None and len(counts) != r:
        return False, counts, f"Esperado {r} contagens, recebido {len(counts)}"
    return True, counts, ""


# ══════════════════════════════════════════════════════════
# RAMIFICATION PROFILES
# ══════════════════════════════════════════════════════════

def validate_profiles(text):
    """Validate a profile list such as "2|2" or "2,1|3|1,1,1".
    Returns (is_valid, RamificationProfile, error_message).
    """
    raw = str(text or "").strip()
    if not raw:
        return False, None, "Lista de perfis vazia"
    profiles = []
    for chunk in raw.split("|"):
        ok, lam, err = validate_partition(chunk, allow_empty=False)
        if not ok:
            return False, None, err
        profiles.append(lam)
    try:
        rp = RamificationProfile(tuple(profiles))
    except ContractViolation as exc:
        return False, None, str(exc)
    return True, rp, ""


# ══════════════════════════════════════════════════════════
# SCALARS
# ══════════════════════════════════════════════════════════

def validate_positive(value, name, minimum=1):
    """Returns (is_valid, int_value, error_message)."""
    try:
        number = int(value)
    except (TypeError, ValueError):
        return False, None, f"{name} deve ser inteiro, recebido {value!r}"
    if number < minimum:
        return False, number, f"{name} deve ser >= {minimum}, recebido {number}"
    return True, number, ""


def validate_choice(value, choices, name):
    """Returns (is_valid, value, error_message)."""
    if value not in choices:
        return False, value, f"{name} deve ser um de {', '.join(choices)}; recebido {value!r}"
    return True, value, ""
