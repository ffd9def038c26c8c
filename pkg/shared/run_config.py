"""
RunConfig: the validated arguments of one CLI invocation.

build_config() turns raw flag text into engine values through the validators
and raises InputError on the first invalid field, before any computation.
"""
from dataclasses import dataclass

from shared.defaults import ENGINE_DEFAULTS, FIT_DEFAULTS
from shared.errors import InputError
from shared.kp import CYCLIC, LITERAL
from shared.parallel import resolve_jobs
from shared.partitions import EMPTY, Partition
from shared.polyfit import ROUTES as FIT_ROUTES
from shared.validators import (
    validate_choice,
    validate_counts,
    validate_partition,
    validate_positive,
    validate_profiles,
)

CORRELATOR_ROUTES = ("burnside", "log", "zhou", "oracle", "all")
BASES = ("powersum", "schur")
VERIFY_SUITES = ("cutjoin", "zhou", "burnside", "appendix", "characters", "acoeffs", "all")
FIT_KINDS = ("stanley", "conjecture")
CACHE_ACTIONS = ("chars", "list", "clear")


@dataclass(frozen=True)
class RunConfig:
    command: str
    action: str = None
    r: int = None
    degree: int = None
    mu: Partition = None
    k: tuple = None
    lam: Partition = EMPTY
    profiles: object = None
    route: str = None
    basis: str = "powersum"
    connected: bool = False
    generating: bool = False
    closure: str = CYCLIC
    length: int = 1
    nmax: int = None
    holdout: int = FIT_DEFAULTS["holdout"]
    n_samples: int = None
    d: int = None
    show: bool = False
    compare: bool = False
    cache_dir: str = None
    output: str = None
    jobs: int = 1
    no_meta: bool = False
    table: bool = False

    @property
    def arity(self):
        return self.r or ENGINE_DEFAULTS["arity"]

    @property
    def truncation(self):
        return self.degree or ENGINE_DEFAULTS["truncation"]


def _check(result):
    ok, value, err = result
    if not ok:
        raise InputError(err)
    return value


def build_config(command, action=None, *, jobs=None, **raw):
    """Validate raw CLI values. Unset (None) options keep their defaults."""
    values = {"command": command, "action": action, "jobs": resolve_jobs(jobs)}
    raw = {key: val for key, val in raw.items() if val is not None}

    for name in ("r", "degree", "length", "d", "nmax", "n_samples"):
        if name in raw:
            values[name] = _check(validate_positive(raw.pop(name), f"--{name.replace('_', '-')}"))
    if "holdout" in raw:
        values["holdout"] = _check(validate_positive(raw.pop("holdout"), "--holdout", minimum=0))

    if "mu" in raw:
        values["mu"] = _check(validate_partition(raw.pop("mu"), allow_empty=command == "fit"))
    if "lam" in raw:
        values["lam"] = _check(validate_partition(raw.pop("lam")))
    if "k" in raw:
        values["k"] = _check(validate_counts(raw.pop("k"), values.get("r") or ENGINE_DEFAULTS["arity"]))
    if "profiles" in raw:
        values["profiles"] = _check(validate_profiles(raw.pop("profiles")))

    if "route" in raw:
        choices = FIT_ROUTES if command == "fit" else CORRELATOR_ROUTES
        values["route"] = _check(validate_choice(raw.pop("route"), choices, "--route"))
    if "basis" in raw:
        values["basis"] = _check(validate_choice(raw.pop("basis"), BASES, "--basis"))
    if "closure" in raw:
        values["closure"] = _check(validate_choice(raw.pop("closure"), (CYCLIC, LITERAL), "--closure"))

    if command == "verify":
        _check(validate_choice(action, VERIFY_SUITES, "suite"))
    elif command == "fit":
        _check(validate_choice(action, FIT_KINDS, "fit"))
    elif command == "cache":
        _check(validate_choice(action, CACHE_ACTIONS, "cache"))

    unknown = set(raw) - set(RunConfig.__dataclass_fields__)
    if unknown:
        raise InputError(f"opcoes desconhecidas: {', '.join(sorted(unknown))}")
    values.update(raw)
    return RunConfig(**values)
