import pytest

from shared.errors import InputError
from shared.partitions import EMPTY, Partition
from shared.run_config import build_config
from shared.validators import (
    validate_choice,
    validate_counts,
    validate_partition,
    validate_positive,
    validate_profiles,
)


def test_validate_partition():
    assert validate_partition("2,1") == (True, Partition.of(2, 1), "")
    assert validate_partition("[]") == (True, EMPTY, "")
    ok, value, err = validate_partition("", allow_empty=False)
    assert not ok and value is None and err
    ok, _, err = validate_partition("1,2")
    assert not ok and "invalida" in err


def test_validate_counts():
    assert validate_counts("1,2") == (True, (1, 2), "")
    assert validate_counts("1 2 3", r=3)[1] == (1, 2, 3)
    assert not validate_counts("1,2", r=3)[0]
    assert not validate_counts("0,1")[0]
    assert not validate_counts("a,b")[0]
    assert not validate_counts("")[0]


def test_validate_profiles():
    ok, rp, _ = validate_profiles("2,1|3|1,1,1")
    assert ok
    assert rp.degree == 3
    assert str(rp) == "2,1|3|1,1,1"
    ok, _, err = validate_profiles("2|1")
    assert not ok and err
    assert not validate_profiles("2||2")[0]


def test_validate_scalars():
    assert validate_positive("4", "--d") == (True, 4, "")
    assert not validate_positive("0", "--d")[0]
    assert validate_positive(0, "--holdout", minimum=0)[0]
    assert not validate_positive("x", "--d")[0]
    assert validate_choice("log", ("log", "zhou"), "--route")[0]
    assert not validate_choice("other", ("log", "zhou"), "--route")[0]


def test_build_config_defaults():
    cfg = build_config("correlator", jobs=1, mu="2", k="1,2")
    assert cfg.arity == 2
    assert cfg.truncation == 4
    assert cfg.mu == Partition.of(2)
    assert cfg.k == (1, 2)
    assert cfg.r is None


def test_build_config_checks_count_length_against_r():
    cfg = build_config("correlator", jobs=1, r=3, mu="2", k="1,2,1")
    assert cfg.k == (1, 2, 1)
    with pytest.raises(InputError):
        build_config("correlator", jobs=1, r=3, mu="2", k="1,2")


def test_build_config_rejects_bad_values():
    with pytest.raises(InputError):
        build_config("correlator", jobs=1, mu="")
    with pytest.raises(InputError):
        build_config("verify", "nope", jobs=1)
    with pytest.raises(InputError):
        build_config("correlator", jobs=1, route="closed")
    with pytest.raises(InputError):
        build_config("correlator", jobs=1, colour="red")
    assert build_config("fit", "stanley", jobs=1, mu="").mu == EMPTY
    assert build_config("fit", "conjecture", jobs=1, route="closed").route == "closed"


def test_jobs_from_environment(monkeypatch):
    monkeypatch.setenv("DESSIN_JOBS", "3")
    assert build_config("oracle", profiles="2|2").jobs == 3
    monkeypatch.setenv("DESSIN_JOBS", "many")
    assert build_config("oracle", profiles="2|2").jobs >= 1
