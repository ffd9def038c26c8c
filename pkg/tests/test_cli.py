import json

import pytest
from click.testing import CliRunner

from dessin_app import cli


@pytest.fixture
def run(tmp_path, monkeypatch):
    monkeypatch.setenv("DESSIN_LOG_LEVEL", "CRITICAL")
    runner = CliRunner()
    cache_dir = str(tmp_path / "chars")

    def invoke(*args):
        result = runner.invoke(cli, ["--jobs", "1", "--no-meta", "--cache-dir", cache_dir, *args])
        return result

    return invoke


def result_of(result):
    return json.loads(result.stdout)["result"]


# ─────────────────────────────────────────────────────────
# CORRELATOR
# ─────────────────────────────────────────────────────────

def test_connected_correlator(run):
    result = run("correlator", "--r", "2", "--mu", "2", "--k", "1,2", "--connected")
    assert result.exit_code == 0
    doc = result_of(result)
    assert doc["value"] == "1/2"
    assert doc["genus"] == 0
    assert doc["z_mu_times_value"] == "1"
    assert doc["agree"] is True


def test_all_connected_routes_agree(run):
    result = run("correlator", "--mu", "2,1", "--k", "2,2", "--connected", "--route", "all")
    assert result.exit_code == 0
    doc = result_of(result)
    assert set(doc["routes"]) == {"log", "zhou", "oracle"}
    assert len(set(doc["routes"].values())) == 1


def test_generating_polynomial(run):
    result = run("correlator", "--r", "2", "--mu", "1", "--generating")
    assert result.exit_code == 0
    assert result_of(result)["value"] == "v1*v2"


def test_forbidden_correlator_is_zero(run):
    result = run("correlator", "--r", "1", "--mu", "3", "--k", "2", "--connected")
    assert result.exit_code == 0
    doc = result_of(result)
    assert doc["value"] == "0"
    assert doc["genus"] == "non-integral"


def test_route_table(run):
    result = run("correlator", "--mu", "2", "--k", "1,2", "--route", "all", "--table")
    assert result.exit_code == 0
    assert "route" in result.stdout
    assert "burnside" in result.stdout and "oracle" in result.stdout


def test_no_meta_output_is_byte_identical(run):
    args = ("correlator", "--mu", "2,1", "--generating", "--connected")
    first, second = run(*args), run(*args)
    assert first.stdout == second.stdout
    assert "meta" not in json.loads(first.stdout)


def test_output_file(run, tmp_path):
    target = tmp_path / "out.json"
    result = run("-o", str(target), "oracle", "--profiles", "2|2")
    assert result.exit_code == 0
    assert result.stdout == ""
    assert json.loads(target.read_text())["result"]["value"] == "1/2"


# ─────────────────────────────────────────────────────────
# ERRORS
# ─────────────────────────────────────────────────────────

@pytest.mark.parametrize("args", [
    ("correlator", "--r", "2", "--mu", "2", "--k", "1"),
    ("correlator", "--mu", "2", "--k", "1,2", "--connected", "--route", "burnside"),
    ("correlator", "--mu", "2,x", "--k", "1,1"),
    ("oracle", "--profiles", "2|1"),
    ("cache", "chars"),
    ("fit", "conjecture", "--r", "2"),
])
def test_errors_are_reported_as_json(run, args):
    result = run(*args)
    assert result.exit_code == 2
    error = json.loads(result.stdout)["error"]
    assert error["type"] == "InputError"
    assert error["message"]


def test_unwritable_output_is_reported_as_json(run, tmp_path):
    target = tmp_path / "missing" / "out.json"
    result = run("-o", str(target), "oracle", "--profiles", "2|2")
    assert result.exit_code == 2
    error = json.loads(result.stdout)["error"]
    assert error["type"] == "InputError"
    assert str(target) in error["message"]
    assert not target.parent.exists()


# ─────────────────────────────────────────────────────────
# OTHER COMMANDS
# ─────────────────────────────────────────────────────────

def test_oracle(run):
    result = run("oracle", "--profiles", "2|2")
    assert result.exit_code == 0
    doc = result_of(result)
    assert doc["value"] == "1/2"
    assert doc["tuples"] == 1
    assert doc["genus"] == 0
    assert doc["agree"] is True


def test_partition_function_schur_basis(run):
    result = run("partition-function", "--r", "1", "-D", "2", "--basis", "schur")
    assert result.exit_code == 0
    degrees = result_of(result)["degrees"]
    assert degrees[1]["terms"] == [{"index": "1", "coeff": "v1"}]
    assert {t["index"]: t["coeff"] for t in degrees[2]["terms"]} == {
        "2": "1/2*v1^2 + 1/2*v1",
        "1,1": "1/2*v1^2 - 1/2*v1",
    }


def test_cache_lifecycle(run):
    built = result_of(run("cache", "chars", "--d", "6"))
    assert built["partitions"] == 11
    assert built["was_cached"] is False
    assert built["orthogonality"]["column_orthogonality"] is True
    assert result_of(run("cache", "chars", "--d", "6"))["was_cached"] is True
    assert [t["d"] for t in result_of(run("cache", "list"))["tables"]] == [6]
    assert result_of(run("cache", "clear"))["removed"] == [6]
    assert result_of(run("cache", "list"))["tables"] == []


def test_cache_show_table(run):
    result = run("cache", "chars", "--d", "2", "--show", "--table")
    assert result.exit_code == 0
    assert "lambda" in result.stdout


@pytest.mark.parametrize("suite,extra", [
    ("burnside", ("--d", "3")),
    ("acoeffs", ("--r", "3")),
    ("characters", ("--d", "5")),
    ("cutjoin", ("--r", "2", "--degree", "4")),
    ("zhou", ("--r", "2", "--max-weight", "4")),
    ("appendix", ("--max-size", "4")),
])
def test_verify_suites_pass(run, suite, extra):
    result = run("verify", suite, *extra)
    assert result.exit_code == 0
    doc = result_of(result)
    assert doc["passed"] is True
    assert all(c["cases"] > 0 for c in doc["checks"])


def test_fit_conjecture(run):
    result = run("fit", "conjecture", "--r", "2", "--k", "1,2", "--length", "1",
                 "--nmax", "10", "--holdout", "2", "--compare")
    assert result.exit_code == 0
    doc = result_of(result)
    assert doc["passed"] is True
    assert doc["report"]["binomial"]["coefficients"] == {"2": "1"}
    assert doc["comparison"]["match"] is True


def test_fit_stanley_table(run):
    result = run("fit", "stanley", "--r", "2", "--lambda", "1,1", "--table")
    assert result.exit_code == 0
    assert "holdout" in result.stdout
