import json

import pytest

from svjack.cli import main

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, "--json", *argv)
    return code, json.loads(out)


def _schema():
    import importlib.resources as res
    with res.files("svjack").joinpath("data/report_schema.json").open() as fh:
        return json.load(fh)


def _validate(doc):
    if jsonschema is not None:
        jsonschema.validate(doc, _schema())


def test_uglov_subcommand_e3(capsys):
    code, doc = run_json(capsys, "uglov", "--partition", "1,1,1",
                         "--gamma", "sym", "--basis", "e")
    assert code == 0
    assert doc["schema"] == "svjack-report/1"
    assert doc["result"]["expansion"]["basis"] == "e"
    assert doc["result"]["expansion"]["terms"] == [
        {"partition": [3], "coeff": {"num": "1", "den": "1"}}]
    _validate(doc)


def test_verify_11_exit_zero(capsys):
    code, doc = run_json(capsys, "verify", "--r", "1", "--s", "1", "--t", "sym")
    assert code == 0
    assert doc["result"]["proportional"] is True
    _validate(doc)


def test_verify_parity_usage_error(capsys):
    code = main(["verify", "--r", "5", "--s", "0"])
    assert code == 2


def test_unknown_flag_exits_two(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "--bogus", "1"])
    assert err.value.code == 2


def test_singular_subcommand(capsys):
    code, doc = run_json(capsys, "singular", "--r", "3", "--s", "1", "--t", "sym")
    assert code == 0
    assert doc["result"]["level"] == "3/2"
    assert len(doc["result"]["terms"]) == 2
    _validate(doc)


def test_kacdet_subcommand(capsys):
    code, doc = run_json(capsys, "kacdet", "--level", "3/2")
    assert code == 0
    assert doc["result"]["degree"] == 3
    _validate(doc)


def test_screening_subcommand(capsys):
    code, doc = run_json(capsys, "screening", "--s", "3")
    assert code == 0
    _validate(doc)


def test_selberg_quadrature(capsys):
    code, doc = run_json(capsys, "selberg", "integral", "--n", "2", "--alpha", "1",
                         "--beta", "1", "--gamma", "1", "--method", "quadrature")
    assert code == 0
    assert abs(doc["result"]["value"] - 1 / 6) < 1e-8
    _validate(doc)


def test_selberg_vanish(capsys):
    code, doc = run_json(capsys, "selberg", "vanish", "--r", "2", "--t", "1",
                         "--m", "1,0", "--seed", "7", "--samples", "20000")
    assert code == 0
    assert doc["result"]["exact_moment"] == "0"
    _validate(doc)


def test_finite_n_diagnostic(capsys):
    code, doc = run_json(capsys, "finite-n", "--dmax", "1", "--n-range", "1..2")
    assert code == 0
    assert doc["result"]["status"] == "diagnostic"
    _validate(doc)


def test_json_determinism(capsys):
    _, out1 = run_cli(capsys, "--json", "uglov", "--partition", "2,1")
    _, out2 = run_cli(capsys, "--json", "uglov", "--partition", "2,1")
    assert out1 == out2
    _, out3 = run_cli(capsys, "--json", "selberg", "integral", "--n", "2",
                      "--alpha", "1", "--beta", "1", "--gamma", "1",
                      "--method", "montecarlo", "--samples", "5000", "--seed", "3")
    _, out4 = run_cli(capsys, "--json", "selberg", "integral", "--n", "2",
                      "--alpha", "1", "--beta", "1", "--gamma", "1",
                      "--method", "montecarlo", "--samples", "5000", "--seed", "3")
    assert out3 == out4


def test_human_output_mode(capsys):
    code, out = run_cli(capsys, "kacdet", "--level", "1/2")
    assert code == 0
    assert "[kacdet] ok" in out


def test_cache_dir_roundtrip(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SVJACK_CACHE_DIR", str(tmp_path))
    code, _ = run_json(capsys, "uglov", "--partition", "2,1")
    assert code == 0
    assert (tmp_path / "transitions.json").exists()
    # second run loads the persisted transitions
    code, _ = run_json(capsys, "uglov", "--partition", "2,1")
    assert code == 0


def test_macdonald_and_jack_subcommands(capsys):
    code, doc = run_json(capsys, "macdonald", "--partition", "1,1",
                         "--q", "2/3", "--t", "3/5", "--basis", "e")
    assert code == 0
    assert doc["result"]["expansion"]["terms"][0]["partition"] == [2]
    code, doc = run_json(capsys, "jack", "--partition", "2", "--alpha", "1")
    assert code == 0
    _validate(doc)


def test_reproduce_paper_bound_two(capsys):
    code, doc = run_json(capsys, "reproduce-paper", "--bound", "2")
    assert code == 0
    result = doc["result"]
    assert result["finite-n-limit"]["status"] == "diagnostic"
    for name, section in result.items():
        assert section["status"] in ("pass", "diagnostic"), name
    _validate(doc)
