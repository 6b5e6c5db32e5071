import json
from importlib import resources

import jsonschema
import pytest

from arith_harmonics import cli


@pytest.fixture(scope="module")
def schema():
    return json.loads(resources.files("arith_harmonics").joinpath("schema/report.schema.json").read_text())


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def _data_lines(text):
    return [l for l in text.splitlines() if l and not l.startswith("#")]


class TestSieve:
    def test_mu(self, capsys):
        rc, out, _ = run(capsys, "sieve", "--kind", "mu", "--n-max", "10")
        lines = _data_lines(out)
        assert rc == 0 and lines[0] == "n,value" and len(lines) == 11 and lines[-1] == "10,1"

    def test_phi_one(self, capsys):
        rc, out, _ = run(capsys, "sieve", "--kind", "phi", "--n-max", "1")
        assert _data_lines(out)[1:] == ["1,1"]

    def test_jordan(self, capsys):
        rc, out, _ = run(capsys, "sieve", "--kind", "jordan", "--k", "2", "--n-max", "4")
        assert _data_lines(out)[-1] == "4,12"

    def test_mangoldt_full_precision(self, capsys):
        _, out, _ = run(capsys, "sieve", "--kind", "mangoldt", "--n-max", "8")
        assert float(_data_lines(out)[-1].split(",")[1]) == pytest.approx(0.6931471805599453, abs=0)

    def test_config_header(self, capsys):
        _, out, _ = run(capsys, "sieve", "--kind", "mu", "--n-max", "3", "--seed", "5")
        hdr = dict(l[2:].split("=", 1) for l in out.splitlines() if l.startswith("#"))
        assert json.loads(hdr["seed"]) == 5 and json.loads(hdr["subcommand"]) == "sieve"

    def test_bad_kind(self, capsys):
        rc, _, _ = run(capsys, "sieve", "--kind", "nope", "--n-max", "10")
        assert rc == 2

    def test_missing_k(self, capsys):
        rc, _, err = run(capsys, "sieve", "--kind", "jordan", "--n-max", "10")
        assert rc == 2 and "--k" in err

    def test_unknown_flag(self, capsys):
        rc, _, _ = run(capsys, "sieve", "--kind", "mu", "--n-max", "10", "--bogus", "1")
        assert rc == 2


class TestVerify:
    def test_franel_sawtooth(self, capsys, schema):
        rc, out, _ = run(capsys, "verify", "franel-sawtooth", "--r-max", "50", "--format", "json")
        doc = json.loads(out)
        jsonschema.validate(doc, schema)
        assert rc == 0 and len(doc["reports"]) == 2500
        assert all(r["verdict"] == "pass" and r["abs_error"] == 0 for r in doc["reports"])

    def test_gram_eigs(self, capsys):
        rc, out, _ = run(capsys, "verify", "gram-eigs", "--s", "2", "--n", "100", "--format", "json")
        rep = json.loads(out)["reports"]
        assert rc == 0 and rep
        for r in rep:
            assert r["verdict"] == "pass"

    def test_besicovitch_k4(self, capsys):
        rc, out, _ = run(capsys, "verify", "besicovitch", "--k", "4", "--s", "2", "--format", "json")
        r = json.loads(out)["reports"][0]
        assert rc == 0 and r["rhs"] == {"re": 0.0, "im": 0.0} and r["abs_error"] <= 1e-6

    def test_heuristic_exit_code(self, capsys):
        rc, out, _ = run(capsys, "verify", "ramanujan-point", "--k", "3", "--s", "1", "--n-terms", "100000",
                         "--tol", "1e-4", "--format", "json")
        assert rc == 3 and json.loads(out)["reports"][0]["verdict"] == "heuristic-pass"

    def test_fail_exit_code(self, capsys):
        rc, out, _ = run(capsys, "verify", "mu-tail-bound", "--d", "2310", "--tau", "1.01", "--format", "json")
        assert rc == 1 and json.loads(out)["reports"][0]["verdict"] == "fail"

    def test_unknown_identity(self, capsys):
        rc, _, _ = run(capsys, "verify", "no-such-identity")
        assert rc == 2

    def test_domain_error_is_usage(self, capsys):
        rc, _, err = run(capsys, "verify", "mu-subseries", "--s", "1")
        assert rc == 2 and err.startswith("error:")

    def test_complex_s(self, capsys, schema):
        rc, out, _ = run(capsys, "verify", "liouville-alt", "--s", "2+0.5i", "--format", "json")
        doc = json.loads(out)
        jsonschema.validate(doc, schema)
        assert rc == 0 and doc["reports"][0]["rhs"]["im"] != 0

    @pytest.mark.parametrize("name", sorted(cli.REGISTRY))
    def test_every_identity_in_help(self, name, capsys):
        with pytest.raises(SystemExit):
            cli.build_parser().parse_args(["verify", "--help"])
        out = capsys.readouterr().out
        assert f"{name:16s} {cli.REGISTRY[name][1]}" in out

    def test_table_format(self, capsys):
        rc, out, _ = run(capsys, "verify", "smith-det", "--r", "1", "--n", "6", "--format", "table")
        assert rc == 0 and out.splitlines()[0].split()[0] == "name"


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ["verify", "t-semigroup", "--seed", "7", "--format", "json"],
        ["verify", "chp", "--format", "csv"],
        ["scan", "--kind", "lambda", "--shifts", "0,2", "--m", "20000"],
        ["fit", "--x-max", "1000", "--points", "30", "--seed", "2", "--format", "json"],
    ])
    def test_byte_identical(self, capsys, argv):
        _, a, _ = run(capsys, *argv)
        _, b, _ = run(capsys, *argv)
        assert a == b and a

    def test_out_file(self, capsys, tmp_path):
        p = tmp_path / "o.csv"
        rc, out, _ = run(capsys, "sieve", "--kind", "mu", "--n-max", "5", "--out", str(p))
        assert rc == 0 and out == ""
        _, direct, _ = run(capsys, "sieve", "--kind", "mu", "--n-max", "5")
        assert _data_lines(p.read_text()) == _data_lines(direct)
        assert _data_lines(direct)[-1] == "5,-1"


class TestSchema:
    @pytest.mark.parametrize("argv", [
        ["sieve", "--kind", "phi", "--n-max", "20", "--format", "json"],
        ["scan", "--m", "10000", "--format", "json"],
        ["fit", "--x-max", "1000", "--points", "20", "--format", "json"],
        ["figure", "fig1", "--n-terms", "2000", "--grid-points", "11", "--format", "json"],
        ["verify", "smith-det", "--format", "json"],
    ])
    def test_validates(self, capsys, schema, argv):
        _, out, _ = run(capsys, *argv)
        jsonschema.validate(json.loads(out), schema)

    def test_rejects_bad_verdict(self, schema):
        bad = {"config": {"subcommand": "verify", "format": "json", "version": "0", "seed": 0},
               "reports": [{"name": "x", "params": {}, "lhs": {"re": 0, "im": 0}, "rhs": {"re": 0, "im": 0},
                            "abs_error": 0, "verdict": "maybe", "n_terms": None}]}
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(bad, schema)


class TestScanAndFigure:
    def test_scan_mu(self, capsys):
        rc, out, _ = run(capsys, "scan", "--kind", "mu", "--shifts", "0", "--m", "1000000")
        rows = [l.split(",") for l in _data_lines(out)[1:]]
        assert rc == 0 and abs(float(rows[-1][1])) <= 0.005 and rows[-1][0] == "1000000"

    def test_scan_all_squares_warns(self, capsys):
        rc, out, err = run(capsys, "scan", "--shifts", "0", "--exponents", "2", "--m", "1000000")
        assert "warning" in err
        assert float(_data_lines(out)[-1].split(",")[1]) == pytest.approx(0.6079, abs=1e-3)

    def test_scan_rows_monotone(self, capsys):
        _, out, _ = run(capsys, "scan", "--kind", "lambda", "--shifts", "0,2", "--m", "100000")
        Ms = [int(l.split(",")[0]) for l in _data_lines(out)[1:]]
        assert Ms == sorted(set(Ms))

    def test_figure_small(self, capsys):
        rc, out, _ = run(capsys, "figure", "fig2", "--n-terms", "5000", "--grid-points", "5", "--format", "json")
        doc = json.loads(out)
        assert rc == 0 and [s["t"] for s in doc["samples"]] == [0, 0.25, 0.5, 0.75, 1]
        assert [r["k"] for r in doc["footer"]] == list(range(2, 11))
        assert all(r["exact_match"] for r in doc["footer"])

    def test_figure_grid_too_small(self, capsys):
        rc, _, _ = run(capsys, "figure", "fig1", "--grid-points", "1")
        assert rc == 2
