import io
import json
import subprocess
import sys

import pytest

from osculant.catalog import catalog_expected, catalog_get, catalog_names
from osculant.cli import EXIT_ENGINE, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from osculant.report import SCHEMA, Report, ReportOptions, run_report


def run(argv, env=None, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, environ=env or {}, out=out, err=err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue(), err.getvalue()


class TestReport:
    def test_cone_rnc4_matches_table(self):
        rep = run_report(catalog_get("cone_rnc4").parametrization, 2, ReportOptions(seed=42))
        exp = catalog_expected("cone_rnc4")
        for t in (1, 2):
            o = rep.order(t)
            assert (o["d"], o["delta"], o["Delta"], o["o"], o["h"], o["dual_dim"]) == tuple(
                exp[key][t - 1] for key in ("d", "delta", "Delta", "o", "h", "dual"))

    def test_linear(self):
        rep = run_report(catalog_get("linear(3,5)").parametrization, 3)
        assert [rep.order(t)["Delta"] for t in (2, 3)] == [-1, -1]

    def test_roundtrip(self):
        rep = run_report(catalog_get("cone_veronese").parametrization, 3, ReportOptions(cross_check=True))
        again = Report.from_json(rep.to_json())
        assert again == rep and again.to_json() == rep.to_json()
        assert json.loads(rep.to_json())["schema"] == SCHEMA

    def test_schema_checked(self):
        with pytest.raises(ValueError):
            Report.from_dict({"schema": "other/9"})

    def test_byte_identical(self):
        p = catalog_get("tangentdev_rnc4").parametrization
        opts = ReportOptions(seed=7)
        assert run_report(p, 3, opts).to_json() == run_report(catalog_get("tangentdev_rnc4").parametrization, 3, opts).to_json()

    def test_integers_only(self):
        text = run_report(catalog_get("v3p2").parametrization, 3).to_json()

        def walk(x):
            assert not isinstance(x, float)
            if isinstance(x, dict):
                for v in x.values():
                    walk(v)
            elif isinstance(x, list):
                for v in x:
                    walk(v)
        walk(json.loads(text))

    @pytest.mark.parametrize("name", catalog_names())
    def test_cross_check_agrees(self, name):
        rep = run_report(catalog_get(name).parametrization, 3, ReportOptions(cross_check=True, theorems=False))
        assert rep.cross_check["agree"], rep.cross_check

    def test_per_order_isolation(self, monkeypatch):
        import osculant.report as report

        real = report.defect_report

        def flaky(p, t, *a):
            if t == 2:
                raise ArithmeticError("boom")
            return real(p, t, *a)
        monkeypatch.setattr(report, "defect_report", flaky)
        rep = run_report(catalog_get("rnc(3)").parametrization, 3, ReportOptions(theorems=False))
        assert "error" in rep.order(2) and "error" not in rep.order(1) and "error" not in rep.order(3)
        assert "boom" in rep.to_text()

    def test_order_ceiling(self):
        with pytest.raises(ValueError):
            run_report(catalog_get("rnc(3)").parametrization, 7)


class TestCli:
    def test_catalog_list(self):
        code, out, _ = run(["catalog", "list"])
        assert code == EXIT_OK and "cone_v3p2" in out
        code, out, _ = run(["catalog", "list", "--format", "json"])
        assert {"name": "rnc(4)", "k": 1, "N": 4} in json.loads(out)

    def test_analyze_catalog_json(self):
        code, out, _ = run(["analyze", "--catalog", "cone_rnc4", "--max-order", "2", "--seed", "42"])
        doc = json.loads(out)
        assert code == EXIT_OK and doc["meta"]["seed"] == 42 and doc["orders"][0]["o"] == 1

    def test_analyze_file_and_stdin(self, tmp_path):
        doc = {"name": "cubic", "k": 1, "N": 3, "coordinates": ["u1", "u1^2", "u1^3"]}
        f = tmp_path / "in.json"
        f.write_text(json.dumps(doc))
        code, out, _ = run(["analyze", str(f), "--format", "text"])
        assert code == EXIT_OK and out.startswith("cubic: k=1 N=3")
        code, out2, _ = run(["analyze", "-", "--format", "text"], stdin=json.dumps(doc))
        assert out2 == out

    def test_defaults(self):
        _, out, _ = run(["analyze", "--catalog", "rnc(2)"])
        meta = json.loads(out)["meta"]
        assert meta == {**meta, "mode": "sampled", "seed": 0, "samples": 5, "bound": 100, "max_order": 3}

    def test_environment_overrides(self):
        env = {"OSCULANT_SEED": "9", "OSCULANT_SAMPLES": "3", "OSCULANT_COORD_BOUND": "50"}
        _, out, _ = run(["analyze", "--catalog", "rnc(2)"], env)
        meta = json.loads(out)["meta"]
        assert (meta["seed"], meta["samples"], meta["bound"]) == (9, 3, 50)
        _, out, _ = run(["analyze", "--catalog", "rnc(2)", "--seed", "4"], env)
        assert json.loads(out)["meta"]["seed"] == 4

    def test_bad_environment(self):
        code, _, err = run(["analyze", "--catalog", "rnc(2)"], {"OSCULANT_SEED": "x"})
        assert code == EXIT_USAGE and "OSCULANT_SEED" in err

    @pytest.mark.parametrize("argv", [
        ["analyze", "--catalog", "rnc(2)", "--bogus"],
        ["analyze"],
        ["analyze", "--catalog", "nowhere"],
        ["analyze", "--catalog", "rnc(2)", "--max-order", "9"],
        ["check", "--theorem", "Z", "--order", "2", "--catalog", "rnc(2)"],
        ["frobnicate"],
    ])
    def test_usage_errors(self, argv):
        code, out, _ = run(argv)
        assert code == EXIT_USAGE and out == ""

    def test_parse_error_exit(self):
        code, _, err = run(["analyze", "-"], stdin='{"k": 2, "N": 2, "coordinates": ["u1", "u3"]}')
        assert code == EXIT_USAGE and "position" in err

    def test_check_pass_and_not_applicable(self):
        code, out, _ = run(["check", "--theorem", "B", "--order", "1", "--catalog", "cone_veronese"])
        assert code == EXIT_OK and json.loads(out)["status"] == "pass"
        code, out, _ = run(["check", "--theorem", "B", "--order", "1", "--catalog", "cone_rnc4",
                            "--format", "text"])
        assert code == EXIT_OK and "not-applicable" in out

    def test_check_failure_exit_code(self, monkeypatch):
        import osculant.cli as cli
        from osculant.defects import TheoremVerdict

        monkeypatch.setitem(cli.THEOREMS, "A", lambda *a: TheoremVerdict("A", 2, True, {}, False))
        code, _, _ = run(["check", "--theorem", "A", "--order", "2", "--catalog", "rnc(3)"])
        assert code == EXIT_FAIL

    def test_engine_error_exit(self):
        doc = {"k": 1, "N": 2, "coordinates": ["u1", "u1^2"]}
        code, _, err = run(["check", "--theorem", "A", "--order", "1", "-"], stdin=json.dumps(doc))
        assert code == EXIT_ENGINE and "engine error" in err

    def test_console_script(self):
        proc = subprocess.run([sys.executable, "-m", "osculant.cli", "analyze", "--catalog", "rnc(3)",
                               "--seed", "7"], capture_output=True, text=True, check=True)
        again = subprocess.run([sys.executable, "-m", "osculant.cli", "analyze", "--catalog", "rnc(3)",
                                "--seed", "7"], capture_output=True, text=True, check=True)
        assert proc.stdout == again.stdout
