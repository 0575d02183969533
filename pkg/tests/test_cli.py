import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from bezinv.cli import main
from bezinv.formats import REPORT_FIELDS, CurveFileError, curve_from_dict, dumps_report, report_from_dict
from bezinv.inversion import eval_curve, invert

F = Fraction


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def ex2(data_dir):
    return str(data_dir / "example2.json")


@pytest.fixture
def ex1(data_dir):
    return str(data_dir / "example1.json")


@pytest.fixture
def ex4(data_dir):
    return str(data_dir / "example4.json")


class TestInvertCommand:
    def test_example4_golden(self, ex4):
        code, out = run(["invert", "--curve", ex4, "--point", "2.66667,2.42222", "--json"])
        rep = json.loads(out)
        assert code == 0
        assert list(rep) == list(REPORT_FIELDS)
        assert rep["t0"] == pytest.approx(0.3333339104290224, abs=1e-9)
        assert rep["status"] == "ok"

    def test_example2_golden(self, ex2):
        code, out = run(["invert", "--curve", ex2, "--point", "8.50665,14.3420", "--json"])
        rep = json.loads(out)
        assert code == 0
        assert rep["nullity"] == 1
        assert rep["t0"] == pytest.approx(0.1428606867264249, abs=1e-9)
        assert rep["arithmetic"] == "rational"

    def test_far_point_exit_2(self, ex4):
        code, out = run(["invert", "--curve", ex4, "--point", "100,100", "--json"])
        assert code == 2
        assert json.loads(out)["status"] == "point_not_on_curve"

    def test_unresolved_exit_3(self, ex1):
        code, out = run(["invert", "--curve", ex1, "--point", "1/2,-3.0395517", "--method", "bezout", "--json"])
        assert code == 3
        assert json.loads(out)["status"] == "nullspace_dim_gt_1_unresolved"

    def test_fallback(self, ex1):
        code, out = run(["invert", "--curve", ex1, "--point", "0.5,-3.0395517", "--json"])
        rep = json.loads(out)
        assert code == 0
        assert rep["method"] == "sylvester"
        assert rep["residual"] <= 1e-5

    def test_human_output(self, ex4):
        code, out = run(["invert", "--curve", ex4, "--point", "2.66667,2.42222"])
        assert code == 0
        assert "status:         ok" in out
        assert "0.33333391042902" in out

    def test_tol_rank_flag(self, ex4):
        code, out = run(["invert", "--curve", ex4, "--point", "2.66667,2.42222", "--tol-rank", "1e-5", "--json"])
        assert json.loads(out)["nullity"] == 1

    def test_env_override(self, ex4, monkeypatch):
        monkeypatch.setenv("BEZINV_RANK_TOL", "1e-5")
        _, out = run(["invert", "--curve", ex4, "--point", "2.66667,2.42222", "--json"])
        assert json.loads(out)["nullity"] == 1
        monkeypatch.setenv("BEZINV_RANK_TOL", "abc")
        assert run(["invert", "--curve", ex4, "--point", "1,9"])[0] == 1

    def test_float_arith(self, ex4):
        _, out = run(["invert", "--curve", ex4, "--point", "2.66667,2.42222", "--arith", "float", "--json"])
        rep = json.loads(out)
        assert rep["arithmetic"] == "float"
        assert rep["t0"] == pytest.approx(0.3333339104290224, abs=1e-9)

    def test_degenerate_input_exit_1(self, tmp_path, capsys):
        path = tmp_path / "vline.json"
        path.write_text(json.dumps({"type": "rational_bezier", "degree": 1, "control_points": [[2, 0], [2, 1]], "weights": [1, 1]}))
        code, out = run(["invert", "--curve", str(path), "--point", "2,0.5", "--json"])
        assert code == 1
        assert json.loads(out)["status"] == "degenerate_input"
        assert "error" in capsys.readouterr().err


class TestInputErrors:
    @pytest.mark.parametrize("point", ["1", "a,b", "1,2,3", "1/0,2"])
    def test_bad_point(self, ex4, point, capsys):
        assert run(["invert", "--curve", ex4, "--point", point])[0] == 1
        assert "error" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        assert run(["invert", "--curve", str(tmp_path / "nope.json"), "--point", "1,2"])[0] == 1
        assert "cannot read" in capsys.readouterr().err

    @pytest.mark.parametrize(
        "doc",
        [
            "not json",
            '{"type": "circle", "degree": 2}',
            '{"type": "rational_bezier", "degree": 2, "control_points": [[0,0],[1,1]], "weights": [1,1]}',
            '{"type": "rational_bezier", "degree": 1, "control_points": [[0,0],[1,1]], "weights": [1,"x"]}',
            '{"type": "rational_bezier", "degree": 1, "control_points": [[0,0],[1,1]], "weights": [1,0]}',
            '{"type": "general_rational", "degree": 1, "x_num": [1,2], "x_den": [1,1], "y_num": [0,1]}',
            '{"type": "general_rational", "degree": 0, "x_num": [1], "x_den": [1], "y_num": [0], "y_den": [1]}',
        ],
    )
    def test_malformed_curve(self, tmp_path, doc, capsys):
        path = tmp_path / "c.json"
        path.write_text(doc)
        assert run(["invert", "--curve", str(path), "--point", "1,2"])[0] == 1
        assert capsys.readouterr().err.startswith("error:")

    def test_unknown_subcommand(self):
        assert run(["frobnicate"])[0] == 1


class TestEvalCommand:
    def test_example2_exact(self, ex2):
        code, out = run(["eval", "--curve", ex2, "--t", "1/7", "--exact"])
        assert code == 0
        assert out.strip() == "78193109744768/9191995131007, 131831466405881/9191995131007"

    def test_example4_exact(self, ex4):
        assert run(["eval", "--curve", ex4, "--t", "1/3", "--exact"])[1].strip() == "8/3, 109/45"

    def test_start_point(self, ex2):
        assert run(["eval", "--curve", ex2, "--t", "0"])[1].strip() == "14.0, 14.0"

    def test_denominator_zero(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"type": "rational_bezier", "degree": 1, "control_points": [[0, 0], [1, 1]], "weights": [1, -1]}))
        assert run(["eval", "--curve", str(path), "--t", "0.5"])[0] == 1

    def test_bad_t(self, ex4):
        assert run(["eval", "--curve", ex4, "--t", "half"])[0] == 1


class TestDiagCommand:
    def test_example3_regular(self, ex1):
        code, out = run(["diag", "--curve", ex1, "--point", "3.5542169,2.8148148", "--json"])
        d = json.loads(out)
        assert code == 0
        assert d["singular_values"][:3] == pytest.approx([4.212191730287018, 2.075444341475023, 0.5981428444978487], rel=1e-9)
        assert d["nullity"] == 1

    def test_example3_degenerate(self, ex1):
        code, out = run(["diag", "--curve", ex1, "--point", "0.5,-3.0395517"])
        assert code == 0
        assert "nullity:  2" in out
        assert "sigma_4" in out and out.count("zero") == 2

    def test_segment(self, data_dir):
        _, out = run(["diag", "--curve", str(data_dir / "segment.json"), "--point", "1,0.5", "--method", "sylvester", "--json"])
        d = json.loads(out)
        assert len(d["singular_values"]) == 2
        assert d["nullity"] == 1


class TestBatchCommand:
    def test_example4_points(self, ex4, example4, tmp_path):
        ts = [F(1, 4), F(1, 3), F(1, 2)]
        pts = tmp_path / "pts.txt"
        pts.write_text("".join(f"{x},{y}\n" for x, y in (eval_curve(example4, t) for t in ts)))
        code, out = run(["batch", "--curve", ex4, "--points", str(pts), "--json-lines"])
        assert code == 0
        reps = [json.loads(line) for line in out.splitlines()]
        assert len(reps) == 3
        for rep, t in zip(reps, ts):
            assert rep["status"] == "ok"
            assert abs(rep["t0"] - float(t)) <= 1e-8

    def test_empty(self, ex4, tmp_path):
        pts = tmp_path / "pts.txt"
        pts.write_text("")
        assert run(["batch", "--curve", ex4, "--points", str(pts), "--json-lines"]) == (0, "")

    def test_mixed_lines_keep_order(self, ex4, tmp_path):
        pts = tmp_path / "pts.txt"
        pts.write_text("8/3,109/45\ngarbage\n\n1,9\n")
        code, out = run(["batch", "--curve", ex4, "--points", str(pts), "--json-lines"])
        assert code == 4
        recs = [json.loads(line) for line in out.splitlines()]
        assert [r["status"] for r in recs] == ["ok", "input_error", "input_error", "ok"]
        assert recs[1]["line"] == 2
        assert recs[3]["t0"] == 0.0

    def test_human_lines(self, ex4, tmp_path):
        pts = tmp_path / "pts.txt"
        pts.write_text("1,9\n4,1\n")
        code, out = run(["batch", "--curve", ex4, "--points", str(pts)])
        assert code == 0
        assert out.splitlines()[0].startswith("line 1: ok t0=0")


class TestFormats:
    def test_report_round_trip(self, example2, example1, example4):
        reps = [
            invert(example2, ("8.50665", "14.3420")),
            invert(example1, ("1/2", "-3.0395517")),
            invert(example1, ("1/2", "-3.0395517"), method="bezout"),
            invert(example4, ("100", "100")),
            invert(example4, ("1", "9")),
        ]
        for rep in reps:
            back = report_from_dict(json.loads(dumps_report(rep)))
            assert back == rep

    def test_floats_have_17_digits(self, example2):
        text = dumps_report(invert(example2, ("8.50665", "14.3420")))
        assert '"t0": 0.14286068672643631' in text

    def test_string_numbers_exact(self):
        c = curve_from_dict({"type": "rational_bezier", "degree": 1, "control_points": [["0.1", 0], [1, "1/3"]], "weights": [1, 1]})
        assert c.control_points[0][0] == F(1, 10)
        assert c.control_points[1][1] == F(1, 3)

    def test_json_floats_are_binary_exact(self):
        c = curve_from_dict({"type": "rational_bezier", "degree": 1, "control_points": [[0.1, 0], [1, 1]], "weights": [1, 1]})
        assert c.control_points[0][0] == F(0.1)
        assert c.control_points[0][0] != F(1, 10)

    def test_rejects_non_object(self):
        with pytest.raises(CurveFileError):
            curve_from_dict([1, 2])


def test_decimal_strings_match_fractions(ex2, tmp_path):
    a = run(["invert", "--curve", ex2, "--point", "8.50665,14.3420", "--json"])
    b = run(["invert", "--curve", ex2, "--point", "170133/20000,7171/500", "--json"])
    assert a == b


def test_module_entry_point(ex4):
    res = subprocess.run(
        [sys.executable, "-m", "bezinv", "invert", "--curve", ex4, "--point", "2.66667,2.42222", "--json"],
        capture_output=True, text=True,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["t0"] == pytest.approx(0.3333339104290224, abs=1e-9)
