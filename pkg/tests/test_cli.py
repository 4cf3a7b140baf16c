import csv
import io
import json
import re
import subprocess
import sys
from fractions import Fraction

import pytest

from seqconv import analysis, dist, exactnum
from seqconv.analysis import SweepSeries, variance_sweep
from seqconv.cli import run
from seqconv.svgplot import render_plot


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_constants_json(capsys):
    code, out, _ = call(capsys, "constants", "--L", "200", "--digits", "12", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["meta"] == {"L": 200, "digits": 12}
    assert d["obs2"]["computed"] == exactnum.render(
        exactnum.to_decimal(analysis.family_variance("self", 200), 12))


def test_argmax_scan_csv(capsys):
    code, out, _ = call(capsys, "argmax-scan", "--from", "4", "--to", "400")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 397
    assert all(int(r["argmax_index"]) == 2 * int(r["L"]) - 2 for r in rows)


def test_theorem_check_boundary(capsys):
    code, out, err = call(capsys, "theorem-check", "--L", "3")
    assert code == 1 and out == ""
    assert "L >= 4" in err


def test_theorem_check_ok(capsys):
    code, out, _ = call(capsys, "theorem-check", "--L", "50")
    assert code == 0
    assert json.loads(out)["ok_last"] is True


def test_theorem_violation_exit_2(capsys, monkeypatch):
    monkeypatch.setattr(dist, "theorem_check", lambda L: dist.TheoremCheck(L, False, True, 1))
    code, _, _ = call(capsys, "theorem-check", "--L", "10")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [["bogus"], [], ["fib"], ["sweep", "--family", "nope", "--from", "4", "--to", "9"],
     ["variance", "--L", "10", "--format", "svg"], ["fib", "--L", "5", "--digits", "0"],
     ["sweep", "--from", "4", "--to", "20", "--format", "svg", "--figure", "x.png"]],
)
def test_usage_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 1 and out == "" and err


def test_fib_outputs(capsys):
    code, out, _ = call(capsys, "fib", "--L", "5")
    assert out.splitlines() == ["index,value", "1,1", "2,1", "3,2", "4,3", "5,5"]
    code, out, _ = call(capsys, "fib", "--n", "70")
    assert json.loads(out) == {"n": 70, "fib": "190392490709135", "binet": "190392490709135", "agree": True}


def test_conv_fast_matches(capsys):
    _, slow, _ = call(capsys, "conv", "--family", "triple", "--L", "30")
    _, fast, _ = call(capsys, "conv", "--family", "triple", "--L", "30", "--fast")
    assert slow == fast
    _, js, _ = call(capsys, "conv", "--family", "rev", "--L", "6", "--format", "json")
    assert len(json.loads(js)["operands"]) == 2


def test_pmf_csv(capsys):
    _, out, _ = call(capsys, "pmf", "--family", "self", "--L", "3", "--digits", "4")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [Fraction(int(r["prob_num"]), int(r["prob_den"])) for r in rows] == [
        Fraction(k, 16) for k in (1, 2, 5, 4, 4)]
    assert rows[2]["prob_decimal"] == "0.3125"


def test_variance_is_thin_adapter(capsys):
    _, out, _ = call(capsys, "variance", "--family", "sym", "--L", "41", "--digits", "20")
    assert json.loads(out) == {"family": "sym", "L": 41,
                               **dist.moment_report(analysis.family_weights("sym", 41), 20).to_dict()}


def test_env_digits(capsys, monkeypatch):
    monkeypatch.setenv("SEQCONV_DIGITS", "7")
    _, out, _ = call(capsys, "ratio", "--n", "10")
    assert json.loads(out)["ratio"] == "1.6176471"
    _, out, _ = call(capsys, "ratio", "--n", "10", "--digits", "3")
    assert json.loads(out)["ratio"] == "1.618"
    monkeypatch.setenv("SEQCONV_DIGITS", "x")
    assert call(capsys, "ratio", "--n", "10")[0] == 1


def test_sweep_csv_roundtrip(capsys, tmp_path):
    out = tmp_path / "s.csv"
    code, stdout, _ = call(capsys, "sweep", "--family", "sym", "--from", "10", "--to", "40", "--out", str(out))
    assert code == 0 and stdout == ""
    raw = out.read_bytes()
    assert b"\r\n" not in raw
    assert SweepSeries.from_csv(raw.decode()) == variance_sweep("sym", 10, 40)


def test_sweep_json_has_convergence(capsys):
    _, out, _ = call(capsys, "sweep", "--family", "self", "--from", "20", "--to", "120", "--format", "json")
    d = json.loads(out)
    assert d["convergence"]["mode"] == "smooth"
    assert d["convergence"]["limit_estimate"].startswith("8.472135954")


def test_sweep_figure_written(capsys, tmp_path):
    fig = tmp_path / "fig3.png"
    code, out, _ = call(capsys, "sweep", "--family", "self", "--from", "20", "--to", "40", "--figure", str(fig))
    assert code == 0 and out.startswith("family,L,")
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_argmax_figure_and_svg(capsys, tmp_path):
    fig = tmp_path / "fig4.png"
    code, _, _ = call(capsys, "argmax-scan", "--from", "4", "--to", "30", "--figure", str(fig))
    assert code == 0 and fig.exists()
    code, out, _ = call(capsys, "argmax-scan", "--from", "4", "--to", "30", "--format", "svg")
    assert out.count("<polyline") == 1


def test_viswanath_and_gauss(capsys):
    _, out, _ = call(capsys, "viswanath", "--n", "20000", "--seed", "3")
    assert json.loads(out) == analysis.viswanath_estimate(20000, 3).to_dict()
    _, out, _ = call(capsys, "gauss-mse", "--family", "sym", "--L", "32")
    d = json.loads(out)
    assert d["support_size"] == 63 and float(d["mse"]) > 0


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "seqconv", "ratio", "--n", "64", "--digits", "12"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["ratio"] == json.loads(r.stdout)["golden_ratio"]


# --- SVG rendering ---

def test_svg_two_points():
    svg = render_plot([(1, 2.0), (2, 3.0)])
    polys = re.findall(r'points="([^"]*)"', svg)
    assert len(polys) == 1 and len(polys[0].split()) == 2
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")


def test_svg_rejects_single_point():
    with pytest.raises(ValueError):
        render_plot([(1, 2.0)])


def test_svg_deterministic_and_flattening():
    s = variance_sweep("self", 20, 120)
    a, b = render_plot(s), render_plot(variance_sweep("self", 20, 120))
    assert a == b
    ys = [float(p.split(",")[1]) for p in re.search(r'points="([^"]*)"', a).group(1).split()]
    # screen y decreases as variance grows toward 8.472
    assert all(y2 <= y1 for y1, y2 in zip(ys, ys[1:]))
    assert "8.47" in a


def test_svg_overlay():
    svg = render_plot([variance_sweep("single", 10, 30), variance_sweep("self", 10, 30)])
    assert svg.count("<polyline") == 2
