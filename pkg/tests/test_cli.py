import io
import json
import math
import re
import subprocess
import sys

import pytest

from hextile.cli import run
from hextile.engine import extract_symmetric_certificate
from hextile.hexlattice import Cell, Placement, Tiling, TriboneType, region_T
from hextile.render import cell_center, render_svg


def call(argv):
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


def test_check_symmetric():
    code, text = call(["check", "26", "--symmetric"])
    assert code == 0
    data = json.loads(text)
    assert data == {"n": 26, "symmetric": True, "tileable": True, "remainder": "0",
                    "closed_form_check": True}


def test_check_fixed_cell(capsys):
    code, _ = call(["check", "10", "--symmetric"])
    assert code == 1
    assert "there is a hexagon in T_N fixed" in capsys.readouterr().err


def test_check_range():
    code, text = call(["check", "--range", "7..10", "--symmetric"])
    assert code == 0
    rows = json.loads(text)
    assert [r["n"] for r in rows] == [7, 8, 9, 10]
    assert "error" in rows[0] and rows[1]["tileable"] is False
    code, text = call(["check", "--range", "1..9", "--format", "text"])
    assert text.count("\n") == 9


def test_usage_errors():
    with pytest.raises(SystemExit) as err:
        call(["check", "5", "--bogus"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        call(["check"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        call(["check", "--range", "9..3"])
    assert err.value.code == 2


def test_selftest():
    code, text = call(["selftest", "--verbose"])
    assert code == 0
    assert "FAIL" not in text
    assert "remainders ('3k', 1): P -> -s1 + s2^2" in text


def test_certificate_round_trip(tmp_path):
    path = tmp_path / "t.json"
    code, _ = call(["certificate", "26", "--symmetric", "--out", str(path)])
    assert code == 0
    tiling = Tiling.from_json(json.loads(path.read_text()))
    assert tiling.symmetric and tiling.region_n == 26
    code, _ = call(["certificate", "7"])
    assert code == 1


def test_certificate_is_deterministic():
    assert call(["certificate", "9"]) == call(["certificate", "9"])
    assert call(["certificate", "8", "--format", "svg"])[1].startswith("<?xml")


def test_groebner_command(tmp_path):
    path = tmp_path / "ideal.txt"
    path.write_text("vars: x y\n1 + x + x^2\n1 + y + y^2\n1 + x*y + x^2*y^2\n")
    code, text = call(["groebner", str(path), "--order", "deglex"])
    assert code == 0
    assert json.loads(text)["basis"][0] == "3*x - 3*y"
    path.write_text("vars: x y\n1 + + x\n")
    assert call(["groebner", str(path)])[0] == 1


def test_oracle_command():
    code, text = call(["oracle", "8", "--margin", "2"])
    assert code == 0 and json.loads(text)["solvable"] is True
    code, text = call(["oracle", "8", "--symmetric", "--sweep"])
    data = json.loads(text)
    assert data["monotone"] and data["solvable"] is False


def test_render_command(tmp_path):
    tiling = Tiling((Placement(TriboneType.X, Cell.from_uv(1, 0), 1),), 0)
    src = tmp_path / "one.json"
    src.write_text(json.dumps(tiling.to_json()))
    out = tmp_path / "one.svg"
    assert call(["render", str(src), "--out", str(out)])[0] == 0
    assert out.read_text().count('class="bar"') == 1


def test_render_empty_tiling():
    svg = render_svg(Tiling((), 3))
    assert svg.count('class="bar"') == 0
    assert svg.count("<polygon") == 6


def test_negative_weights_are_hatched():
    tiling = Tiling((Placement(TriboneType.Y, Cell(0, 0, 0), -1),), 0)
    assert 'stroke="url(#hatch)"' in render_svg(tiling)


def _bars(svg):
    out = []
    for m in re.finditer(r'x1="([-\d.]+)" y1="([-\d.]+)" x2="([-\d.]+)" y2="([-\d.]+)".*?data-weight="(-?\d+)"', svg):
        x1, y1, x2, y2, w = m.groups()
        out.append(((float(x1), float(y1)), (float(x2), float(y2)), int(w)))
    return out


def test_rendered_symmetric_certificate_is_rotation_invariant():
    tiling = extract_symmetric_certificate(26)
    bars = _bars(render_svg(tiling))
    assert len(bars) == len(tiling.placements)
    pts = [cell_center(c) for c in region_T(26).cells]
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)

    def rot(p):
        dx, dy = p[0] - cx, p[1] - cy
        ang = 2 * math.pi / 3
        return (cx + dx * math.cos(ang) - dy * math.sin(ang), cy + dx * math.sin(ang) + dy * math.cos(ang))

    def close(a, b):
        return math.dist(a, b) < 0.01  # coordinates are printed to 3 decimals

    remaining = list(bars)
    for p, q, w in bars:
        rp, rq = rot(p), rot(q)
        hit = next(i for i, (a, b, v) in enumerate(remaining)
                   if v == w and ((close(a, rp) and close(b, rq)) or (close(a, rq) and close(b, rp))))
        remaining.pop(hit)
    assert not remaining


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hextile", "check", "8"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["tileable"] is True


def test_timeout_fails_cleanly(capsys):
    code, _ = call(["--timeout-seconds", "0.05", "oracle", "30", "--margin", "5"])
    assert code == 1
    assert "timed out" in capsys.readouterr().err
