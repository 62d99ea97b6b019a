import json
import math
import re

import pytest

from ckgeom import cli, sceneio
from ckgeom.projective import points_equal


def run_cli(args):
    return cli.main(args)


def test_verify_command(tmp_path, capsys):
    report = tmp_path / "report.json"
    code = run_cli(["verify", "--theorem", "desargues", "--trials", "100",
                    "--seed", "7", "--report", str(report)])
    assert code == 0
    data = json.loads(report.read_text())
    assert data["passed"]
    assert data["certificates"][0]["theorem"] == "desargues"
    assert data["certificates"][0]["max_residual"] <= 1e-9


def test_verify_unknown_theorem(capsys):
    assert run_cli(["verify", "--theorem", "not_a_theorem"]) == 2


def test_compute_distance(capsys):
    code = run_cli(["compute", "--scene", "builtin:unit-circle",
                    "--op", "distance", "A", "B"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert abs(out["value"] - 0.549306) < 1e-6


def test_compute_angle(tmp_path, capsys):
    scene = {
        "conic": [[[1, 0], [0, 0], [0, 0]],
                  [[0, 0], [1, 0], [0, 0]],
                  [[0, 0], [0, 0], [-1, 0]]],
        "points": {
            "O": [[0, 0], [0, 0], [1, 0]],
            "X": [[0.5, 0], [0, 0], [1, 0]],
            "D": [[0.5, 0], [0.5, 0], [1, 0]],
        },
    }
    path = tmp_path / "scene.json"
    path.write_text(json.dumps(scene))
    code = run_cli(["compute", "--scene", str(path), "--op", "angle",
                    "O", "X", "O", "D"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert abs(out["value"] - 0.785398) < 1e-6


def test_compute_laws(capsys):
    code = run_cli(["compute", "--scene", "builtin:elliptic", "--op", "laws",
                    "A", "B", "C"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["squared_law_of_cosines_residual"] < 1e-9
    assert out["closing_branches"] == 1
    assert out["projective_law_of_cosines_residual"] < 1e-8


def test_compute_malformed_scene(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"conic": [[1]], "bogus": 1}))
    assert run_cli(["compute", "--scene", str(path), "--op", "distance",
                    "A", "B"]) == 2


def test_scene_strict_mode(tmp_path):
    data = {
        "conic": [[[1, 0], [0, 0], [0, 0]],
                  [[0, 0], [1, 0], [0, 0]],
                  [[0, 0], [0, 0], [-1, 0]]],
        "points": {"A": [[0, 0], [0, 0], [1, 0]]},
        "surprise": True,
    }
    with pytest.raises(sceneio.SceneError):
        sceneio.parse_scene(data, strict=True)
    scene = sceneio.parse_scene(data, strict=False)
    assert scene.model.kind == "hyperbolic"


def test_scene_roundtrip(tmp_path):
    scene = sceneio.builtin_scene("default")
    path = tmp_path / "scene.json"
    sceneio.dump_scene(scene, path)
    again = sceneio.load_scene(path)
    assert again.model.kind == scene.model.kind
    for name in scene.points:
        assert points_equal(again.point(name), scene.point(name))
    # serialize -> parse -> serialize is stable
    d1 = sceneio.scene_to_dict(again)
    d2 = sceneio.scene_to_dict(sceneio.parse_scene(d1))
    assert d1 == d2


def _extract_points(svg_text, names):
    got = {}
    for m in re.finditer(r'data-name="([^"]+)"[^/]*?data-x="([^"]+)" '
                         r'data-y="([^"]+)"', svg_text):
        got[m.group(1)] = (float(m.group(2)), float(m.group(3)))
    return {n: got[n] for n in names if n in got}


def test_figure_euler_line_remeasured(tmp_path, capsys):
    out = tmp_path / "euler.svg"
    code = run_cli(["figure", "--figure", "euler-line", "-o", str(out)])
    assert code == 0
    svg = out.read_text()
    assert svg.startswith("<?xml")
    pts = _extract_points(svg, ["H", "N", "N'", "P", "P'"])
    assert len(pts) >= 3
    # re-measure: all recorded centers are collinear within drawing tolerance
    (x1, y1), (x2, y2) = list(pts.values())[0], list(pts.values())[1]
    for (x, y) in list(pts.values())[2:]:
        area = (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1)
        assert abs(area) < 1e-6


def test_figure_midpoint_quadrilateral(tmp_path):
    out = tmp_path / "mq.svg"
    assert run_cli(["figure", "--figure", "midpoint-quadrilateral",
                    "-o", str(out)]) == 0
    svg = out.read_text()
    for nm in ("D", "E", "F"):
        assert f'data-name="{nm}"' in svg


def test_figure_unknown_and_imaginary(tmp_path):
    assert run_cli(["figure", "--figure", "nope", "-o",
                    str(tmp_path / "x.svg")]) == 2
    assert run_cli(["figure", "--figure", "euler-line", "--scene",
                    "builtin:elliptic", "-o", str(tmp_path / "y.svg")]) == 2


def test_figure_all_names(tmp_path):
    from ckgeom.figures import FIGURES
    for name in FIGURES:
        out = tmp_path / f"{name}.svg"
        assert run_cli(["figure", "--figure", name, "-o", str(out)]) == 0
        assert out.read_text().rstrip().endswith("</svg>")
