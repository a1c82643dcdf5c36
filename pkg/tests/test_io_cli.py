"""JSON round-trips and the command-line entry point."""

import json

import numpy as np
import pytest

from nbhdclust.cli import main
from nbhdclust.geometry import Ball, Disk, Interval, Segment
from nbhdclust.instance_io import (
    instance_from_json,
    instance_to_json,
    object_from_dict,
    solution_from_json,
    solution_to_json,
)
from nbhdclust.optimizer import Solution
from nbhdclust.oracle import brute_force_opt

DISKS = [Disk((0, 0), 1), Disk((4, 0), 1), Disk((0, 5), 1.5)]


def test_instance_roundtrip_byte_identical():
    for objs, k in (
        (DISKS, 2),
        ([Interval(0, 1), Interval(2.5, 3)], 1),
        ([Segment((0, 0), (1, 1)), Segment((3, 0), (4, 1))], 1),
        ([Ball((0, 0, 0), 1), Ball((4, 0, 0), 1)], 1),
        ([], 3),
    ):
        text = instance_to_json(objs, k)
        inst = instance_from_json(text)
        assert instance_to_json(inst.objects, inst.k) == text
        assert inst.k == k
        assert len(inst.objects) == len(objs)


def test_solution_roundtrip():
    sol = Solution([np.array([1.0, 2.0]), np.array([3.0, 4.5])], 1.25, "x", 7)
    text = solution_to_json(sol)
    back = solution_from_json(text)
    assert solution_to_json(back) == text
    assert back.radius == 1.25 and back.algorithm == "x" and back.decider_calls == 7
    # 1d solutions carry scalar centers
    sol1 = Solution([1.5, 11.5], 0.5, "interval-msearch", 3)
    back1 = solution_from_json(solution_to_json(sol1))
    assert back1.centers == [1.5, 11.5]


def test_object_dict_errors():
    with pytest.raises(ValueError):
        object_from_dict({"center": [0, 0], "radius": 1})
    with pytest.raises(ValueError):
        object_from_dict({"type": "torus"})
    with pytest.raises(ValueError):
        object_from_dict({"type": "disk", "center": [0, 0, 0], "radius": 1})


def test_mixed_dimensions_rejected():
    with pytest.raises(ValueError):
        instance_to_json([Disk((0, 0), 1), Ball((0, 0, 0), 1)], 1)
    with pytest.raises(ValueError):
        instance_to_json([Interval(0, 1), Disk((0, 0), 1)], 1)


def test_instance_from_json_errors():
    with pytest.raises(ValueError):
        instance_from_json("{not json")
    with pytest.raises(ValueError):
        instance_from_json("[1,2]")
    with pytest.raises(ValueError):
        instance_from_json('{"k":1,"objects":[]}')
    bad_dim = '{"dimension":3,"k":1,"objects":[{"type":"disk","center":[0,0],"radius":1}]}'
    with pytest.raises(ValueError):
        instance_from_json(bad_dim)


def _write_instance(tmp_path, objs, k, name="inst.json"):
    path = tmp_path / name
    path.write_text(instance_to_json(objs, k))
    return str(path)


def test_cli_decide_exit_codes(tmp_path, capsys):
    path = _write_instance(tmp_path, [Disk((0, 0), 1), Disk((40, 0), 1)], 1)
    assert main(["decide", path, "--radius", "0.1"]) == 2
    doc = json.loads(capsys.readouterr().out)
    assert doc["feasible"] is False and doc["centers"] == []
    assert main(["decide", path, "--radius", "100"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["feasible"] is True
    assert doc["cover_radius"] <= 100 * 8.5


def test_cli_solve_and_oracle_agree(tmp_path, capsys):
    path = _write_instance(tmp_path, DISKS, 2)
    assert main(["solve", path]) == 0
    sol = solution_from_json(capsys.readouterr().out)
    want = brute_force_opt(DISKS, 2).radius
    assert want - 1e-9 <= sol.radius <= 8.4642 * want + 1e-9
    assert main(["oracle", path]) == 0
    ora = solution_from_json(capsys.readouterr().out)
    assert ora.radius == pytest.approx(want, abs=1e-12)


def test_cli_solve_balls(tmp_path, capsys):
    balls = [Ball((0, 0, 0), 1), Ball((6, 0, 0), 1)]
    path = _write_instance(tmp_path, balls, 1)
    assert main(["solve", path, "--eps", "0.25"]) == 0
    sol = solution_from_json(capsys.readouterr().out)
    assert sol.radius >= 2.0 - 1e-9


def test_cli_solve_1d(tmp_path, capsys):
    path = _write_instance(tmp_path, [Interval(0, 1), Interval(5, 6)], 1)
    assert main(["solve-1d", path]) == 0
    sol = solution_from_json(capsys.readouterr().out)
    assert sol.radius == 2.0 and sol.centers == [3.0]
    # k override beats the stored budget
    assert main(["solve-1d", path, "--k", "2"]) == 0
    sol = solution_from_json(capsys.readouterr().out)
    assert sol.radius == 0.0
    disks_path = _write_instance(tmp_path, DISKS, 1, "d.json")
    assert main(["solve-1d", disks_path]) == 3


def test_cli_size_ptas(tmp_path, capsys):
    path = _write_instance(tmp_path, DISKS, 2)
    assert main(["size-ptas", path, "--eps", "0.5"]) == 0
    sol = solution_from_json(capsys.readouterr().out)
    assert len(sol.centers) <= 3
    assert sol.radius <= brute_force_opt(DISKS, 2).radius + 1e-9


def test_cli_fptas_on_generated_chain(tmp_path, capsys):
    assert main(["gen", "vc-disks", "--edges", "0-1", "--k", "1"]) == 0
    text = capsys.readouterr().out
    path = tmp_path / "chain.json"
    path.write_text(text)
    inst = instance_from_json(text)
    assert len(inst.objects) == 3 and inst.k == 2
    assert main(["fptas", str(path), "--eps", "0.5"]) == 0
    sol = solution_from_json(capsys.readouterr().out)
    assert sol.algorithm in ("unit-disk-exact", "unit-disk-grid")
    assert sol.radius <= brute_force_opt(inst.objects, inst.k).radius + 1e-9


def test_cli_gen_candidates(tmp_path, capsys):
    path = _write_instance(tmp_path, DISKS, 2)
    assert main(["gen-candidates", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["radii"][0] == 0.0
    assert len(doc["points"]) >= len(DISKS)
    provs = {p["provenance"] for p in doc["points"]}
    assert "object-point" in provs


def test_cli_gen_seed_position_irrelevant(capsys):
    assert main(["--seed", "5", "gen", "random-disks", "--n", "4"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "random-disks", "--n", "4", "--seed", "5"]) == 0
    assert capsys.readouterr().out == first
    assert main(["gen", "random-disks", "--n", "4", "--seed", "6"]) == 0
    assert capsys.readouterr().out != first


def test_cli_gen_vc_segments(capsys):
    assert main(["gen", "vc-segments", "--edges", "0-1,1-2", "--k", "1"]) == 0
    inst = instance_from_json(capsys.readouterr().out)
    assert len(inst.objects) == 2 and inst.k == 1
    assert all(isinstance(o, Segment) for o in inst.objects)


def test_cli_gen_intervals(capsys):
    assert main(["gen", "intervals", "--n", "6", "--k", "2", "--seed", "1"]) == 0
    inst = instance_from_json(capsys.readouterr().out)
    assert len(inst.objects) == 6
    assert all(isinstance(o, Interval) for o in inst.objects)


def test_cli_error_paths_exit_3(tmp_path, capsys):
    assert main(["solve", str(tmp_path / "missing.json")]) == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert main(["solve", str(bad)]) == 3
    path = _write_instance(tmp_path, DISKS, 2)
    assert main(["decide", path, "--radius", "-1"]) == 3
    assert main(["gen", "vc-disks", "--edges", "0-1", "--k", "1",
                 "--n-per-edge", "4"]) == 3
    iv_path = _write_instance(tmp_path, [Interval(0, 1)], 1, "iv.json")
    assert main(["gen-candidates", iv_path]) == 3
    capsys.readouterr()


def test_cli_svg_output(tmp_path, capsys):
    path = _write_instance(tmp_path, DISKS, 2)
    svg = tmp_path / "out.svg"
    assert main(["solve", path, "--svg", str(svg)]) == 0
    capsys.readouterr()
    assert svg.read_text().startswith("<svg")
    svg2 = tmp_path / "gen.svg"
    assert main(["gen", "random-disks", "--n", "3", "--svg", str(svg2)]) == 0
    capsys.readouterr()
    assert "<circle" in svg2.read_text()


def test_cli_bench_small(capsys):
    assert main(["bench", "--sizes", "256", "--repeat", "1"]) == 0
    out = capsys.readouterr().out
    assert "active backend:" in out
    assert "sweep" in out or "cover" in out
