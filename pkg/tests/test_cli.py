import json
import subprocess
import sys

import pytest

from hkmod.cli import main


@pytest.fixture()
def files(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return {
        "ns": write("ns.json", {"e": 4, "d": 1}),
        "v": write("v.json", {"r": 2, "l": [1, 0], "s": 0}),
        "w": write("w.json", {"r": 1, "l": [0, 1], "s": 1}),
        "steps": write("steps.json", [{"r_b": 1, "deg_b": 0}, {"r_b": 2, "deg_b": 0}]),
        "v3": write("v3.json", {"r": 3, "l": [1, 0], "s": 0}),
        "fujiki_setup": write("setup.json", {"kind": "K3^[2]", "gram": [[6]]}),
        "fujiki_classes": write("classes.json", [[1], [1], [1], [1]]),
        "scenario_vb": write(
            "scenario_vb.json",
            {
                "pipeline": "vbk3ell",
                "lattices": {"ns": {"e": 4, "d": 1}},
                "vectors": {"v": {"r": 2, "l": [1, 0], "s": 0}},
            },
        ),
        "scenario_cp": write(
            "scenario_cp.json",
            {
                "pipeline": "casoprim",
                "lattices": {"ns": {"e": 4, "d": 1}},
                "vectors": {"v": {"r": 2, "l": [1, 0], "s": 0}, "h": [1, 5]},
            },
        ),
        "h_bad": write("h_bad.json", [1, 0]),
    }


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_walls_canonical_json(capsys):
    code, out, _ = run(
        capsys, ["walls", "--e", "2", "--d", "3", "--a", "6", "--json", "--no-timestamp"]
    )
    assert code == 0
    assert out == (
        '{"a":6,"count":2,"d":3,"e":2,"has_minus_two_class":false,'
        '"min_negative_norm":4,"walls":['
        '{"lambda":[1,-1],"norm":-4,"pair_f":3,"pair_h":-1,"ray":[3,1]},'
        '{"lambda":[2,-1],"norm":-4,"pair_f":6,"pair_h":1,"ray":[6,-1]}]}\n'
    )


def test_walls_human_and_timestamp(capsys):
    code, out, _ = run(capsys, ["walls", "--e", "2", "--d", "3", "--a", "6"])
    assert code == 0
    assert "count: 2" in out
    assert "min_negative_norm: 4" in out
    code, out, _ = run(capsys, ["walls", "--e", "2", "--d", "3", "--a", "6", "--json"])
    payload = json.loads(out)
    assert "generated_at" in payload and payload["generated_at"].endswith("Z")


def test_walls_suitability_exit(capsys):
    code, out, _ = run(
        capsys,
        ["walls", "--e", "4", "--d", "1", "--a", "12", "--suitability", "--json",
         "--no-timestamp"],
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["suitability"]["suitable"] is False
    assert len(payload["suitability"]["witnesses"]) == 5
    code, out, _ = run(
        capsys,
        ["walls", "--e", "4", "--d", "31", "--a", "12", "--suitability", "--json",
         "--no-timestamp"],
    )
    assert code == 0
    assert json.loads(out)["count"] == 0


def test_mukai_outputs(capsys, files):
    code, out, _ = run(
        capsys,
        ["mukai", "--ns", files["ns"], "--v", files["v"], "--json", "--no-timestamp"],
    )
    assert code == 0
    assert out == '{"a":12,"delta":12,"n":3,"v_square":4}\n'
    code, out, _ = run(
        capsys,
        ["mukai", "--ns", files["ns"], "--v", files["v"], "--w", files["w"],
         "--json", "--no-timestamp"],
    )
    assert code == 0
    assert json.loads(out) == {"pairing": -1, "v_square": 4, "w_square": -2}


def test_rigid_output(capsys, files):
    code, out, _ = run(
        capsys,
        ["rigid", "--ns", files["ns"], "--v", files["v"], "--json", "--no-timestamp"],
    )
    assert code == 0
    assert out == (
        '{"d0":0,"k":1,"n":3,"r0":1,"v_square":4,'
        '"w":{"l":[1,3],"r":2,"s":3},"w_square":-2}\n'
    )


def test_reduce_trace(capsys, files):
    code, out, _ = run(
        capsys,
        ["reduce", "--ns", files["ns"], "--v", files["v3"], "--steps", files["steps"],
         "--json", "--no-timestamp"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["squares"] == [4, 2, -2]
    assert payload["final"] == {"r": 3, "l": [1, -3], "s": 0}


def test_fujiki_output(capsys, files):
    code, out, _ = run(
        capsys,
        ["fujiki", "--setup", files["fujiki_setup"], "--classes",
         files["fujiki_classes"], "--json", "--no-timestamp"],
    )
    assert code == 0
    assert json.loads(out) == {"value": 108, "matchings": 3, "n": 2, "c_x": 1}


def test_nl_exit_codes(capsys):
    code, out, _ = run(
        capsys,
        ["nl", "--kind", "k3", "--e", "4", "--d", "31", "--r0", "2", "--vsq", "4",
         "--json", "--no-timestamp"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["isotropic"]["unique"] is True
    code, _, _ = run(
        capsys,
        ["nl", "--kind", "k3", "--e", "4", "--d", "30", "--r0", "2", "--vsq", "4"],
    )
    assert code == 1
    code, _, _ = run(capsys, ["nl", "--kind", "hk", "--e", "4", "--d", "51", "--i", "1"])
    assert code == 0
    code, _, err = run(capsys, ["nl", "--kind", "k3", "--e", "4", "--d", "31"])
    assert code == 2 and "error:" in err


def test_nl_search(capsys):
    code, out, _ = run(
        capsys, ["nl-search", "--r0", "2", "--e", "6", "--json", "--no-timestamp"]
    )
    assert code == 0
    assert json.loads(out) == {
        "r0": 2,
        "e": 6,
        "i": 2,
        "min_d": 422,
        "min_d_bound": 420,
        "m0": 1,
        "s0": 1,
        "min_d0": 11,
        "min_d0_bound": 9,
    }
    code, _, err = run(capsys, ["nl-search", "--r0", "2", "--e", "6", "--cap", "100"])
    assert code == 3 and "error:" in err
    code, _, err = run(capsys, ["nl-search", "--r0", "2", "--e", "8"])
    assert code == 1 and "refused:" in err


def test_unicita_exit_codes(capsys):
    code, out, _ = run(capsys, ["unicita", "--i", "2", "--r0", "2", "--e", "6"])
    assert code == 0
    assert "verdict: true" in out
    code, out, _ = run(
        capsys, ["unicita", "--i", "2", "--r0", "2", "--e", "14", "--json",
                 "--no-timestamp"]
    )
    assert code == 1
    assert json.loads(out)["verdict"] is False
    code, _, err = run(capsys, ["unicita", "--i", "3", "--r0", "2", "--e", "6"])
    assert code == 2 and "error:" in err


def test_scenario_commands(capsys, files):
    code, out, _ = run(
        capsys, ["vbk3ell", "--scenario", files["scenario_vb"], "--json",
                 "--no-timestamp"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] is True and payload["data"]["a"] == 12
    code, _, _ = run(capsys, ["casoprim", "--scenario", files["scenario_cp"]])
    assert code == 0
    # a scenario file routed to the wrong subcommand is refused
    code, _, err = run(capsys, ["vbk3ell", "--scenario", files["scenario_cp"]])
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, ["casoprim", "--scenario", "/nonexistent.json"])
    assert code == 2


def test_sweep_econ(capsys):
    code, out, _ = run(
        capsys, ["sweep-econ", "--r0max", "2", "--emax", "40", "--json",
                 "--no-timestamp"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["cases"] == 23
    assert payload["rows"][0]["count"] == 20
    assert payload["rows"][1]["first"][0] == {"e": 6, "m0": 1, "s0": 1}


def test_verify_all(capsys):
    code, out, _ = run(capsys, ["verify-all"])
    assert code == 0
    assert "all suites passed" in out
    code, out, _ = run(capsys, ["verify-all", "--filter", "walls", "--json",
                                "--no-timestamp"])
    assert code == 0
    payload = json.loads(out)
    assert [s["theorem"] for s in payload["suites"]] == ["walls"]
    code, _, err = run(capsys, ["verify-all", "--filter", "nomatch"])
    assert code == 2 and "error:" in err


def test_argparse_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["walls"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["not-a-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main([])


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "hkmod", "walls", "--e", "2", "--d", "3", "--a", "6"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "count: 2" in proc.stdout
