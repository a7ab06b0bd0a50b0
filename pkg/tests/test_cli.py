import json

import pytest

from pyspecenergy import __version__
from pyspecenergy.cli import main
from pyspecenergy.Incidence.scene import product_scene
from pyspecenergy.Incidence.sceneio import write_scene
from pyspecenergy.Sets.setio import read_set


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr()


def test_spectrum_inline(capsys):
    status, out = run(capsys, "spectrum", "--p", "7", "--set", "1,2,4", "--eps", "0.4")
    assert status == 0
    lines = out.out.splitlines()
    assert lines[0] == "# p=7 |A|=3 eps=0.4 |Spec|=7"
    assert lines[1] == "r,magnitude"
    assert [line.split(",")[0] for line in lines[2:]] == [str(r) for r in range(7)]
    assert lines[2] == "0,3"


def test_spectrum_set_file(tmp_path, capsys):
    path = tmp_path / "qr.set"
    path.write_text("p=7\n1\n2\n4\n")
    out_csv = tmp_path / "spec.csv"
    status, out = run(
        capsys, "spectrum", "--set-file", str(path), "--eps", "0.5", "--out", str(out_csv)
    )
    assert status == 0
    assert "|Spec|=1" in out.out
    assert out_csv.exists()


def test_energy_kinds(capsys):
    status, out = run(capsys, "energy", "--p", "101", "--set", "1,2,3")
    assert status == 0
    assert out.out.strip() == "p=101 |A|=3 add = 19"
    _, out = run(capsys, "energy", "--p", "13", "--set", "1,5,8,12", "--kind", "mult", "--k", "4")
    assert out.out.strip() == "p=13 |A|=4 E4x = 1024"
    _, out = run(capsys, "energy", "--p", "13", "--set", "1,5,8,12", "--kind", "sigma")
    assert out.out.strip() == "p=13 |A|=4 sigma = 16"
    _, out = run(capsys, "energy", "--p", "13", "--set", "1,5,8,12", "--kind", "c4")
    assert out.out.splitlines()[0] == "sum C4 = 256"


def test_energy_json_out(tmp_path, capsys):
    path = tmp_path / "e.json"
    status, _ = run(
        capsys, "energy", "--p", "13", "--set", "1,5,8,12", "--kind", "sigma", "--out", str(path)
    )
    assert status == 0
    assert json.loads(path.read_text()) == {"kind": "sigma", "p": 13, "size": 4, "value": 16}


def test_subgroup(tmp_path, capsys):
    path = tmp_path / "h.set"
    status, out = run(capsys, "subgroup", "--p", "13", "--d", "4", "--out", str(path))
    assert status == 0
    assert out.out.splitlines() == [
        "# p=13 g=2 d=4 index=3",
        "H = 1,5,8,12",
        "2H = 2,3,10,11",
        "4H = 4,6,7,9",
    ]
    assert read_set(str(path)).to_list() == [1, 5, 8, 12]


def test_subgroup_not_divisor(capsys):
    status, out = run(capsys, "subgroup", "--p", "13", "--d", "5")
    assert status == 1
    assert "error:" in out.err


def test_incidence_count_and_misha(tmp_path, capsys):
    path = tmp_path / "p.scene"
    write_scene(product_scene(7, [1, 2]), str(path))
    status, out = run(capsys, "incidence", "--scene", str(path))
    assert status == 0
    assert out.out.splitlines()[0] == "# q=7 dim=3 |P|=8 |S|=8"
    assert out.out.splitlines()[1].startswith("incidences = ")
    status, out = run(capsys, "incidence", "--scene", str(path), "--check", "misha")
    assert status == 0
    assert "bound = " in out.out


def test_incidence_vinh(tmp_path, capsys):
    path = tmp_path / "v.scene"
    path.write_text("q=5 dim=3\nP 0 0 0 1\nP 1 2 3 -1\nS 0 0 1 0 1\n")
    status, out = run(capsys, "incidence", "--scene", str(path), "--check", "vinh")
    assert status == 0
    assert "lhs = 1 " in out.out
    assert out.out.strip().endswith("passed = true")


def test_verify_subgroup(tmp_path, capsys):
    path = tmp_path / "row.csv"
    status, out = run(
        capsys,
        "verify",
        "--theorem", "main",
        "--p", "101",
        "--family", "subgroup",
        "--d", "25",
        "--eps", "0.5",
        "--out", str(path),
    )
    assert status == 0
    lines = out.out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("theorem_id,family,p,size,delta,eps")
    assert lines[1].startswith("main,subgroup,101,25,")
    assert path.read_text().splitlines() == lines
    assert (tmp_path / "row.jsonl").exists()


def test_verify_inline_set(capsys):
    status, out = run(capsys, "verify", "--theorem", "zero_sum", "--p", "101", "--set", "3")
    assert status == 0
    assert out.out.splitlines()[1].startswith("zero_sum,explicit,101,1,")


def test_sweep(tmp_path, capsys):
    config = tmp_path / "sweep.cfg"
    config.write_text("primes = 101\nfamilies = interval\neps = 0.5\ntheorems = main, zero_sum\n")
    csv_path = tmp_path / "sweep.csv"
    baseline = tmp_path / "baseline.json"
    argv = [
        "sweep", "--config", str(config), "--out", str(csv_path),
        "--baseline", str(baseline), "--bless",
    ]
    status, out = run(capsys, *argv)
    assert status == 0
    assert out.out.splitlines()[0] == "# 2 rows"
    assert len(csv_path.read_text().splitlines()) == 3
    assert baseline.exists()
    status, _ = run(capsys, *argv[:-1])
    assert status == 0


def test_selftest(capsys):
    status, out = run(capsys, "selftest")
    assert status == 0
    assert "FAIL" not in out.out
    assert len(out.out.splitlines()) == 11


def test_not_prime_is_computation_error(capsys):
    status, out = run(capsys, "spectrum", "--p", "9", "--set", "1,2", "--eps", "0.5")
    assert status == 1
    assert "error:" in out.err


def test_bad_config_is_computation_error(tmp_path, capsys):
    config = tmp_path / "bad.cfg"
    config.write_text("primes = 101\ncolour = red\n")
    status, out = run(capsys, "sweep", "--config", str(config))
    assert status == 1
    assert "line 2" in out.err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["spectrum", "--eps", "0.5"],
        ["spectrum", "--p", "7", "--set", "1"],
        ["energy", "--p", "7", "--set", "1", "--kind", "cubic"],
        ["verify", "--theorem", "main", "--p", "101"],
    ],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert __version__ in capsys.readouterr().out
