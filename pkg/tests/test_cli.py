import subprocess
import sys

import pytest

from gscct import cli, subdivision
from gscct.cli import RunConfig, config_from_args, main, run
from gscct.scalars import parse_field

from conftest import CORPUS
from test_relations import literal_exponent_sign


def path(name):
    return str(CORPUS / f"{name}.facets")


def test_defaults():
    cfg = config_from_args(["verify", "x.facets"])
    assert cfg == RunConfig("verify", "x.facets")
    assert cfg.field == parse_field("z101") and cfg.seed == 0 and cfg.trials == 50
    assert cfg.max_degree == 3 and cfg.max_args == 2 and cfg.normalized
    assert cfg.checks == cli.CHECKS


def test_flags():
    cfg = config_from_args(["betti", "x", "--field", "q", "--seed", "18446744073709551615",
                            "--trials", "3", "--max-degree", "1", "--max-args", "1",
                            "--full-complex", "--checks", "cct-cup,bdga-hochschild",
                            "--dump", "out.txt"])
    assert cfg.field.kind == "rationals" and cfg.seed == 2**64 - 1
    assert (cfg.trials, cfg.max_degree, cfg.max_args) == (3, 1, 1)
    assert not cfg.normalized
    assert cfg.checks == ("bdga-hochschild", "cct-cup")
    assert cfg.dump == "out.txt"


@pytest.mark.parametrize("argv", [
    ["verify", "x", "--field", "z4"],
    ["verify", "x", "--checks", "nope"],
    ["verify", "x", "--trials", "0"],
    ["verify", "x", "--seed", "-1"],
    ["frobnicate", "x"],
])
def test_bad_flags_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        config_from_args(argv)
    assert info.value.code == 2


def test_verify_circle(capsys):
    status = main(["verify", path("circle"), "--field", "z7", "--seed", "1"])
    out = capsys.readouterr().out.splitlines()
    assert status == 0
    assert len(out) == 11
    assert all(l.startswith("CHECK ") and " PASS max_support=0 trials=50 seed=1" in l
               for l in out)


def test_compare_interval(capsys):
    assert main(["compare", path("interval"), "--field", "q"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == [
        "BETTI side=simplicial field=q normalized=true : b0=1 b1=0 b2=0 b3=0",
        "BETTI side=hochschild field=q normalized=true : b0=1 b1=0 b2=0 b3=0",
        "CCT PASS",
    ]


def test_betti_and_hh_betti(capsys):
    main(["betti", path("rp2"), "--field", "z2", "--max-degree", "2"])
    main(["hh-betti", path("rp2"), "--field", "z2", "--max-degree", "2", "--full-complex"])
    assert capsys.readouterr().out.splitlines() == [
        "BETTI side=simplicial field=z2 normalized=true : b0=1 b1=1 b2=1",
        "BETTI side=hochschild field=z2 normalized=false : b0=1 b1=1 b2=1",
    ]


def test_validate(capsys):
    assert main(["validate", path("torus")]) == 0
    assert capsys.readouterr().out == "COMPLEX vertices=7 simplices=42 : dim0=7 dim1=21 dim2=14\n"


def test_validate_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.facets"
    bad.write_text("a b\nb c c\n")
    assert main(["validate", str(bad)]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "line 2" in captured.err and "duplicate" in captured.err


def test_missing_file(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "nope")]) == 2


def test_verify_is_deterministic():
    cfg = RunConfig("verify", path("circle"), parse_field("q"), seed=5, trials=5)
    assert run(cfg) == run(cfg)


def test_failed_check_exits_1_and_dumps(monkeypatch, tmp_path, capsys):
    monkeypatch.setattr(subdivision, "delta_sign", literal_exponent_sign)
    dump = tmp_path / "d.txt"
    status = main(["verify", path("triangle"), "--field", "z7", "--checks", "cct-brace",
                   "--trials", "20", "--dump", str(dump)])
    out = capsys.readouterr().out
    assert status == 1
    assert out.startswith("CHECK cct-brace FAIL max_support=")
    lines = dump.read_text().splitlines()
    assert lines[0].startswith("# CHECK cct-brace degree=")
    assert len(lines) > 1 and all(l.startswith("CHAIN ") and " = " in l for l in lines[1:])


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "gscct", "validate", path("interval")],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "COMPLEX vertices=2 simplices=3 : dim0=2 dim1=1\n"


@pytest.mark.parametrize("name", ["interval", "circle", "sphere", "rp2", "torus"])
def test_verify_all_checks_on_corpus(name):
    status, text = run(RunConfig("verify", path(name)))
    assert status == 0
    assert text.count(" PASS ") == 11 and " FAIL " not in text
