import json

import pytest

from quiverlab import claims as K
from quiverlab import cli


def test_registry_size_and_anchors():
    assert len(K.REGISTRY) >= 40
    for c in K.REGISTRY.values():
        assert c.anchor.strip() and c.description.strip()
    assert K.REGISTRY["thm1.1b.iv.depth.lambdahat"].anchor == "W[[t]]/(t^3-2t)"
    assert K.REGISTRY["lemma4.1.ext2"].anchor == "Ext^2 ... ≅ k"


def test_list_output(capsys):
    assert cli.main(["list"]) == 0
    out = capsys.readouterr().out
    assert "thm1.1b.iv.depth.lambdahat" in out and "W[[t]]/(t^3-2t)" in out
    assert "lemma4.1.ext2" in out and "Ext^2 ... ≅ k" in out
    ids = [line.split()[0] for line in out.splitlines()]
    assert ids == sorted(ids)


def test_single_claim(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["verify", "fig5.orthogonality", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert [c["status"] for c in report["claims"]] == ["PASS"]
    assert report["schema_version"] == K.SCHEMA_VERSION


def test_prefix_selector():
    assert {c.id for c in K.select("fig5")} >= {"fig5.orthogonality", "fig5.degrees"}


def test_unknown_claim_exits_2(capsys):
    assert cli.main(["verify", "nonexistent.id"]) == 2
    assert "unknown claim" in capsys.readouterr().err


def test_bad_flags_exit_2(capsys):
    assert cli.main(["verify", "--field", "gf8"]) == 2
    assert cli.main(["verify", "--budget", "0"]) == 2


def test_dump_module(capsys):
    assert cli.main(["dump", "module", "P1@lambda:c=0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["1", "0", "0", "1", "0", "0", "1"]


def test_dump_tables(capsys):
    assert cli.main(["dump", "tables", "fig6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    body = [line.split() for line in lines[2:]]
    assert body == [["phi0", "1", "1", "1"], ["phi1", "4", "-2", "-1"], ["phi2", "4", "1", "-1"]]
    assert len({len(line) for line in lines}) == 1


def test_dump_algebra(capsys):
    assert cli.main(["dump", "algebra", "lambda:c=0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert sum(line.startswith("basis ") for line in lines) == 19


def test_dump_unknown_target(capsys):
    assert cli.main(["dump", "module", "Q7@lambda:c=0"]) == 2
    assert cli.main(["dump", "algebra", "lambda:x=3"]) == 2


def test_toml_config(tmp_path):
    cfg = tmp_path / "q.toml"
    cfg.write_text('[quiverlab]\nfield = "gf2"\nc = [0]\nd = [1]\nmax_n = 4\n')
    c = cli.load_config(str(cfg), {"d": [0]})
    assert c.c == (0,) and c.d == (0,) and c.max_n == 4
    cfg.write_text("bogus = 1\n")
    with pytest.raises(ValueError):
        cli.load_config(str(cfg), {})


def test_full_run_is_deterministic_and_passes(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["verify", "--no-timings", "--out", str(a)]) == 0
    assert cli.main(["verify", "--no-timings", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text())
    assert report["summary"]["FAIL"] == 0
    assert all(c["status"] in (K.PASS, K.CONDITIONAL) for c in report["claims"])
    assert [c["id"] for c in report["claims"]] == sorted(c["id"] for c in report["claims"])


def test_hypothesis_failure_reports_conditional():
    c = K.Claim("x.cond", "demo", "f", lambda cfg: K.Outcome(True, {}, {"Ext^1(L,V)=0": False}))
    assert K.run_claim(c, K.Config()).status == K.CONDITIONAL
    c = K.Claim("x.fail", "demo", "f", lambda cfg: K.Outcome(False, {}, {"h": False}))
    assert K.run_claim(c, K.Config()).status == K.FAIL


def test_empty_parameter_list_skips(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["verify", "thm1.1b", "--d", "", "--no-timings", "--out", str(out)]) == 0
    status = {c["id"]: c["status"] for c in json.loads(out.read_text())["claims"]}
    assert status["thm1.1b.iv.depth.lambdahat"] == K.SKIPPED
    assert status["thm1.1b.iv.depth.lambda"] == K.PASS


def test_parallel_run_matches_serial(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["verify", "fig1", "--no-timings", "--out", str(a)]) == 0
    assert cli.main(["verify", "fig1", "--no-timings", "--jobs", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
