import io
import json

from lagloci.cli import main
from lagloci.fixtures import load_fixture


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_byte_identical(capsys):
    a = run(capsys, "generate", "--kind", "alternating", "--size", "5", "--seed", "42")
    b = run(capsys, "--seed", "42", "generate", "--kind", "alternating", "--size", "5")
    assert a[0] == b[0] == 0
    assert a[1] == b[1]
    assert json.loads(a[1])["matrix"]["rows"] == 5
    assert "wall time" in a[2]


def test_be_on_fixture(capsys):
    code, out, _ = run(capsys, "resolve", "be", "fixture:koszul-point")
    assert code == 0
    data = json.loads(out)
    assert data["exact"] is True
    assert data["complex"]["twists"] == [[0], [-1] * 3, [-2] * 3, [-3]]


def test_text_output(capsys):
    code, out, _ = run(capsys, "--out", "text", "pfaffian", "kernel", "fixture:koszul-point")
    assert code == 0
    assert "annihilated: True" in out
    assert "[x1, -x2, x3]" in out and "wall time" in out


def test_pfaffian_subs(capsys):
    code, out, _ = run(capsys, "pfaffian", "subs", "--order", "4", "fixture:generic-5x5")
    assert code == 0 and json.loads(out)["count"] == 5


def test_odd_pfaffian_is_input_error(capsys):
    code, _, err = run(capsys, "pfaffian", "compute", "fixture:koszul-point")
    assert code == 2 and "OddSizePfaffian" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "pfaffian", "compute", str(tmp_path / "nope.json"))
    assert code == 2 and "error" in err


def test_bad_json(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _, err = run(capsys, "pfaffian", "compute", str(p))
    assert code == 2 and "invalid JSON" in err


def test_stdin(capsys, monkeypatch):
    data = load_fixture("koszul-point")
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(data)))
    code, out, _ = run(capsys, "pfaffian", "kernel", "-")
    assert code == 0 and json.loads(out)["annihilated"]


def test_pipeline_generate_then_degeneracy(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "--kind", "lagrangian-pair", "--size", "3",
                       "--seed", "1")
    p = tmp_path / "pair.json"
    p.write_text(out)
    code, out, _ = run(capsys, "degeneracy", "ideal", "--m", "1", "--samples", "3", str(p))
    assert code == 0
    assert json.loads(out)["samples"]["mismatches"] == 0
    code, out, _ = run(capsys, "pair", "complement", str(p))
    assert code == 0 and json.loads(out)["valid"] is True


def test_ideal_commands(capsys, tmp_path):
    ring = {"field": "Q", "vars": ["x", "y", "z"]}
    x = [{"c": 1, "e": [1, 0, 0]}]
    y = [{"c": 1, "e": [0, 1, 0]}]
    xy = [{"c": 1, "e": [1, 1, 0]}]
    p = tmp_path / "i.json"
    p.write_text(json.dumps({"ring": ring, "ideal": {"gens": [x, y]}, "poly": xy, "f": x,
                             "I": {"gens": [x, y]}, "J": {"gens": [y, x]}}))
    assert json.loads(run(capsys, "ideal", "member", str(p))[1])["member"] is True
    assert json.loads(run(capsys, "ideal", "equal", str(p))[1])["equal"] is True
    assert json.loads(run(capsys, "ideal", "codim", str(p))[1])["codim"] == 2
    code, out, _ = run(capsys, "ideal", "colon", str(p))
    assert code == 0


def test_resolve_euler_and_parity(capsys):
    code, out, _ = run(capsys, "resolve", "euler", "fixture:threefold-chi")
    assert code == 0 and json.loads(out)["chi"] == 1
    code, out, _ = run(capsys, "resolve", "parity", "--n", "5", "--ell", "6", "--chi", "1")
    assert json.loads(out)["obstructed"] is True
    code, _, err = run(capsys, "resolve", "parity", "--n", "5")
    assert code == 2


def test_resolve_dual_and_colon(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "--kind", "split-pair", "--size", "3", "--seed", "1")
    p = tmp_path / "split.json"
    p.write_text(out)
    code, out, _ = run(capsys, "resolve", "colon", str(p))
    assert code == 0 and "ideal" in json.loads(out)
    code, out, _ = run(capsys, "resolve", "standard-form", str(p))
    assert code == 0 and set(json.loads(out)) == {"P", "Q", "beta", "gamma"}


def test_verify_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "koszul-fixture")
    assert code == 0 and json.loads(out)["passed"] == 1
    code, _, err = run(capsys, "verify", "bogus")
    assert code == 2 and "UnknownLemma" in err


def test_verify_failure_exit_and_replay(capsys, tmp_path, monkeypatch):
    from lagloci.verify import LEMMAS
    monkeypatch.setitem(LEMMAS, "always-fails", (lambda cs: (False, {}, {}), 2))
    code, out, _ = run(capsys, "verify", "always-fails")
    assert code == 1
    report = json.loads(out)
    assert report["failed"] == 2 and len(report["failures"]) == 2
    p = tmp_path / "report.json"
    p.write_text(out)
    code, out, _ = run(capsys, "--replay", str(p))
    assert code == 1
    assert len(json.loads(out)["replayed"]) == 2


def test_replay_passing_dump(capsys, tmp_path):
    p = tmp_path / "dump.json"
    p.write_text(json.dumps({"lemma": "pf-square", "index": 0, "case_seed": 17}))
    code, out, _ = run(capsys, "--replay", str(p))
    assert code == 0


def test_field_flag(capsys):
    code, out, _ = run(capsys, "generate", "--kind", "symmetric", "--field", "Fp:3", "--seed", "2")
    assert code == 0 and json.loads(out)["ring"]["field"] == {"Fp": 3}
    code, _, err = run(capsys, "generate", "--kind", "symmetric", "--field", "Fp:4")
    assert code == 2


def test_no_command(capsys):
    assert main([]) == 2
