import json

import pytest

from kanforge import serialize as io
from kanforge import examples as ex
from kanforge import cli


@pytest.mark.parametrize("name", ex.example_ids())
def test_every_example_round_trips(name):
    obj = ex.build(name)
    text = io.dumps(obj)
    canon, stable = io.roundtrip_text(text)
    assert stable
    assert canon == text
    assert canon.endswith("\n")


def test_unknown_key_rejected():
    doc = json.loads(io.dumps(ex.build("delta1")))
    doc["mystery"] = 1
    with pytest.raises(io.ParseError):
        io.loads(json.dumps(doc))


def test_reordered_keys_canonicalize():
    text = io.dumps(ex.build("s1"))
    doc = json.loads(text)
    scrambled = json.dumps(doc, sort_keys=False, indent=2)
    canon, stable = io.roundtrip_text(scrambled)
    assert stable and canon == text


def test_misaligned_face_rejected():
    doc = json.loads(io.dumps(ex.build("delta1")))
    doc["face"]["1.0"] = doc["face"]["1.0"][:-1]
    with pytest.raises(io.ParseError):
        io.loads(json.dumps(doc))


def test_wrong_format_rejected():
    doc = json.loads(io.dumps(ex.build("z2")))
    doc["format"] = 2
    with pytest.raises(io.ParseError):
        io.loads(json.dumps(doc))


# -- the command line ----------------------------------------------------------


def dump(tmp_path, name):
    path = tmp_path / ("%s.json" % name)
    path.write_text(io.dumps(ex.build(name)), encoding="utf-8")
    return str(path)


def test_cli_validate_ok(tmp_path, capsys):
    assert cli.main(["validate", dump(tmp_path, "delta2")]) == 0
    assert "valid sset" in capsys.readouterr().out


def test_cli_kan_exit_one_names_horn(tmp_path, capsys):
    assert cli.main(["kan", "--dim", "1", dump(tmp_path, "delta1")]) == 1
    out = capsys.readouterr().out
    assert "unfillable horn" in out


def test_cli_kan_groupoid_nerve_passes(tmp_path):
    assert cli.main(["kan", "--dim", "1", dump(tmp_path, "nerve-z2")]) == 0


def test_cli_classify(tmp_path, capsys):
    assert cli.main(["classify", "--n", "1", dump(tmp_path, "nerve-z3")]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n_kan_groupoid"] is True


def test_cli_nerve_and_pi(tmp_path, capsys):
    gpath = dump(tmp_path, "groupoid-z3")
    npath = str(tmp_path / "n.json")
    assert cli.main(["nerve", gpath, "--to-dim", "3", "-o", npath]) == 0
    assert cli.main(["pi", "--m", "1", npath]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["order"] == 3


def test_cli_pi_refuses_without_kan(tmp_path):
    assert cli.main(["pi", "--m", "1", "--base", "0",
                     dump(tmp_path, "delta1")]) == 1


def test_cli_add_and_det(tmp_path, capsys):
    s1 = dump(tmp_path, "s1")
    z3 = dump(tmp_path, "z3")
    assert cli.main(["add", s1, z3]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 3 and doc["bijection_verified"]
    g = dump(tmp_path, "disc-z2")
    assert cli.main(["det", s1, g]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 2 == doc["oracle_count"]


def test_cli_loop_and_cosq(tmp_path, capsys):
    npath = dump(tmp_path, "nerve-z2")
    assert cli.main(["loop", npath, "--variant", "plain"]) == 0
    capsys.readouterr()
    assert cli.main(["cosq", "--prime", "1", npath]) == 0


def test_cli_segal_nerve(tmp_path, capsys):
    g = dump(tmp_path, "disc-z2")
    out = str(tmp_path / "ns.json")
    assert cli.main(["segal-nerve", g, "--pmax", "2", "--qmax", "2",
                     "-o", out]) == 0
    assert cli.main(["validate", out]) == 0


def test_cli_examples_list(capsys):
    assert cli.main(["examples", "list"]) == 0
    out = capsys.readouterr().out.split()
    assert "s1" in out and "disc-z2" in out


def test_cli_roundtrip_deterministic(tmp_path, capsys):
    path = dump(tmp_path, "oneobj-z2")
    assert cli.main(["roundtrip", path]) == 0
    first = capsys.readouterr().out
    assert cli.main(["roundtrip", path]) == 0
    assert capsys.readouterr().out == first


def test_cli_verify_single(capsys):
    assert cli.main(["verify", "simplex-counts"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS simplex-counts")


def test_cli_verify_grho_with_file(tmp_path, capsys):
    g = dump(tmp_path, "oneobj-z2")
    assert cli.main(["verify", "grho", "--file", g]) == 0
    out = capsys.readouterr().out
    assert "PASS grho" in out and "pi2(N)" in out


def test_cli_bad_input_exit_two(tmp_path, capsys):
    path = tmp_path / "garbage.json"
    path.write_text("{not json", encoding="utf-8")
    assert cli.main(["validate", str(path)]) == 2
    assert cli.main(["examples", "dump", "no-such-id"]) == 2
    assert cli.main(["classify", "--n", "1", str(tmp_path / "missing.json")]) == 2
