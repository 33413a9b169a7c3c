import json
import subprocess
import sys

import pytest

from artifact import cli
from artifact.algebra import cartan_matrix
from conftest import DATA


def run(*argv):
    return cli.execute([str(a) for a in argv])


def alg(name):
    return str(DATA / name)


def test_parse_examples():
    parsed = cli.parse_algebra_file((DATA / "t3.alg").read_text(), "t3.alg")
    assert (len(parsed.vertices), len(parsed.arrows), len(parsed.relations)) == (1, 1, 1)
    assert set(parsed.modules) == {"k", "U"}
    parsed = cli.parse_algebra_file((DATA / "ex1.alg").read_text(), "ex1.alg")
    assert (len(parsed.vertices), len(parsed.arrows), len(parsed.relations)) == (3, 6, 9)
    assert "T2" in parsed.complexes


def test_parse_error_location():
    with pytest.raises(cli.ParseError) as info:
        cli.parse_algebra_file((DATA / "bad.alg").read_text(), "bad.alg")
    assert (info.value.line, info.value.col) == (3, 15)
    code, doc, err = run("algebra", "info", "--algebra", alg("bad.alg"))
    assert code == 2 and doc is None and "bad.alg:3:15" in err


@pytest.mark.parametrize("text", [
    "field p=4\nvertex 1\n",
    "field p=2\nvertex 1\nvertex 1\n",
    "field p=2\nvertex 1\nfrobnicate\n",
])
def test_parse_rejects(text):
    with pytest.raises(cli.ParseError):
        cli.parse_algebra_file(text, "x.alg")


def test_missing_field_is_an_input_error(tmp_path):
    path = tmp_path / "nf.alg"
    path.write_text("vertex 1\narrow t: 1 -> 1\nrelation t.t\ncap path=3\n")
    code, doc, err = run("algebra", "info", "--algebra", path)
    assert code == 2 and "no field" in err
    code, doc, err = run("algebra", "info", "--algebra", path, "--field", "p=3")
    assert code == 0 and doc["results"]["dim_algebra"] == 2


def test_exit_codes():
    assert run("admissible", "check", "0,3,4")[0] == 0
    code, doc, _ = run("admissible", "check", "0,9,16,25,144,169")
    assert code == 1 and doc["status"] == "condition-failed"
    assert doc["results"]["witness"] == [9, 16, 144]
    assert run("admissible", "check", "0,x")[0] == 2
    assert run("nonsense")[0] == 2
    assert run("module", "socle", "--algebra", alg("t3.alg"), "--module", "nope")[0] == 2


def test_algebra_info():
    code, doc, _ = run("algebra", "info", "--algebra", alg("ex1.alg"))
    r = doc["results"]
    assert code == 0 and r["dim_algebra"] == 12 and r["selfinjective"]
    assert r["cartan"] == [[2, 1, 1], [1, 2, 1], [1, 1, 2]]
    assert r["presentation"] == {"arrows": 6, "relations": 9}


def test_field_override():
    code, doc, _ = run("algebra", "info", "--algebra", alg("ex1.alg"), "--field", "rational")
    assert code == 0 and doc["results"]["dim_algebra"] == 12


def test_presentation_round_trip(tmp_path):
    for name in ("t3.alg", "ex1.alg", "exB.alg"):
        code, doc, _ = run("algebra", "present", "--algebra", alg(name))
        assert code == 0
        path = tmp_path / name
        path.write_text(doc["results"]["text"])
        ctx = cli.Context(cli.build_parser().parse_args(["algebra", "info"]))
        A = ctx.load(alg(name))
        B = ctx.load(str(path))
        assert B.dim == A.dim and cartan_matrix(B) == cartan_matrix(A)


def test_module_commands():
    code, doc, _ = run("module", "syzygy", "--algebra", alg("t3.alg"), "--module", "k", "--times", 2)
    assert doc["results"]["syzygies"] == [[2], [1]]
    code, doc, _ = run("module", "hom", "--algebra", alg("t3.alg"), "--source", "U", "--target", "A")
    assert doc["results"]["dim_hom"] == 2
    code, doc, _ = run("module", "decompose", "--algebra", alg("t3.alg"), "--module", "A+k+U")
    assert sorted(doc["results"]["summands"]) == [[1], [2], [3]]


def test_ext_table():
    code, doc, _ = run("ext", "table", "--algebra", alg("t3.alg"), "--module", "k")
    assert doc["results"]["dims"] == {str(i): 1 for i in range(5)}


def test_ayoneda_commands():
    code, doc, _ = run("ayoneda", "build", "--algebra", alg("t3.alg"), "--module", "A+k",
                       "--phi", "0,1")
    assert code == 0 and doc["results"]["dim"] == 7
    code, doc, _ = run("ayoneda", "assoc", "--algebra", alg("t2.alg"), "--module", "simple:1",
                       "--phi", "0,1,2,4")
    assert code == 1 and doc["results"]["witness_degrees"] == [1, 1, 2]


def test_verify_shift_instance():
    code, doc, _ = run("verify", "shift-instance", "--algebra", alg("t3.alg"), "--module", "k",
                       "--phi", "0,1")
    r = doc["results"]
    assert code == 0 and r["verdict"] and r["end_dim"] == r["ay_dim"] == 7


def test_complex_commands():
    code, doc, _ = run("complex", "tilt-report", "--algebra", alg("a3.alg"), "--complex", "T")
    assert code == 0 and doc["results"]["tilting"]["verdict"]
    code, doc, _ = run("complex", "end", "--algebra", alg("ex1.alg"), "--complex", "T2")
    assert code == 0 and doc["results"]["dim"] == 12
    code, doc, _ = run("complex", "homk", "--algebra", alg("t3.alg"), "--complex", "stalk",
                       "--shift", 0)
    assert doc["results"]["dim"] == 3


def test_tilt_and_quotients():
    code, doc, _ = run("tilt", "idem", "--algebra", alg("ex1.alg"), "--e", "1,3")
    assert code == 0 and doc["results"]["end_dim"] == 18
    code, doc, _ = run("quot", "nabla", "--algebra", alg("ex1.alg"), "--e", "1,3")
    r = doc["results"]
    assert code == 0 and (r["dim_A_quotient"], r["dim_J"], r["dim_B_quotient"]) == (11, 1, 17)
    code, doc, _ = run("quot", "socle", "--algebra", alg("ex1.alg"), "--complex", "idem:2",
                       "--vertices", "1,3")
    assert code == 0 and doc["results"]["verdict"]
    code, doc, _ = run("quot", "socle", "--algebra", alg("ex1.alg"), "--complex", "idem:2",
                       "--vertices", "2")
    assert code == 1 and doc["results"]["status"] == "unknown"
    code, doc, _ = run("quot", "check", "--algebra", alg("ex1.alg"), "--complex", "idem:2",
                       "--ideal", "socle:2")
    assert code == 1 and not doc["results"]["verdict"]


def test_invariants_compare():
    code, doc, _ = run("invariants", "compare", "--algebra", alg("t3.alg"), "--other", alg("t2.alg"))
    assert code == 1 and not doc["results"]["consistent"]


def test_json_output_is_deterministic(capsys):
    argv = ["quot", "nabla", "--algebra", alg("ex1.alg"), "--e", "1,3", "--json", "--seed", "5"]
    outs = []
    for _ in range(2):
        assert cli.main(argv) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["status"] == "ok"


def test_plain_output(capsys):
    assert cli.main(["admissible", "check", "0,3,4"]) == 0
    out = capsys.readouterr().out
    assert "status: ok" in out and "admissible: true" in out


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "artifact.cli", "admissible", "check", "0,1,2",
                        "--json"], capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["results"]["admissible"]
