import json

import pytest

from tourneylab import fixtures
from tourneylab.cli import main
from tourneylab.core import all_labeled, encode, parse_code
from tourneylab.enumeration import canonical_code
from tourneylab.structure import is_strong


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_matrix(capsys):
    code, out, _ = run(capsys, "analyze", "0100/0010/1001/1100")
    assert code == 0
    assert out.strip() == ("T4:29 n=4 scores=(1,1,2,2) sorted=(1,1,2,2) c3=2 det=-1 singular=no "
                           "scc=(4) flags=strong,almost_regular,upset")


def test_analyze_single_vertex(capsys):
    code, out, _ = run(capsys, "analyze", "--json", "T1:0")
    rec = json.loads(out)
    assert code == 0
    assert rec["n"] == 1 and rec["det"] == 0 and rec["scc_sizes"] == [1]
    assert rec["upset"] is False


def test_analyze_json_schema(capsys):
    _, out, _ = run(capsys, "analyze", "--json", "T3:5")
    rec = json.loads(out)
    assert rec["c3_scores"] == rec["c3_direct"] == 1
    assert rec["scc_components"] == [[0, 1, 2]]
    assert set(rec) == {
        "code", "n", "scores", "sorted_scores", "c3_scores", "c3_direct", "det", "singular",
        "scc_sizes", "scc_components", "strong", "transitive", "regular", "almost_regular", "upset",
    }


def test_analyze_file(tmp_path, capsys):
    p = tmp_path / "in.txt"
    p.write_text("010\n001\n100\n\n01\n00\n")
    code, out, _ = run(capsys, "analyze", "-f", str(p))
    assert code == 0
    assert [ln.split()[0] for ln in out.splitlines()] == ["T3:5", "T2:1"]


def test_parse_error_location(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("010\n001\n100\n\n010\n0x1\n100\n")
    code, out, err = run(capsys, "analyze", "-f", str(p))
    assert code == 2
    assert f"{p}:6:2:" in err


@pytest.mark.parametrize("bad", ["T3:zz", "01/01", "010/00/100"])
def test_bad_inputs_exit_2(capsys, bad):
    code, _, err = run(capsys, "analyze", bad)
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize("f", fixtures.ALL, ids=lambda f: f.name)
def test_code_and_matrix_inputs_agree(capsys, f):
    t = f.tournament
    _, by_matrix, _ = run(capsys, "analyze", "--json", "/".join(t.to_text().splitlines()))
    _, by_code, _ = run(capsys, "analyze", "--json", encode(t).text)
    assert by_matrix == by_code


def test_convert_round_trip(capsys):
    _, out, _ = run(capsys, "convert", "--to", "matrix", "T4:29")
    assert out == "0100\n0010\n1001\n1100\n\n"
    _, out2, _ = run(capsys, "convert", "--to", "code", "--format", "matrix", "0100/0010/1001/1100")
    assert out2 == "T4:29\n"
    _, spaced, _ = run(capsys, "convert", "--to", "matrix", "--spaced", "T3:5")
    assert spaced.splitlines()[0] == "0 1 0"


def test_enumerate_counts(capsys):
    code, out, err = run(capsys, "enumerate", "5")
    assert code == 0 and len(out.split()) == 12
    assert "12 classes" in err


def test_enumerate_strong_filter(capsys):
    brute = {canonical_code(t).text for t in all_labeled(5) if is_strong(t)}
    _, out, _ = run(capsys, "enumerate", "5", "--strong")
    assert set(out.split()) == brute


def test_enumerate_seven_strong_singular(capsys):
    code, out, _ = run(capsys, "enumerate", "7", "--singular", "--score", "1,2,2,3,4,4,5", "--c3", "8")
    assert code == 0
    codes = out.split()
    assert codes == sorted(codes, key=lambda c: parse_code(c).bitstring)
    assert set(out.split()) == {"T7:186220", "T7:1b1220", "T7:1d5220"}


def test_enumerate_deterministic_across_threads(capsys):
    _, a, _ = run(capsys, "--threads", "1", "enumerate", "6", "--nonsingular")
    _, b, _ = run(capsys, "--threads", "2", "enumerate", "6", "--nonsingular")
    assert a == b


def test_enumerate_range(capsys):
    assert run(capsys, "enumerate", "10")[0] == 2


def test_extremal(capsys):
    code, out, _ = run(capsys, "extremal", "6", "max-singular")
    assert code == 0 and "value=5" in out.splitlines()[0]
    _, js, _ = run(capsys, "extremal", "6", "max-singular", "--json")
    assert json.loads(js)["value"] == 5
    assert run(capsys, "extremal", "2", "max-singular")[0] == 2


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "all", "3..7")
    assert code == 0
    assert out.count("PASS ") == 16


def test_verify_json_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "thm-upset,shader", "3..6", "--json")
    _, b, _ = run(capsys, "verify", "thm-upset,shader", "3..6", "--json")
    assert a == b
    recs = [json.loads(ln) for ln in a.splitlines()]
    assert len(recs) == 8 and all("elapsed_ms" not in r for r in recs)
    _, c, _ = run(capsys, "verify", "shader", "3..3", "--json", "--timings")
    assert "elapsed_ms" in json.loads(c)


@pytest.mark.parametrize("argv", [("verify", "nope", "3..4"), ("verify", "all", "3..12"),
                                  ("verify", "all", "x")])
def test_verify_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_fixtures(capsys):
    _, out, _ = run(capsys, "fixtures", "--json")
    recs = [json.loads(ln) for ln in out.splitlines()]
    assert [r["name"] for r in recs] == ["F1", "F2", "F3", "F4", "P7A", "P7B", "P7C"]
    p7a = recs[4]
    assert p7a["det"] == 1 and p7a["printed_det"] == 0


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate"])
    assert exc.value.code == 2
