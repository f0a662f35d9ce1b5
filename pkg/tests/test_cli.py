import io
import json

import pytest

from degreelists.cli import run
from degreelists.core import BinaryMatrix, parse_list


def call(argv, stdin_text=""):
    out = io.StringIO()
    code = run(argv, out=out, stdin=io.StringIO(stdin_text))
    return code, out.getvalue()


@pytest.fixture
def listfile(tmp_path):
    def make(text):
        p = tmp_path / "list.txt"
        p.write_text(text)
        return str(p)

    return make


def test_check_not_graphic():
    code, out = call(["check", "--kind", "graph", "-"], "3 3 1 1\n")
    assert code == 1 and out.startswith("not graphic")


def test_check_feasible_and_json():
    code, out = call(["check", "--kind", "digraph", "--emit", "json", "-"], "1 1\n1 1\n1 1\n")
    assert code == 0
    data = json.loads(out)
    assert data["feasible"] and data["threshold"] == {"pairs": [[2, 1], [1, 1], [0, 1]]}


def test_check_loop_threshold_in_input_order(listfile):
    code, out = call(["check", "--emit", "tsv", listfile("3 3\n1 3\n2 0\n")])
    assert code == 1
    assert "((2,3),(2,3),(2,0))\tnot loop-digraphic" in out


def test_invalid_input_exit_2(listfile):
    assert call(["check", "--kind", "graph", "-"], "3 3 1\n")[0] == 2
    assert call(["check", "-"], "1 x\n")[0] == 2
    assert call(["check", "/nonexistent/file"])[0] == 2
    assert call(["count", "--kind", "digraph", "-"], "1 1 1\n")[0] == 2
    assert call(["bogus"])[0] == 2
    assert call(["count", "--limit", "0", "-"], "1 1\n1 1\n")[0] == 2


def test_strict_rejects_zero_pairs():
    assert call(["check", "--kind", "digraph", "-"], "0 0\n1 1\n1 1\n")[0] == 0
    assert call(["check", "--kind", "digraph", "--strict", "-"], "0 0\n1 1\n1 1\n")[0] == 2


def test_count_prints_exact_integer():
    code, out = call(["count", "--kind", "loopdigraph", "-"], "3 1\n3 1\n0 1\n0 1\n0 1\n0 1\n")
    assert code == 0 and out.split("\t")[0] == "20" and "exhaustive" in out


def test_count_past_guard_reports_bound():
    code, out = call(["count", "--limit", "2", "-"], "2 1\n2 1\n2 2\n0 2\n")
    assert code == 0 and out.startswith("3\tbound-only") and "derived" in out


def test_count_jobs():
    code, out = call(["count", "--jobs", "2", "-"], "2 2\n2 2\n1 1\n1 1\n")
    assert code == 0 and out.startswith("34\t")


def test_realize_roundtrip():
    text = "2 1\n0 2\n1 0\n1 1\n"
    code, out = call(["realize", "--kind", "digraph", "--emit", "matrix", "-"], text)
    assert code == 0
    assert BinaryMatrix.from_text(out).margins() == parse_list(text)


def test_realize_infeasible_and_trace(capsys):
    assert call(["realize", "--kind", "graph", "-"], "3 3 1 1\n")[0] == 1
    code, out = call(["realize", "--kind", "digraph", "--trace", "--enumerate-shifts", "-"], "1 1\n1 1\n1 1\n")
    err = capsys.readouterr().err
    assert code == 0 and out.strip() == "010\n001\n100"
    assert "transfer (1,3) shift row 2 options 2" in err


def test_realize_json_and_tsv():
    code, out = call(["realize", "--emit", "json", "-"], "1 1\n1 1\n")
    assert json.loads(out) == {"matrix": [[0, 1], [1, 0]]}
    code, out = call(["realize", "--emit", "tsv", "-"], "1 1\n1 1\n")
    assert out.strip() == "01\t10"


def test_enumerate_max():
    code, out = call(["enumerate", "--kind", "digraph", "-"], "1 1\n1 1\n1 1\n")
    assert out.strip().split("\n\n") == ["010\n001\n100", "001\n100\n010"]
    code, out = call(["enumerate", "--kind", "digraph", "--max", "1", "--emit", "json", "-"], "1 1\n1 1\n1 1\n")
    assert len(json.loads(out)["matrices"]) == 1


def test_path_command(listfile):
    code, out = call(["path", "--a", "2,2,2,0", "--aprime", "4,2,0,0"])
    assert code == 0 and out.strip() == "(1,3),(1,3)"
    code, out = call(["path", "--a", "2 2 2 0", "--aprime", "(4,2,0,0)", "--emit", "json"])
    assert json.loads(out)["steps"] == [[1, 3], [1, 3]]
    code, out = call(["path", listfile("2 1\n2 1\n2 2\n0 2\n")])
    assert out.strip() == "(1,3),(1,3)"
    assert call(["path", "--a", "3,0", "--aprime", "2,1"])[0] == 2
    assert call(["path"])[0] == 2


def test_bound_command():
    code, out = call(["bound", "-"], "2 1\n2 1\n2 2\n0 2\n")
    assert code == 0 and out.startswith("3\tbound-only\t1+2 (derived")
    assert call(["bound", "--kind", "digraph", "-"], "1 1\n1 1\n1 1\n")[0] == 2


def test_minconvex_command():
    code, out = call(["minconvex", "--n", "4", "--m", "6", "--kind", "digraph"])
    assert out.split() == "2 1 2 1 1 2 1 2".split()
    code, out = call(["minconvex", "--n", "4", "--m", "6", "--kind", "graph"])
    assert out.strip() == "2 2 1 1"
    code, out = call(["minconvex", "--n", "4", "--m", "6", "--sigma", "3,4,1,2", "--emit", "json"])
    assert json.loads(out) == {"pairs": [[2, 1], [2, 1], [1, 2], [1, 2]]}
    code, out = call(["minconvex", "--n", "3", "--m", "3", "--kind", "digraph", "--verify"])
    assert out.startswith("# theorem\tminconvex-digraph") and "result=PASS" in out
    assert call(["minconvex", "--n", "3", "--m", "7", "--kind", "digraph"])[0] == 2


def test_experiment_command_deterministic():
    a = call(["experiment", "--theorem", "digraph-lex"])
    b = call(["experiment", "--theorem", "digraph-lex"])
    assert a == b and a[0] == 0
    assert a[1].startswith("# theorem\tdigraph-lex") and "result=PASS" in a[1]


def test_seed_is_validated_and_ignored(caplog):
    code, out = call(["count", "--seed", "5", "-"], "1 1\n1 1\n")
    assert code == 0 and out.startswith("2\t")
    assert "no effect" in caplog.text
    assert call(["count", "--seed", "-1", "-"], "1 1\n1 1\n")[0] == 2
