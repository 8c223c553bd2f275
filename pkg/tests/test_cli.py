import json
import subprocess
import sys

import pytest

from v4cordial.cli import explore_conjecture, run
from v4cordial.generators import path_from_sizes
from v4cordial.hypergraph import dumps
from v4cordial.labeling import labeling_to_json


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_construct_p4(capsys, write):
    path = write("p4.hg", "4 3\n0 1\n1 2\n2 3\n")
    code, report, err = call(capsys, "construct", path)
    assert code == 2
    assert report["verdict"] == "not_cordial" and report["reason"] == "OracleExhausted"
    assert "OracleExhausted" in err


def test_construct_cordial(capsys, write):
    path = write("t.json", dumps(path_from_sizes([3, 4, 5])))
    code, report, _ = call(capsys, "construct", path, "--format", "json")
    assert code == 0 and report["verdict"] == "cordial" and len(report["labels"]) == 10


def test_construct_matching_certificate(capsys, write):
    code, report, _ = call(capsys, "construct", write("m.hg", "4 2\n0 1\n2 3\n"))
    assert code == 2 and report["reason"] == "MatchingCongruence"


def test_verify_round_trip(capsys, write):
    hg = write("tree.hg", "7 3\n0 1 2\n2 3 4\n4 5 6\n")
    code, report, _ = call(capsys, "construct", hg)
    labels = write("labels.json", json.dumps({"labels": report["labels"]}))
    code, report, _ = call(capsys, "verify", hg, labels)
    assert code == 0 and report["cordial"] is True


def test_verify_bad_labeling(capsys, write):
    hg = write("tree.hg", "3 1\n0 1 2\n")
    labels = write("labels.json", json.dumps(labeling_to_json([0, 0, 0])))
    code, report, err = call(capsys, "verify", hg, labels)
    assert code == 2 and report["cordial"] is False and report["violations"]
    assert "not cordial" in err


def test_search(capsys, write):
    code, report, _ = call(capsys, "search", write("p5.hg", "5 4\n0 1\n1 2\n2 3\n3 4\n"))
    assert code == 2 and report["status"] == "exhausted" and report["nodes"] > 0
    code, report, _ = call(capsys, "search", write("p6.hg", "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n"))
    assert code == 0 and report["labels"][:3] == ["(0,0)", "(0,0)", "(0,1)"]


def test_budget_gives_unknown(capsys, write):
    path = write("p12.hg", "12 11\n" + "".join(f"{i} {i + 1}\n" for i in range(11)))
    code, report, _ = call(capsys, "search", path, "--budget", "3")
    assert code == 3 and report["status"] == "aborted"
    code, report, _ = call(capsys, "construct", path, "--budget", "3")
    assert code == 3 and report["verdict"] == "unknown"


def test_classify(capsys, write):
    code, report, _ = call(capsys, "classify", write("p.hg", "7 3\n0 1 2\n2 3 4\n4 5 6\n"))
    assert code == 0
    assert report["class"] == "path" and report["uniform"] == 3 and report["pendant_order"] == [0, 1, 2]


@pytest.mark.parametrize(
    "text, where",
    [("3 2\n0 1\n1 x\n", ":3:3:"), ("3 1\n0 9\n", "vertex 9 outside"), ('{"n": 3,', ":1:")],
)
def test_input_errors(capsys, write, text, where):
    code, report, err = call(capsys, "classify", write("bad.hg", text))
    assert code == 1 and report is None and where in err


def test_missing_file(capsys):
    code, _, err = call(capsys, "classify", "/nonexistent/x.hg")
    assert code == 1 and "error" in err


def test_usage_error_is_input_error(capsys):
    assert run(["frobnicate"]) == 1
    capsys.readouterr()


def test_output_file(capsys, write, tmp_path):
    hg = write("s.hg", "4 1\n0 1 2 3\n")
    dest = tmp_path / "out.json"
    code = run(["construct", hg, "--output", str(dest)])
    out, _ = capsys.readouterr()
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["verdict"] == "cordial"


def test_dump_tables(capsys):
    code, report, _ = call(capsys, "dump-tables")
    assert code == 0 and list(report) == [
        "equal_blocks",
        "mixed_blocks",
        "star_small_cases",
        "matching_small_cases",
        "path_ends_two_sums",
        "path_ends_many_sums",
    ]


def test_explore_example(capsys):
    code, report, _ = call(
        capsys, "explore-conjecture", "--p-min", "3", "--p-max", "5", "--edges", "2..5", "--trials", "100", "--seed", "7"
    )
    assert code == 0 and report["trials"] == 100 and report["counterexamples"] == []


def test_explore_reproducible():
    a = explore_conjecture(3, 4, (1, 6), 40, 9, max_order=14, cross_check=True)
    b = explore_conjecture(3, 4, (1, 6), 40, 9, max_order=14, cross_check=True)
    assert json.dumps(a) == json.dumps(b)
    assert a["max_n"] <= 14 and a["oracle"] == {"found": 40}


def test_explore_rejects_small_edges(capsys):
    code, _, err = call(capsys, "explore-conjecture", "--p-min", "2")
    assert code == 1 and "p-min" in err


def test_module_entry_point(write):
    hg = write("p4.hg", "4 3\n0 1\n1 2\n2 3\n")
    proc = subprocess.run([sys.executable, "-m", "v4cordial", "construct", hg], capture_output=True, text=True)
    assert proc.returncode == 2
    assert json.loads(proc.stdout)["reason"] == "OracleExhausted"
    assert "OracleExhausted" in proc.stderr
