#!/usr/bin/env python3
"""End-to-end checks of the hypcolor command line: exit codes, payloads and
JSON schema conformance.

usage: cli_test.py <hypcolor binary> <schema dir> [case ...]
"""

import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BIN = Path(sys.argv[1])
SCHEMAS = Path(sys.argv[2])


def run(args, stdin=None, env=None):
    full_env = dict(os.environ)
    full_env.pop("HYPCOLOR_OUT_DIR", None)
    full_env.update(env or {})
    return subprocess.run([str(BIN), *args], input=stdin, capture_output=True, text=True, env=full_env, timeout=900)


def report(command, args, expect_exit=0, **kw):
    proc = run(args, **kw)
    assert proc.returncode == expect_exit, f"{args}: exit {proc.returncode}, stderr {proc.stderr!r}"
    payload = json.loads(proc.stdout)
    schema = json.loads((SCHEMAS / f"{command}.schema.json").read_text())
    jsonschema.validate(payload, schema)
    return payload


def case_bound():
    assert report("hyp-bound", ["hyp-bound", "--d", "1"])["best"] == 9
    assert report("hyp-bound", ["hyp-bound", "--d", "1.5"])["best"] == 8
    j = report("hyp-bound", ["hyp-bound", "--d", "10", "--c", "2"])
    assert j["interval"]["applicable"] and j["best"] == j["interval"]["bound"]["value"]
    assert j["best"] <= j["interval"]["envelope"]
    j = report("hyp-bound", ["hyp-bound", "--d", "100"])
    assert j["best"] == 370
    assert run(["hyp-bound", "--d", "-1"]).returncode == 2
    assert run(["hyp-bound"]).returncode == 2


def case_verify():
    j = report("hyp-verify", ["hyp-verify", "--d", "1", "--samples", "1000000", "--seed", "7"])
    assert j["violationCount"] == 0 and j["samples"] == 1000000 and j["validation"]["ok"]
    j = report("hyp-verify", ["hyp-verify", "--d", "1", "--samples", "20000", "--break-vertical"], expect_exit=1)
    assert j["violationCount"] > 0 and j["violations"]
    j = report("hyp-verify", ["hyp-verify", "--d", "1", "--samples", "0"])
    assert j["samples"] == 0 and j["violationCount"] == 0 and j["violations"] == []
    j = report("hyp-verify", ["hyp-verify", "--d", "10", "--scheme", "k4", "--samples", "20000"])
    assert j["scheme"]["palette"] == 45 and j["violationCount"] == 0
    j = report("hyp-verify", ["hyp-verify", "--d", "6", "--c", "2", "--samples", "20000"])
    assert j["scheme"]["dMax"] == 12 and j["violationCount"] == 0


def case_verify_determinism():
    a = run(["hyp-verify", "--d", "1", "--samples", "50000", "--seed", "3", "--break-vertical", "--jobs", "1"])
    b = run(["hyp-verify", "--d", "1", "--samples", "50000", "--seed", "3", "--break-vertical", "--jobs", "4"])
    assert a.returncode == b.returncode == 1
    assert a.stdout == b.stdout


def case_tree():
    j = report("tree", ["tree", "--q", "3", "--d", "2", "--radius", "5", "--mode", "chroma"])
    assert j["chromatic"]["exact"] == 3 and j["chromatic"]["status"] == "SOLVED"
    j = report("tree", ["tree", "--q", "3", "--d", "4", "--radius", "6", "--mode", "spindle"])
    assert len(j["spindle"]["vertices"]) == 7 and j["chromatic"]["exact"] == 4
    j = report("tree", ["tree", "--q", "4", "--d", "4", "--radius", "4", "--mode", "clique"])
    assert j["construction"]["size"] == 4 and j["construction"]["pairwiseOk"] and j["maxClique"]["size"] == 4
    j = report("tree", ["tree", "--q", "3", "--d", "2", "--c", "3", "--radius", "3", "--mode", "clique"])
    assert j["construction"]["size"] == 12 and j["construction"]["pairwiseOk"]
    for q, d in [(3, 3), (3, 4), (4, 2)]:
        j = report("tree", ["tree", "--q", str(q), "--d", str(d), "--radius", "6", "--mode", "verify"])
        assert j["verify"]["ok"] and j["verify"]["paletteUsed"] <= j["paletteBound"]
    j = report("tree", ["tree", "--q", "3", "--d", "2", "--c", "3", "--radius", "8", "--mode", "verify"])
    assert j["verify"]["ok"] and j["paletteBound"] == 112
    j = report("tree", ["tree", "--q", "3", "--d", "8", "--radius", "8", "--mode", "chroma", "--k", "5"])
    assert j["decision"]["status"] == "SAT"
    assert run(["tree", "--q", "2", "--d", "2"]).returncode == 2
    assert run(["tree", "--q", "3", "--d", "2", "--mode", "bogus"]).returncode == 2


def case_tree_budget():
    j = report("tree", ["tree", "--q", "3", "--d", "8", "--radius", "8", "--mode", "chroma", "--k", "4", "--budget", "50"],
               expect_exit=3)
    assert j["decision"]["status"] == "TIMEOUT"


def case_tree_csv():
    proc = run(["tree", "--q", "3", "--d", "2", "--radius", "3", "--mode", "color", "--csv"])
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0] == "vertexId,level,colorIndex"
    assert len(lines) == 1 + 22
    assert lines[1].startswith("0,0,")


def case_cnf():
    with tempfile.TemporaryDirectory() as tmp:
        j = report("tree", ["tree", "--q", "3", "--d", "8", "--radius", "8", "--mode", "export-cnf", "--k", "4"],
                   env={"HYPCOLOR_OUT_DIR": tmp})
        path = Path(j["file"])
        assert path.parent == Path(tmp) and path.name == "tree_q3_d8_r8_k4.cnf"
        lines = path.read_text().split("\n")
        header = next(l for l in lines if l.startswith("p "))
        assert header == f"p cnf {j['variables']} {j['clauses']}"
        assert j["variables"] == 766 * 4
        clauses = [l for l in lines if l and l[0] not in "cp"]
        assert len(clauses) == j["clauses"] and all(l.endswith(" 0") for l in clauses)
        # n + n k(k-1)/2 + |E| k
        edges = (j["clauses"] - 766 - 766 * 6) // 4
        assert 766 + 766 * 6 + edges * 4 == j["clauses"]
        out = Path(tmp) / "explicit.cnf"
        report("tree", ["tree", "--q", "3", "--d", "2", "--radius", "2", "--mode", "export-cnf", "--k", "3", "--out", str(out)])
        assert out.read_text().startswith("p cnf 30 ")


def case_heptile():
    j = report("heptile", ["heptile", "--depth", "3"])
    assert 1.21 <= j["geometry"]["diameter"] <= 1.22
    assert j["coloring"]["ok"] and j["adjacentSameColor"] == 0 and j["tiles"] == 85
    assert j["separation"]["separation"] > j["geometry"]["diameter"]
    j = report("heptile", ["heptile", "--depth", "0"])
    assert set(j) == {"depth", "geometry"}
    assert run(["heptile", "--depth", "9"]).returncode == 2
    proc = run(["heptile", "--depth", "1", "--csv"])
    assert proc.returncode == 0 and proc.stdout.startswith("dualId,colorId,centerX,centerY\n")
    assert len(proc.stdout.strip().split("\n")) == 1 + 8


def case_chroma():
    j = report("chroma", ["chroma", "--input", "-"], stdin="0 1\n1 2\n0 2\n")
    assert j["chromatic"]["exact"] == 3 and j["vertices"] == 3 and j["edges"] == 3
    j = report("chroma", ["chroma", "--input", "-", "--k", "2"], stdin="n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert j["decision"]["status"] == "UNSAT"
    assert run(["chroma", "--input", "/nonexistent/graph.txt"]).returncode == 2


def case_embed():
    for q, n in [(3, 9), (3, 12), (4, 12)]:
        j = report("embed", ["embed", "--q", str(q), "--n", str(n), "--depth", "3"])
        assert j["certificate"]["ok"] and j["certificate"]["minGap"] >= 2
    assert run(["embed", "--q", "4", "--n", "9", "--depth", "3"]).returncode == 2
    proc = run(["embed", "--q", "3", "--n", "9", "--depth", "1", "--csv"])
    assert proc.stdout.startswith("treeVertex,complexVertex\n0,0\n")


def case_out_dir():
    with tempfile.TemporaryDirectory() as tmp:
        proc = run(["hyp-bound", "--d", "2", "--out", "sub/bound.json"], env={"HYPCOLOR_OUT_DIR": tmp})
        assert proc.returncode == 0 and proc.stdout == ""
        j = json.loads((Path(tmp) / "sub" / "bound.json").read_text())
        jsonschema.validate(j, json.loads((SCHEMAS / "hyp-bound.schema.json").read_text()))
        proc = run(["--out", "b.json", "hyp-bound", "--d", "2"], env={"HYPCOLOR_OUT_DIR": tmp})
        assert proc.returncode == 0 and (Path(tmp) / "b.json").exists()


def case_usage():
    assert run([]).returncode == 2
    assert run(["no-such-command"]).returncode == 2
    assert run(["--help"]).returncode == 0


CASES = {name[5:]: fn for name, fn in globals().items() if name.startswith("case_")}

if __name__ == "__main__":
    selected = sys.argv[3:] or list(CASES)
    failed = 0
    for name in selected:
        try:
            CASES[name]()
            print(f"cli {name}: PASS")
        except Exception as exc:  # noqa: BLE001
            failed += 1
            print(f"cli {name}: FAIL {type(exc).__name__}: {exc}")
    sys.exit(1 if failed else 0)
