"""Checks the CLI's exit codes and fail-fast behaviour on malformed input."""

import json
import pathlib
import subprocess
import sys
import tempfile


def main():
    cli, corpus = sys.argv[1], pathlib.Path(sys.argv[2])
    tmp = pathlib.Path(tempfile.mkdtemp())
    field = {"type": "Fp", "p": 2}

    def write(name, doc):
        path = tmp / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)

    cases = [
        ("no subcommand", [], 2),
        ("unknown subcommand", ["frobnicate", "x.json"], 2),
        ("bad window", ["graded-compare", str(corpus / "exterior_h0_graded_compare.json"), "--window", "3"], 2),
        ("negative max degree", ["cotor", str(corpus / "kx2_trivial_cotor.json"), "--max-degree", "-1"], 2),
        ("missing file", ["cotor", str(tmp / "absent.json")], 3),
        ("not json", ["cotor", write("garbage.json", "{not json")], 3),
        ("unknown kind", ["validate", write("kind.json", {"field": field, "objects": {"A": {"kind": "widget"}}})], 4),
        ("bad field", ["validate", write("field.json", {"field": {"type": "R"}, "objects": {}})], 4),
        ("command mismatch", ["hochschild", str(corpus / "kx2_trivial_cotor.json")], 4),
        ("missing task parameter", ["cotor", write("task.json", {
            "field": field,
            "objects": {"A": {"kind": "algebra", "builtin": "ground"}},
            "task": {"command": "cotor"}})], 4),
        ("dangling reference", ["validate", write("ref.json", {
            "field": field,
            "objects": {"M": {"kind": "left_module", "algebra": "B", "builtin": "regular"}}})], 5),
        ("invalid module", ["compare", str(corpus / "broken_module_compare.json")], 6),
        ("invalid unit", ["validate", str(corpus / "broken_unit_validate.json")], 6),
        ("unnormalizable DG coalgebra", ["dg-compare", write("s1.json", {
            "field": field,
            "objects": {
                "C": {"kind": "coalgebra", "builtin": "sphere_homology", "n": 1},
                "dC": {"kind": "dg_coalgebra", "coalgebra": "C"},
                "kr": {"kind": "right_comodule", "coalgebra": "C", "builtin": "grouplike", "g": [1, 0]},
                "kl": {"kind": "left_comodule", "coalgebra": "C", "builtin": "grouplike", "g": [1, 0]},
                "M": {"kind": "dg_right_comodule", "dg_coalgebra": "dC", "comodule": "kr"},
                "N": {"kind": "dg_left_comodule", "dg_coalgebra": "dC", "comodule": "kl"}},
            "task": {"command": "dg-compare", "coalgebra": "dC", "left": "M", "right": "N", "window": [0, 3]}})], 7),
        ("valid run", ["cotor", str(corpus / "kx2_trivial_cotor.json")], 0),
        ("text output", ["cotor", str(corpus / "kx2_trivial_cotor.json"), "--text"], 0),
    ]

    failures = 0
    for name, args, want in cases:
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        ok = proc.returncode == want
        if name == "invalid module" and ok:
            # fail-fast: the report lists violations and carries no computed result
            report = json.loads(proc.stdout)
            ok = report["all_valid"] is False and "result" not in report and report["command"] == "compare"
        if name == "text output" and ok:
            ok = "cotor:" in proc.stdout and not proc.stdout.lstrip().startswith("{")
        print(f"{'ok  ' if ok else 'FAIL'} {name}: exit {proc.returncode}, expected {want}")
        if not ok:
            print(proc.stderr.strip())
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
