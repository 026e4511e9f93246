"""Writes tests/corpus/<name>.expected.json from the brute-force oracle.

Run after adding a corpus program; the sidecars are committed and read by the C++ tests.
--check only compares and exits 1 if a sidecar is out of date.
"""
import json
import pathlib
import sys

import oracle

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def sets(xs):
    return sorted(sorted(s) for s in xs)


def expected(text):
    prog = oracle.parse(text)
    if prog.weak or any(len(r.head) > 1 for r in prog.rules) or prog.prefers == [] and any(not r.head for r in prog.rules):
        out = {"kind": "plain", "answer_sets": sets(oracle.answer_sets(prog))}
        if prog.weak:
            best, value = oracle.optimal(prog)
            out["optimal"] = sets(best)
            out["optimum"] = value
        return out
    prog = oracle.rewrite_constraints(prog)
    weak, values = oracle.weakly_preferred(prog)
    return {
        "kind": "prioritized",
        "answer_sets": sets(oracle.answer_sets(prog)),
        "b": sets(oracle.b_preferred(prog)),
        "w": sets(oracle.w_preferred(prog)),
        "d": sets(oracle.d_preferred(prog)),
        "weak": sets(weak),
        "pvd": sorted([sorted(s), v] for s, v in values.items()),
    }


def main(args):
    check = "--check" in args
    paths = [a for a in args if a != "--check"]
    files = [pathlib.Path(p) for p in paths] or sorted(CORPUS.glob("*.lp"))
    stale = []
    for f in files:
        data = expected(f.read_text())
        text = json.dumps(data, indent=2) + "\n"
        side = f.with_suffix(".expected.json")
        if check:
            if not side.exists() or side.read_text() != text:
                stale.append(side.name)
            continue
        side.write_text(text)
        print(f.name, data["kind"])
    if stale:
        print("stale sidecars:", " ".join(stale))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
