"""Replay the GF(4) worked examples through the CLI and print each result.

Run from the repository root:  python3 scripts/reproduce_examples.py
"""

import json
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
GF4 = str(ROOT / "fields" / "gf4.json")

# (arguments, expected keys of the output) -- w is [[0],[1]] and w+1 is [[1],[1]]
EXAMPLES = [
    (["rank", "--poly", '[["0","1"],["1","0"]]'], {"rank": 1}),
    (["eval", "--poly", "L_a", "--x", "w"], {"value": [[0], [0]]}),
    (["eval", "--poly", "L_a", "--x", "1"], {"value": [[1], [1]]}),
    (["compose", "--poly", "[0, 1]", "--poly2", '["w", 0]'], {"poly": [[[0], [0]], [[1], [1]]]}),
    (["kernel", "--poly", "L_a"], {"basis": [[[0], [1]]], "dimension": 1}),
    (["det", "--poly", "L_a"], {"det": [[0], [0]]}),
    (["invert", "--poly", "identity"], {"poly": [[[1], [0]], [[0], [0]]]}),
    (["invert", "--poly", '["w", 0]'], {"poly": [[[1], [1]], [[0], [0]]]}),
    (["invert", "--poly", "L_a"], {"error": "NotAPermutation"}),
    (["adjugate", "--poly", "L_a"], {"poly": [[[1], [1]], [[1], [0]]]}),
    (["matrix-rep", "--poly", '["w", 0]', "--basis", '["1", "w"]'], {"matrix": [[[[0], [0]], [[1], [0]]], [[[1], [0]], [[1], [0]]]]}),
    (["dual-basis", "--basis", '["1", "w"]'], {"dual": [[[1], [1]], [[1], [0]]]}),
    (["trace-rep", "--poly", "L_a", "--form", "1"], {"pairs": [[[[1], [0]], [[1], [1]]], [[[0], [1]], [[1], [1]]]]}),
    (["trace-rep", "--poly", "L_a", "--form", "3"], {"form": 3, "pairs": [[[[1], [1]], [[1], [1]]]]}),
    (["factor", "--poly", "L_a"], {"permutation": [[[1], [0]], [[0], [0]]], "gammas": [[[0], [1]]]}),
    (["skew-gcd", "--poly", "L_a"], {"gcd": [[[0], [1]], [[1], [0]]], "degree": 1}),
]


def main() -> int:
    exe = [sys.executable, "-m", "linfield.cli"]
    bad = 0
    for args, expected in EXAMPLES:
        proc = subprocess.run(exe + [args[0], "--field", GF4] + args[1:], capture_output=True, text=True)
        got = json.loads(proc.stdout)
        ok = all(got.get(k) == v for k, v in expected.items())
        bad += not ok
        status = "ok  " if ok else "DIFF"
        print(f"{status} linfield {' '.join(args)}\n       -> {proc.stdout.strip()}  (exit {proc.returncode})")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
