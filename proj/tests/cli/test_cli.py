# Copyright 2026 The clumin authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end exercise of the command-line surface and its exit codes."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLUMIN = Path(sys.argv[1])
FAILURES = []


def run(*args):
    return subprocess.run([str(CLUMIN), *args], capture_output=True, text=True)


def check(label, condition, result=None):
    if condition:
        print(f"ok  {label}")
    else:
        FAILURES.append(label)
        print(f"FAIL {label}")
        if result is not None:
            print(f"  exit={result.returncode}\n  stdout={result.stdout}\n  stderr={result.stderr}")


def main():
    work = Path(tempfile.mkdtemp(prefix="clumin_cli_"))
    udg = work / "udg.json"
    cluster = work / "cluster.json"
    receipt = work / "receipt.json"
    solution = work / "solution.json"
    svg = work / "drawing.svg"

    r = run("gen", "--kind", "random_points", "--count", "9", "--selection-size", "3",
            "--resolution", "4", "--seed", "7", "--out", str(udg))
    check("gen writes an instance", r.returncode == 0 and udg.exists(), r)
    doc = json.loads(udg.read_text())
    check("gen records the prng", doc["generator"]["prng"] == "splitmix64")

    r = run("reduce", "--in", str(udg), "--out", str(cluster), "--receipt", str(receipt))
    check("reduce udg -> cluster", r.returncode == 0 and cluster.exists() and receipt.exists(), r)
    check("receipt has the certificate value",
          json.loads(receipt.read_text())["decision_threshold"] == "3/1")

    r = run("solve", "--in", str(cluster), "--algorithm", "branch_and_bound",
            "--workers", "2", "--out", str(solution), "--format", "json")
    check("solve cluster instance", r.returncode == 0 and solution.exists(), r)
    solved = json.loads(solution.read_text())
    check("solution is proven optimal", solved["proven_optimal"] is True)

    r = run("verify", "--instance", str(cluster), "--solution", str(solution))
    check("verify accepts the solver output", r.returncode == 0 and "valid" in r.stdout, r)

    bad = work / "bad_solution.json"
    solved_bad = dict(solved)
    solved_bad["objective"] = "999/1"
    bad.write_text(json.dumps(solved_bad))
    r = run("verify", "--instance", str(cluster), "--solution", str(bad))
    check("verify rejects a wrong objective with exit 1", r.returncode == 1, r)

    r = run("solve", "--in", str(udg))
    check("udg decision exit code is YES/NO",
          r.returncode in (0, 1) and ("answer" in r.stdout), r)

    crowded = work / "crowded.json"
    crowded.write_text(json.dumps({
        "kind": "udg_is", "dimension": 2, "resolution": 1,
        "points": [[0, 0], [1, 0], [0, 1], [1, 1]],
        "conflict_threshold": 2, "target_size": 2,
    }))
    r = run("solve", "--in", str(crowded), "--algorithm", "exhaustive")
    check("proven conflict count is a valid NO", r.returncode == 1 and "answer NO" in r.stdout, r)
    r = run("solve", "--in", str(crowded), "--algorithm", "greedy")
    check("heuristic cannot certify NO",
          r.returncode == 3 and "answer UNKNOWN" in r.stdout, r)

    r = run("harness", "--problem", "udg", "--trials", "40", "--max-size", "9", "--seed", "3",
            "--format", "json")
    check("harness udg runs clean", r.returncode == 0, r)
    report = json.loads(r.stdout)
    check("harness report shape",
          report["trials"] == 40 and report["agreements"] == 40
          and report["disagreements"] == [])

    r = run("harness", "--problem", "clique", "--trials", "30", "--max-size", "8", "--seed", "4")
    check("harness clique runs clean", r.returncode == 0, r)

    r = run("bench", "--sizes", "3,4", "--trials", "2", "--seed", "5", "--format", "json")
    check("bench emits a json table", r.returncode == 0, r)
    bench = json.loads(r.stdout)
    check("bench rows cover the sizes",
          [row["selection_size"] for row in bench["rows"]] == [3, 4])

    r = run("render", "--in", str(udg), "--out", str(svg))
    check("render writes an svg", r.returncode == 0 and svg.exists(), r)
    check("svg has one circle per disk", svg.read_text().count("<circle") == 9)

    dimacs = work / "graph.col"
    dimacs.write_text("c clique demo\np edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")
    weighted = work / "weighted.json"
    r = run("reduce", "--in", str(dimacs), "--clique-size", "3", "--out", str(weighted))
    check("reduce ingests dimacs", r.returncode == 0, r)
    r = run("solve", "--in", str(weighted), "--algorithm", "exhaustive", "--format", "json")
    check("solve the reduced clique instance", r.returncode == 0, r)
    check("complete graph attains the threshold",
          json.loads(r.stdout)["objective"] == "3/1")

    r = run("solve", "--in", str(dimacs))
    check("bare graphs are rejected with exit 2", r.returncode == 2, r)

    broken = work / "broken.json"
    broken.write_text("{ not json")
    r = run("solve", "--in", str(broken))
    check("malformed files exit 2", r.returncode == 2, r)

    r = run("solve", "--in", str(cluster), "--node-budget", "2")
    check("budget exhaustion exits 3", r.returncode == 3, r)

    r = run("gen", "--kind", "grid_points", "--grid-side", "2", "--count", "9")
    check("infeasible generator parameters exit 2", r.returncode == 2, r)

    r = run("nonsense")
    check("unknown subcommand exits 2", r.returncode == 2, r)

    if FAILURES:
        print(f"{len(FAILURES)} CLI checks failed")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
