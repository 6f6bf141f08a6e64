#!/usr/bin/env python3
# Copyright 2026 The oraclekit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the count-consistent fixtures under tests/testdata.

The fixtures transcribe published aggregate counts into record-level data so
the library computes the aggregates instead of restating them.
"""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))

# Per-project mutant kills: total/unique for the original suite, then for the
# generated suite. The final row holds kills of the one project the table does
# not list, recovered from the column totals.
KILLS = [
    ("http", 64, 38, 29, 3), ("json", 328, 110, 249, 31),
    ("beanutils", 551, 46, 516, 11), ("collections4", 248, 104, 162, 18),
    ("dbutils", 108, 14, 98, 4), ("jsoup", 598, 177, 509, 88),
    ("imaging", 1869, 629, 1315, 75), ("lang3", 2301, 397, 2063, 159),
    ("configuration", 271, 51, 266, 46), ("jexl3", 697, 73, 638, 14),
    ("joda-time", 1545, 446, 1323, 224), ("net", 747, 175, 592, 20),
    ("pool2", 155, 8, 150, 3), ("spark", 407, 63, 355, 11),
    ("validator", 602, 52, 560, 10), ("scribejava", 172, 31, 143, 2),
    ("bcel", 1122, 467, 698, 43), ("numbers", 871, 168, 726, 23),
    ("springside4", 1160, 243, 938, 21), ("vfs2", 339, 37, 310, 8),
    ("rng", 554, 158, 527, 131), ("jcs3", 621, 81, 548, 8),
    ("async-http", 69, 10, 59, 0), ("weaver", 20, 2, 18, 0),
    ("unlisted", 566, 110, 526, 70),
]
UNIVERSE_TOTAL = 69793


def write(path, text):
    with open(os.path.join(HERE, path), "w", encoding="utf-8") as f:
        f.write(text)


def kill_sets():
    lines = ["project,orig_total,orig_unique,gen_total,gen_unique"]
    lines += [",".join(str(v) for v in row) for row in KILLS]
    write("mutants/kill_counts.csv", "\n".join(lines) + "\n")

    bases = []
    for name, ot, ou, gt, gu in KILLS:
        assert ot - ou == gt - gu, name
        implicit = (ot + 9) // 10
        bases.append(ot + gu + implicit)
    spare = UNIVERSE_TOTAL - sum(bases)
    projects = []
    given = 0
    for k, (name, ot, ou, gt, gu) in enumerate(KILLS):
        overlap = ot - ou
        implicit = (ot + 9) // 10
        survivors = (spare * bases[k]) // sum(bases)
        if k == len(KILLS) - 1:
            survivors = spare - given
        given += survivors
        # Id layout: both | orig only | gen only | implicit blocks | survivors.
        a = overlap
        b = a + ou
        c = b + gu
        i_both = implicit // 2
        i_orig = implicit // 4
        d = c + i_both
        e = d + i_orig
        f = c + implicit
        universe = f + survivors
        projects.append({
            "project": name,
            "universe": universe,
            "ORIG": [[0, b], [c, e]],
            "GEN": [[0, a], [b, d]],
            "IMPLICIT": [[c, f]],
        })
    doc = {"ranges": "half-open [begin, end) mutant id intervals per project",
           "projects": projects}
    write("mutants/kill_sets.json", json.dumps(doc, indent=1) + "\n")


def d4j(tool, classes, fp, detect):
    """classes: list of (expected, predicted or None, method) per input.
    detect: list of (method, bug_group) detecting tests; equal groups share a bug.
    """
    tests, buggy, fixed = [], [], []
    # Assign detection slots to the first tests of each method, false
    # positives to later oracle tests.
    slots = {}
    for method, group in detect:
        slots.setdefault(method, []).append(group)
    fp_left = fp
    next_bug = 1000
    projects = ["Lang", "Math", "Chart", "Time", "Closure", "Mockito"]
    for k, (expected, predicted, method) in enumerate(classes):
        test_id = "%s:t%03d" % (tool, k)
        group = None
        if slots.get(method):
            group = slots[method].pop(0)
        if group is not None:
            bug_id = "%s-%d" % (projects[group % len(projects)], group)
            b_status, f_status = "fail", "pass"
        else:
            bug_id = "%s-%d" % (projects[next_bug % len(projects)], next_bug)
            next_bug += 1
            b_status, f_status = "pass", "pass"
            if method != "prefixOnly" and fp_left > 0:
                b_status, f_status = "fail", "fail"
                fp_left -= 1
        row = {"test_id": test_id, "bug_id": bug_id, "method": method,
               "expected_kind": expected}
        if predicted is not None:
            row["predicted_kind"] = predicted
        tests.append(row)
        for sink, status in ((buggy, b_status), (fixed, f_status)):
            sink.append({"test_id": test_id, "phase": "compile", "status": "pass"})
            sink.append({"test_id": test_id, "phase": "execute", "status": status})
    assert fp_left == 0 and not any(slots.values()), tool
    os.makedirs(os.path.join(HERE, "d4j", tool), exist_ok=True)
    dump = lambda rows: "".join(json.dumps(r) + "\n" for r in rows)
    write("d4j/%s/tests.jsonl" % tool, dump(tests))
    write("d4j/%s/buggy.jsonl" % tool, dump(buggy))
    write("d4j/%s/fixed.jsonl" % tool, dump(fixed))


def d4j_fixtures():
    # Perfect classification: 304 assertion and 70 exception inputs; 9
    # assertion inputs got no assertion and run as bare prefixes.
    classes = ([("exception", "exception", "exceptionOracle")] * 70 +
               [("assertion", "assertion", "assertionOracle")] * 295 +
               [("assertion", "assertion", "prefixOnly")] * 9)
    detect = ([("exceptionOracle", g) for g in range(1, 28)] +
              [("assertionOracle", g) for g in range(28, 65)] +
              [("prefixOnly", 65)])
    d4j("togll", classes, 153, detect)

    # Baseline classification over 363 classified inputs (pred/actual):
    # exc/exc 7, exc/assert 43, assert/exc 53, assert/assert 260, plus 11
    # inputs with no prediction. 121 predicted assertions carry an assertion.
    classes = ([("exception", "exception", "exceptionOracle")] * 7 +
               [("assertion", "exception", "exceptionOracle")] * 43 +
               [("exception", "assertion", "assertionOracle")] * 20 +
               [("assertion", "assertion", "assertionOracle")] * 101 +
               [("exception", "assertion", "prefixOnly")] * 33 +
               [("assertion", "assertion", "prefixOnly")] * 159 +
               [("assertion", None, "prefixOnly")] * 11)
    detect = ([("exceptionOracle", g) for g in range(1, 6)] +
              [("assertionOracle", g) for g in range(6, 32)] +
              # 11 prefix detections land on bugs the oracles also detect.
              [("prefixOnly", g) for g in list(range(1, 4)) + list(range(6, 14))] +
              [("prefixOnly", g) for g in range(32, 57)])
    d4j("toga", classes, 77, detect)


def main():
    kill_sets()
    d4j_fixtures()


if __name__ == "__main__":
    main()
