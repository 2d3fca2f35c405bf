"""Command-line checks: schemas, determinism, exit codes and diagnostics."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, ROOT = sys.argv[1], sys.argv[2]
FIX = os.path.join(ROOT, "fixtures")
GOOD = ["p3_33", "p3_44", "tri", "star3_3", "star4_3", "e4", "two_triangles"]
COMMANDS = ["validate", "classify", "chunks", "split", "enumerate", "spine", "twist-orbit", "stabilizer", "report"]
failures = []


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def fixture(name):
    return os.path.join(FIX, name + ".adg")


def schema(command):
    with open(os.path.join(ROOT, "schemas", command + ".schema.json")) as f:
        return json.load(f)


def check(ok, what):
    if not ok:
        failures.append(what)


def check_json(command, out, what):
    try:
        doc = json.loads(out)
        jsonschema.validate(doc, schema(command))
        return doc
    except (ValueError, jsonschema.ValidationError) as e:
        failures.append(f"{what}: {str(e).splitlines()[0]}")
        return None


for name in GOOD:
    for command in COMMANDS:
        what = f"{command} {name}"
        code, out, err = run(command, fixture(name), "--json")
        check(code == 0, f"{what}: exit {code} ({err.strip()})")
        check_json(command, out, what)
        check(run(command, fixture(name), "--json")[1] == out, f"{what}: output differs between runs")
    one = run("report", fixture(name), "--json", "--threads", "1")[1]
    three = run("report", fixture(name), "--json", "--threads", "3")[1]
    check(one == three, f"report {name}: output depends on thread count")
    for extra in (["split", "--all"], ["stabilizer", "--all"]):
        code, out, _ = run(extra[0], fixture(name), extra[1], "--json")
        check(code == 0, f"{' '.join(extra)} {name}: exit {code}")
        check_json(extra[0], out, f"{' '.join(extra)} {name}")

code, out, _ = run("report", fixture("two_triangles"), "--json")
doc = json.loads(out)
check(len(doc["chunks"]) == 4, "report two_triangles: chunk count")
check(doc["spine"]["slide_graph_connected"] is True, "report two_triangles: slide connectivity")

code, out, _ = run("chunks", fixture("tri"))
check(code == 0 and out.strip() == "{a,b,c}", "chunks tri: text output")

code, out, _ = run("enumerate", fixture("star3_3"), "--json", "--max-extra", "0")
check(json.loads(out)["count"] == 3, "enumerate --max-extra 0")

with tempfile.TemporaryDirectory() as tmp:
    tree_path = os.path.join(tmp, "t.json")
    code, out, _ = run("split", fixture("two_triangles"), "--json")
    split = json.loads(out)
    with open(tree_path, "w") as f:
        json.dump({"nodes": split["nodes"], "edges": split["edges"]}, f)
    jsonschema.validate(json.load(open(tree_path)), schema("gamma_tree"))
    code, out, _ = run("validate", fixture("two_triangles"), "--tree", tree_path, "--json")
    check(code == 0, "validate --tree on T_Gamma")
    verdict = check_json("validate", out, "validate --tree")
    check(verdict is not None and verdict["valid_gamma_tree"], "validate --tree verdict")

    bad_tree = os.path.join(tmp, "bad.json")
    with open(bad_tree, "w") as f:
        json.dump({"nodes": [{"id": 0, "label": ["a", "b"]}, {"id": 1, "label": ["a", "b"]},
                             {"id": 2, "label": ["b", "c"]}],
                   "edges": [{"a": 0, "b": 1, "label": ["a", "b"]}, {"a": 1, "b": 2, "label": ["b"]}]}, f)
    code, out, _ = run("validate", fixture("p3_33"), "--tree", bad_tree, "--json")
    check(code == 1, f"validate of a duplicate-chunk tree: exit {code}")
    verdict = check_json("validate", out, "validate bad tree")
    check(verdict is not None and any(v["clause"] == "chunk_axiom" for v in verdict["violations"]),
          "validate bad tree: chunk_axiom reported")

    hub = os.path.join(tmp, "hub.json")
    with open(hub, "w") as f:
        json.dump({"nodes": [{"id": 0, "label": ["c"]}, {"id": 1, "label": ["c", "x"]},
                             {"id": 2, "label": ["c", "y"]}, {"id": 3, "label": ["c", "z"]}],
                   "edges": [{"a": 0, "b": i, "label": ["c"]} for i in (1, 2, 3)]}, f)
    code, _, err = run("stabilizer", fixture("star3_3"), "--tree", hub)
    check(code == 2 and "not reduced" in err, f"stabilizer of a non-reduced tree: exit {code}")

    for command, expected in [("chunks", "graph chunks"), ("spine", "digraph spine"), ("split", "graph gamma_tree"),
                              ("twist-orbit", "digraph twist_orbit")]:
        dot = os.path.join(tmp, command + ".dot")
        code, _, _ = run(command, fixture("two_triangles"), "--dot", dot)
        check(code == 0 and open(dot).read().startswith(expected), f"{command} --dot")

code, out, err = run("report", fixture("bad"))
check(code == 1, f"report bad.adg: exit {code}")
check(out == "" and "parse error" in err and "line 2" in err, "report bad.adg: diagnostic on stderr")

for command in ["chunks", "split", "enumerate", "spine", "twist-orbit", "stabilizer", "report"]:
    code, out, err = run(command, fixture("disconnected"))
    check(code == 2 and out == "" and err != "", f"{command} disconnected: exit {code}")
for command in ["split", "enumerate", "spine", "twist-orbit", "stabilizer", "report"]:
    code, _, _ = run(command, fixture("small_label"))
    check(code == 2, f"{command} small_label: exit {code}")
check(run("classify", fixture("disconnected"))[0] == 0, "classify disconnected")
check(run("chunks", os.path.join(FIX, "missing.adg"))[0] == 1, "missing file")
check(run("chunks", fixture("tri"), "--bogus")[0] == 1, "unknown flag")
check(run("split", fixture("tri"), "--policy", "random")[0] == 1, "unknown policy")
check(run()[0] == 1, "no subcommand")
check(run("--help")[0] == 0, "help")

code, out, err = run("twist-orbit", fixture("star3_3"), "--json", "--node-cap", "1")
check(code == 2 and json.loads(out)["truncated"] is True and "truncated" in err, "twist-orbit cap")

if failures:
    for f in failures:
        print("FAIL", f)
    sys.exit(1)
print("all CLI checks passed")
