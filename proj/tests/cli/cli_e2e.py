"""Drives the hopfaz binary: exit codes, schema conformance and JSON round-trip."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

BIN, ROOT = sys.argv[1], pathlib.Path(sys.argv[2])
REPORT = json.loads((ROOT / "schemas/verdict-report.v1.schema.json").read_text())
DOCUMENT = json.loads((ROOT / "schemas/structure-constants.v1.schema.json").read_text())
failures = []


def run(*args, expect):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        failures.append(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stdout}{proc.stderr}")
    return proc


def report(*args, expect):
    proc = run("--json", *args, expect=expect)
    try:
        data = json.loads(proc.stdout)
        jsonschema.validate(data, REPORT)
        return data
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures.append(f"{args}: {e}")
        return {}


en = report("en-check", "--A", "1", "--routes", "det,theta,fg,dual", expect=0)
assert en.get("verdict") == "azumaya", en
report("en-check", "--A", "0", expect=1)
report("en-check", "--n", "2", "--Lambda", "1,0;0,1", expect=0)
report("en-check", "--field", "prime:7", "--alpha", "2", "--gamma", "1", "--Lambda", "1", expect=1)
report("en-check", "--alpha", "2", "--gamma", "1", "--Lambda", "1", expect=0)
report("table", "--n", "2", "--A", "1,2;0,-1", "--alpha", "-1/2", "--gamma", "1,1", "--Lambda", "1,0;2,1", "--sigma", expect=0)
report("sweep", expect=0)
report("sweep", "--field", "prime:7", expect=0)
report("sweep", "--n", "2", "--points", "3", "--seed", "5", "--jobs", "2", expect=0)
for doc in sorted((ROOT / "data").glob("*.json")):
    jsonschema.validate(json.loads(doc.read_text()), DOCUMENT)
    report("verify", str(doc), expect=0)

run("en-check", "--alpha", "0", expect=2)
run("en-check", "--A", "1,2", expect=2)
run("en-check", "--A", "0.5", expect=2)
run("en-check", "--routes", "magic", expect=2)
run("en-check", "--field", "prime:2", expect=2)
run("verify", "/nonexistent.json", expect=2)
run("bogus-command", expect=2)
run("--help", expect=0)

with tempfile.TemporaryDirectory() as tmp:
    path = pathlib.Path(tmp) / "e1.json"
    run("export", "--A", "1", "--alpha", "2", "--gamma", "1", "--out", str(path), expect=0)
    doc = json.loads(path.read_text())
    jsonschema.validate(doc, DOCUMENT)

    doc["antipode"][2] = {"x1": "1"}
    path.write_text(json.dumps(doc))
    bad = report("verify", str(path), "--suites", "hopf", expect=1)
    antipode = [c for c in bad.get("checks", []) if c["name"] == "hopf.antipode"]
    if not antipode or antipode[0]["passed"] or "x1" not in antipode[0]["witness"]:
        failures.append(f"corrupted antipode not witnessed: {antipode}")

    doc["mult"][1][3] = {"nope": 1}
    path.write_text(json.dumps(doc))
    proc = run("--json", "verify", str(path), expect=2)
    if json.loads(proc.stdout).get("pointer") != "/mult/1/3/nope":
        failures.append(f"schema error pointer: {proc.stdout}")

    matrix = pathlib.Path(tmp) / "a.json"
    matrix.write_text('[[1, "1/2"], [0, 1]]')
    report("en-check", "--n", "2", "--A", f"@{matrix}", expect=0)

first = run("--json", "en-check", "--A", "3", "--gamma", "2", expect=0).stdout
second = run("--json", "en-check", "--A", "3", "--gamma", "2", expect=0).stdout
strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "timing_us"}
if strip(first) != strip(second):
    failures.append("en-check output is not deterministic")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
