"""Validate shipped descriptors and CLI outputs against the JSON schemas."""
import json
import pathlib
import subprocess
import sys
import tempfile

try:
    import jsonschema
except ImportError:
    print("jsonschema not available")
    sys.exit(77)

asai, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
failures = 0


def check(kind, doc, label):
    global failures
    errors = sorted(jsonschema.Draft202012Validator(schemas[kind]).iter_errors(doc), key=str)
    for e in errors:
        failures += 1
        print(f"FAIL {label}: /{'/'.join(map(str, e.absolute_path))}: {e.message}")
    if not errors:
        print(f"ok   {label}")


for path in sorted((root / "data").glob("*.json")):
    kind = "satake" if path.name.startswith("satake") else "character"
    check(kind, json.loads(path.read_text()), path.name)

with tempfile.TemporaryDirectory() as tmp:
    m = pathlib.Path(tmp) / "m.json"
    subprocess.run([asai, "--prime", "5", "measure", "synth", "--depth", "2", "--out", str(m)], check=True,
                   capture_output=True)
    check("measure", json.loads(m.read_text()), "synthesized measure")
    runs = [
        ["verify", "pairing"],
        ["measure", "check", str(m)],
        ["factor", str(root / "data/satake_split.json"), str(root / "data/character_p5_conductor1.json"),
         "--n", "2", "--alpha", "1"],
    ]
    for args in runs:
        out = subprocess.run([asai, "--json", *args], capture_output=True, text=True)
        check("report", json.loads(out.stdout), "report of " + " ".join(args[:2]))

sys.exit(1 if failures else 0)
