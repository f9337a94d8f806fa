"""Runs the CLI on a few cases and validates its JSON against the schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli, schema_dir, config_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources(
    (s["$id"], Resource.from_contents(s)) for s in schemas.values()
)


def validator(name):
    return jsonschema.Draft202012Validator(schemas[name], registry=registry)


def run(*args):
    out = subprocess.run([cli, *args, "--json"], capture_output=True, text=True, check=False)
    if out.returncode != 0:
        sys.exit(f"{' '.join(args)} exited with {out.returncode}: {out.stderr}")
    return json.loads(out.stdout)


failures = 0
cases = [
    ("fix", "--n", "2", "--lambda", "2", "--p", "2"),
    ("fix", "--n", "2", "--lambda", "2", "--field", "unramified", "--p", "2", "--degree", "2", "--timings"),
    ("fix", "--n", "2", "--lambda", "2", "--field", "laurent", "--q", "2", "--model", "quotient"),
    ("fix", "--n", "3", "--lambda", "2,1", "--p", "3", "--method", "bfs"),
    ("fix", "--n", "2", "--lambda", "3", "--p", "5", "--method", "polytrope"),
]
report = validator("report.schema.json")
for args in cases:
    for err in report.iter_errors(run(*args)):
        failures += 1
        print(f"{' '.join(args)}: {err.json_path}: {err.message}")

config_schema = validator("scan-config.schema.json")
for path in sorted(config_dir.glob("*.json")):
    for err in config_schema.iter_errors(json.loads(path.read_text())):
        failures += 1
        print(f"{path.name}: {err.json_path}: {err.message}")

small = {"cases": [{"n": 2, "lambda": [2], "field": {"backend": "p-adic", "p": 3}},
                   {"n": 2, "lambda": [3, 2, 1]}]}
tmp = pathlib.Path("scan_small.json")
tmp.write_text(json.dumps(small))
for err in validator("scan-result.schema.json").iter_errors(run("scan", str(tmp))):
    failures += 1
    print(f"scan: {err.json_path}: {err.message}")

print("schema validation:", "ok" if failures == 0 else f"{failures} errors")
sys.exit(1 if failures else 0)
