"""Command-line behaviour: determinism, exit codes and empty scans."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def run(cli, *args):
    return subprocess.run([cli, *args], capture_output=True, text=True, timeout=600)


def check(cond, what):
    if not cond:
        print(f"FAILED: {what}")
        sys.exit(1)


def main():
    cli = sys.argv[1]

    case = ["fix", "--n", "2", "--lambda", "2", "--p", "3", "--json"]
    a, b = run(cli, *case), run(cli, *case)
    check(a.returncode == 0, f"fix exits 0 (got {a.returncode}: {a.stderr})")
    check(a.stdout == b.stdout, "two runs print identical JSON")
    check(json.loads(a.stdout)["status"] == "ok", "fix report status ok")

    bad = run(cli, "fix", "--n", "2", "--lambda", "3,2,1")
    check(bad.returncode == 2, f"too many rows exits 2 (got {bad.returncode})")
    cap = run(cli, "fix", "--n", "3", "--lambda", "2", "--cap-N", "4")
    check(cap.returncode == 3, f"cap violation exits 3 (got {cap.returncode})")

    with tempfile.TemporaryDirectory() as tmp:
        config = Path(tmp) / "empty.json"
        config.write_text("{}")
        empty = run(cli, "scan", str(config), "--json")
        check(empty.returncode == 0, f"empty scan exits 0 (got {empty.returncode})")
        result = json.loads(empty.stdout)
        check(result["reports"] == [] and result["summary"]["cases"] == 0, "empty scan has no reports")

    print("cli checks: ok")


if __name__ == "__main__":
    main()
