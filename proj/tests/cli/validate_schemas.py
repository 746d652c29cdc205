"""Run every chevtool subcommand with --format json and validate against its schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = [
    ["roots", "--type", "G", "--rank", "2"],
    ["roots", "--type", "A", "--rank", "1"],
    ["weyl-scan", "--type", "B", "--rank", "2"],
    ["relations", "--type", "A", "--rank", "2", "--samples", "5"],
    ["rgd-check", "--type", "A", "--rank", "1", "--prime", "2", "--budget", "10", "--seed", "1"],
    ["rgd-check", "--type", "B", "--rank", "2", "--prime", "5", "--budget", "10"],
    ["vrgd-check", "--type", "A", "--rank", "2", "--prime", "2", "--budget", "10"],
    ["torsion", "--type", "G", "--rank", "2", "--word", "1,2", "--samples", "5", "--seed", "11"],
    ["torsion", "--type", "A", "--rank", "2", "--word", "1", "--samples", "3"],
    ["torsion-scan", "--type", "B", "--rank", "2", "--samples", "2"],
    ["congruence-probe", "--type", "A", "--rank", "2", "--prime", "2", "--modulus", "3", "--words", "20",
     "--max-len", "8", "--seed", "5"],
    ["congruence-probe", "--type", "A", "--rank", "1", "--prime", "3", "--modulus", "2", "--allow-small-modulus",
     "--words", "10"],
    ["approx", "--prime", "2", "--modulus", "3", "--lambda", "7", "--precision", "4"],
    ["approx", "--type", "B", "--rank", "2", "--root", "2", "--lambda", "1/2", "--precision", "3"],
    ["torsion-scan", "--all-types", "--samples", "1", "--max-size", "200"],
]


def main() -> int:
    tool, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    covered = set()
    for args in RUNS:
        proc = subprocess.run([tool, *args, "--format", "json"], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        schema = json.loads((schema_dir / f"{args[0]}.schema.json").read_text())
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
            covered.add(args[0])
            print(f"ok   {' '.join(args)}")
        except (jsonschema.ValidationError, json.JSONDecodeError) as e:
            print(f"FAIL {' '.join(args)}: {e}")
            failures += 1
    missing = {p.name.removesuffix(".schema.json") for p in schema_dir.glob("*.schema.json")} - covered
    if missing:
        print(f"FAIL schemas never exercised: {sorted(missing)}")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
