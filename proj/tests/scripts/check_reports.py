#!/usr/bin/env python3
"""Runs the asymih CLI and checks its structured output.

  schema       every report validates against docs/schemas/report.schema.json,
               every data file against its input schema
  determinism  repeated runs with the same arguments are byte-identical
  golden       verify-theorem --all matches the frozen equivalence reports
"""
import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = [
    ["jelonek", "F=(x, x*y)"],
    ["jelonek", "(x*y, y)"],
    ["proper", "(x, y + x^3)"],
    ["proper", "(x, x^2*y)"],
    ["initial-forms", "(x^2 + y, x*y)"],
    ["directions", "(x, x*y)"],
    ["directions", "(x^2 + y^2, x^2 + y^2 + x)"],
    ["arc-limit", "(x, x*y)", "(1) t^1, (1) t^-1"],
    ["arc-limit", "(x^2 - y, x)", "(1) t^-1, (1) t^-2"],
    ["homology", "pinched_torus", "--generators"],
    ["homology", "three_pages"],
    ["ih", "pinched_torus", "--perversity", "0"],
    ["ih", "suspension_torus", "--generators"],
    ["ih", "disk_x_pinched"],
    ["duality", "torus", "--p", "0", "--q", "0"],
    ["duality", "ball4", "--p", "0", "--q", "t"],
    ["verify-theorem", "--all"],
    ["verify-theorem", "blowup"],
    ["catalog", "list"],
]


def run(cli, args):
    proc = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True)
    if proc.returncode not in (0, 1, 3):
        raise SystemExit(f"{' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
    return proc.stdout


def check_schema(cli, schemas, data):
    failures = 0
    report = json.loads((schemas / "report.schema.json").read_text())
    complex_schema = json.loads((schemas / "complex.schema.json").read_text())
    catalog_schema = json.loads((schemas / "catalog.schema.json").read_text())
    for schema in (report, complex_schema, catalog_schema):
        jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(report)
    for args in RUNS:
        doc = json.loads(run(cli, args))
        errors = list(validator.iter_errors(doc))
        status = "ok" if not errors else f"{len(errors)} error(s): {errors[0].message}"
        print(f"report  {' '.join(args)}: {status}")
        failures += bool(errors)
    for path in sorted((data / "complexes").glob("*.json")):
        errors = list(jsonschema.Draft202012Validator(complex_schema).iter_errors(json.loads(path.read_text())))
        print(f"complex {path.name}: {'ok' if not errors else errors[0].message}")
        failures += bool(errors)
    errors = list(jsonschema.Draft202012Validator(catalog_schema).iter_errors(json.loads((data / "catalog.json").read_text())))
    print(f"catalog catalog.json: {'ok' if not errors else errors[0].message}")
    failures += bool(errors)
    return failures


def check_determinism(cli):
    failures = 0
    for args in RUNS:
        for seed in ("0", "17"):
            full = ["--seed", seed, *args]
            same = run(cli, full) == run(cli, full)
            print(f"{'ok' if same else 'DIFFERS'}  {' '.join(full)}")
            failures += not same
    return failures


def check_golden(cli, golden):
    actual = json.loads(run(cli, ["verify-theorem", "--all"]))["result"]["entries"]
    text = json.dumps(actual, indent=1) + "\n"
    expected = golden.read_text()
    if text == expected:
        print(f"golden equivalence reports match ({len(actual)} entries)")
        return 0
    want = {e["id"]: e for e in json.loads(expected)}
    for entry in actual:
        if want.get(entry["id"]) != entry:
            print(f"mismatch in entry {entry['id']}")
    print("golden equivalence reports differ")
    return 1


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("mode", choices=["schema", "determinism", "golden"])
    ap.add_argument("--cli", required=True)
    ap.add_argument("--schemas", type=pathlib.Path)
    ap.add_argument("--data", type=pathlib.Path)
    ap.add_argument("--golden", type=pathlib.Path)
    a = ap.parse_args()
    if a.mode == "schema":
        failures = check_schema(a.cli, a.schemas, a.data)
    elif a.mode == "determinism":
        failures = check_determinism(a.cli)
    else:
        failures = check_golden(a.cli, a.golden)
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
