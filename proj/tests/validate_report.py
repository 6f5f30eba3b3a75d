#!/usr/bin/env python3
"""Runs `csym report` on a few inputs and validates the JSON against the schema."""
import json
import subprocess
import sys

import jsonschema


def report(exe, *args):
    out = subprocess.run([exe, "report", *args, "--format", "json"], capture_output=True, text=True)
    if out.returncode != 0:
        raise SystemExit(f"csym report {' '.join(args)} exited with {out.returncode}: {out.stdout}{out.stderr}")
    return json.loads(out.stdout)


def main():
    exe, schema_path, basis = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    runs = [
        ("--model", "builtin:nakamura4:t=1/2", "--sigma", "1/2*f14 + f23", "--basis", basis),
        ("--model", "builtin:iwasawa4", "--sigma", "1/2*f14 + f23"),
        ("--model", "builtin:torus:m=3"),
        ("--model", "builtin:torus:m=2", "--param", "a1=2"),
    ]
    failed = 0
    for args in runs:
        errors = sorted(validator.iter_errors(report(exe, *args)), key=lambda e: list(e.path))
        for e in errors:
            print(f"{' '.join(args)}: {'/'.join(map(str, e.path))}: {e.message}")
        failed += bool(errors)
    golden = report(exe, *runs[0])["bbf"]
    if golden["rank"] != 8 or golden["signature"]["coordinate"] != [4, 4, 2]:
        print("golden report values changed")
        failed += 1
    print("ok" if not failed else f"{failed} report(s) failed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
