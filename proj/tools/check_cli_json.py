#!/usr/bin/env python3
"""Run raviolo-cli with --json and validate every document against schemas/."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema

SPEC = json.dumps({
    "K": 3,
    "sites": [
        {"kind": "adjoint", "vector": "f"},
        {"kind": "vacuum", "state": "(lower f 1 (dv)) |0>"},
        {"kind": "vacuum", "state": "(lower e 1 (dv)) |0>"},
    ],
})

# (arguments, expected exit code)
RUNS = [
    (["cohomology", "--K", "3", "--D", "3"], 0),
    (["statefield", "--A", "(lower e 1 (dv)) |0>", "--B", "(lower f 1 (dv)) |0>", "--K", "3", "--mode", "both"], 0),
    (["statefield", "--A", "(mode e -1) |0>", "--B", "(mode f -1) |0>", "--mode", "classical"], 0),
    (["membership", "--N", "3", "--form", "u[123]/(w-z2)"], 0),
    (["membership", "--N", "2", "--form", "u[12]*u[21]/(z1-z2)"], 0),
    (["expand", "--N", "2", "--form", "du[123]^du[312]/((w-z1)*(w-z2))", "--s", "2", "--K", "3"], 0),
    (["expand", "--N", "2", "--form", "u[123]/(w-z2)", "--s", "1"], 2),
    (["omega12-demo"], 0),
    (["coinvariant", "--spec", SPEC], 0),
    (["verify-theorem", "--demo-worked-example"], 0),
    (["verify-theorem", "--cases", "6", "--seed", "7", "--K", "3"], 0),
    (["verify-theorem", "--cases", "4", "--seed", "7", "--K", "3", "--classical"], 0),
    (["verify-theorem", "--spec", SPEC], 0),
    (["thom-sullivan", "--K", "4"], 0),
    (["membership", "--N", "3", "--form", "u[123]/(w-"], 2),
    (["statefield", "--A", "(lower q 1 (dv)) |0>"], 2),
    (["cohomology", "--K", "0"], 2),
    (["verify-theorem"], 2),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("cli")
    ap.add_argument("schemas")
    opts = ap.parse_args()
    schema_dir = pathlib.Path(opts.schemas)
    schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    failures = 0
    for args, want in RUNS:
        outputs = [subprocess.run([opts.cli, "--json", *args], capture_output=True, text=True) for _ in range(2)]
        proc = outputs[0]
        label = " ".join(args)
        problems = []
        if proc.returncode != want:
            problems.append(f"exit {proc.returncode}, expected {want}")
        if outputs[1].stdout != proc.stdout:
            problems.append("output differs between identical runs")
        try:
            doc = json.loads(proc.stdout)
            name = "error" if "error" in doc else doc.get("command")
            if name not in schemas:
                problems.append(f"no schema for {name!r}")
            else:
                jsonschema.validate(doc, schemas[name])
        except json.JSONDecodeError as e:
            problems.append(f"not JSON: {e}")
        except jsonschema.ValidationError as e:
            problems.append(f"schema violation: {e.message}")
        if problems:
            failures += 1
            print(f"FAIL {label}: {'; '.join(problems)}")
        else:
            print(f"ok   {label}")
    print(f"{len(RUNS) - failures}/{len(RUNS)} invocations valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
