"""Run the tmrat binary over a spread of invocations and validate every JSON
report against report.schema.json. Also checks byte-identical reruns."""

import json
import subprocess
import sys

import jsonschema

tmrat, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

CASES = [
    (["analyze", "(3*z^2+1)/(z^2+3)"], 0),
    (["--field", "Fp:7", "analyze", "[1,0,0;0,0,1]"], 0),
    (["--field", "Fpk:3^2", "analyze", "(z^2+t)/(z^2+1)"], None),
    (["--field", "C:128", "analyze", "(z^2+1)/(2*z^2-z+3)"], 0),
    (["analyze", "[1,0,0;1,0,0]"], 1),
    (["analyze", "(z^2+1)/(z^2-2*z+5)"], 1),
    (["analyze", "[1,0,0;0,0"], 2),
    (["invariants", "(1,-1,2;0,inf)"], 1),
    (["invariants", "(1,1,1;0,inf)"], 0),
    (["--field", "Fp:7", "invariants", "(0,1,inf;0,inf)"], 0),
    (["reconstruct", "(1,1,1;0,inf)"], 0),
    (["reconstruct", "(1,1,1)"], 0),
    (["reconstruct", "(0,inf,0)"], 0),
    (["reconstruct", "(1,2,3)"], 1),
    (["--field", "Fp:7", "equiv", "(0,1,inf;0,inf)", "(1,2,inf;1,inf)"], 0),
    (["equiv", "(0,1,inf;0,inf)", "(1,1,1;0,inf)"], 0),
    (["--field", "Fp:7", "orbit", "(0,1,inf;0,inf)"], 0),
    (["stability", "points=(1,1,1,0,inf);weights=(1,1,1,1,1)"], 0),
    (["stability", "points=(0,inf);weights=(1,1)"], 0),
    (["stability", "points=(0,inf);weights=(1)"], 2),
    (["sweep", "(3*z^2+1)/(z^2+3)", "--primes", "2..99"], 0),
    (["sweep", "(0,1,inf;0,inf)", "--primes", "2..99"], 0),
    (["sweep", "(z^2+1)/(z^2-2*z+5)", "--primes", "3,5,7,11"], 0),
    (["--seed", "7", "selftest", "small"], 0),
    (["--precision", "256", "analyze", "z^2"], 0),
]

failures = 0
for args, expected in CASES:
    cmd = [tmrat, "--output", "json", *args]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    label = " ".join(args)
    try:
        report = json.loads(first.stdout)
        validator.validate(report)
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        print(f"FAIL {label}: {e}")
        failures += 1
        continue
    if expected is not None and first.returncode != expected:
        print(f"FAIL {label}: exit {first.returncode}, expected {expected}")
        failures += 1
    elif report["exit_code"] != first.returncode:
        print(f"FAIL {label}: report says exit {report['exit_code']}, process exited {first.returncode}")
        failures += 1
    elif first.stdout != second.stdout:
        print(f"FAIL {label}: output differs between identical runs")
        failures += 1
    else:
        print(f"ok   {label}")

sys.exit(1 if failures else 0)
