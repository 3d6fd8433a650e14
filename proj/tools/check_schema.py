"""Validate pozcli output for a spread of commands against docs/report.schema.json."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    (0, ["analyze", "--family", '{"kind":"laughlin","N":3,"m":2}']),
    (2, ["analyze", "--expr", "z[1]^"]),
    (0, ["fuse", "--family", '{"kind":"laughlin","N":4,"m":1}', "--step", "z[1],z[2]->z[2,1] & z[3],z[4]->z[2,2]"]),
    (1, ["pattern", "check", "--n", "2", "--m", "2", "--S", "0,1"]),
    (0, ["pattern", "extend", "--n", "1", "--m", "2", "--S", "0", "--a", "1", "--k", "3"]),
    (0, ["pattern", "enumerate", "--n", "2", "--m", "2", "--cap", "8"]),
    (0, ["generate", "--kind", "random_ti_symmetric", "--N", "3", "--degree-cap", "4", "--seed", "3"]),
    (0, ["ufc", "--family", '{"kind":"laughlin","N":4,"m":2}']),
    (1, ["ulc", "--family", '{"kind":"counterexample_ulc"}']),
    (0, ["reproduce", "--case", "cubic-counterexample"]),
    (2, ["frobnicate"]),
]


def rationals(node, path="$"):
    if isinstance(node, dict):
        if set(node) == {"num", "den"}:
            yield path, node
        for k, v in node.items():
            yield from rationals(v, f"{path}.{k}")
    elif isinstance(node, list):
        for i, v in enumerate(node):
            yield from rationals(v, f"{path}[{i}]")


def main(cli, schema_path):
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    rational = jsonschema.Draft202012Validator({**schema["$defs"]["rational"], "$defs": schema["$defs"]})
    bad = 0
    for code, args in CASES:
        run = subprocess.run([cli, *args], capture_output=True, text=True)
        doc = json.loads(run.stdout)
        problems = [e.message for e in validator.iter_errors(doc)]
        problems += [f"{p}: {e.message}" for p, r in rationals(doc) for e in rational.iter_errors(r)]
        if run.returncode != code:
            problems.append(f"exit {run.returncode}, expected {code}")
        print(("ok   " if not problems else "FAIL ") + " ".join(args[:2]))
        for p in problems[:5]:
            print("     " + p)
        bad += bool(problems)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
