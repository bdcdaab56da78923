"""Run each CLI suite with --format json and validate the output against the schema."""
import json
import subprocess
import sys

cli, schema_path, data = sys.argv[1:4]
schema = json.load(open(schema_path))
try:
    import jsonschema
except ImportError:
    jsonschema = None

runs = [
    ["reduce", "((x * y) * (A 1 z))"],
    ["verify", "m-coassoc", "--non-unital"],
    ["verify", "affine-comodule", "--timings"],
    ["verify", "m2-representability", "--carrier", "qtwist"],
    ["verify", "twist", "--lambda", "0"],
    ["verify", "envelope", f"{data}/abelian_2d.hlie"],
    ["check", "algebra", f"{data}/qtwist.alg"],
]
bad = 0
for args in runs:
    out = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True).stdout
    report = json.loads(out)
    if jsonschema is not None:
        try:
            jsonschema.validate(report, schema)
        except jsonschema.ValidationError as e:
            print("invalid:", " ".join(args), e.message)
            bad += 1
            continue
    elif set(schema["required"]) - set(report):
        print("missing keys:", " ".join(args))
        bad += 1
        continue
    print("valid:", " ".join(args))
sys.exit(1 if bad else 0)
