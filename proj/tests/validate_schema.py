"""Validates verify output against docs/report.schema.json with the jsonschema package."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft7Validator.check_schema(schema)
for args in (["verify", "g4"], ["verify", "rank2"], ["verify", "canary"], ["verify", "michel", "--n", "6", "--d", "3"]):
    out = subprocess.run([cli, *args, "--json"], capture_output=True, text=True)
    jsonschema.validate(json.loads(out.stdout), schema)
    print("valid:", " ".join(args))
