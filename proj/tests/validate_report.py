import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
out = subprocess.run([cli, "selftest", "--seed", "42", "--timings"], capture_output=True, text=True, check=True)
report = json.loads(out.stdout)
jsonschema.validate(report, schema)
assert [c["id"] for c in report["criteria"]] == list(range(1, 9))
assert all("seconds" in c for c in report["criteria"])
print("report valid")
