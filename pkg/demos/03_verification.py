"""Run the check catalog on a small configuration and read the report."""

import json

from dunklsb.harness import SuiteConfig, emit_report, run_verification

cfg = SuiteConfig(family="A1^N", N=1, mu=["1/2"], basis_degree=6)
report = run_verification(cfg)
print(emit_report(report, "text"))

# %% The JSON form is what `dunklsb verify --out` writes
doc = json.loads(emit_report(report, "json"))
print(doc["summary"])
slow = sorted(doc["meta"]["timings"].items(), key=lambda kv: -kv[1])[:3]
print("slowest checks:", slow)
