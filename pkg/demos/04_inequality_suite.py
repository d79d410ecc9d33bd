#!/usr/bin/env python3
"""Running the mechanical inequality checker and reading its report.

The catalog holds 27 executable checks. Each draws seeded random
instances across dimensions and rank profiles of A, evaluates both sides
of its inequality or equality, and records violation counts, minimum
slack (sharpness), and a replayable worst-case witness.
"""

import json

import shnr
from shnr import serialize, verify

for spec in shnr.catalog():
    flags = ",".join(sorted(spec.required_flags)) or "-"
    print(f"{spec.id} [{spec.kind:11s}] needs: {flags:50s} {spec.statement}")

cfg = verify.InstanceGenConfig(
    dims=(2, 3),
    rank_profiles=("full", "n-1"),
    instances_per_check=12,
    seed=42,
    tol_rel=1e-6,
)
report = shnr.run_suite(cfg)

print("\nviolations:", report.violations_total,
      " incomplete:", report.incomplete_total)

# Sharpness shows up as min_slack near zero: C17 mixes square-zero
# instances that make its lower bound exact.
c17 = next(c for c in report.checks if c.id == "C17")
print("C17 min slack (sharpness hit):", c17.min_slack)

# Conditional checks report how often their premise actually held, so a
# vacuous pass is visible.
c27 = next(c for c in report.checks if c.id == "C27")
print("C27 premise held on", c27.premise_held, "of", c27.instances_run,
      "instances")

# Reports serialize to stable JSON; the worst witness of any check can be
# replayed bit-for-bit from the file alone.
payload = serialize.dump_report(report.to_dict())
loaded = json.loads(payload)
slack = shnr.replay_witness(loaded, "C22")
recorded = loaded["checks"][21]["worst_witness"]["slack"]
print("\nC22 witness: recorded slack", recorded, "replayed", slack)
