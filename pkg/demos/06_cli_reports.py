"""Reproducible CSV/JSON reports through the command-line surface.

Every output starts with one metadata line (version + flags, never a
timestamp) so repeated runs are byte-identical; files are written
atomically.  Exit codes: 0 ok, 1 check failed, 2 invalid, 3 quadrature
non-convergence.

Run: python3 demos/06_cli_reports.py
"""

import json
import tempfile
from pathlib import Path

from radlap.cli import main

print("kernel-table (CSV to stdout):")
main(["kernel-table", "--n", "3", "--s", "0.5",
      "--tau-min", "1", "--tau-max", "4", "--points", "4"])

print("\nverify-hessian k=2 n=5 (JSON, deterministic):")
with tempfile.TemporaryDirectory() as tmp:
    out1, out2 = Path(tmp) / "a.json", Path(tmp) / "b.json"
    for out in (out1, out2):
        code = main(["verify-hessian", "--k", "2", "--n", "5",
                     "--format", "json", "--out", str(out)])
    payload = out1.read_text().splitlines()[1]
    same = (out1.read_text().splitlines()[1:]
            == out2.read_text().splitlines()[1:])
    report = json.loads(payload)
    print(f"  exit code {code}, payloads identical: {same}")
    print(f"  overall={report['overall']}, route={report['route']},"
          f" f'(1)={report['tangent']['f_prime_1']}")

print("\ncheck-subharmonic at the critical exponent (exit code 0):")
code = main(["check-subharmonic", "--n", "4", "--s", "0.6",
             "--profile", "fbeta:2.8", "--r-points", "8",
             "--tau-points", "8"])
print(f"  exit code {code}")

print("\n...and just above it (exit code 1):")
code = main(["check-subharmonic", "--n", "4", "--s", "0.6",
             "--profile", "fbeta:3.1", "--r-points", "8",
             "--tau-points", "8"])
print(f"  exit code {code}")
