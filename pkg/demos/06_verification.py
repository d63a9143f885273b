"""Seeded residual scans of every equation.

Run: python demos/06_verification.py [samples]
"""
import sys

from polyangles.verify import run_all

samples = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
reports = run_all(seed=0, samples=samples)
for r in reports:
    print(r.summary())
print("all passed" if all(r.passed for r in reports) else "FAILURES")
