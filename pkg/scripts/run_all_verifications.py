#!/usr/bin/env python3
"""Run every verification suite at its standard bound and summarize.

Equivalent to the `qschubert verify ...` subcommands; bounds can be lowered
for a quick pass with --quick.  Exit code 1 on any failure.
"""

import argparse
import sys
import time

from qschubert import verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--quick", action="store_true", help="cap every suite at n <= 5"
    )
    args = parser.parse_args()
    cap = 5 if args.quick else None

    start = time.time()
    reports = [
        verify.verify_pentagon(min(7, cap) if cap else 7),
        verify.verify_pc_numeric(min(5, cap) if cap else 5),
        verify.verify_sd_numeric(min(6, cap) if cap else 6),
        verify.verify_lift(min(12, cap) if cap else 12),
    ]
    reports.extend(verify.verify_props(cap))
    for rep in reports:
        print(rep.line())
    failures = sum(len(r.failures) for r in reports)
    checked = sum(r.checked for r in reports)
    print(f"total: {checked} checked, {failures} failures, {time.time() - start:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
