#!/usr/bin/env python3
"""Run the qubit tetrahedron worked example and print its check table.

Equivalent to ``kdf reproduce qubit-sic --format table`` but prints a
compact summary, one line per check.
"""

import sys

from kdframes.cli import build_qubit_sic_report


def main() -> int:
    report, passed = build_qubit_sic_report()
    width = max(len(check["name"]) for check in report["checks"])
    for check in report["checks"]:
        status = "ok" if check["pass"] else "FAIL"
        extras = {k: v for k, v in check.items() if k not in ("name", "pass")}
        detail = ", ".join(
            f"{key}={value:.6g}" if isinstance(value, float) else f"{key}={value}"
            for key, value in extras.items()
        )
        print(f"[{status:>4}] {check['name']:<{width}}  {detail}")
    print("overall:", "pass" if passed else "fail")
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
