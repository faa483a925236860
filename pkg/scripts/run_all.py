#!/usr/bin/env python3
"""Run every verification suite and print the plain-text report."""

import sys

from fano22 import render_text, run_all


def main() -> int:
    reports = run_all()
    print(render_text(reports))
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
