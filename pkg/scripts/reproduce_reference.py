#!/usr/bin/env python3
"""Recompute the bundled reference determinants and report PASS/FAIL per case.

Usage:
    python scripts/reproduce_reference.py             # 4-class cases
    python scripts/reproduce_reference.py --extended  # also the 5-class cases
"""

import sys

from pcubes.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce-appendix", *sys.argv[1:]]))
