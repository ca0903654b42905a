#!/usr/bin/env python3
"""Time the determinant pipeline on the whole reference family.

Prints per-case wall time, matrix size, expanded term count, and the
factor shape, so regressions in the elimination are easy to spot.

Usage:
    python scripts/benchmark_determinants.py [--extended]
"""

import argparse
import time

from pcubes.partial_cube import require_structure
from pcubes.reference import REFERENCE_CASES, match_up_to_variable_permutation
from pcubes.varchenko import build_matrix, determinant, factorize


def run(extended: bool) -> None:
    total = 0.0
    for case in REFERENCE_CASES:
        if case.extended and not extended:
            continue
        t0 = time.perf_counter()
        s = require_structure(case.graph())
        m = build_matrix(s)
        det = determinant(m)
        t_det = time.perf_counter() - t0
        report = factorize(det, s.num_classes)
        perm = match_up_to_variable_permutation(report, case, m.ring)
        elapsed = time.perf_counter() - t0
        total += elapsed
        shape = " ".join(
            f"{{{','.join(str(i + 1) for i in sorted(f))}}}^{b}"
            for f, b in report.factors)
        status = "ok" if perm is not None else "MISMATCH"
        print(f"{case.name:<16} {s.graph.n_vertices:>2} vertices  "
              f"det {t_det:6.1f}s  total {elapsed:6.1f}s  "
              f"{len(det):>7} terms  {shape}  residual_terms={len(report.residual)}  "
              f"[{status}]")
    print(f"total {total:.1f}s")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--extended", action="store_true",
                        help="include the 5-class cases (up to 30x30)")
    run(parser.parse_args().extended)
