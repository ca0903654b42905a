"""Bundled reference results for the deleted-vertex hypercube family, plus a
nine-tope example COM arising from four pseudolines in a convex region.

Each reference case records the published determinant factorization for one
forbidden pc-minor, in that source's own variable numbering.  Computed class
numbering is implementation-defined, so comparisons go through a search over
variable permutations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph_core import Graph, forbidden_minor
from .polyring import Poly, PolyRing, permute_variables
from .varchenko import FactorizationReport, candidate_factor

FactorSpec = tuple[tuple[int, ...], int]  # (sorted 0-based variable indices, exponent)
TermSpec = tuple[tuple[int, ...], int]    # (exponent vector, coefficient)


@dataclass(frozen=True)
class ReferenceCase:
    name: str
    kind: str
    n: int
    m: int | None
    extended: bool
    factors: tuple[FactorSpec, ...]
    residual_terms: tuple[TermSpec, ...]
    clean: bool

    def graph(self) -> Graph:
        return forbidden_minor(self.kind, self.n, self.m)

    def ring(self) -> PolyRing:
        return PolyRing(self.n)

    def residual_poly(self, ring: PolyRing) -> Poly:
        return ring.from_terms(self.residual_terms)

    def determinant_poly(self, ring: PolyRing) -> Poly:
        det = self.residual_poly(ring)
        for indices, b in self.factors:
            det = det * candidate_factor(ring, indices) ** b
        return det


def _case(kind: str, n: int, m: int | None, factors, residual_terms, clean) -> ReferenceCase:
    name = f"{kind}:{n}" if m is None else f"{kind}:{n}:{m}"
    return ReferenceCase(name, kind, n, m, n >= 5, tuple(factors),
                         tuple(residual_terms), clean)


_ONE4: tuple[TermSpec, ...] = (((0, 0, 0, 0), 1),)
_ONE5: tuple[TermSpec, ...] = (((0, 0, 0, 0, 0), 1),)

REFERENCE_CASES: tuple[ReferenceCase, ...] = (
    _case("minus_star", 4, None,
          [((0,), 6), ((1,), 6), ((2,), 6), ((3,), 6), ((0, 2, 3), 1)],
          _ONE4, True),
    _case("minus_minus", 4, 1,
          [((0,), 6), ((1,), 5), ((2,), 5), ((3,), 5), ((1, 2, 3), 1)],
          _ONE4, True),
    _case("minus_minus", 4, 2,
          [((0,), 5), ((1,), 5), ((2,), 4), ((3,), 4)],
          (((2, 2, 2, 2), 1), ((2, 0, 2, 2), -1), ((0, 2, 2, 2), -1),
           ((0, 0, 0, 0), 1)), False),
    _case("minus_minus", 4, 3,
          [((0,), 4), ((1,), 4), ((2,), 4), ((3,), 3)],
          (((2, 2, 2, 2), 2), ((2, 2, 0, 2), -1), ((2, 0, 2, 2), -1),
           ((0, 2, 2, 2), -1), ((0, 0, 0, 0), 1)), False),
    _case("minus_minus", 4, 4,
          [((0,), 3), ((1,), 3), ((2,), 3), ((3,), 3)],
          (((2, 2, 2, 2), 3), ((2, 2, 2, 0), -1), ((2, 2, 0, 2), -1),
           ((2, 0, 2, 2), -1), ((0, 2, 2, 2), -1), ((0, 0, 0, 0), 1)), False),
    _case("minus_star", 5, None,
          [((0,), 14), ((1,), 14), ((2,), 14), ((3,), 14), ((4,), 14),
           ((1, 2, 3, 4), 1)],
          _ONE5, True),
    _case("minus_minus", 5, 1,
          [((0,), 13), ((1,), 13), ((2,), 14), ((3,), 13), ((4,), 13),
           ((0, 1, 3, 4), 1)],
          _ONE5, True),
    _case("minus_minus", 5, 2,
          [((0,), 13), ((1,), 12), ((2,), 13), ((3,), 12), ((4,), 12)],
          (((2, 2, 2, 2, 2), 1), ((2, 2, 0, 2, 2), -1), ((0, 2, 2, 2, 2), -1),
           ((0, 0, 0, 0, 0), 1)), False),
    _case("minus_minus", 5, 3,
          [((0,), 12), ((1,), 12), ((2,), 12), ((3,), 11), ((4,), 11)],
          (((2, 2, 2, 2, 2), 2), ((2, 2, 0, 2, 2), -1), ((2, 0, 2, 2, 2), -1),
           ((0, 2, 2, 2, 2), -1), ((0, 0, 0, 0, 0), 1)), False),
    _case("minus_minus", 5, 4,
          [((0,), 11), ((1,), 11), ((2,), 11), ((3,), 11), ((4,), 10)],
          (((2, 2, 2, 2, 2), 3), ((2, 2, 2, 0, 2), -1), ((2, 2, 0, 2, 2), -1),
           ((2, 0, 2, 2, 2), -1), ((0, 2, 2, 2, 2), -1), ((0, 0, 0, 0, 0), 1)),
          False),
    _case("minus_minus", 5, 5,
          [((0,), 10), ((1,), 10), ((2,), 10), ((3,), 10), ((4,), 10)],
          (((2, 2, 2, 2, 2), 4), ((2, 2, 2, 2, 0), -1), ((2, 2, 2, 0, 2), -1),
           ((2, 2, 0, 2, 2), -1), ((2, 0, 2, 2, 2), -1), ((0, 2, 2, 2, 2), -1),
           ((0, 0, 0, 0, 0), 1)), False),
)


def reference_case(name: str) -> ReferenceCase:
    for case in REFERENCE_CASES:
        if case.name == name:
            return case
    raise KeyError(f"no reference case named {name!r}")


def match_up_to_variable_permutation(report: FactorizationReport,
                                     case: ReferenceCase,
                                     ring: PolyRing) -> tuple[int, ...] | None:
    """A variable permutation carrying the computed report onto the reference,
    or None.  perm[i] is the reference variable index for computed variable i."""
    want_factors = sorted((tuple(sorted(s)), b) for s, b in case.factors)
    want_residual = case.residual_poly(ring)
    for perm in itertools.permutations(range(ring.nvars)):
        got = sorted((tuple(sorted(perm[i] for i in s)), b)
                     for s, b in report.factors)
        if got != want_factors:
            continue
        if permute_variables(report.residual, perm) == want_residual:
            return perm
    return None


# -- nine-tope example COM ----------------------------------------------------
#
# Four pseudolines crossing a convex region, with crossings inside the region
# at the line pairs {1,2}, {1,3}, {1,4}, {3,4}.  Covectors are the 9 cells,
# the 12 walls, and the 4 crossing points.

NINE_TOPE_TOPES: tuple[str, ...] = (
    "++++", "+-++", "+--+", "+---", "-+++", "--++", "---+", "----", "--+-",
)

NINE_TOPE_COVECTORS: tuple[str, ...] = NINE_TOPE_TOPES + (
    "+0++", "0+++", "+-0+", "0-++", "+--0", "0--+", "0---",
    "-0++", "--0+", "---0", "--+0", "--0-",
    "00++", "0-0+", "0--0", "--00",
)

# Determinant of the nine-tope tope graph in the reference variable numbering.
NINE_TOPE_FACTORS: tuple[FactorSpec, ...] = (
    ((0,), 4), ((1,), 2), ((2,), 3), ((3,), 3),
)
