"""Transcriptions of three published Varchenko matrices, used as test oracles.

Each entry is written as the string of 1-based class digits whose variables
appear in it, so "134" stands for x1*x3*x4 and "" for the constant 1.  A
matrix of this kind is internally consistent only if every entry equals the
symmetric difference of the first-row patterns of its row and column; the
tests assert that before using the data.
"""

from __future__ import annotations

import itertools

from pcubes.partial_cube import PartialCubeStructure, separator
from pcubes.polyring import Poly, PolyRing
from pcubes.varchenko import VarchenkoMatrix, build_matrix

# 9 topes of a four-pseudoline arrangement clipped to a convex region
NINE_CELL_MATRIX = (
    ("", "2", "23", "234", "1", "12", "123", "1234", "124"),
    ("2", "", "3", "34", "12", "1", "13", "134", "14"),
    ("23", "3", "", "4", "123", "13", "1", "14", "134"),
    ("234", "34", "4", "", "1234", "134", "14", "1", "13"),
    ("1", "12", "123", "1234", "", "2", "23", "234", "24"),
    ("12", "1", "13", "134", "2", "", "3", "34", "4"),
    ("123", "13", "1", "14", "23", "3", "", "4", "34"),
    ("1234", "134", "14", "1", "234", "34", "4", "", "3"),
    ("124", "14", "134", "13", "24", "4", "34", "3", ""),
)

# the 10-vertex forbidden minor: 4-cube minus antipodal pair minus all four
# neighbors of the base vertex
MINUS_MINUS_4_4_MATRIX = (
    ("", "1", "12", "123", "23", "3", "34", "14", "1234", "134"),
    ("1", "", "2", "23", "123", "13", "134", "4", "234", "34"),
    ("12", "2", "", "3", "13", "123", "1234", "24", "34", "234"),
    ("123", "23", "3", "", "1", "12", "124", "234", "4", "24"),
    ("23", "123", "13", "1", "", "2", "24", "1234", "14", "124"),
    ("3", "13", "123", "12", "2", "", "4", "134", "124", "14"),
    ("34", "134", "1234", "124", "24", "4", "", "13", "12", "1"),
    ("14", "4", "24", "234", "1234", "134", "13", "", "23", "3"),
    ("1234", "234", "34", "4", "14", "124", "12", "23", "", "2"),
    ("134", "34", "234", "24", "124", "14", "1", "3", "2", ""),
)

# the 13-vertex forbidden minor: 4-cube minus antipodal pair minus one neighbor
MINUS_MINUS_4_1_MATRIX = (
    ("", "1", "12", "123", "23", "3", "34", "4", "14", "124", "1234", "234", "134"),
    ("1", "", "2", "23", "123", "13", "134", "14", "4", "24", "234", "1234", "34"),
    ("12", "2", "", "3", "13", "123", "1234", "124", "24", "4", "34", "134", "234"),
    ("123", "23", "3", "", "1", "12", "124", "1234", "234", "34", "4", "14", "24"),
    ("23", "123", "13", "1", "", "2", "24", "234", "1234", "134", "14", "4", "124"),
    ("3", "13", "123", "12", "2", "", "4", "34", "134", "1234", "124", "24", "14"),
    ("34", "134", "1234", "124", "24", "4", "", "3", "13", "123", "12", "2", "1"),
    ("4", "14", "124", "1234", "234", "34", "3", "", "1", "12", "123", "23", "13"),
    ("14", "4", "24", "234", "1234", "134", "13", "1", "", "2", "23", "123", "3"),
    ("124", "24", "4", "34", "134", "1234", "123", "12", "2", "", "3", "13", "23"),
    ("1234", "234", "34", "4", "14", "124", "12", "123", "23", "3", "", "1", "2"),
    ("234", "1234", "134", "14", "4", "24", "2", "23", "123", "13", "1", "", "12"),
    ("134", "34", "234", "24", "124", "14", "1", "13", "3", "23", "2", "12", ""),
)


# Under the naming of MINUS_MINUS_4_1_MATRIX the determinant factors with
# exponent 6 on x4 and the triple factor on x1*x2*x3; the bundled reference
# case states the same determinant under a permuted variable naming.
MINUS_MINUS_4_1_MATRIX_FACTORS = (
    ((0,), 5), ((1,), 5), ((2,), 5), ((3,), 6), ((0, 1, 2), 1),
)


def cell_classes(cell: str) -> frozenset[int]:
    """0-based variable indices of one transcribed entry."""
    return frozenset(int(ch) - 1 for ch in cell)


def is_xor_consistent(rows) -> bool:
    """Entries must be symmetric differences of the first-row patterns."""
    first = [cell_classes(cell) for cell in rows[0]]
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            if cell_classes(cell) != first[i] ^ first[j]:
                return False
    return True


def to_poly_matrix(rows, ring: PolyRing) -> list[list[Poly]]:
    out = []
    for row in rows:
        prow = []
        for cell in row:
            exps = [0] * ring.nvars
            for c in cell_classes(cell):
                exps[c] = 1
            prow.append(ring.monomial(exps))
        out.append(prow)
    return out


def find_presentation(s: PartialCubeStructure, rows) -> VarchenkoMatrix | None:
    """Vertex order and class naming under which the structure's matrix equals
    the transcription, or None.

    Row patterns relative to the first row determine the assignment: the
    search tries each vertex as row 0 and each of the k! class namings.
    """
    n = s.graph.n_vertices
    k = s.num_classes
    if len(rows) != n:
        return None
    first = [cell_classes(cell) for cell in rows[0]]
    if len(set(first)) != n:
        return None
    for w in range(n):
        for perm in itertools.permutations(range(k)):
            pattern_to_vertex = {}
            for v in range(n):
                pattern = frozenset(perm[c] for c in separator(s, w, v))
                pattern_to_vertex[pattern] = v
            if len(pattern_to_vertex) != n:
                continue
            if set(pattern_to_vertex) != set(first):
                continue
            vertex_order = [pattern_to_vertex[p] for p in first]
            candidate = build_matrix(s, vertex_order=vertex_order, class_names=perm)
            ref = to_poly_matrix(rows, candidate.ring)
            if all(candidate.entries[i][j] == ref[i][j]
                   for i in range(n) for j in range(n)):
                return candidate
    return None
