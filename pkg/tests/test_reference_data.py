"""Checks against transcribed published matrices and determinants."""

import pytest

from pcubes.graph_core import forbidden_minor
from pcubes.oriented_complex import (check_axioms, is_simple, separator_sv,
                                     sign_vector, tope_graph,
                                     tope_graph_class_elements, topes)
from pcubes.partial_cube import require_structure
from pcubes.polyring import PolyRing
from pcubes.reference import (NINE_TOPE_COVECTORS, NINE_TOPE_FACTORS,
                              NINE_TOPE_TOPES, REFERENCE_CASES,
                              match_up_to_variable_permutation, reference_case)
from pcubes.varchenko import (build_matrix, candidate_factor, determinant,
                              determinant_of_entries, factorize)

from conftest import nine_tope_covectors
from reference_matrices import (MINUS_MINUS_4_1_MATRIX,
                                MINUS_MINUS_4_1_MATRIX_FACTORS,
                                MINUS_MINUS_4_4_MATRIX, NINE_CELL_MATRIX,
                                cell_classes, find_presentation,
                                is_xor_consistent, to_poly_matrix)


@pytest.mark.parametrize("rows", [NINE_CELL_MATRIX, MINUS_MINUS_4_4_MATRIX,
                                  MINUS_MINUS_4_1_MATRIX])
def test_transcriptions_are_internally_consistent(rows):
    assert is_xor_consistent(rows)
    for i, row in enumerate(rows):
        assert row[i] == ""
        for j, cell in enumerate(row):
            assert cell == rows[j][i]


def test_nine_tope_set_matches_cell_matrix():
    # tope signs flip exactly across each row-0 separator pattern
    t = [sign_vector(s) for s in NINE_TOPE_TOPES]
    for j, cell in enumerate(NINE_CELL_MATRIX[0]):
        assert separator_sv(t[0], t[j]) == cell_classes(cell)
    for i in range(9):
        for j in range(9):
            assert separator_sv(t[i], t[j]) == cell_classes(NINE_CELL_MATRIX[i][j])


def test_nine_tope_covectors_form_simple_com():
    l = nine_tope_covectors()
    assert len(l.vectors) == 25
    assert check_axioms(l).ok
    assert is_simple(l)
    assert topes(l) == tuple(sign_vector(s) for s in NINE_TOPE_TOPES)


def test_nine_tope_graph_matrix_matches_transcription():
    l = nine_tope_covectors()
    s = require_structure(tope_graph(l))
    m = find_presentation(s, NINE_CELL_MATRIX)
    assert m is not None
    # the recovered class naming must agree with the ground-element bijection
    elements = tope_graph_class_elements(l, s)
    assert m.class_names == elements


def test_nine_tope_determinant_matches_published_value():
    l = nine_tope_covectors()
    s = require_structure(tope_graph(l))
    m = build_matrix(s, class_names=tope_graph_class_elements(l, s))
    det = determinant(m)
    expected = m.ring.one()
    for indices, b in NINE_TOPE_FACTORS:
        expected = expected * candidate_factor(m.ring, indices) ** b
    assert det == expected


def _product_of(ring, factor_specs):
    out = ring.one()
    for indices, b in factor_specs:
        out = out * candidate_factor(ring, indices) ** b
    return out


@pytest.mark.parametrize("name,rows,factor_specs", [
    ("minus_minus:4:4", MINUS_MINUS_4_4_MATRIX, None),
    ("minus_minus:4:1", MINUS_MINUS_4_1_MATRIX, MINUS_MINUS_4_1_MATRIX_FACTORS),
])
def test_generated_structures_match_transcribed_matrices(name, rows, factor_specs):
    case = reference_case(name)
    s = require_structure(case.graph())
    m = find_presentation(s, rows)
    assert m is not None
    det = determinant(m)
    if factor_specs is None:
        # symmetric in the variables, so the bundled form applies directly
        assert det == case.determinant_poly(m.ring)
    else:
        # the transcription names colors differently from the bundled case
        assert det == _product_of(m.ring, factor_specs)
        report = factorize(det, s.num_classes)
        assert match_up_to_variable_permutation(report, case, m.ring) is not None


@pytest.mark.parametrize("rows,factor_specs", [
    (NINE_CELL_MATRIX, NINE_TOPE_FACTORS),
    (MINUS_MINUS_4_4_MATRIX, None),
    (MINUS_MINUS_4_1_MATRIX, MINUS_MINUS_4_1_MATRIX_FACTORS),
])
def test_transcribed_matrix_determinants(rows, factor_specs):
    ring = PolyRing(4)
    det = determinant_of_entries(to_poly_matrix(rows, ring))
    if factor_specs is None:
        det_expected = reference_case("minus_minus:4:4").determinant_poly(ring)
        assert det == det_expected
    else:
        assert det == _product_of(ring, factor_specs)


@pytest.mark.parametrize("case", [c for c in REFERENCE_CASES if not c.extended],
                         ids=lambda c: c.name)
def test_four_class_reference_factorizations(case):
    s = require_structure(case.graph())
    m = build_matrix(s)
    report = factorize(determinant(m), s.num_classes)
    assert report.clean == case.clean
    assert match_up_to_variable_permutation(report, case, m.ring) is not None


def test_reference_case_lookup():
    assert reference_case("minus_star:4").n == 4
    with pytest.raises(KeyError):
        reference_case("nope")
    assert forbidden_minor("minus_star", 4) == reference_case("minus_star:4").graph()
