import itertools

import pytest

from pcubes.graph_core import (Graph, forbidden_minor, hypercube, is_isomorphic,
                               make_graph)
from pcubes.partial_cube import (PartialCubeStructure, build_structure,
                                 require_structure)
from pcubes.pc_minor import (MinorOp, apply_op, contract, contract_with_map,
                             is_com_tope_graph, pc_minors, restrict,
                             restrict_with_map)

from conftest import cycle_graph, nine_tope_graph

K1 = make_graph(1, [])
K2 = make_graph(2, [(0, 1)])


def test_restrict_examples():
    s = require_structure(cycle_graph(4))
    assert is_isomorphic(restrict(s, 0, "+"), K2)
    assert is_isomorphic(restrict(s, 1, "-"), K2)
    s2 = require_structure(K2)
    assert restrict(s2, 0, "-") == K1


def test_contract_examples():
    s = require_structure(cycle_graph(4))
    assert is_isomorphic(contract(s, 0), K2)
    assert is_isomorphic(contract(s, 1), K2)
    assert contract(require_structure(K2), 0) == K1
    for n in (1, 2, 3, 4):
        s = require_structure(hypercube(n))
        for c in range(n):
            assert is_isomorphic(contract(s, c), hypercube(n - 1))


def test_minor_ops_validate_arguments():
    s = require_structure(K2)
    with pytest.raises(ValueError):
        restrict(s, 1, "+")
    with pytest.raises(ValueError):
        restrict(s, 0, "x")
    with pytest.raises(ValueError):
        contract(s, 5)


def test_minors_are_partial_cubes(corpus_small):
    for g in corpus_small:
        s = require_structure(g)
        for c in range(s.num_classes):
            for child in (restrict(s, c, "+"), restrict(s, c, "-"), contract(s, c)):
                assert isinstance(build_structure(child), PartialCubeStructure)


def test_class_count_drop_under_ops():
    for g in [hypercube(3), cycle_graph(6), forbidden_minor("minus_minus", 4, 2)]:
        s = require_structure(g)
        for c in range(s.num_classes):
            contracted = require_structure(contract(s, c))
            assert contracted.num_classes <= s.num_classes - 1
            for side, kept in zip("-+", s.halfspaces[c]):
                removed = [d for d, cls in enumerate(s.classes)
                           if all(u not in kept or v not in kept for u, v in cls)]
                restricted = require_structure(restrict(s, c, side))
                assert restricted.num_classes == s.num_classes - len(removed)


def test_pc_minors_small_closures():
    closure_k2 = pc_minors(require_structure(K2))
    assert len(closure_k2) == 2
    assert any(is_isomorphic(g, K2) for g in closure_k2)
    assert any(is_isomorphic(g, K1) for g in closure_k2)

    closure_c4 = pc_minors(require_structure(cycle_graph(4)))
    assert len(closure_c4) == 3
    for target in (cycle_graph(4), K2, K1):
        assert any(is_isomorphic(g, target) for g in closure_c4)

    closure_q3 = pc_minors(require_structure(hypercube(3)))
    assert any(is_isomorphic(g, hypercube(2)) for g in closure_q3)
    # the cube's pc-minors are exactly the lower cubes
    assert sorted(g.n_vertices for g in closure_q3) == [1, 2, 4, 8]


def _lift_class(original: PartialCubeStructure, minor: PartialCubeStructure,
                to_old_vertex, original_class: int) -> int | None:
    """Class of the minor that descends from the given class of the original."""
    cls = set(original.classes[original_class])
    for c, edges in enumerate(minor.classes):
        a, b = edges[0]
        u, v = to_old_vertex(a), to_old_vertex(b)
        key = (u, v) if u < v else (v, u)
        if key in cls:
            return c
    return None


def test_restrict_and_contract_commute_on_q3():
    s = require_structure(hypercube(3))
    for c, d in itertools.permutations(range(3), 2):
        for side in "+-":
            # restrict at c then contract the class descending from d
            rg, old_ids = restrict_with_map(s, c, side)
            rs = require_structure(rg)
            d_in_r = _lift_class(s, rs, lambda a: old_ids[a], d)
            assert d_in_r is not None
            one_way = contract(rs, d_in_r)

            # contract at d then restrict at the class descending from c
            cg, vmap = contract_with_map(s, d)
            cs = require_structure(cg)
            back = {new: old for old, new in enumerate(vmap)}
            c_in_c = _lift_class(s, cs, lambda a: back[a], c)
            assert c_in_c is not None
            # the halfspace side may flip under renaming; accept either
            other = [restrict(cs, c_in_c, "+"), restrict(cs, c_in_c, "-")]
            assert any(is_isomorphic(one_way, g) for g in other)


def test_is_com_tope_graph_examples():
    verdict = is_com_tope_graph(require_structure(forbidden_minor("minus_minus", 4, 4)))
    assert not verdict.is_com_tope_graph
    assert verdict.witness_ops == ()  # the graph itself
    assert verdict.matched == ("minus_minus", 4, 4)
    assert is_isomorphic(verdict.witness, forbidden_minor("minus_minus", 4, 4))

    assert is_com_tope_graph(require_structure(cycle_graph(4))).is_com_tope_graph
    assert is_com_tope_graph(require_structure(hypercube(4))).is_com_tope_graph


def test_nine_tope_graph_is_com_and_minor_closed():
    s = require_structure(nine_tope_graph())
    assert is_com_tope_graph(s).is_com_tope_graph
    for g in pc_minors(s):
        assert is_com_tope_graph(require_structure(g)).is_com_tope_graph


def test_apply_op_dispatch():
    s = require_structure(cycle_graph(4))
    assert is_isomorphic(apply_op(s, MinorOp("restrict_plus", 0)), K2)
    assert is_isomorphic(apply_op(s, MinorOp("contract", 1)), K2)
    with pytest.raises(ValueError):
        apply_op(s, MinorOp("fold", 0))
