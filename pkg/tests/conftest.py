import itertools

import pytest

from pcubes.graph_core import Graph, hypercube, is_isomorphic, make_graph, path_graph
from pcubes.oriented_complex import covector_set, sign_vector, tope_graph
from pcubes.partial_cube import require_structure
from pcubes.pc_minor import restrict
from pcubes.reference import NINE_TOPE_COVECTORS


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _prufer_to_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        for leaf in range(n):
            if degree[leaf] == 1:
                edges.append((leaf, v))
                degree[leaf] -= 1
                degree[v] -= 1
                break
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return edges


def all_trees(n: int) -> list[Graph]:
    """Non-isomorphic trees on n vertices, via Prufer sequences."""
    if n == 1:
        return [make_graph(1, [])]
    if n == 2:
        return [make_graph(2, [(0, 1)])]
    reps: list[Graph] = []
    for seq in itertools.product(range(n), repeat=n - 2):
        g = make_graph(n, _prufer_to_edges(seq, n))
        if not any(is_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps


def full_sign_set(n: int):
    return covector_set(itertools.product((-1, 0, 1), repeat=n))


def nine_tope_covectors():
    return covector_set([sign_vector(s) for s in NINE_TOPE_COVECTORS])


def nine_tope_graph() -> Graph:
    return tope_graph(nine_tope_covectors())


def _dedupe(graphs):
    reps = []
    for g in graphs:
        if not any(is_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps


def _corpus_small():
    """Partial cubes with at most 7 vertices: paths, trees, cycles, cube pieces."""
    q3 = require_structure(hypercube(3))
    graphs = [path_graph(n) for n in range(2, 8)]
    graphs += [t for n in (4, 5, 6) for t in all_trees(n)]
    graphs += [cycle_graph(4), cycle_graph(6), hypercube(2)]
    graphs += [restrict(q3, c, side) for c in range(3) for side in "+-"]
    return _dedupe(graphs)


@pytest.fixture(scope="session")
def corpus_small():
    return _corpus_small()


@pytest.fixture(scope="session")
def corpus_all(corpus_small):
    return corpus_small + [hypercube(3), nine_tope_graph()]
