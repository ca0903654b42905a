"""Djokovic-Winkler color classes, halfspaces, labelings, and recognition."""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Edge, Graph, bipartition, distances, is_connected

NOT_CONNECTED = "not_connected"
NOT_BIPARTITE = "not_bipartite"
THETA_NOT_EQUIVALENCE = "theta_not_equivalence"
ISOMETRY_VIOLATED = "isometry_violated"


@dataclass(frozen=True)
class RecognitionFailure:
    """Why a graph is not a partial cube: the first violated condition."""

    reason: str
    detail: str
    pair: tuple[int, int] | None = None


@dataclass(frozen=True)
class PartialCubeStructure:
    """A partial cube with its color classes, halfspaces, and bit labels.

    ``labels[v]`` is a bitmask; bit c is 1 exactly when v lies in the plus
    halfspace of class c.  The minus halfspace of every class contains
    vertex 0, which fixes the sign convention.
    """

    graph: Graph
    classes: tuple[tuple[Edge, ...], ...]
    halfspaces: tuple[tuple[frozenset[int], frozenset[int]], ...]
    labels: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def class_of_edge(self, edge: Edge) -> int:
        u, v = edge
        key = (u, v) if u < v else (v, u)
        for c, cls in enumerate(self.classes):
            if key in cls:
                return c
        raise ValueError(f"edge {edge} not in graph")


def _theta_related(dist, e: Edge, f: Edge) -> bool:
    # Def: e=(u,v) theta f=(x,y) when one endpoint of f is closer to u than to
    # v and the other is closer to v than to u; checked for both orientations.
    u, v = e
    x, y = f
    du, dv = dist[u], dist[v]
    return (du[x] < dv[x] and dv[y] < du[y]) or (du[y] < dv[y] and dv[x] < du[x])


def _theta_classes(g: Graph, dist) -> tuple[list[list[Edge]], tuple[Edge, Edge, Edge] | None]:
    """Transitive closure classes of theta plus a transitivity witness if any.

    The witness is a triple (e, f, g) with e theta f, f theta g but not
    e theta g, proving theta is not an equivalence relation.
    """
    edges = list(g.edges)
    m = len(edges)
    parent = list(range(m))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    related = [[False] * m for _ in range(m)]
    for i in range(m):
        related[i][i] = True
        for j in range(i + 1, m):
            if _theta_related(dist, edges[i], edges[j]):
                related[i][j] = related[j][i] = True
                ra, rb = find(i), find(j)
                if ra != rb:
                    parent[rb] = ra

    groups: dict[int, list[int]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    ordered = sorted(groups.values(), key=lambda idxs: edges[idxs[0]])

    for idxs in ordered:
        for a_pos, i in enumerate(idxs):
            for j in idxs[a_pos + 1:]:
                if not related[i][j]:
                    path = _relation_path(related, idxs, i, j)
                    s = next(t for t in range(1, len(path)) if not related[i][path[t]])
                    return [], (edges[i], edges[path[s - 1]], edges[path[s]])
    return [[edges[i] for i in idxs] for idxs in ordered], None


def _relation_path(related, idxs, i, j):
    prev: dict[int, int | None] = {i: None}
    queue = [i]
    while queue:
        a = queue.pop(0)
        if a == j:
            break
        for b in idxs:
            if related[a][b] and b not in prev:
                prev[b] = a
                queue.append(b)
    path = []
    cur: int | None = j
    while cur is not None:
        path.append(cur)
        cur = prev[cur]
    return path[::-1]


def dw_classes(g: Graph) -> list[list[Edge]]:
    """Partition of the edges into Djokovic-Winkler color classes.

    Requires a connected bipartite graph on which the relation is transitive
    (always true for partial cubes); raises ValueError otherwise.
    """
    if not is_connected(g):
        raise ValueError("graph is not connected")
    if bipartition(g) is None:
        raise ValueError("graph is not bipartite")
    classes, witness = _theta_classes(g, distances(g))
    if witness is not None:
        raise ValueError(f"relation is not transitive: witness edges {witness}")
    return classes


def build_structure(g: Graph) -> PartialCubeStructure | RecognitionFailure:
    """Recognize a partial cube, returning its structure or a structured failure.

    Recognition verifies the definition itself: colors from the edge relation,
    halfspace labels, and the full pairwise check that graph distance equals
    Hamming distance of the labels.
    """
    if not is_connected(g):
        detail = "empty graph" if g.n_vertices == 0 else "graph is not connected"
        return RecognitionFailure(NOT_CONNECTED, detail)
    if bipartition(g) is None:
        return RecognitionFailure(NOT_BIPARTITE, "graph contains an odd cycle")

    dist = distances(g)
    classes, witness = _theta_classes(g, dist)
    if witness is not None:
        return RecognitionFailure(
            THETA_NOT_EQUIVALENCE,
            f"edge relation not transitive: {witness[0]} ~ {witness[1]} ~ {witness[2]}",
        )

    n = g.n_vertices
    labels = [0] * n
    halfspaces = []
    for c, cls in enumerate(classes):
        u, v = cls[0]
        side_u = frozenset(w for w in range(n) if dist[w][u] < dist[w][v])
        side_v = frozenset(w for w in range(n) if dist[w][v] < dist[w][u])
        minus, plus = (side_u, side_v) if 0 in side_u else (side_v, side_u)
        # bipartite parity makes the two sides a partition of the vertex set
        assert len(minus) + len(plus) == n
        halfspaces.append((minus, plus))
        for w in plus:
            labels[w] |= 1 << c

    for u in range(n):
        lu = labels[u]
        du = dist[u]
        for v in range(u + 1, n):
            if du[v] != (lu ^ labels[v]).bit_count():
                return RecognitionFailure(
                    ISOMETRY_VIOLATED,
                    f"distance {du[v]} but labels differ in "
                    f"{(lu ^ labels[v]).bit_count()} classes at pair ({u},{v})",
                    pair=(u, v),
                )

    return PartialCubeStructure(
        graph=g,
        classes=tuple(tuple(cls) for cls in classes),
        halfspaces=tuple(halfspaces),
        labels=tuple(labels),
    )


def require_structure(g: Graph) -> PartialCubeStructure:
    """build_structure that raises on failure; for callers that need success."""
    result = build_structure(g)
    if isinstance(result, RecognitionFailure):
        raise ValueError(f"not a partial cube ({result.reason}): {result.detail}")
    return result


def separator(s: PartialCubeStructure, u: int, v: int) -> frozenset[int]:
    """Color classes crossed by every shortest path between u and v."""
    n = s.graph.n_vertices
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError("vertex out of range")
    diff = s.labels[u] ^ s.labels[v]
    return frozenset(c for c in range(s.num_classes) if diff >> c & 1)
