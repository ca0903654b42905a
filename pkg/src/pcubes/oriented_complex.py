"""Sign-vector systems: composition, COM axioms, simplicity, topes, tope graphs.

Sign vectors are tuples over {-1, 0, +1}; the text form uses the characters
``-``, ``0``, ``+``.  CovectorSet preserves the input order of its vectors,
which fixes iteration order for axiom witnesses and tope numbering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph_core import Graph, make_graph
from .partial_cube import PartialCubeStructure

SignVector = tuple[int, ...]

_CHAR_TO_SIGN = {"-": -1, "0": 0, "+": 1}
_SIGN_TO_CHAR = {-1: "-", 0: "0", 1: "+"}


@dataclass(frozen=True)
class CovectorSet:
    ground_size: int
    vectors: tuple[SignVector, ...]


def covector_set(vectors: Iterable[Sequence[int]]) -> CovectorSet:
    seen: dict[SignVector, None] = {}
    size: int | None = None
    for raw in vectors:
        vec = tuple(raw)
        if any(e not in (-1, 0, 1) for e in vec):
            raise ValueError(f"sign vector entries must be -1, 0 or 1: {vec}")
        if size is None:
            size = len(vec)
        elif len(vec) != size:
            raise ValueError("sign vectors have mismatched lengths")
        seen.setdefault(vec, None)
    if size is None:
        raise ValueError("empty covector collection")
    return CovectorSet(size, tuple(seen))


def sign_vector(text: str) -> SignVector:
    try:
        return tuple(_CHAR_TO_SIGN[ch] for ch in text.strip())
    except KeyError as exc:
        raise ValueError(f"bad sign character in {text!r}") from exc


def sign_vector_string(vec: SignVector) -> str:
    return "".join(_SIGN_TO_CHAR[e] for e in vec)


def parse_covectors(text: str) -> CovectorSet:
    vectors = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            vectors.append(sign_vector(line))
    return covector_set(vectors)


def compose(x: SignVector, y: SignVector) -> SignVector:
    if len(x) != len(y):
        raise ValueError("sign vectors have different lengths")
    return tuple(a if a else b for a, b in zip(x, y))


def negate(x: SignVector) -> SignVector:
    return tuple(-a for a in x)


def separator_sv(x: SignVector, y: SignVector) -> frozenset[int]:
    if len(x) != len(y):
        raise ValueError("sign vectors have different lengths")
    return frozenset(e for e, (a, b) in enumerate(zip(x, y)) if a and a == -b)


def support(x: SignVector) -> frozenset[int]:
    return frozenset(e for e, a in enumerate(x) if a)


def zero_set(x: SignVector) -> frozenset[int]:
    return frozenset(e for e, a in enumerate(x) if not a)


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of the COM axiom check; axiom/witness name the first violation."""

    ok: bool
    axiom: str | None = None  # "FS" or "SE"
    witness: tuple | None = None  # (X, Y) for FS, (X, Y, e) for SE


def check_axioms(l: CovectorSet) -> AxiomCheck:
    """Face symmetry and strong elimination over all ordered pairs, input order."""
    vecs = l.vectors
    members = set(vecs)
    for x in vecs:
        for y in vecs:
            if compose(x, negate(y)) not in members:
                return AxiomCheck(False, "FS", (x, y))
            sep = separator_sv(x, y)
            if not sep:
                continue
            xy = compose(x, y)
            outside = [f for f in range(l.ground_size) if f not in sep]
            for e in sorted(sep):
                if not any(z[e] == 0 and all(z[f] == xy[f] for f in outside)
                           for z in vecs):
                    return AxiomCheck(False, "SE", (x, y, e))
    return AxiomCheck(True)


def is_simple(l: CovectorSet) -> bool:
    """Every element attains all three signs, and so does every pairwise product."""
    full = {-1, 0, 1}
    for e in range(l.ground_size):
        if {x[e] for x in l.vectors} != full:
            return False
    for e, f in itertools.combinations(range(l.ground_size), 2):
        if {x[e] * x[f] for x in l.vectors} != full:
            return False
    return True


def topes(l: CovectorSet) -> tuple[SignVector, ...]:
    """Covectors of inclusion-maximal support, in input order."""
    supports = [support(x) for x in l.vectors]
    out = []
    for i, x in enumerate(l.vectors):
        if not any(supports[i] < supports[j] for j in range(len(l.vectors))):
            out.append(x)
    return tuple(out)


def tope_graph(l: CovectorSet) -> Graph:
    """Graph on the topes; edges join topes whose separator has size one."""
    t = topes(l)
    edges = [(i, j) for i, j in itertools.combinations(range(len(t)), 2)
             if len(separator_sv(t[i], t[j])) == 1]
    return make_graph(len(t), edges)


def tope_graph_class_elements(l: CovectorSet,
                              structure: PartialCubeStructure) -> tuple[int, ...]:
    """Ground element represented by each color class of the tope graph.

    The structure must come from ``tope_graph(l)`` with the tope order
    unchanged.  For a simple COM each class crosses exactly one ground
    element, the same for all its edges, and distinct classes cross
    distinct elements.
    """
    t = topes(l)
    elements: list[int] = []
    for cls in structure.classes:
        crossed: set[int] = set()
        for u, v in cls:
            sep = separator_sv(t[u], t[v])
            if len(sep) != 1:
                raise ValueError("tope-graph edge crosses more than one element")
            crossed.update(sep)
        if len(crossed) != 1:
            raise ValueError("color class crosses more than one ground element")
        elements.append(next(iter(crossed)))
    if len(set(elements)) != len(elements):
        raise ValueError("two color classes cross the same ground element")
    return tuple(elements)
