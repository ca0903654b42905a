"""Varchenko matrices of partial cubes, exact determinants, and factor analysis.

The determinant is computed by fraction-free Bareiss elimination, so every
intermediate division is exact over the integer polynomial ring.  Matrix
entries are carried in a partially factored form
``num * x^mono * prod_i (1 - x_i^2)^pows[i] * core``
because the bordered minors that appear during elimination are dominated by
such factors; multiplying factored entries is then cheap and only the small
cores are ever expanded against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .oriented_complex import (CovectorSet, check_axioms, is_simple, tope_graph,
                               tope_graph_class_elements, zero_set)
from .partial_cube import PartialCubeStructure, require_structure
from .polyring import (Poly, PolyRing, divide_by_term, exact_div, integer_content,
                       leading_coefficient, monomial_content, multiply_by_term)


class InternalDefectError(RuntimeError):
    """An exact division failed during elimination; mathematically impossible,
    so it signals an implementation bug rather than bad input."""


@dataclass(frozen=True)
class VarchenkoMatrix:
    """Symmetric matrix with entry(u,v) = product of x_c over the separator.

    Row/column i belongs to ``vertex_order[i]``; class c is written as the
    variable with index ``class_names[c]``.
    """

    structure: PartialCubeStructure
    ring: PolyRing
    entries: tuple[tuple[Poly, ...], ...]
    vertex_order: tuple[int, ...]
    class_names: tuple[int, ...]


def build_matrix(s: PartialCubeStructure,
                 vertex_order: Sequence[int] | None = None,
                 class_names: Sequence[int] | None = None) -> VarchenkoMatrix:
    n = s.graph.n_vertices
    k = s.num_classes
    vo = tuple(vertex_order) if vertex_order is not None else tuple(range(n))
    cn = tuple(class_names) if class_names is not None else tuple(range(k))
    if sorted(vo) != list(range(n)):
        raise ValueError("vertex_order must be a permutation of the vertices")
    if sorted(cn) != list(range(k)):
        raise ValueError("class_names must be a permutation of the classes")

    ring = PolyRing(k)
    rows = []
    for i in range(n):
        li = s.labels[vo[i]]
        row = []
        for j in range(n):
            diff = li ^ s.labels[vo[j]]
            exps = [0] * k
            for c in range(k):
                if diff >> c & 1:
                    exps[cn[c]] = 1
            row.append(ring.monomial(exps))
        rows.append(tuple(row))
    return VarchenkoMatrix(s, ring, tuple(rows), vo, cn)


# -- factored matrix entries for fraction-free elimination -------------------


@dataclass(frozen=True)
class _Entry:
    num: int                 # integer content with sign; 0 means the entry is zero
    mono: tuple[int, ...]    # monomial factor, one exponent per variable
    pows: tuple[int, ...]    # exponent of (1 - x_i^2) per variable
    core: Poly               # leftover cofactor, content-free, positive leading coeff


class _Ctx:
    """Per-run state: the (1 - x_i^2) family and a cache of its power products."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        k = ring.nvars
        self.zeros = (0,) * k
        self.fams = [candidate_factor(ring, [i]) for i in range(k)]
        self.zero_entry = _Entry(0, self.zeros, self.zeros, ring.zero())
        self.unit_entry = _Entry(1, self.zeros, self.zeros, ring.one())
        self._fam_cache: dict[tuple[int, ...], Poly] = {self.zeros: ring.one()}

    def fam_product(self, pows: tuple[int, ...]) -> Poly:
        cached = self._fam_cache.get(pows)
        if cached is not None:
            return cached
        # peel one factor off the largest exponent so partial products get reused
        i = max(range(len(pows)), key=lambda t: pows[t])
        smaller = list(pows)
        smaller[i] -= 1
        result = self.fam_product(tuple(smaller)) * self.fams[i]
        self._fam_cache[pows] = result
        return result

    def make(self, num: int, mono: Sequence[int], pows: Sequence[int],
             poly: Poly) -> _Entry:
        """Normalize: pull content, monomial and family factors out of poly."""
        if num == 0 or poly.is_zero():
            return self.zero_entry
        c = integer_content(poly)
        if leading_coefficient(poly) < 0:
            c = -c
        if c != 1:
            poly = divide_by_term(poly, self.zeros, c)
        mc = monomial_content(poly)
        if any(mc):
            poly = divide_by_term(poly, mc, 1)
        pw = list(pows)
        degs = poly.degrees()
        for i, fam in enumerate(self.fams):
            while degs[i] >= 2:
                q = exact_div(poly, fam)
                if q is None:
                    break
                poly = q
                pw[i] += 1
                degs = poly.degrees()
        return _Entry(num * c,
                      tuple(a + b for a, b in zip(mono, mc)),
                      tuple(pw), poly)

    def expand(self, e: _Entry) -> Poly:
        if e.num == 0:
            return self.ring.zero()
        p = self.fam_product(e.pows) * e.core
        if e.num != 1 or any(e.mono):
            p = multiply_by_term(p, e.mono, e.num)
        return p

    def estimate(self, e: _Entry) -> int:
        est = len(e.core)
        for p in e.pows:
            est *= p + 1
        return est


def _mul(ctx: _Ctx, a: _Entry, b: _Entry) -> _Entry:
    if a.num == 0 or b.num == 0:
        return ctx.zero_entry
    return _Entry(a.num * b.num,
                  tuple(x + y for x, y in zip(a.mono, b.mono)),
                  tuple(x + y for x, y in zip(a.pows, b.pows)),
                  a.core * b.core)


def _expand_side(ctx: _Ctx, e: _Entry, g: int, cm: tuple[int, ...],
                 cp: tuple[int, ...]) -> Poly:
    p = ctx.fam_product(tuple(x - y for x, y in zip(e.pows, cp))) * e.core
    num = e.num // g
    mono = tuple(x - y for x, y in zip(e.mono, cm))
    if num != 1 or any(mono):
        p = multiply_by_term(p, mono, num)
    return p


def _divide_parts(ctx: _Ctx, g: int, cm: tuple[int, ...], cp: tuple[int, ...],
                  r: Poly, prev: _Entry) -> _Entry:
    if r.is_zero():
        return ctx.zero_entry
    sign = 1
    pnum = prev.num
    if pnum < 0:
        sign = -1
        pnum = -pnum
    t = gcd(g, pnum)
    g //= t
    pnum //= t
    mono = tuple(x - min(x, y) for x, y in zip(cm, prev.mono))
    pm_left = tuple(y - min(x, y) for x, y in zip(cm, prev.mono))
    pows = tuple(x - min(x, y) for x, y in zip(cp, prev.pows))
    pp_left = tuple(y - min(x, y) for x, y in zip(cp, prev.pows))

    leftover = prev.core
    if any(pp_left):
        leftover = leftover * ctx.fam_product(pp_left)
    if pnum != 1 or any(pm_left):
        leftover = multiply_by_term(leftover, pm_left, pnum)
    if not leftover.is_one():
        divided = exact_div(r, leftover)
        if divided is None:
            raise InternalDefectError("fraction-free elimination hit an inexact division")
        r = divided
    return ctx.make(sign * g, mono, pows, r)


def _cross(ctx: _Ctx, a: _Entry, d: _Entry, b: _Entry, c: _Entry,
           prev: _Entry) -> _Entry:
    """One Bareiss update: (a*d - b*c) / prev, all divisions exact."""
    p = _mul(ctx, a, d)
    q = _mul(ctx, b, c)
    if p.num == 0 and q.num == 0:
        return ctx.zero_entry
    if q.num == 0:
        g = abs(p.num)
        r = _expand_side(ctx, p, g, p.mono, p.pows)
        return _divide_parts(ctx, g, p.mono, p.pows, r, prev)
    if p.num == 0:
        g = abs(q.num)
        r = -_expand_side(ctx, q, g, q.mono, q.pows)
        return _divide_parts(ctx, g, q.mono, q.pows, r, prev)
    g = gcd(abs(p.num), abs(q.num))
    cm = tuple(min(x, y) for x, y in zip(p.mono, q.mono))
    cp = tuple(min(x, y) for x, y in zip(p.pows, q.pows))
    r = _expand_side(ctx, p, g, cm, cp) - _expand_side(ctx, q, g, cm, cp)
    return _divide_parts(ctx, g, cm, cp, r, prev)


def determinant_of_entries(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Exact determinant of a square matrix of polynomials (Bareiss)."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    ring = rows[0][0].ring
    if any(len(row) != n for row in rows):
        raise ValueError("matrix is not square")
    ctx = _Ctx(ring)
    e = [[ctx.make(1, ctx.zeros, ctx.zeros, p) for p in row] for row in rows]
    sign = 1
    prev = ctx.unit_entry
    for k in range(n - 1):
        pivot_row = None
        best = None
        for i in range(k, n):
            cand = e[i][k]
            if cand.num:
                est = ctx.estimate(cand)
                if best is None or est < best:
                    best = est
                    pivot_row = i
        if pivot_row is None:
            return ring.zero()
        if pivot_row != k:
            e[k], e[pivot_row] = e[pivot_row], e[k]
            sign = -sign
        pk = e[k][k]
        for i in range(k + 1, n):
            bik = e[i][k]
            row_i = e[i]
            row_k = e[k]
            for j in range(k + 1, n):
                row_i[j] = _cross(ctx, pk, row_i[j], bik, row_k[j], prev)
            row_i[k] = ctx.zero_entry
        prev = pk
    det = ctx.expand(e[n - 1][n - 1])
    return -det if sign < 0 else det


def determinant(m: VarchenkoMatrix) -> Poly:
    """Exact determinant; independent of the matrix's vertex order.

    Rows and columns are conjugated into ascending label order first, which
    keeps the leading minors of near-hypercubes heavily factored and the
    elimination fast.  Conjugation by a permutation leaves the determinant
    of a symmetric matrix unchanged.
    """
    n = len(m.entries)
    labels = m.structure.labels
    order = sorted(range(n), key=lambda i: labels[m.vertex_order[i]])
    rows = [[m.entries[order[i]][order[j]] for j in range(n)] for i in range(n)]
    return determinant_of_entries(rows)


def cofactor_determinant_oracle(m: VarchenkoMatrix) -> Poly:
    """Independent determinant by Laplace expansion; limited to 8 vertices."""
    n = len(m.entries)
    if n > 8:
        raise ValueError("cofactor expansion is limited to matrices of size <= 8")
    ring = m.ring
    rows = m.entries
    memo: dict[int, Poly] = {}

    def expand(row: int, mask: int) -> Poly:
        if row == n:
            return ring.one()
        cached = memo.get(mask)
        if cached is not None:
            return cached
        total = ring.zero()
        sign = 1
        for j in range(n):
            if mask >> j & 1:
                entry = rows[row][j]
                if entry:
                    sub = expand(row + 1, mask & ~(1 << j))
                    term = entry * sub
                    total = total + term if sign > 0 else total - term
                sign = -sign
        memo[mask] = total
        return total

    return expand(0, (1 << n) - 1)


# -- factor extraction --------------------------------------------------------


def candidate_factor(ring: PolyRing, indices: Iterable[int]) -> Poly:
    """The polynomial 1 - (prod of x_i over indices)^2."""
    exps = [0] * ring.nvars
    for i in indices:
        exps[i] = 2
    return ring.one() - ring.monomial(exps)


@dataclass(frozen=True)
class FactorizationReport:
    """Extracted factors (variable index set, exponent), leftover, and verdict.

    ``det == residual * prod (1 - (prod x_i)^2)^b`` by construction; ``clean``
    means the residual is the constant 1.
    """

    factors: tuple[tuple[frozenset[int], int], ...]
    residual: Poly
    clean: bool

    def as_json_dict(self) -> dict:
        return {
            "factors": [
                {"classes": [i + 1 for i in sorted(s)], "exponent": b}
                for s, b in self.factors
            ],
            "residual": str(self.residual),
            "clean": self.clean,
        }


def factorize(det: Poly, k: int,
              candidates: Sequence[Iterable[int]] | None = None) -> FactorizationReport:
    """Divide out every candidate factor (1 - (prod x_i)^2) to maximal power.

    Candidates default to all non-empty subsets of the k variable indices.
    The result does not depend on candidate order: distinct index sets give
    pairwise coprime factors.
    """
    if det.is_zero():
        raise ValueError("cannot factorize the zero polynomial")
    if not 0 <= k <= det.ring.nvars:
        raise ValueError("class count out of range for this ring")
    if candidates is None:
        subsets = [s for size in range(1, k + 1)
                   for s in itertools.combinations(range(k), size)]
    else:
        subsets = [tuple(sorted(set(s))) for s in candidates]
        for s in subsets:
            if not s or any(not 0 <= i < k for i in s):
                raise ValueError(f"bad candidate index set {s}")
    residual = det
    factors = []
    for s in subsets:
        fac = candidate_factor(det.ring, s)
        b = 0
        while True:
            q = exact_div(residual, fac)
            if q is None:
                break
            residual = q
            b += 1
        if b:
            factors.append((frozenset(s), b))
    return FactorizationReport(tuple(factors), residual, residual.is_one())


@dataclass(frozen=True)
class ComFactorizationVerdict:
    """Whether the clean-factorization law for COMs holds on a covector set."""

    holds: bool
    report: FactorizationReport
    determinant: Poly
    class_elements: tuple[int, ...]
    unmatched: tuple[frozenset[int], ...]


def verify_com_factorization(l: CovectorSet) -> ComFactorizationVerdict:
    """Check that the tope-graph determinant factors cleanly and that every
    factor's index set is the zero set of some covector."""
    ax = check_axioms(l)
    if not ax.ok:
        raise ValueError(f"covector set violates {ax.axiom} at {ax.witness}")
    if not is_simple(l):
        raise ValueError("covector set is not simple")
    graph = tope_graph(l)
    structure = require_structure(graph)
    elements = tope_graph_class_elements(l, structure)
    det = determinant(build_matrix(structure))
    report = factorize(det, structure.num_classes)
    zsets = {zero_set(y) for y in l.vectors}
    unmatched = tuple(s for s, _ in report.factors
                      if frozenset(elements[c] for c in s) not in zsets)
    holds = report.clean and not unmatched
    return ComFactorizationVerdict(holds, report, det, elements, unmatched)
