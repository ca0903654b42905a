"""Sparse multivariate polynomials with exact integer coefficients.

Monomials are packed into single ints: one 16-bit field per variable plus a
leading total-degree field.  Packed values then compare exactly as graded-lex
(x1 > x2 > ...) and a monomial product is a plain integer addition, which
keeps the inner loops of multiplication and division cheap.  Exponents must
stay below 2**15 so that the top bit of every field acts as a borrow guard
for divisibility tests; the pipeline never gets anywhere near that.
"""

from __future__ import annotations

import heapq
import re
from math import gcd
from typing import Iterable, Iterator, Sequence

_FIELD_BITS = 16
_FIELD_MASK = (1 << _FIELD_BITS) - 1
_EXP_LIMIT = 1 << (_FIELD_BITS - 1)


class PolyRing:
    """Context for polynomials in a fixed number of variables x1..xk."""

    __slots__ = ("nvars", "_shifts", "_total_shift", "_guards")

    def __init__(self, nvars: int):
        if nvars < 0:
            raise ValueError("number of variables must be non-negative")
        self.nvars = nvars
        self._shifts = tuple(_FIELD_BITS * (nvars - 1 - i) for i in range(nvars))
        self._total_shift = _FIELD_BITS * nvars
        guards = 0
        for i in range(nvars + 1):
            guards |= 1 << (_FIELD_BITS * i + _FIELD_BITS - 1)
        self._guards = guards

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyRing) and other.nvars == self.nvars

    def __hash__(self) -> int:
        return hash(("PolyRing", self.nvars))

    def __repr__(self) -> str:
        return f"PolyRing({self.nvars})"

    def pack(self, exponents: Sequence[int]) -> int:
        if len(exponents) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        packed = 0
        total = 0
        for e, shift in zip(exponents, self._shifts):
            if e < 0 or e >= _EXP_LIMIT:
                raise ValueError(f"exponent {e} out of range")
            total += e
            packed |= e << shift
        return packed | (total << self._total_shift)

    def unpack(self, packed: int) -> tuple[int, ...]:
        return tuple((packed >> shift) & _FIELD_MASK for shift in self._shifts)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {0: 1})

    def constant(self, c: int) -> "Poly":
        return Poly(self, {0: c} if c else {})

    def variable(self, index: int) -> "Poly":
        if not 0 <= index < self.nvars:
            raise ValueError(f"variable index {index} out of range")
        exps = [0] * self.nvars
        exps[index] = 1
        return Poly(self, {self.pack(exps): 1})

    def monomial(self, exponents: Sequence[int], coeff: int = 1) -> "Poly":
        if coeff == 0:
            return self.zero()
        return Poly(self, {self.pack(exponents): coeff})

    def from_terms(self, terms: Iterable[tuple[Sequence[int], int]]) -> "Poly":
        out: dict[int, int] = {}
        for exps, coeff in terms:
            m = self.pack(exps)
            c = out.get(m, 0) + coeff
            if c:
                out[m] = c
            elif m in out:
                del out[m]
        return Poly(self, out)

    def parse(self, text: str) -> "Poly":
        """Parse the canonical string format back into a polynomial."""
        return _parse(self, text)


class Poly:
    """Immutable sparse polynomial over the integers.

    Supports +, -, *, ** and ==.  Construct through a PolyRing; the term map
    never stores zero coefficients, so equal polynomials compare equal.
    """

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: PolyRing, terms: dict[int, int]):
        self.ring = ring
        self._terms = terms

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Yield (exponent vector, coefficient) in graded-lex descending order."""
        unpack = self.ring.unpack
        for m in sorted(self._terms, reverse=True):
            yield unpack(m), self._terms[m]

    def degrees(self) -> tuple[int, ...]:
        """Per-variable degree; all zeros for the zero polynomial."""
        out = [0] * self.ring.nvars
        for m in self._terms:
            for i, e in enumerate(self.ring.unpack(m)):
                if e > out[i]:
                    out[i] = e
        return tuple(out)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.ring.nvars != self.ring.nvars:
            raise ValueError("polynomials live in rings with different variable counts")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring.nvars == other.ring.nvars and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self._terms.items()})

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            elif m in out:
                del out[m]
        return Poly(self.ring, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            nc = out.get(m, 0) - c
            if nc:
                out[m] = nc
            elif m in out:
                del out[m]
        return Poly(self.ring, out)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly(self.ring, {})
        if len(a) == 1:
            (ma, ca), = a.items()
            return Poly(self.ring, {ma + mb: ca * cb for mb, cb in b.items()})
        if len(b) == 1:
            (mb, cb), = b.items()
            return Poly(self.ring, {ma + mb: ca * cb for ma, ca in a.items()})
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = ma + mb
                c = get(m, 0) + ca * cb
                if c:
                    out[m] = c
                elif m in out:
                    del out[m]
        return Poly(self.ring, out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __str__(self) -> str:
        return to_canonical_string(self)

    def __repr__(self) -> str:
        return f"Poly({to_canonical_string(self)})"


# -- module-level operations ------------------------------------------------


def exact_div(f: Poly, g: Poly) -> Poly | None:
    """Exact quotient f/g, or None when g does not divide f over the integers.

    Leading-term elimination under the packed graded-lex order; the working
    remainder is tracked with a lazy max-heap so large quotients stay cheap.
    """
    f._check(g)
    if not g._terms:
        raise ZeroDivisionError("polynomial division by zero")
    if not f._terms:
        return f.ring.zero()
    q = _exact_div_terms(f._terms, g._terms, f.ring._guards)
    if q is None:
        return None
    return Poly(f.ring, q)


def _exact_div_terms(fterms: dict[int, int], gterms: dict[int, int],
                     guards: int) -> dict[int, int] | None:
    gt = max(gterms)
    gc = gterms[gt]
    grest = [(m, c) for m, c in gterms.items() if m != gt]
    rem = dict(fterms)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    q: dict[int, int] = {}
    while heap:
        m = -heapq.heappop(heap)
        c = rem.pop(m, 0)
        if not c:
            continue  # stale heap entry
        dm = m - gt
        if dm < 0 or (dm & guards) or c % gc:
            return None
        qc = c // gc
        q[dm] = qc
        for gm, gcoef in grest:
            nm = dm + gm
            nc = rem.get(nm, 0) - qc * gcoef
            if nc:
                rem[nm] = nc
                heapq.heappush(heap, -nm)
            else:
                rem.pop(nm, None)
    return q


def substitute(f: Poly, var: int, value: int) -> Poly:
    """Evaluate one variable at an integer; the result stays in the same ring."""
    ring = f.ring
    if not 0 <= var < ring.nvars:
        raise ValueError(f"variable index {var} out of range")
    shift = ring._shifts[var]
    tshift = ring._total_shift
    out: dict[int, int] = {}
    for m, c in f._terms.items():
        e = (m >> shift) & _FIELD_MASK
        if e:
            if value == 0:
                continue
            c = c * value ** e
            m = m - (e << shift) - (e << tshift)
        nc = out.get(m, 0) + c
        if nc:
            out[m] = nc
        elif m in out:
            del out[m]
    return Poly(ring, out)


def evaluate(f: Poly, values: Sequence[int]) -> int:
    """Full evaluation at an integer point."""
    if len(values) != f.ring.nvars:
        raise ValueError("wrong number of values")
    total = 0
    for exps, c in f.terms():
        term = c
        for v, e in zip(values, exps):
            if e:
                term *= v ** e
        total += term
    return total


def integer_content(f: Poly) -> int:
    """Positive gcd of all coefficients; 0 for the zero polynomial."""
    g = 0
    for c in f._terms.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def leading_coefficient(f: Poly) -> int:
    if not f._terms:
        return 0
    return f._terms[max(f._terms)]


def monomial_content(f: Poly) -> tuple[int, ...]:
    """Per-variable minimum exponent over all terms; zeros for the zero poly."""
    ring = f.ring
    mins: list[int] | None = None
    for m in f._terms:
        exps = ring.unpack(m)
        if mins is None:
            mins = list(exps)
        else:
            for i, e in enumerate(exps):
                if e < mins[i]:
                    mins[i] = e
        if mins is not None and not any(mins):
            break
    return tuple(mins) if mins is not None else (0,) * ring.nvars


def divide_by_term(f: Poly, exponents: Sequence[int], coeff: int = 1) -> Poly:
    """Exact division by a single term; raises if any coefficient or exponent fails."""
    ring = f.ring
    shift = ring.pack(exponents)
    out: dict[int, int] = {}
    for m, c in f._terms.items():
        nm = m - shift
        if nm < 0 or (nm & ring._guards) or c % coeff:
            raise ValueError("not divisible by the given term")
        out[nm] = c // coeff
    return Poly(ring, out)


def multiply_by_term(f: Poly, exponents: Sequence[int], coeff: int = 1) -> Poly:
    ring = f.ring
    if coeff == 0:
        return ring.zero()
    shift = ring.pack(exponents)
    return Poly(ring, {m + shift: c * coeff for m, c in f._terms.items()})


def map_variables(f: Poly, target: PolyRing, mapping: Sequence[int]) -> Poly:
    """Rename variable i of f to variable mapping[i] of the target ring.

    The mapping must be injective on the variables actually used.
    """
    if len(mapping) != f.ring.nvars:
        raise ValueError("mapping length must equal the source variable count")
    out: dict[int, int] = {}
    nt = target.nvars
    for exps, c in f.terms():
        nexps = [0] * nt
        for i, e in enumerate(exps):
            if e:
                j = mapping[i]
                if not 0 <= j < nt:
                    raise ValueError(f"mapped index {j} out of range")
                if nexps[j]:
                    raise ValueError("variable mapping is not injective")
                nexps[j] = e
        m = target.pack(nexps)
        nc = out.get(m, 0) + c
        if nc:
            out[m] = nc
        elif m in out:
            del out[m]
    return Poly(target, out)


def permute_variables(f: Poly, perm: Sequence[int]) -> Poly:
    """Apply a permutation of the ring's variables (variable i becomes perm[i])."""
    if sorted(perm) != list(range(f.ring.nvars)):
        raise ValueError("not a permutation of the ring variables")
    return map_variables(f, f.ring, perm)


# -- canonical text form ----------------------------------------------------


def to_canonical_string(f: Poly) -> str:
    """Graded-lex descending form, e.g. ``x1^2*x2^2 - x1^2 - x2^2 + 1``."""
    if not f._terms:
        return "0"
    parts: list[str] = []
    first = True
    for exps, c in f.terms():
        mag = abs(c)
        factors = []
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e > 1:
                factors.append(f"x{i + 1}^{e}")
        if factors:
            body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
        else:
            body = str(mag)
        if first:
            parts.append(("-" if c < 0 else "") + body)
            first = False
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TOKEN_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")


def _parse(ring: PolyRing, text: str) -> Poly:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    terms: list[tuple[list[int], int]] = []
    i, n, sign = 0, len(s), 1
    while i < n:
        ch = s[i]
        if ch == "+":
            i += 1
            continue
        if ch == "-":
            sign = -sign
            i += 1
            continue
        j = i
        while j < n and s[j] not in "+-":
            j += 1
        chunk = s[i:j]
        coeff = sign
        exps = [0] * ring.nvars
        for part in chunk.split("*"):
            if not part:
                raise ValueError(f"cannot parse term: {chunk!r}")
            if part.isdigit():
                coeff *= int(part)
                continue
            m = _TOKEN_RE.match(part)
            if not m:
                raise ValueError(f"cannot parse factor: {part!r}")
            idx = int(m.group(1)) - 1
            if not 0 <= idx < ring.nvars:
                raise ValueError(f"variable x{idx + 1} outside this ring")
            exps[idx] += int(m.group(2) or 1)
        terms.append((exps, coeff))
        sign = 1
        i = j
    if not terms:
        raise ValueError(f"cannot parse polynomial: {text!r}")
    return ring.from_terms(terms)
