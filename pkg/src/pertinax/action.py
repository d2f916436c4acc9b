"""Finite groups of degree-preserving linear automorphisms.

A LinearAuto is given by a matrix on the degree one generators (column j
holds the coordinates of the image of the j-th generator); it extends
multiplicatively to the whole algebra.  Construction verifies exactly that
the matrix is invertible and maps every defining relation to zero, which
for graded presentations is a complete automorphism check.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernel
from .errors import (
    ConductorTooSmall,
    NotAnAutomorphism,
    NotFiniteWithinBound,
    TrivialGroupRejected,
)
from .freealgebra import FreePoly, Word
from .galgebra import AlgElement, GradedAlgebra

DEFAULT_MAX_ORDER = 64


class LinearAuto:
    """A graded algebra automorphism acting linearly on the generators."""

    __slots__ = ("algebra", "matrix", "_images", "_word_cache")

    def __init__(self, algebra: GradedAlgebra, matrix, verify: bool = True):
        field = algebra.field
        n = algebra.ngens
        rows = tuple(tuple(field.scalar(e) for e in row) for row in matrix)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("automorphism matrix must be %d x %d" % (n, n))
        self.algebra = algebra
        self.matrix = rows
        degs = algebra.alphabet.degrees
        for i in range(n):
            for j in range(n):
                if rows[i][j] and degs[i] != degs[j]:
                    raise NotAnAutomorphism(
                        "matrix mixes generators of different degrees"
                    )
        self._images = tuple(
            AlgElement(
                algebra,
                FreePoly(
                    algebra.alphabet,
                    field,
                    {(i,): rows[i][j] for i in range(n) if rows[i][j]},
                ),
            )
            for j in range(n)
        )
        self._word_cache = {(): {(): field.one}}
        if verify:
            self._verify()

    def _verify(self):
        if self._rank() != self.algebra.ngens:
            raise NotAnAutomorphism("matrix is singular")
        for r in self.algebra.relations:
            if not self.apply_poly(r).is_zero():
                raise NotAnAutomorphism(
                    "relation %s is not preserved by the matrix" % r
                )

    def _rank(self) -> int:
        field = self.algebra.field
        rows = []
        for row in self.matrix:
            rows.append({j: c.raw for j, c in enumerate(row) if c})
        return len(kernel.rref(rows, field.red, field.minpoly))

    # -- the action ---------------------------------------------------------

    def _act_word(self, word: Word) -> dict:
        """Image of a word in normal form, as a term dict over normal words."""
        cached = self._word_cache.get(word)
        if cached is not None:
            return cached
        head = self._act_word(word[:-1])
        image = self._images[word[-1]].poly.terms
        algebra = self.algebra
        out: dict = {}
        for v, cv in head.items():
            for (gen_index,), cg in image.items():
                c = cv * cg
                for t, ct in algebra.product_word_vec(v, (gen_index,)).items():
                    cur = out.get(t)
                    s = c * ct if cur is None else cur + c * ct
                    if s:
                        out[t] = s
                    elif cur is not None:
                        del out[t]
        self._word_cache[word] = out
        return out

    def apply_poly(self, poly: FreePoly) -> AlgElement:
        out: dict = {}
        for w, c in poly.terms.items():
            for t, ct in self._act_word(w).items():
                cur = out.get(t)
                s = c * ct if cur is None else cur + c * ct
                if s:
                    out[t] = s
                elif cur is not None:
                    del out[t]
        return AlgElement(self.algebra, FreePoly(self.algebra.alphabet, self.algebra.field, out))

    def apply(self, elem: AlgElement) -> AlgElement:
        if elem.algebra is not self.algebra:
            raise ValueError("element of a different algebra")
        return self.apply_poly(elem.poly)

    def matrix_on_degree(self, d: int):
        """Columns of the action on the degree d monomial basis (sparse raws)."""
        cache = self.algebra._act_cache.setdefault(("act", self.matrix), {})
        if d in cache:
            return cache[d]
        words = self.algebra.basis_words(d)
        index = self.algebra.basis.index[d]
        cols = []
        for w in words:
            vec = self._act_word(w)
            cols.append({index[t]: c.raw for t, c in vec.items()})
        cache[d] = cols
        return cols

    def is_identity(self) -> bool:
        field = self.algebra.field
        n = self.algebra.ngens
        return all(
            self.matrix[i][j] == (field.one if i == j else field.zero)
            for i in range(n)
            for j in range(n)
        )

    def __mul__(self, other: "LinearAuto") -> "LinearAuto":
        """Composition: (self * other)(x) = self(other(x))."""
        if other.algebra is not self.algebra:
            raise ValueError("automorphisms of different algebras")
        n = self.algebra.ngens
        zero = self.algebra.field.zero
        prod = [
            [
                sum((self.matrix[i][k] * other.matrix[k][j] for k in range(n)), zero)
                for j in range(n)
            ]
            for i in range(n)
        ]
        return LinearAuto(self.algebra, prod, verify=False)

    def __eq__(self, other):
        if not isinstance(other, LinearAuto):
            return NotImplemented
        return self.algebra is other.algebra and self.matrix == other.matrix

    def __hash__(self):
        return hash((id(self.algebra), self.matrix))

    def __repr__(self):
        return "LinearAuto(%s)" % (
            "; ".join(",".join(str(e) for e in row) for row in self.matrix),
        )


def identity_auto(algebra: GradedAlgebra) -> LinearAuto:
    field = algebra.field
    n = algebra.ngens
    eye = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    return LinearAuto(algebra, eye, verify=False)


class FiniteGroup:
    """A finite group of verified automorphisms, identity first.

    Element ordering is the breadth-first closure order from the identity,
    so it is deterministic for a fixed generator list.
    """

    __slots__ = ("algebra", "elements", "table", "inverse", "_index")

    def __init__(self, algebra, elements, table, inverse):
        self.algebra = algebra
        self.elements = tuple(elements)
        self.table = table
        self.inverse = inverse
        self._index = {g.matrix: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def index_of(self, g: LinearAuto) -> int:
        return self._index[g.matrix]

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != 0:
            cur = self.table[cur][i]
            k += 1
        return k

    def is_cyclic(self):
        """An index generating the whole group, or None."""
        for i in range(self.order):
            if self.element_order(i) == self.order:
                return i
        return None

    def on_algebra(self, other: GradedAlgebra) -> "FiniteGroup":
        """The same abstract group acting on another algebra over the alphabet.

        Used for induced actions on quotients: matrices, ordering and the
        multiplication table carry over; each matrix is re-verified against
        the new relations.
        """
        if other.alphabet != self.algebra.alphabet or other.field != self.algebra.field:
            raise ValueError("group does not match the target presentation")
        elems = [LinearAuto(other, g.matrix, verify=True) for g in self.elements]
        return FiniteGroup(other, elems, self.table, self.inverse)

    def __repr__(self):
        return "FiniteGroup(order=%d)" % self.order


def group_generate(gens, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Close verified generator automorphisms into a finite group."""
    if not gens:
        raise ValueError("need at least one generating automorphism")
    algebra = gens[0].algebra
    for g in gens:
        if g.algebra is not algebra:
            raise ValueError("generators act on different algebras")
    identity = identity_auto(algebra)
    elements = [identity]
    seen = {identity.matrix: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b.matrix not in seen:
                    if len(elements) >= max_order:
                        raise NotFiniteWithinBound(
                            "group closure exceeds max_order=%d" % max_order
                        )
                    seen[b.matrix] = len(elements)
                    elements.append(b)
                    nxt.append(b)
        frontier = nxt
    if len(elements) == 1:
        raise TrivialGroupRejected("generators produce only the identity")
    k = len(elements)
    table = []
    for a in elements:
        row = []
        for b in elements:
            row.append(seen[(a * b).matrix])
        table.append(tuple(row))
    table = tuple(table)
    inverse = [0] * k
    for i in range(k):
        for j in range(k):
            if table[i][j] == 0:
                inverse[i] = j
                break
    group = FiniteGroup(algebra, elements, table, tuple(inverse))
    m = algebra.field.m
    for i in range(k):
        order = group.element_order(i)
        if m % order != 0:
            raise ConductorTooSmall(
                "group element of order %d needs the conductor (%d) to be a multiple"
                % (order, m)
            )
    return group


def act(g: LinearAuto, f: AlgElement) -> AlgElement:
    return g.apply(f)


def reynolds(G: FiniteGroup, f: AlgElement) -> AlgElement:
    """Average of the orbit of f; a projection onto the invariants."""
    total = G.elements[0].apply(f)
    for g in G.elements[1:]:
        total = total + g.apply(f)
    return total * Fraction(1, G.order)
