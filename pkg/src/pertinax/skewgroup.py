"""The skew group algebra, graded ideal tables and the radical oracle.

The oracle realizes the identity between the radical of a group action and
the intersection of the base algebra with the two-sided ideal of the skew
group algebra generated by the averaging idempotent.  Degree by degree it
is a finite, exact linear problem: a sequence pair condition on monomial
pairs whose kernel, pushed through plain multiplication, spans the degree
component of the radical.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import kernel, linalg
from .action import FiniteGroup
from .errors import TruncationExceeded
from .galgebra import AlgElement, GradedAlgebra


class SkewElement:
    """An element sum r_g (x) g of the skew group algebra R * G."""

    __slots__ = ("algebra", "group", "components")

    def __init__(self, algebra: GradedAlgebra, group: FiniteGroup, components=None):
        self.algebra = algebra
        self.group = group
        comps = {}
        if components:
            for gi, r in components.items():
                if r:
                    comps[gi] = r
        self.components = comps

    @classmethod
    def from_r(cls, algebra, group, elem: AlgElement):
        return cls(algebra, group, {0: elem})

    @classmethod
    def from_group_element(cls, algebra, group, gi: int):
        return cls(algebra, group, {gi: algebra.one()})

    def is_zero(self):
        return not self.components

    def __add__(self, other: "SkewElement"):
        comps = dict(self.components)
        for gi, r in other.components.items():
            cur = comps.get(gi)
            s = r if cur is None else cur + r
            if s:
                comps[gi] = s
            elif cur is not None:
                del comps[gi]
        return SkewElement(self.algebra, self.group, comps)

    def __neg__(self):
        return SkewElement(
            self.algebra, self.group, {gi: -r for gi, r in self.components.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SkewElement(
                self.algebra, self.group, {gi: r * other for gi, r in self.components.items()}
            )
        if not isinstance(other, SkewElement):
            return NotImplemented
        return skew_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SkewElement):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.group is other.group
            and self.components == other.components
        )

    def degree(self):
        """Common degree of a homogeneous element, None if zero."""
        degs = {r.degree() for r in self.components.values()}
        if not degs:
            return None
        if len(degs) != 1:
            raise ValueError("inhomogeneous skew element")
        return degs.pop()

    def __str__(self):
        if not self.components:
            return "0"
        parts = []
        for gi in sorted(self.components):
            parts.append("(%s) # g%d" % (self.components[gi], gi))
        return " + ".join(parts)

    __repr__ = __str__


def skew_mul(u: SkewElement, v: SkewElement) -> SkewElement:
    """Bilinear extension of (r # g)(s # h) = r (g.s) # gh."""
    if u.algebra is not v.algebra or u.group is not v.group:
        raise ValueError("skew elements over different data")
    R, G = u.algebra, u.group
    for r in list(u.components.values()) + list(v.components.values()):
        d = r.degree()
        if d is not None and d > R.D:
            raise TruncationExceeded("skew product beyond truncation")
    du = max((r.degree() or 0) for r in u.components.values()) if u.components else 0
    dv = max((r.degree() or 0) for r in v.components.values()) if v.components else 0
    if du + dv > R.D:
        raise TruncationExceeded("skew product of degree %d beyond truncation" % (du + dv))
    comps: dict = {}
    for gi, r in u.components.items():
        g = G.elements[gi]
        for hi, s in v.components.items():
            target = G.table[gi][hi]
            term = r * g.apply(s)
            cur = comps.get(target)
            tot = term if cur is None else cur + term
            if tot:
                comps[target] = tot
            elif cur is not None:
                del comps[target]
    return SkewElement(R, G, comps)


def integral_idempotent(R: GradedAlgebra, G: FiniteGroup) -> SkewElement:
    """e = (1/|G|) sum of the group elements inside R * G."""
    w = Fraction(1, G.order)
    one = R.one()
    return SkewElement(R, G, {gi: one * w for gi in range(G.order)})


class GradedIdealTable:
    """Canonical per-degree echelon bases of a graded subspace of R.

    Rows are stored in reduced row echelon form over the degree-d monomial
    basis, so two tables describe the same subspaces exactly when they
    compare equal.  The provenance tag records how the table was produced.
    """

    __slots__ = ("algebra", "D", "tag", "rows")

    def __init__(self, algebra: GradedAlgebra, D: int, rows, tag: str):
        self.algebra = algebra
        self.D = D
        self.rows = tuple(tuple(rs) for rs in rows)
        self.tag = tag

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, R: GradedAlgebra, D: int, tag: str = "user"):
        return cls(R, D, [[] for _ in range(D + 1)], tag)

    @classmethod
    def full(cls, R: GradedAlgebra, D: int, tag: str = "user"):
        one = R.field.one.raw
        rows = []
        for d in range(D + 1):
            rows.append([(j, {j: one}) for j in range(R.dim(d))])
        return cls(R, D, rows, tag)

    @classmethod
    def from_vectors(cls, R: GradedAlgebra, D: int, vecs_by_degree, tag: str = "user"):
        rows = []
        for d in range(D + 1):
            vecs = vecs_by_degree.get(d, [])
            rows.append(linalg.rref(R.field, [dict(v) for v in vecs]))
        return cls(R, D, rows, tag)

    @classmethod
    def from_elements(cls, R: GradedAlgebra, D: int, elems, tag: str = "user"):
        by_degree: dict = {}
        for e in elems:
            for d, part in e.homogeneous_parts().items():
                if d <= D:
                    by_degree.setdefault(d, []).append(R.coords(part, d))
        return cls.from_vectors(R, D, by_degree, tag)

    @classmethod
    def ideal_from_generators(cls, R: GradedAlgebra, gens, D: int, tag: str = "user"):
        """Two-sided ideal closure of homogeneous generators, degree by degree."""
        by_degree: dict = {}
        for e in gens:
            if isinstance(e, AlgElement):
                parts = e.homogeneous_parts()
            else:
                parts = R.element(e).homogeneous_parts()
            for d, part in parts.items():
                if d <= D:
                    by_degree.setdefault(d, []).append(R.coords(part, d))
        field = R.field
        rows: list = []
        for d in range(D + 1):
            vecs = [dict(v) for v in by_degree.get(d, [])]
            for i, deg_i in enumerate(R.alphabet.degrees):
                lower = d - deg_i
                if lower < 0 or lower >= len(rows):
                    continue
                for _, row in rows[lower]:
                    vecs.append(_letter_product(R, i, lower, row, left=True))
                    vecs.append(_letter_product(R, i, lower, row, left=False))
            rows.append(linalg.rref(field, vecs))
        return cls(R, D, rows, tag)

    # -- queries -------------------------------------------------------------

    def dim(self, d: int) -> int:
        return len(self.rows[d])

    def dims(self) -> list[int]:
        return [len(rs) for rs in self.rows]

    def is_zero(self) -> bool:
        return all(not rs for rs in self.rows)

    def member_vec(self, d: int, vec) -> bool:
        return linalg.in_span(self.algebra.field, vec, self.rows[d])

    def member(self, elem: AlgElement) -> bool:
        """Exact membership of an element with homogeneous parts of degree <= D."""
        if elem.algebra is not self.algebra:
            raise ValueError("element of a different algebra")
        for d, part in elem.homogeneous_parts().items():
            if d > self.D:
                raise TruncationExceeded("membership test beyond table degree")
            if not self.member_vec(d, self.algebra.coords(part, d)):
                return False
        return True

    def polys(self, d: int):
        return [self.algebra.vector_to_element(d, row) for _, row in self.rows[d]]

    def first_nonzero(self):
        """Minimal degree with a nonzero component and its first basis element."""
        for d in range(self.D + 1):
            if self.rows[d]:
                return d, self.algebra.vector_to_element(d, self.rows[d][0][1])
        return None, None

    def __eq__(self, other):
        if not isinstance(other, GradedIdealTable):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.D == other.D
            and self.rows == other.rows
        )

    def equal_upto(self, other: "GradedIdealTable", upto: int | None = None):
        """Per-degree equality flags against another table."""
        upto = min(self.D, other.D) if upto is None else upto
        return [self.rows[d] == other.rows[d] for d in range(upto + 1)]

    def contains_table(self, other: "GradedIdealTable", upto: int | None = None) -> bool:
        upto = min(self.D, other.D) if upto is None else upto
        field = self.algebra.field
        return all(
            linalg.span_contains(field, other.rows[d], self.rows[d]) for d in range(upto + 1)
        )

    # -- algebra on tables -----------------------------------------------------

    def union(self, other: "GradedIdealTable", tag=None) -> "GradedIdealTable":
        _same_frame(self, other)
        field = self.algebra.field
        rows = [
            linalg.sum_rows(field, self.rows[d], other.rows[d]) for d in range(self.D + 1)
        ]
        return GradedIdealTable(self.algebra, self.D, rows, tag or self.tag)

    def intersect(self, other: "GradedIdealTable", tag=None) -> "GradedIdealTable":
        _same_frame(self, other)
        field = self.algebra.field
        rows = []
        for d in range(self.D + 1):
            rows.append(
                linalg.intersect_rows(
                    field, self.rows[d], other.rows[d], self.algebra.dim(d)
                )
            )
        return GradedIdealTable(self.algebra, self.D, rows, tag or self.tag)

    def product(self, other: "GradedIdealTable", tag=None) -> "GradedIdealTable":
        """Degree-wise span of pairwise products; the ideal product for ideals."""
        _same_frame(self, other)
        R = self.algebra
        field = R.field
        rows = []
        for d in range(self.D + 1):
            vecs = []
            for i in range(d + 1):
                j = d - i
                if not self.rows[i] or not other.rows[j]:
                    continue
                for _, u in self.rows[i]:
                    for _, v in other.rows[j]:
                        vecs.append(vec_product(R, i, j, u, v))
            rows.append(linalg.rref(field, vecs))
        return GradedIdealTable(R, self.D, rows, tag or self.tag)

    def power(self, n: int, tag=None) -> "GradedIdealTable":
        if n < 1:
            raise ValueError("power must be >= 1")
        out = self
        for _ in range(n - 1):
            out = out.product(self, tag=tag)
        return out

    # -- structural checks -------------------------------------------------------

    def is_two_sided_ideal_upto(self) -> bool:
        """Letter multiples of each component land in the next components."""
        R = self.algebra
        field = R.field
        for d in range(self.D + 1):
            for i, deg_i in enumerate(R.alphabet.degrees):
                lower = d - deg_i
                if lower < 0:
                    continue
                for _, row in self.rows[lower]:
                    for left in (True, False):
                        vec = _letter_product(R, i, lower, row, left=left)
                        if not linalg.in_span(field, vec, self.rows[d]):
                            return False
        return True

    def is_g_stable(self, G: FiniteGroup) -> bool:
        field = self.algebra.field
        for g in G.elements[1:]:
            for d in range(self.D + 1):
                if not self.rows[d]:
                    continue
                cols = g.matrix_on_degree(d)
                for _, row in self.rows[d]:
                    img: dict = {}
                    for c, v in row.items():
                        kernel.dict_axpy(img, v, cols[c], field.red)
                    if not linalg.in_span(field, img, self.rows[d]):
                        return False
        return True

    def dump(self) -> dict:
        """Per degree, the canonical rows rendered as polynomial strings."""
        return {d: [str(p) for p in self.polys(d)] for d in range(self.D + 1)}

    def generators(self):
        """A minimal (up to D) homogeneous generating set of the ideal.

        Degree-d rows are kept only modulo the ideal closure of the
        generators already chosen in lower degrees.
        """
        R = self.algebra
        field = R.field
        chosen: list = []
        for d in range(self.D + 1):
            if not self.rows[d]:
                continue
            if chosen:
                closure = GradedIdealTable.ideal_from_generators(
                    R, [g for g, _ in chosen], d, tag="user"
                )
                span = list(closure.rows[d])
            else:
                span = []
            for _, row in self.rows[d]:
                residue = linalg.reduce_vec(field, row, span)
                if residue:
                    chosen.append((R.vector_to_element(d, residue), d))
                    span = linalg.rref(
                        field, [dict(r) for _, r in span] + [dict(residue)]
                    )
        return chosen


def _same_frame(a: GradedIdealTable, b: GradedIdealTable):
    if a.algebra is not b.algebra or a.D != b.D:
        raise ValueError("tables over different algebras or bounds")


def _letter_product(R: GradedAlgebra, letter: int, d: int, vec, left: bool):
    """Coordinates of x_letter * v or v * x_letter for v in degree d."""
    words = R.basis.words[d]
    target = d + R.alphabet.degrees[letter]
    index = R.basis.index[target]
    field = R.field
    out: dict = {}
    for c, raw in vec.items():
        w = words[c]
        prod = R.product_word_vec((letter,), w) if left else R.product_word_vec(w, (letter,))
        for t, sc in prod.items():
            kernel.dict_axpy(out, raw, {index[t]: sc.raw}, field.red)
    return out


def vec_product(R: GradedAlgebra, i: int, j: int, u, v):
    """Coordinates of the product of coordinate vectors in degrees i and j."""
    words_i, words_j = R.basis.words[i], R.basis.words[j]
    index = R.basis.index[i + j]
    field = R.field
    out: dict = {}
    for ci, cu in u.items():
        wu = words_i[ci]
        for cj, cv in v.items():
            c = kernel.q_mul(cu, cv, field.red)
            for t, sc in R.product_word_vec(wu, words_j[cj]).items():
                kernel.dict_axpy(out, c, {index[t]: sc.raw}, field.red)
    return out


def oracle_radical(
    R: GradedAlgebra, G: FiniteGroup, D: int | None = None, threads: int = 1
) -> GradedIdealTable:
    """Exact degree-wise radical of the action, computed from first principles.

    For each degree d, consider formal combinations of monomial pairs (u, v)
    with deg u + deg v = d.  The pair condition requires u (g.v) to vanish
    for every g != 1 simultaneously; the surviving combinations, multiplied
    out as u v, span exactly the degree d component of the radical.
    """
    if G.algebra is not R:
        raise ValueError("group acts on a different algebra")
    if D is None:
        D = R.D
    if D > R.D:
        raise TruncationExceeded("oracle degree beyond the algebra truncation")

    def degree_component(d: int):
        h = R.dim(d)
        if h == 0:
            return []
        field = R.field
        red = field.red
        k = G.order
        split = (k - 1) * h
        rows = []
        for i in range(d + 1):
            j = d - i
            words_i = R.basis.words[i]
            words_j = R.basis.words[j]
            if not words_i or not words_j:
                continue
            index_d = R.basis.index[d]
            gcols = [G.elements[gi].matrix_on_degree(j) for gi in range(1, k)]
            for u in words_i:
                # products of u against the whole degree-j basis, reused per v
                prods = [
                    {index_d[t]: sc.raw for t, sc in R.product_word_vec(u, w).items()}
                    for w in words_j
                ]
                for cv in range(len(words_j)):
                    row: dict = {}
                    for b in range(k - 1):
                        base = b * h
                        for cj, raw in gcols[b][cv].items():
                            for t, val in prods[cj].items():
                                key = base + t
                                cur = row.get(key)
                                if cur is None:
                                    w = kernel.q_mul(raw, val, red)
                                    if not kernel.q_is_zero(w):
                                        row[key] = w
                                else:
                                    w = kernel.q_add(cur, kernel.q_mul(raw, val, red))
                                    if kernel.q_is_zero(w):
                                        del row[key]
                                    else:
                                        row[key] = w
                    for t, val in prods[cv].items():
                        row[split + t] = val
                    rows.append(row)
        return linalg.trailing_block_rows(field, rows, split)

    degrees = range(D + 1)
    if threads > 1:
        # populate the shared action and product caches up front so the
        # worker threads only read them
        for gi in range(1, G.order):
            for d in degrees:
                G.elements[gi].matrix_on_degree(d)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(degree_component, degrees))
    else:
        rows = [degree_component(d) for d in degrees]
    return GradedIdealTable(R, D, rows, "oracle")


def intersect_with_invariants(table: GradedIdealTable, invariant_rows) -> GradedIdealTable:
    """Degree-wise intersection of a table with per-degree invariant bases."""
    R = table.algebra
    field = R.field
    rows = []
    for d in range(table.D + 1):
        rows.append(
            linalg.intersect_rows(field, table.rows[d], invariant_rows[d], R.dim(d))
        )
    return GradedIdealTable(R, table.D, rows, table.tag)
