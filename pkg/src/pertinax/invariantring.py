"""The invariant subalgebra: bases, generators, cofinality and normality.

The fixed space in each degree is the kernel of the stacked maps g - id;
generators are extracted greedily by degree, modulo products of lower
degree invariants.  Cofinality certificates compare the power filtrations
of the radical and of the invariant part of the radical inside the ambient
algebra, degree-wise up to the truncation bound.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernel, linalg
from .action import FiniteGroup
from .errors import TruncationExceeded
from .galgebra import AlgElement, GradedAlgebra
from .skewgroup import GradedIdealTable, intersect_with_invariants, oracle_radical, vec_product


class InvariantRing:
    """Per-degree bases of the fixed subalgebra and a minimal generator list."""

    __slots__ = ("algebra", "group", "D", "rows", "generators")

    def __init__(self, algebra, group, D, rows, generators):
        self.algebra = algebra
        self.group = group
        self.D = D
        self.rows = rows
        self.generators = generators  # list of (AlgElement, degree)

    def dim(self, d: int) -> int:
        return len(self.rows[d])

    def dims(self) -> list[int]:
        return [len(rs) for rs in self.rows]

    def basis_elements(self, d: int):
        return [self.algebra.vector_to_element(d, row) for _, row in self.rows[d]]

    def contains(self, elem: AlgElement) -> bool:
        R = self.algebra
        for d, part in elem.homogeneous_parts().items():
            if d > self.D:
                raise TruncationExceeded("membership beyond the invariant table")
            if not linalg.in_span(R.field, R.coords(part, d), self.rows[d]):
                return False
        return True

    def __repr__(self):
        return "InvariantRing(dims=%s)" % (self.dims(),)


def invariants_basis(R: GradedAlgebra, G: FiniteGroup, D: int | None = None) -> InvariantRing:
    """Fixed spaces per degree plus a generator list minimal up to D."""
    if D is None:
        D = R.D
    if D > R.D:
        raise TruncationExceeded("invariants beyond the algebra truncation")
    field = R.field
    k = G.order
    rows = []
    for d in range(D + 1):
        h = R.dim(d)
        if h == 0:
            rows.append([])
            continue
        cols = []
        gcols = [G.elements[gi].matrix_on_degree(d) for gi in range(1, k)]
        for j in range(h):
            col: dict = {}
            for b in range(k - 1):
                base = b * h
                for r, v in gcols[b][j].items():
                    col[base + r] = v
                cur = col.get(base + j)
                diff = (
                    kernel.q_sub(cur, field.one.raw)
                    if cur is not None
                    else kernel.q_neg(field.one.raw)
                )
                if kernel.q_is_zero(diff):
                    col.pop(base + j, None)
                else:
                    col[base + j] = diff
            cols.append(col)
        rows.append(linalg.kernel_rows(field, cols, h, (k - 1) * h))
    rows = tuple(tuple(rs) for rs in rows)

    generators = []
    for d in range(1, D + 1):
        if not rows[d]:
            continue
        prod_vecs = []
        for i in range(1, d):
            j = d - i
            for _, u in rows[i]:
                for _, v in rows[j]:
                    prod_vecs.append(vec_product(R, i, j, u, v))
        span = linalg.rref(field, prod_vecs)
        for _, row in rows[d]:
            residue = linalg.reduce_vec(field, row, span)
            if residue:
                generators.append((R.vector_to_element(d, residue), d))
                span = linalg.rref(field, [dict(r) for _, r in span] + [dict(residue)])
    return InvariantRing(R, G, D, rows, generators)


def trace_average_dims(R: GradedAlgebra, G: FiniteGroup, D: int | None = None) -> list[int]:
    """Character-theoretic dimension count: average of traces on each degree.

    Independent of the kernel computation in invariants_basis; the two must
    agree for any linear action with stable graded components.
    """
    if D is None:
        D = R.D
    field = R.field
    out = []
    for d in range(D + 1):
        h = R.dim(d)
        total = field.scalar(h)  # identity contributes its full trace
        for gi in range(1, G.order):
            cols = G.elements[gi].matrix_on_degree(d)
            tr = field.zero
            for j in range(h):
                raw = cols[j].get(j)
                if raw is not None:
                    tr = tr + field.from_raw(raw)
            total = total + tr
        avg = total * Fraction(1, G.order)
        frac = avg.as_fraction()
        if frac.denominator != 1 or frac < 0:
            raise ArithmeticError("trace average %s is not a nonnegative integer" % frac)
        out.append(int(frac))
    return out


def invariant_radical_table(
    R: GradedAlgebra,
    G: FiniteGroup,
    D: int | None = None,
    radical: GradedIdealTable | None = None,
    inv: InvariantRing | None = None,
) -> GradedIdealTable:
    """The invariant part of the radical, as subspaces of the ambient algebra."""
    if radical is None:
        radical = oracle_radical(R, G, D)
    if inv is None:
        inv = invariants_basis(R, G, radical.D)
    return intersect_with_invariants(radical, inv.rows)


class CofinalityCertificate:
    """Truncated interleaving data for the radical and invariant-radical filtrations."""

    __slots__ = ("D", "s_max", "n_cap", "aR_eq_Ra", "entries")

    def __init__(self, D, s_max, n_cap, aR_eq_Ra, entries):
        self.D = D
        self.s_max = s_max
        self.n_cap = n_cap
        self.aR_eq_Ra = aR_eq_Ra
        self.entries = entries  # list of dicts {s, n, vacuous}

    def as_json(self):
        return {
            "aR_eq_Ra": self.aR_eq_Ra,
            "s_max": self.s_max,
            "n_cap": self.n_cap,
            "checked_upto": self.D,
            "table": self.entries,
        }

    def __repr__(self):
        return "CofinalityCertificate(aR=Ra: %s, %s)" % (self.aR_eq_Ra, self.entries)


def cofinality_check(
    R: GradedAlgebra,
    G: FiniteGroup,
    D: int | None = None,
    s_max: int = 3,
    n_cap: int = 8,
    radical: GradedIdealTable | None = None,
    inv: InvariantRing | None = None,
) -> CofinalityCertificate:
    """For each s <= s_max, the least n with radical^n inside (a^s R) up to D.

    Also reports whether aR = Ra holds degree-wise, where a is the invariant
    part of the radical.  Containments are exact statements about the graded
    components of degree <= D.
    """
    if radical is None:
        radical = oracle_radical(R, G, D)
    D = radical.D
    if inv is None:
        inv = invariants_basis(R, G, D)
    aa = invariant_radical_table(R, G, D, radical=radical, inv=inv)
    full = GradedIdealTable.full(R, D)
    aR = aa.product(full)
    Ra = full.product(aa)
    a_eq = aR.rows == Ra.rows

    entries = []
    rad_powers = {1: radical}
    a_power = aa
    start = 1
    for s in range(1, s_max + 1):
        asR = a_power.product(full)
        n_found = None
        vacuous = False
        n = start
        while n <= n_cap:
            if n not in rad_powers:
                rad_powers[n] = rad_powers[n - 1].product(radical)
            rn = rad_powers[n]
            if asR.contains_table(rn):
                n_found = n
                vacuous = rn.is_zero()
                break
            n += 1
        entries.append({"s": s, "n": n_found, "vacuous": vacuous})
        if n_found is not None:
            start = n_found
        if s < s_max:
            a_power = a_power.product(aa)
    return CofinalityCertificate(D, s_max, n_cap, a_eq, entries)


def normality_check(
    elements,
    R: GradedAlgebra,
    D: int | None = None,
    inv: InvariantRing | None = None,
):
    """Per element: is aR_d = R_d a for all d, and the same inside the invariants.

    An element is normal precisely when its left and right multiples agree
    as subspaces in every degree; in_A is None for elements outside the
    invariant subalgebra.
    """
    if D is None:
        D = R.D
    field = R.field
    out = []
    for a in elements:
        if not a.is_homogeneous():
            raise ValueError("normality test needs homogeneous elements")
        da = a.degree()
        if da is None:
            out.append({"element": a, "in_R": True, "in_A": True})
            continue
        ca = R.coords(a, da)
        in_R = True
        for d in range(0, D - da + 1):
            left_rows, right_rows = [], []
            for j in range(R.dim(d)):
                unit = {j: field.one.raw}
                left_rows.append(vec_product(R, da, d, ca, unit))
                right_rows.append(vec_product(R, d, da, unit, ca))
            if linalg.rref(field, left_rows) != linalg.rref(field, right_rows):
                in_R = False
                break
        in_A = None
        if inv is not None and inv.contains(a):
            in_A = True
            for d in range(0, D - da + 1):
                left_rows, right_rows = [], []
                for _, v in inv.rows[d]:
                    left_rows.append(vec_product(R, da, d, ca, v))
                    right_rows.append(vec_product(R, d, da, v, ca))
                if linalg.rref(field, left_rows) != linalg.rref(field, right_rows):
                    in_A = False
                    break
        out.append({"element": a, "in_R": in_R, "in_A": in_A})
    return out
