# cython: language_level=3
"""Compiled arithmetic kernel; the twin of pertinax._pure.

Same functions, same data layout: scalars are (nums tuple, den int) pairs
over the power basis modulo the cyclotomic polynomial.  Coefficients stay
arbitrary-precision Python integers; the speedup comes from compiling the
sparse row and convolution loops.
"""

from fractions import Fraction
from math import gcd

BACKEND = "c"


cpdef tuple q_normalize(nums, den):
    cdef Py_ssize_t i, n
    if den == 0:
        raise ZeroDivisionError("scalar with zero denominator")
    g = den
    for x in nums:
        g = gcd(g, x)
        if g == 1:
            break
    if g == 0:
        n = len(nums)
        return (tuple([0] * n), 1)
    if den < 0:
        g = -g
    if g != 1:
        return (tuple([x // g for x in nums]), den // g)
    return (tuple(nums), den)


cpdef bint q_is_zero(a):
    for x in a[0]:
        if x:
            return False
    return True


cpdef tuple q_neg(a):
    return (tuple([-x for x in a[0]]), a[1])


cpdef tuple q_add(a, b):
    na = a[0]; da = a[1]
    nb = b[0]; db = b[1]
    if da == db:
        return q_normalize([x + y for x, y in zip(na, nb)], da)
    return q_normalize([x * db + y * da for x, y in zip(na, nb)], da * db)


cpdef tuple q_sub(a, b):
    na = a[0]; da = a[1]
    nb = b[0]; db = b[1]
    if da == db:
        return q_normalize([x - y for x, y in zip(na, nb)], da)
    return q_normalize([x * db - y * da for x, y in zip(na, nb)], da * db)


cpdef tuple q_mul(a, b, red):
    cdef Py_ssize_t phi, i, j, k
    na = a[0]; da = a[1]
    nb = b[0]; db = b[1]
    phi = len(na)
    if phi == 1:
        return q_normalize((na[0] * nb[0],), da * db)
    cdef list conv = [0] * (2 * phi - 1)
    for i in range(phi):
        x = na[i]
        if x:
            for j in range(phi):
                y = nb[j]
                if y:
                    conv[i + j] = conv[i + j] + x * y
    cdef list out = conv[:phi]
    for k in range(phi - 1):
        c = conv[phi + k]
        if c:
            row = red[k]
            for i in range(phi):
                r = row[i]
                if r:
                    out[i] = out[i] + c * r
    return q_normalize(out, da * db)


def q_inv(a, minpoly):
    """Invert a nonzero scalar by the extended Euclidean algorithm in Q[t]."""
    if q_is_zero(a):
        raise ZeroDivisionError("inversion of zero scalar")
    phi = len(a[0])
    if phi == 1:
        n = a[0][0]
        d = a[1]
        if n < 0:
            return ((-d,), -n)
        return ((d,), n)
    r0 = [Fraction(c) for c in minpoly]
    r1 = [Fraction(n, a[1]) for n in a[0]]
    while r1 and r1[-1] == 0:
        r1.pop()
    s0 = [Fraction(0)]
    s1 = [Fraction(1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    c = r1[0]
    inv = [x / c for x in s1]
    inv.extend(Fraction(0) for _ in range(phi - len(inv)))
    den = 1
    for x in inv:
        den = den * x.denominator // gcd(den, x.denominator)
    return q_normalize([int(x * den) for x in inv[:phi]], den)


cdef tuple _divmod_result(list q, list a):
    return q, a


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    cdef Py_ssize_t i, j
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j in range(len(b)):
                a[i + j] = a[i + j] - c * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


def _poly_mul(a, b):
    cdef Py_ssize_t i, j
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        x = a[i]
        if x:
            for j in range(len(b)):
                out[i + j] = out[i + j] + x * b[j]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_sub(a, b):
    cdef Py_ssize_t n = max(len(a), len(b))
    out = [Fraction(0)] * n
    cdef Py_ssize_t i
    for i in range(len(a)):
        out[i] = out[i] + a[i]
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


cpdef dict dict_axpy(dict acc, c, dict terms, red):
    """In place sparse update ``acc += c * terms``; drops zero entries."""
    for k, v in terms.items():
        cur = acc.get(k)
        if cur is None:
            w = q_mul(c, v, red)
            if not q_is_zero(w):
                acc[k] = w
        else:
            w = q_add(cur, q_mul(c, v, red))
            if q_is_zero(w):
                del acc[k]
            else:
                acc[k] = w
    return acc


cpdef dict row_reduce(vec, rows, red):
    """Residue of a sparse vector modulo rows in reduced echelon form."""
    cdef dict out = dict(vec)
    for p, prow in rows:
        c = out.get(p)
        if c is None:
            continue
        del out[p]
        for col, v in (<dict> prow).items():
            if col == p:
                continue
            cur = out.get(col)
            if cur is None:
                w = q_neg(q_mul(c, v, red))
                if not q_is_zero(w):
                    out[col] = w
            else:
                w = q_sub(cur, q_mul(c, v, red))
                if q_is_zero(w):
                    del out[col]
                else:
                    out[col] = w
    return out


def rref(rows, red, minpoly):
    """Canonical reduced row echelon form of sparse rows; see the pure twin."""
    cdef dict pivots = {}
    cdef dict row
    for incoming in rows:
        row = dict(incoming)
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                break
            c = row.pop(lead)
            for col, v in (<dict> prow).items():
                if col == lead:
                    continue
                cur = row.get(col)
                if cur is None:
                    w = q_neg(q_mul(c, v, red))
                    if not q_is_zero(w):
                        row[col] = w
                else:
                    w = q_sub(cur, q_mul(c, v, red))
                    if q_is_zero(w):
                        del row[col]
                    else:
                        row[col] = w
        if not row:
            continue
        lead = min(row)
        inv = q_inv(row[lead], minpoly)
        row = {col: q_mul(inv, v, red) for col, v in row.items()}
        pivots[lead] = row
    for p in sorted(pivots, reverse=True):
        row = pivots[p]
        stale = [c for c in row if c != p and c in pivots]
        for q in stale:
            c = row.pop(q)
            for col, v in (<dict> pivots[q]).items():
                if col == q:
                    continue
                cur = row.get(col)
                if cur is None:
                    w = q_neg(q_mul(c, v, red))
                    if not q_is_zero(w):
                        row[col] = w
                else:
                    w = q_sub(cur, q_mul(c, v, red))
                    if q_is_zero(w):
                        del row[col]
                    else:
                        row[col] = w
    return [(p, pivots[p]) for p in sorted(pivots)]
