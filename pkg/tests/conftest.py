"""Shared fixtures and independent test oracles.

The oracles here deliberately avoid the machinery they are used to check:
ideal dimensions are computed by spanning words in the free algebra with a
plain dense Gaussian elimination over Scalar values, and quantum affine
normal forms by explicit inversion counting.  Nothing in this file imports
the Groebner engine or the kernel linear algebra.
"""

from fractions import Fraction

import pytest

from pertinax.freealgebra import Alphabet, FreePoly
from pertinax.scalars import cyclotomic_field


@pytest.fixture(scope="session")
def QQ():
    return cyclotomic_field(2)


@pytest.fixture(scope="session")
def Q3():
    return cyclotomic_field(3)


@pytest.fixture(scope="session")
def Q12():
    return cyclotomic_field(12)


# -- independent linear algebra ------------------------------------------------


def gauss_dim(field, vectors):
    """Rank of dense Scalar coefficient vectors by plain elimination."""
    rows = [list(v) for v in vectors]
    rank = 0
    width = len(rows[0]) if rows else 0
    pivot_rows = []
    for col in range(width):
        pivot = None
        for r in rows:
            if r[col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows.remove(pivot)
        inv = pivot[col].inv()
        pivot = [inv * e for e in pivot]
        pivot_rows.append(pivot)
        rank += 1
        for r in rows:
            c = r[col]
            if c:
                for j in range(width):
                    r[j] = r[j] - c * pivot[j]
        rows = [r for r in rows if any(r)]
    return rank


def all_words(nletters, degree):
    """Every word of the given length over an alphabet of degree one letters."""
    if degree == 0:
        return [()]
    shorter = all_words(nletters, degree - 1)
    return [w + (i,) for w in shorter for i in range(nletters)]


def free_ideal_dims(relations, D):
    """Per-degree dimensions of the two-sided ideal spanned by u * r * v.

    Brute force over words of the free algebra; independent of the Groebner
    engine and of the sparse echelon kernel.
    """
    alphabet = relations[0].alphabet
    field = relations[0].field
    n = len(alphabet)
    dims = [0] * (D + 1)
    for d in range(D + 1):
        vectors = []
        words_d = all_words(n, d)
        index = {w: i for i, w in enumerate(words_d)}
        for rel in relations:
            rd = rel.degree()
            if rd is None or rd > d:
                continue
            for lu in range(d - rd + 1):
                for u in all_words(n, lu):
                    for v in all_words(n, d - rd - lu):
                        vec = [field.zero] * len(words_d)
                        for w, c in rel.terms.items():
                            vec[index[u + w + v]] = vec[index[u + w + v]] + c
                        vectors.append(vec)
        dims[d] = gauss_dim(field, vectors) if vectors else 0
    return dims


def free_quotient_dims(relations, D):
    """Dimensions of the quotient of the free algebra by the spanned ideal."""
    n = len(relations[0].alphabet)
    ideal = free_ideal_dims(relations, D)
    return [n**d - ideal[d] for d in range(D + 1)]


def q_straighten(field, q, word):
    """Sort a word by adjacent swaps, collecting one q factor per inversion.

    With the convention x_j x_i = q_ij x_i x_j for i < j, the straightened
    form of a word is q-weighted by the product over its inversions.
    """
    word = list(word)
    coeff = field.one
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            a, b = word[k], word[k + 1]
            if a > b:
                word[k], word[k + 1] = b, a
                coeff = coeff * q[b][a]
                changed = True
    return coeff, tuple(word)
