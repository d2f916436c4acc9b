"""Hilbert data, growth estimation and pertinency."""

import pytest

from pertinax.action import LinearAuto, group_generate
from pertinax.dimension import HilbertData, gk_estimate, hilbert, pertinency
from pertinax.errors import InsufficientDegrees, NeedsGKdim
from pertinax.galgebra import make_commutative, make_downup, make_skew_symmetric
from pertinax.radical import radical_constructive
from pertinax.skewgroup import GradedIdealTable, oracle_radical


def test_hilbert_examples(QQ):
    R = make_commutative(QQ, 2, 8)
    swap = group_generate([LinearAuto(R, [[0, 1], [1, 0]])])
    T = oracle_radical(R, swap, 8)
    assert hilbert(R, T).dims == (1,) * 9
    S = make_skew_symmetric(QQ, 2, 8)
    swap_s = group_generate([LinearAuto(S, [[0, 1], [1, 0]])])
    assert hilbert(S, oracle_radical(S, swap_s, 8)).dims == (1, 1) + (0,) * 7
    zero = GradedIdealTable.zero(R, 8)
    assert hilbert(R, zero).dims == tuple(R.dims())


def test_gk_estimate_examples():
    assert gk_estimate(HilbertData(range(1, 12))).value == 2
    assert gk_estimate(HilbertData([1] * 10)).value == 1
    assert gk_estimate(HilbertData([1, 3, 3, 3, 3, 3, 3])).value == 1
    fin = gk_estimate(HilbertData([1, 1, 0, 0, 0, 0]))
    assert fin.value == 0 and fin.exact
    est = gk_estimate(HilbertData([1, 2, 3, 4, 5, 6]))
    assert not est.exact and est.window["difference_order"] == 2


def test_gk_estimate_window_guard():
    with pytest.raises(InsufficientDegrees):
        gk_estimate(HilbertData([1, 2]), window=4)
    with pytest.raises(InsufficientDegrees):
        gk_estimate(HilbertData([1, 2, 4, 8, 16, 32, 64]), window=3)


def test_gk_known_overrides():
    est = gk_estimate(HilbertData([1, 2, 3]), known=5)
    assert est.value == 5 and est.exact


def test_finite_dim_certificate_needs_wide_enough_run():
    # with generator degree bound 2, a single trailing zero certifies nothing:
    # a degree 2 generator could repopulate higher components
    with pytest.raises(InsufficientDegrees):
        gk_estimate(HilbertData([1, 2, 2, 2, 2, 0]), gen_degree_bound=2)
    est2 = gk_estimate(HilbertData([1, 2, 2, 0, 0, 0]), gen_degree_bound=2)
    assert est2.exact and est2.value == 0


def test_pertinency_fixtures(QQ):
    R = make_commutative(QQ, 2, 10)
    G = group_generate([LinearAuto(R, [[0, 1], [1, 0]])])
    p = pertinency(R, G, 10)
    assert (p.value, p.kind) == (1, "estimate")

    S = make_skew_symmetric(QQ, 2, 10)
    GS = group_generate([LinearAuto(S, [[0, 1], [1, 0]])])
    p2 = pertinency(S, GS, 10)
    assert (p2.value, p2.kind) == (2, "exact")

    D = make_downup(QQ, 1, -1, 8)
    GD = group_generate([LinearAuto(D, [[0, 1], [1, 0]])])
    p3 = pertinency(D, GD, 8)
    assert (p3.value, p3.kind) == (3, "exact")
    assert p3.hilbert_quotient.dims[3:] == (0,) * 6


def test_pertinency_requires_gkdim(QQ):
    from pertinax.freealgebra import Alphabet, FreePoly
    from pertinax.galgebra import make_presentation

    ab = Alphabet(["u", "v"])
    u, v = FreePoly.gen(ab, QQ, 0), FreePoly.gen(ab, QQ, 1)
    R = make_presentation(QQ, ["u", "v"], [u * v - v * u], 6)
    G = group_generate([LinearAuto(R, [[0, 1], [1, 0]])])
    with pytest.raises(NeedsGKdim):
        pertinency(R, G, 6)


def test_lower_bound_kind_with_constructive_table(Q3):
    S = make_skew_symmetric(Q3, 3, 10)
    perm = LinearAuto(S, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    G = group_generate([perm])
    sub = radical_constructive(S, G, 10, strategies=("eigen_product",))
    full = oracle_radical(S, G, 10)
    p_sub = pertinency(S, table=sub)
    p_full = pertinency(S, table=full)
    assert p_sub.kind == "lower_bound"
    assert p_sub.value <= p_full.value
    assert p_full.value == 2  # Euler totient of 3


def test_estimate_monotone_under_table_inclusion(QQ):
    """A bigger ideal gives a pointwise smaller Hilbert function and a
    growth estimate that is not larger."""
    R = make_commutative(QQ, 3, 8)
    x, y, z = R.gens()
    small = GradedIdealTable.ideal_from_generators(R, [x], 8)
    big = GradedIdealTable.ideal_from_generators(R, [x, y], 8)
    h_small = hilbert(R, small)
    h_big = hilbert(R, big)
    assert all(a >= b for a, b in zip(h_small.dims, h_big.dims))
    assert gk_estimate(h_big).value <= gk_estimate(h_small).value


def test_uniform_diagonal_action_is_dense_galois(Q3):
    """Uniform primitive scaling: quotient vanishes from the order on, and
    the pertinency equals the full GK-dimension, exactly."""
    R = make_commutative(Q3, 2, 8)
    w = Q3.primitive_root(3)
    G = group_generate([LinearAuto(R, [[w, 0], [0, w]])])
    p = pertinency(R, G, 8)
    # the quotient may die even earlier, but from the order on it must vanish
    assert all(v == 0 for v in p.hilbert_quotient.dims[3:])
    assert (p.value, p.kind) == (2, "exact")
    assert p.gk_quotient.exact and p.gk_quotient.value == 0


def test_downup_pertinency_with_scaled_swap(QQ):
    """The down-up result holds for the whole one-parameter family of
    involutions x -> a y, y -> x/a."""
    from fractions import Fraction

    R = make_downup(QQ, 1, -1, 8)
    a = Fraction(2)
    G = group_generate([LinearAuto(R, [[0, 1 / a], [a, 0]])])
    assert G.order == 2
    p = pertinency(R, G, 8)
    assert (p.value, p.kind) == (3, "exact")
    # the defining pair from the involution: (1, -x) ~ (a y, 1)
    from pertinax.radical import verify_pertinent

    x, y = R.gens()
    pair = verify_pertinent([R.one(), -x], [y * a, R.one()], G)
    assert pair.value() == y * a - x
