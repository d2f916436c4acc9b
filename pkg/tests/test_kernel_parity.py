"""The compiled kernel and the pure Python kernel must agree exactly."""

import random

import pytest

from pertinax import _pure
from pertinax.scalars import cyclotomic_field

try:
    from pertinax import _speedups
except ImportError:  # pragma: no cover
    _speedups = None

needs_speedups = pytest.mark.skipif(_speedups is None, reason="extension not built")


def _random_raw(rng, phi):
    return _pure.q_normalize(
        [rng.randint(-20, 20) for _ in range(phi)], rng.randint(1, 12)
    )


@needs_speedups
@pytest.mark.parametrize("m", [1, 2, 3, 4, 12])
def test_scalar_ops_agree(m):
    field = cyclotomic_field(m)
    rng = random.Random(7 + m)
    for _ in range(200):
        a = _random_raw(rng, field.phi)
        b = _random_raw(rng, field.phi)
        assert _pure.q_add(a, b) == _speedups.q_add(a, b)
        assert _pure.q_sub(a, b) == _speedups.q_sub(a, b)
        assert _pure.q_neg(a) == _speedups.q_neg(a)
        assert _pure.q_mul(a, b, field.red) == _speedups.q_mul(a, b, field.red)
        if not _pure.q_is_zero(a):
            assert _pure.q_inv(a, field.minpoly) == _speedups.q_inv(a, field.minpoly)


@needs_speedups
@pytest.mark.parametrize("m", [2, 3, 12])
def test_rref_agrees(m):
    field = cyclotomic_field(m)
    rng = random.Random(40 + m)
    for _ in range(25):
        nrows = rng.randint(1, 10)
        width = rng.randint(1, 8)
        rows = []
        for _ in range(nrows):
            row = {}
            for col in range(width):
                if rng.random() < 0.5:
                    raw = _random_raw(rng, field.phi)
                    if not _pure.q_is_zero(raw):
                        row[col] = raw
            rows.append(row)
        left = _pure.rref([dict(r) for r in rows], field.red, field.minpoly)
        right = _speedups.rref([dict(r) for r in rows], field.red, field.minpoly)
        assert left == right


@needs_speedups
def test_row_reduce_and_axpy_agree():
    field = cyclotomic_field(4)
    rng = random.Random(99)
    rows = []
    for _ in range(6):
        row = {c: _random_raw(rng, field.phi) for c in range(8) if rng.random() < 0.6}
        if row:
            rows.append(row)
    basis = _pure.rref([dict(r) for r in rows], field.red, field.minpoly)
    for _ in range(30):
        vec = {c: _random_raw(rng, field.phi) for c in range(8) if rng.random() < 0.5}
        assert _pure.row_reduce(dict(vec), basis, field.red) == _speedups.row_reduce(
            dict(vec), basis, field.red
        )
        acc1, acc2 = dict(vec), dict(vec)
        c = _random_raw(rng, field.phi)
        terms = {1: _random_raw(rng, field.phi), 3: _random_raw(rng, field.phi)}
        assert _pure.dict_axpy(acc1, c, terms, field.red) == _speedups.dict_axpy(
            acc2, c, terms, field.red
        )
