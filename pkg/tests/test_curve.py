from fractions import Fraction
from math import gcd

import numpy as np
import pytest

from ascartier.algebra import make_field
from ascartier.curve import CurveParams, DiffIndex, basis_layout, genus, ord_at_infinity


def test_genus_examples():
    assert genus(7, 10) == 27
    assert genus(3, 2) == 1
    for p in (3, 5, 7, 11):
        assert genus(p, 1) == 0


@pytest.mark.parametrize("p,d", [(7, 14), (3, 9), (5, 0), (2, 3), (9, 2)])
def test_invalid_parameters(p, d):
    with pytest.raises(ValueError):
        genus(p, d)
    with pytest.raises(ValueError):
        basis_layout(p, d)


def test_figure_layout():
    lay = basis_layout(7, 10)
    assert list(lay.row_counts) == [8, 7, 5, 4, 2, 1]
    assert lay.genus == 27


def test_small_layouts():
    assert basis_layout(3, 2).indices == (DiffIndex(1, 1),)
    empty = basis_layout(5, 1)
    assert empty.indices == () and empty.genus == 0


def test_layout_matches_real_inequality_enumeration():
    # brute force over rationals, independent of the floor formula
    for p in (3, 5, 7):
        for d in range(1, 25):
            if d % p == 0:
                continue
            expect = [
                (i, j)
                for j in range(1, p)
                for i in range(1, d + 1)
                if Fraction(i) < Fraction((p - j) * d, p)
            ]
            assert [tuple(x) for x in basis_layout(p, d).indices] == expect


def test_layout_order_is_j_then_i():
    lay = basis_layout(5, 7)
    assert list(lay.indices) == sorted(lay.indices, key=lambda x: (x.j, x.i))
    for j in range(1, 5):
        start = lay.level_start(j)
        assert lay.indices[start] == (1, j) or lay.row_counts[j - 1] == 0


def test_ord_at_infinity_examples():
    assert ord_at_infinity(DiffIndex(1, 1), 7, 10) == 52
    assert ord_at_infinity(DiffIndex(8, 1), 7, 10) == 3
    vals = [ord_at_infinity(idx, 7, 10) for idx in basis_layout(7, 10).indices]
    assert len(set(vals)) == 27 and min(vals) >= 0


def test_ord_at_infinity_rejects_invalid_index():
    with pytest.raises(ValueError):
        ord_at_infinity(DiffIndex(9, 1), 7, 10)
    with pytest.raises(ValueError):
        ord_at_infinity(DiffIndex(1, 7), 7, 10)


def test_row_count_identity_grid():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        for d in range(1, 61):
            if gcd(p, d) != 1:
                continue
            lay = basis_layout(p, d)
            assert sum((p - j) * d // p for j in range(1, p)) == (p - 1) * (d - 1) // 2
            assert lay.genus == genus(p, d)
            vals = [ord_at_infinity(idx, p, d) for idx in lay.indices]
            assert min(vals, default=0) >= 0
            assert len(set(v % (p * d) for v in vals)) == len(vals)


def test_curve_params_validation():
    F = make_field(5)
    c = CurveParams.from_values(F, [1, 0, 3])
    assert c.p == 5 and c.d == 2 and c.genus == 2
    with pytest.raises(ValueError):
        CurveParams.from_values(F, [1, 2, 0])
    with pytest.raises(ValueError):
        CurveParams.from_values(F, [1] * 6)  # d = 5
    with pytest.raises(ValueError):
        CurveParams(F, 3, tuple(F.element(1) for _ in range(3)))


def test_random_curve_has_nonzero_leading_coefficient():
    F = make_field(3)
    rng = np.random.default_rng(0)
    for _ in range(50):
        assert CurveParams.random(F, 4, rng).coeffs[-1]
