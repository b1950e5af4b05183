from fractions import Fraction

import pytest

from ascartier.bounds import (
    L,
    L_J,
    dim_H,
    dim_H_le,
    index_sets,
    inject_C_into_R,
    inject_R_into_C,
    subspace_dims,
)
from ascartier.curve import row_count

GRID = [(p, d) for p in (3, 5, 7, 11) for d in range(1, 41) if d % p]


def test_L_examples():
    assert L(3, 2) == 1
    assert L(7, 10) == 15
    assert L(5, 18) == 17


def test_L_J_examples():
    assert L_J(7, 10, 1) == 7
    for p, d in GRID:
        assert L_J(p, d, (p - 1) // 2) == L(p, d)


def test_L_J_range():
    with pytest.raises(ValueError):
        L_J(7, 10, 5)
    with pytest.raises(ValueError):
        L_J(7, 10, 0)


def test_L_J_is_kernel_when_target_is_empty():
    # d = 1: no differentials at all; d = 2, p = 3: H(l, J) all zero
    assert L_J(3, 2, 1) == dim_H_le(3, 2, 1) == 1
    assert L_J(5, 1, 2) == 0


def test_L_J_bookkeeping():
    for p, d in GRID:
        for J in range(1, (p + 1) // 2 + 1):
            assert L_J(p, d, J) == dim_H_le(p, d, J) - sum(dim_H(p, d, ell, J) for ell in range(1, J + 1))


def test_subspace_dims_identities():
    for p, d in GRID:
        dims = subspace_dims(p, d)
        for J in range(1, p):
            assert dims[(J, J)] == (p - J) * d // (p * p) == row_count(p, d, J) // p
            assert dims[(J + 1, J)] == 0
        for J in range(2, p):
            sets = index_sets(p, d, J)
            for ell in range(1, J):
                rows_at = sum(1 for _, lam in sets.R if lam == J - ell)
                assert dims[(ell, J)] - dims[(ell, J - 1)] == rows_at


def _R_by_fractions(p, d, J):
    out = []
    for lam in range(1, J):
        lo = Fraction((p * lam - J + 1) * d, p * p)
        hi = Fraction((p * (lam + 1) - J) * d, p * p)
        out += [(i, lam) for i in range(1, d + 1) if lo < i < hi]
    return sorted(out)


def test_index_sets_match_rational_enumeration():
    for p, d in GRID:
        for J in range(2, p):
            s = index_sets(p, d, J)
            assert list(s.R) == _R_by_fractions(p, d, J)
            assert list(s.C) == [i for i in range(1, d + 1) if i % p and Fraction(i) < Fraction((p - J) * d, p)]
            assert len({i for i, _ in s.R}) == len(s.R)


def test_index_sets_worked_example():
    s = index_sets(5, 18, 3)
    assert s.C == (1, 2, 3, 4, 6, 7)
    assert s.R == ((3, 1), (4, 1), (5, 1), (6, 2), (7, 2), (8, 2))


def test_index_sets_empty_case():
    s = index_sets(3, 2, 2)
    assert s.R == () and s.C == ()


def test_index_sets_range():
    for J in (1, 5):
        with pytest.raises(ValueError):
            index_sets(5, 18, J)


def test_cardinality_formulas():
    for p, d in GRID:
        for J in range(2, p):
            s = index_sets(p, d, J)
            assert len(s.C) == row_count(p, d, J) - (p - J) * d // (p * p)
            assert len(s.R) == sum(dim_H(p, d, ell, J) - dim_H(p, d, ell, J - 1) for ell in range(1, J))
            if J <= (p + 1) // 2:
                assert len(s.R) <= len(s.C)
            if J >= (p + 1) // 2:
                assert len(s.C) <= len(s.R)


def test_inject_R_into_C_examples():
    assert inject_R_into_C(5, 18, 3, (3, 1)) == 3
    assert inject_R_into_C(5, 18, 3, (8, 2)) == 4
    images = [inject_R_into_C(5, 18, 3, r) for r in index_sets(5, 18, 3).R]
    assert images == [3, 2, 7, 6, 1, 4]


def test_inject_C_into_R_examples():
    assert inject_C_into_R(5, 18, 4, 1) == (11, 3)
    assert inject_C_into_R(5, 18, 4, 2) == (4, 1)


def test_injections_reject_out_of_set_inputs():
    with pytest.raises(ValueError):
        inject_R_into_C(5, 18, 3, (3, 2))
    with pytest.raises(ValueError):
        inject_R_into_C(5, 18, 4, (3, 1))  # J above (p+1)/2
    with pytest.raises(ValueError):
        inject_C_into_R(5, 18, 4, 5)
    with pytest.raises(ValueError):
        inject_C_into_R(5, 18, 2, 1)


def test_injections_exhaustive():
    for p, d in GRID:
        for J in range(2, p):
            s = index_sets(p, d, J)
            if J <= (p + 1) // 2:
                imgs = [inject_R_into_C(p, d, J, r) for r in s.R]
                assert set(imgs) <= set(s.C) and len(set(imgs)) == len(imgs)
            if J >= (p + 1) // 2:
                imgs = [inject_C_into_R(p, d, J, c) for c in s.C]
                assert set(imgs) <= set(s.R) and len(set(imgs)) == len(imgs)
