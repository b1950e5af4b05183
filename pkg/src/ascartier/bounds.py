"""Closed-form kernel bounds and the index sets of the level-dropping maps.

All interval tests are done by integer cross-multiplication; the rational
endpoints involved are never integers when p does not divide d, but nothing
here relies on that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import check_params, row_count


def _check_J(p: int, J: int, lo: int, hi: int) -> None:
    if not lo <= J <= hi:
        raise ValueError(f"J={J} out of range [{lo}, {hi}] for p={p}")


def L(p: int, d: int) -> int:
    """Minimal a-number of y^p - y = f(x) with deg f = d."""
    check_params(p, d)
    p2 = p * p
    return sum(
        row_count(p, d, ell) - (p2 + 1 - 2 * ell * p) * d // (2 * p2)
        for ell in range(1, (p - 1) // 2 + 1)
    )


def L_J(p: int, d: int, J: int) -> int:
    """Generic kernel dimension of the Cartier operator on H^{<=J}, J <= (p+1)/2."""
    check_params(p, d)
    _check_J(p, J, 1, (p + 1) // 2)
    return sum(row_count(p, d, ell) - dim_H(p, d, ell, J) for ell in range(1, J + 1))


def dim_H(p: int, d: int, ell: int, e: int) -> int:
    """dim H(ell, e): level-ell differentials with i <= (p(e+1-ell)-e)d/p^2.

    Zero when e < ell.  The index range is read as 0 < i <= floor(bound),
    which is what the image dimension count requires.
    """
    if e < ell:
        return 0
    return (p * (e + 1 - ell) - e) * d // (p * p)


def dim_H_le(p: int, d: int, J: int) -> int:
    """dim H^{<=J}."""
    return sum(row_count(p, d, j) for j in range(1, J + 1))


@dataclass(frozen=True)
class SubspaceDims:
    p: int
    d: int
    table: dict[tuple[int, int], int]

    def __getitem__(self, key: tuple[int, int]) -> int:
        ell, e = key
        return self.table.get((ell, e), 0) if ell <= e else 0


def subspace_dims(p: int, d: int) -> SubspaceDims:
    check_params(p, d)
    table = {(ell, e): dim_H(p, d, ell, e) for e in range(1, p) for ell in range(1, e + 1)}
    return SubspaceDims(p, d, table)


@dataclass(frozen=True)
class IndexSets:
    """Columns C (indices i') and rows R (pairs (i, lam)) of M_J.

    ``R`` stores (i, lam) where lam is the power of f whose coefficients
    fill that row; the row indexes the differential at level J - lam.
    """

    p: int
    d: int
    J: int
    C: tuple[int, ...]
    R: tuple[tuple[int, int], ...]

    @property
    def lam(self) -> dict[int, int]:
        return dict(self.R)


def _R_interval(p: int, d: int, J: int, lam: int) -> tuple[int, int]:
    """Integer range [lo, hi] of i with (p lam - J + 1)d < p^2 i < (p(lam+1) - J)d."""
    p2 = p * p
    lo_num = (p * lam - J + 1) * d
    hi_num = (p * (lam + 1) - J) * d
    return lo_num // p2 + 1, (hi_num - 1) // p2


def index_sets(p: int, d: int, J: int) -> IndexSets:
    check_params(p, d)
    _check_J(p, J, 2, p - 1)
    C = tuple(ip for ip in range(1, row_count(p, d, J) + 1) if ip % p)
    R = []
    for lam in range(1, J):
        lo, hi = _R_interval(p, d, J, lam)
        R.extend((i, lam) for i in range(max(lo, 1), hi + 1))
    R.sort()
    return IndexSets(p, d, J, C, tuple(R))


def in_R(p: int, d: int, J: int, i: int, lam: int) -> bool:
    if not 0 < lam < J:
        return False
    lo, hi = _R_interval(p, d, J, lam)
    return 0 < i and lo <= i <= hi


def in_C(p: int, d: int, J: int, ip: int) -> bool:
    return 0 < ip and ip % p != 0 and p * ip < (p - J) * d


def inject_R_into_C(p: int, d: int, J: int, row: tuple[int, int]) -> int:
    """The injection R_J -> C_J, (i, lam) -> |p i - lam d|, for J <= (p+1)/2."""
    check_params(p, d)
    _check_J(p, J, 2, (p + 1) // 2)
    i, lam = row
    if not in_R(p, d, J, i, lam):
        raise ValueError(f"{row} is not in R_{J} for p={p}, d={d}")
    # p i - lam d is nonzero since p does not divide lam d
    return abs(p * i - lam * d)


def inject_C_into_R(p: int, d: int, J: int, ip: int) -> tuple[int, int]:
    """The injection C_J -> R_J for J >= (p+1)/2.

    With iota in (0, d) solving p iota = i' mod d and rho = (p iota - i')/d,
    the image is (iota, rho) if rho < J and (d - iota, p - rho) otherwise.
    """
    check_params(p, d)
    _check_J(p, J, (p + 1) // 2, p - 1)
    if not in_C(p, d, J, ip):
        raise ValueError(f"{ip} is not in C_{J} for p={p}, d={d}")
    iota = ip * pow(p, -1, d) % d if d > 1 else 0
    rho = (p * iota - ip) // d
    if rho < J:
        return iota, rho
    return d - iota, p - rho
