"""The Cartier operator on H^0(Y, Omega^1) for y^p - y = f(x).

Writing y^(j-1) = (y^p - f)^(j-1) and expanding, the image of the basis
differential w_{i',j} = y^(j-1) x^(i'-1) dx is

    C(w_{i',j}) = sum_{l=1..j} binom(j-1, l-1) (-1)^(j-l) y^(l-1) C(f^(j-l) x^(i'-1) dx),

and C(x^(n-1) dx) = x^(n/p - 1) dx when p | n, else 0.  So the coefficient of
w_{i,l} is (binom(j-1, l-1) (-1)^(j-l) b_{j-l, p i - i'})^(1/p), where b_{lam,n}
is the coefficient of x^n in f^lam.

`CartierMatrix.A` stores these coefficients *before* the p-th root.  Since C
is p^{-1}-linear, C(sum c_v w_v) = sum_u (sum_v A[u,v] c_v)^(1/p) w_u, and the
p-th root is a bijection, so ker C has the dimension of the right kernel of A.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import FieldContext, FieldElement, FqMatrix, prefix_ranks, rank
from .bounds import L_J, index_sets
from .curve import BasisLayout, CurveParams


def poly_mul(ctx: FieldContext, f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Product of two dense polynomials with coefficients encoded in ctx."""
    if len(f) == 0 or len(g) == 0:
        return np.zeros(0, dtype=np.int64)
    if ctx.m == 1:
        return np.convolve(f, g) % ctx.p
    out = np.zeros(len(f) + len(g) - 1, dtype=np.int64)
    for t, c in enumerate(f):
        if c:
            seg = slice(t, t + len(g))
            out[seg] = ctx.vadd(out[seg], ctx.vmul(np.int64(c), g))
    return out


@dataclass(frozen=True)
class PolyPowerTable:
    """Coefficients of f^lam for lam = 0..p-1; ``powers[lam][n]`` is b_{lam,n}."""

    curve: CurveParams
    powers: tuple[np.ndarray, ...]

    def b(self, lam: int, n: int) -> int:
        coeffs = self.powers[lam]
        return int(coeffs[n]) if 0 <= n < len(coeffs) else 0

    def element(self, lam: int, n: int) -> FieldElement:
        return FieldElement(self.curve.field, self.b(lam, n))


def poly_power_table(curve: CurveParams, max_power: int | None = None) -> PolyPowerTable:
    ctx = curve.field
    top = curve.p - 1 if max_power is None else max_power
    f = curve.values
    powers = [np.ones(1, dtype=np.int64)]
    for _ in range(top):
        powers.append(poly_mul(ctx, powers[-1], f))
    return PolyPowerTable(curve, tuple(powers))


def _binom_row_mod_p(n: int, p: int) -> list[int]:
    row = [1]
    for _ in range(n):
        row = [1] + [(row[k] + row[k + 1]) % p for k in range(len(row) - 1)] + [1]
    return row


@dataclass(frozen=True)
class CartierMatrix:
    layout: BasisLayout
    A: FqMatrix

    @property
    def genus(self) -> int:
        return self.layout.genus


def cartier_matrix(curve: CurveParams, table: PolyPowerTable | None = None) -> CartierMatrix:
    ctx = curve.field
    p, d = curve.p, curve.d
    layout = curve.layout()
    table = table or poly_power_table(curve)
    g = layout.genus
    A = np.zeros((g, g), dtype=np.int64)
    counts = layout.row_counts
    for j in range(1, p):
        if counts[j - 1] == 0:
            continue
        cols = np.arange(1, counts[j - 1] + 1)
        col0 = layout.level_start(j)
        binoms = _binom_row_mod_p(j - 1, p)
        for ell in range(1, j + 1):
            lam = j - ell
            coeffs = table.powers[lam]
            # largest target i is (lam d + i')/p, which stays inside level ell
            rows = np.arange(1, counts[ell - 1] + 1)
            if rows.size == 0:
                continue
            n = p * rows[:, None] - cols[None, :]
            mask = (n >= 0) & (n < len(coeffs))
            block = np.where(mask, coeffs[np.clip(n, 0, len(coeffs) - 1)], 0)
            scale = ctx.from_int(binoms[ell - 1] * (-1) ** lam)
            if scale != 1:
                block = ctx.vmul(block, np.int64(scale))
            row0 = layout.level_start(ell)
            A[row0:row0 + rows.size, col0:col0 + cols.size] = block
    return CartierMatrix(layout, FqMatrix(ctx, A))


def a_number(curve: CurveParams) -> int:
    """dim ker C on H^0(Y, Omega^1)."""
    cm = cartier_matrix(curve)
    return cm.genus - rank(cm.A)


@dataclass(frozen=True)
class FiltrationReport:
    """Per level J = 1..p-1: dim H^{<=J}, dim ker C on it, and the generic
    prediction L_J(d) where defined (J <= (p+1)/2, otherwise None)."""

    p: int
    d: int
    dims: tuple[int, ...]
    kernel_dims: tuple[int, ...]
    predicted: tuple[int | None, ...]

    def rows(self):
        return [
            {"J": J, "dim": dim, "kernel": ker, "predicted": pred}
            for J, dim, ker, pred in zip(range(1, self.p), self.dims, self.kernel_dims, self.predicted)
        ]


def filtration_report(curve: CurveParams, cm: CartierMatrix | None = None) -> FiltrationReport:
    p, d = curve.p, curve.d
    cm = cm or cartier_matrix(curve)
    layout = cm.layout
    # H^{<=J} is spanned by a prefix of the columns, so one elimination suffices
    ranks = prefix_ranks(cm.A) if cm.genus else []
    dims, kers, preds = [], [], []
    for J in range(1, p):
        n = layout.dim_up_to(J)
        r = ranks[n - 1] if n else 0
        dims.append(n)
        kers.append(n - r)
        preds.append(L_J(p, d, J) if J <= (p + 1) // 2 else None)
    return FiltrationReport(p, d, tuple(dims), tuple(kers), tuple(preds))


def phi_matrix(curve: CurveParams, J: int, table: PolyPowerTable | None = None) -> FqMatrix:
    """Specialization of M_J: entry b_{lam, p i - i'} at row (i, lam), column i'.

    Binomials, signs and p-th roots are dropped; none of them change the rank
    of the matrix of Phi_J.
    """
    sets = index_sets(curve.p, curve.d, J)
    table = table or poly_power_table(curve, max_power=J - 1)
    return specialize(sets.R, sets.C, curve.p, table)


def specialize(rows, cols, p: int, table: PolyPowerTable) -> FqMatrix:
    ctx = table.curve.field
    out = np.zeros((len(rows), len(cols)), dtype=np.int64)
    if rows and cols:
        ip = np.array(cols, dtype=np.int64)
        for r, (i, lam) in enumerate(rows):
            coeffs = table.powers[lam]
            n = p * i - ip
            ok = (n >= 0) & (n < len(coeffs))
            out[r] = np.where(ok, coeffs[np.clip(n, 0, len(coeffs) - 1)], 0)
    return FqMatrix(ctx, out)


def phi_matrix_rank(curve: CurveParams, J: int, table: PolyPowerTable | None = None) -> tuple[int, int, int]:
    mat = phi_matrix(curve, J, table)
    return mat.rows, mat.cols, rank(mat)
