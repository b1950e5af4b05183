"""Certificates that the maximal minor N of the generic matrix M_J has det(N) != 0.

The entries of M_J are polynomials b_{lam, p i - i'} in S = k[a_0, ..., a_d].
Under the monomial order comparing exponents from a_d downwards, each
nonzero entry has leading monomial a_phi * a_d^(lam-1), where
phi(i, i') = p i - i' - (lam-1) d.  A greedy matching on phi values, from d
down to 1, yields a bijection sigma0 whose permutation product has a leading
monomial no other permutation can reach; that monomial survives in det(N).
Nothing here expands the determinant.
"""

from __future__ import annotations

import functools
import warnings
from dataclasses import dataclass, field

import numpy as np

from .algebra import FieldContext, rank
from .bounds import IndexSets, index_sets
from .cartier import PolyPowerTable, poly_power_table, specialize
from .curve import CurveParams, check_params


@functools.total_ordering
@dataclass(frozen=True)
class Monomial:
    """a_0^e_0 ... a_d^e_d; ordered by the exponent of the largest index first."""

    exponents: tuple[int, ...]

    @classmethod
    def one(cls, d: int) -> Monomial:
        return cls((0,) * (d + 1))

    @classmethod
    def var(cls, d: int, t: int, power: int = 1) -> Monomial:
        e = [0] * (d + 1)
        e[t] = power
        return cls(tuple(e))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def weight(self) -> int:
        return sum(t * e for t, e in enumerate(self.exponents))

    def _key(self) -> tuple[int, ...]:
        return self.exponents[::-1]

    def __lt__(self, other: Monomial) -> bool:
        if len(self.exponents) != len(other.exponents):
            raise ValueError("monomials in different numbers of variables")
        return self._key() < other._key()

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(x + y for x, y in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        parts = []
        for t, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"a_{t}")
            elif e > 1:
                parts.append(f"a_{t}^{e}")
        return "*".join(parts) or "1"


def leading_monomial_b(p: int, d: int, lam: int, n: int) -> Monomial:
    """LM of b_{lam,n} (the x^n coefficient of the generic f^lam).

    Valid for 0 < lam < p and (lam-1)d < n <= lam d, where it equals
    a_{n-(lam-1)d} a_d^(lam-1) and occurs with coefficient lam (or 1 when n = lam d), nonzero mod p.
    """
    if not 0 < lam < p:
        raise ValueError(f"lam={lam} out of range (0, {p})")
    if not (lam - 1) * d < n <= lam * d:
        raise ValueError(f"n={n} outside ({(lam - 1) * d}, {lam * d}] for lam={lam}")
    e = [0] * (d + 1)
    e[n - (lam - 1) * d] += 1
    e[d] += lam - 1
    return Monomial(tuple(e))


def in_support(p: int, d: int, row: tuple[int, int], ip: int) -> bool:
    i, lam = row
    return p * i - ip <= lam * d


def phi(p: int, d: int, row: tuple[int, int], ip: int) -> int:
    i, lam = row
    if not in_support(p, d, row, ip):
        raise ValueError(f"entry ({i}, {ip}) of M is structurally zero")
    return p * i - ip - (lam - 1) * d


@dataclass(frozen=True)
class MinorSpec:
    """Rows and columns of the square minor N of M_J.

    For J <= (p+1)/2 N takes the rightmost |R_J| columns; for larger J the
    top |C_J| rows.  At J = (p+1)/2 both give all of M_J.
    """

    sets: IndexSets
    rows: tuple[tuple[int, int], ...]
    cols: tuple[int, ...]

    @property
    def p(self) -> int:
        return self.sets.p

    @property
    def d(self) -> int:
        return self.sets.d

    @property
    def J(self) -> int:
        return self.sets.J

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, ip) for (i, lam) in self.rows for ip in self.cols if in_support(self.p, self.d, (i, lam), ip)
        )

    @property
    def degree(self) -> int:
        """Total degree of det(N): every permutation product has degree sum(lam)."""
        return sum(lam for _, lam in self.rows)


def minor_spec(p: int, d: int, J: int, rule: str | None = None) -> MinorSpec:
    """``rule`` forces "columns" or "rows"; by default J decides."""
    check_params(p, d)
    sets = index_sets(p, d, J)
    if rule is None:
        rule = "columns" if J <= (p + 1) // 2 else "rows"
    if rule == "columns":
        if len(sets.R) > len(sets.C):
            raise ValueError("column rule needs |R_J| <= |C_J|")
        rows, cols = sets.R, sets.C[len(sets.C) - len(sets.R):]
    elif rule == "rows":
        if len(sets.C) > len(sets.R):
            raise ValueError("row rule needs |C_J| <= |R_J|")
        rows, cols = sets.R[: len(sets.C)], sets.C
    else:
        raise ValueError(f"unknown minor rule {rule!r}")
    return MinorSpec(sets, tuple(rows), tuple(cols))


@dataclass(frozen=True)
class GreedyCertificate:
    minor: MinorSpec
    steps: dict[int, tuple[tuple[int, ...], tuple[int, ...]]]  # phi value -> (rows, cols), nonempty only
    sigma0: dict[int, int]
    leading_monomial: Monomial | None
    success: bool
    unmatched_rows: tuple[int, ...] = field(default=())

    def step_order(self) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
        return [(ell, *self.steps[ell]) for ell in sorted(self.steps, reverse=True)]


def greedy_sigma0(minor: MinorSpec) -> GreedyCertificate:
    """Build sigma0 by matching phi values d, d-1, ..., 1 greedily.

    At step l every still-unmatched row with an unmatched column of phi value l
    takes that column.  Injectivity of phi along rows and along columns makes
    each choice unique; a violation raises AssertionError.
    """
    p, d = minor.p, minor.d
    lam = dict(minor.rows)
    free_rows = [i for i, _ in minor.rows]
    free_cols = set(minor.cols)
    sigma0: dict[int, int] = {}
    steps = {}
    for ell in range(d, 0, -1):
        if not free_rows:
            break
        matched = []
        for i in free_rows:
            hits = [ip for ip in free_cols if in_support(p, d, (i, lam[i]), ip) and phi(p, d, (i, lam[i]), ip) == ell]
            assert len(hits) <= 1, f"phi not injective along row {i}"
            if hits:
                matched.append((i, hits[0]))
        targets = [ip for _, ip in matched]
        assert len(set(targets)) == len(targets), f"phi not injective along columns at step {ell}"
        if matched:
            for i, ip in matched:
                sigma0[i] = ip
                free_cols.discard(ip)
            done = {i for i, _ in matched}
            free_rows = [i for i in free_rows if i not in done]
            steps[ell] = (tuple(i for i, _ in matched), tuple(ip for _, ip in matched))
    success = not free_rows and not free_cols
    lm = None
    if success:
        e = [0] * (d + 1)
        for i, ip in sigma0.items():
            e[phi(p, d, (i, lam[i]), ip)] += 1
        e[d] += sum(lam[i] - 1 for i in sigma0)
        lm = Monomial(tuple(e))
    return GreedyCertificate(minor, steps, sigma0, lm, success, tuple(free_rows))


def certify(p: int, d: int, J: int) -> GreedyCertificate:
    return greedy_sigma0(minor_spec(p, d, J))


def specialize_minor(minor: MinorSpec, table: PolyPowerTable):
    """N with the variables a_t replaced by the coefficients behind ``table``."""
    return specialize(minor.rows, minor.cols, minor.p, table)


def det_nonzero(minor: MinorSpec, table: PolyPowerTable) -> bool:
    if minor.size == 0:
        return True
    return rank(specialize_minor(minor, table)) == minor.size


def randomized_det_check(
    minor: MinorSpec,
    field: FieldContext,
    trials: int,
    seed: int,
    confidence: float = 0.9,
) -> float:
    """Fraction of random specializations (a_d != 0) at which det(N) != 0.

    A nonzero det(N) of total degree D vanishes at a uniform random point
    with probability at most D/q; a warning is issued when that bound is too
    weak to support ``confidence``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if field.p != minor.p:
        raise ValueError("field characteristic does not match the minor")
    if minor.size and 1 - minor.degree / field.q < confidence:
        warnings.warn(
            f"field of order {field.q} is small for degree {minor.degree}: "
            f"nonvanishing probability bound {1 - minor.degree / field.q:.3f} < {confidence}",
            stacklevel=2,
        )
    if minor.size == 0:
        return 1.0
    rng = np.random.default_rng(seed)
    top = max(lam for _, lam in minor.rows)
    hits = 0
    for _ in range(trials):
        curve = CurveParams.random(field, minor.d, rng)
        hits += det_nonzero(minor, poly_power_table(curve, max_power=top))
    return hits / trials
