"""Artin-Schreier curves y^p - y = f(x) over P^1 and their regular differentials.

The differentials y^(j-1) x^(i-1) dx with 0 < j < p and 0 < i < (p-j)d/p
form a basis of H^0(Y, Omega^1).  Everything downstream indexes matrices by
`BasisLayout`, which fixes the order (j ascending, then i ascending).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import gcd
from typing import NamedTuple

import numpy as np

from .algebra import FieldContext, FieldElement, is_prime


def check_params(p: int, d: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if p == 2:
        raise ValueError("p must be odd")
    if d < 1:
        raise ValueError(f"degree d must be positive, got {d}")
    if gcd(d, p) != 1:
        raise ValueError(f"p={p} divides d={d}")


def genus(p: int, d: int) -> int:
    check_params(p, d)
    return (p - 1) * (d - 1) // 2


def row_count(p: int, d: int, j: int) -> int:
    """Number of i with 0 < i < (p-j)d/p; the bound is never an integer."""
    return (p - j) * d // p


class DiffIndex(NamedTuple):
    """Index (i, j) of the differential y^(j-1) x^(i-1) dx."""

    i: int
    j: int


@dataclass(frozen=True)
class BasisLayout:
    p: int
    d: int
    indices: tuple[DiffIndex, ...]
    row_counts: tuple[int, ...]  # entry j-1 holds the count at level j

    @property
    def genus(self) -> int:
        return len(self.indices)

    @cached_property
    def position(self) -> dict[DiffIndex, int]:
        return {idx: k for k, idx in enumerate(self.indices)}

    def level_start(self, j: int) -> int:
        """Position of (1, j); levels occupy contiguous blocks."""
        return sum(self.row_counts[: j - 1])

    def dim_up_to(self, J: int) -> int:
        """dim H^{<=J}: the number of basis elements with j <= J."""
        return sum(self.row_counts[:J])

    def __len__(self) -> int:
        return len(self.indices)


def basis_layout(p: int, d: int) -> BasisLayout:
    check_params(p, d)
    counts = tuple(row_count(p, d, j) for j in range(1, p))
    indices = tuple(DiffIndex(i, j) for j in range(1, p) for i in range(1, counts[j - 1] + 1))
    return BasisLayout(p, d, indices, counts)


def is_valid_index(idx: DiffIndex, p: int, d: int) -> bool:
    i, j = idx
    return 0 < j < p and 0 < i and p * i < (p - j) * d


def ord_at_infinity(idx: DiffIndex, p: int, d: int) -> int:
    """Order of vanishing of the differential at the point over infinity."""
    if not is_valid_index(DiffIndex(*idx), p, d):
        raise ValueError(f"{tuple(idx)} is not a basis index for p={p}, d={d}")
    i, j = idx
    return p * d - i * p - j * d - 1


@dataclass(frozen=True)
class CurveParams:
    """The curve y^p - y = a_0 + a_1 x + ... + a_d x^d over ``field``."""

    field: FieldContext
    d: int
    coeffs: tuple[FieldElement, ...]
    p: int = dc_field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "p", self.field.p)
        check_params(self.p, self.d)
        coeffs = tuple(self.field.element(c) for c in self.coeffs)
        if len(coeffs) != self.d + 1:
            raise ValueError(f"expected {self.d + 1} coefficients a_0..a_d, got {len(coeffs)}")
        if not coeffs[-1]:
            raise ValueError("leading coefficient a_d must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_values(cls, field: FieldContext, values) -> CurveParams:
        """Build from integer encodings or coefficient vectors, a_0 first."""
        values = list(values)
        return cls(field, len(values) - 1, tuple(field.element(v) for v in values))

    @classmethod
    def random(cls, field: FieldContext, d: int, rng: np.random.Generator) -> CurveParams:
        vals = [int(v) for v in rng.integers(0, field.q, size=d + 1)]
        while vals[-1] == 0:
            vals[-1] = int(rng.integers(0, field.q))
        return cls(field, d, tuple(FieldElement(field, v) for v in vals))

    @property
    def values(self) -> np.ndarray:
        return np.array([c.value for c in self.coeffs], dtype=np.int64)

    @property
    def genus(self) -> int:
        return genus(self.p, self.d)

    def layout(self) -> BasisLayout:
        return basis_layout(self.p, self.d)
