"""Finite fields F_p and F_{p^m}, and dense linear algebra over them.

Elements of F_{p^m} = F_p[t]/(modulus) are encoded as integers in [0, q):
the coefficient vector (c_0, ..., c_{m-1}) of c_0 + c_1 t + ... maps to
sum(c_k * p**k).  Elements of the prime field therefore encode as
themselves.  Scalar arithmetic works on these encodings directly; the
`FieldElement` wrapper exists for callers that want operator syntax.

For q up to ``TABLE_LIMIT`` the context also builds exp/log tables over a
primitive element, which back the vectorized numpy routines used by the
matrix code.  Larger fields fall back to element-by-element arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

TABLE_LIMIT = 1 << 21


# ---------------------------------------------------------------------------
# polynomials over F_p (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0)) % p for k in range(n)]
    return _trim(out)


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for s, x in enumerate(a):
        if x:
            for t, y in enumerate(b):
                out[s + t] += x * y
    return _trim([c % p for c in out])


def _poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        quot[shift] = c
        for k, y in enumerate(b):
            a[shift + k] = (a[shift + k] - c * y) % p
        _trim(a)
    return _trim(quot), a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    return _poly_divmod(a, b, p)[1]


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), mod, p)
        base = _poly_mod(_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(modulus: list[int] | tuple[int, ...], p: int) -> bool:
    """Rabin-style test: f of degree m is irreducible over F_p iff
    gcd(x^(p^k) - x, f) = 1 for every k <= m/2."""
    f = _trim([c % p for c in modulus])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    xpk = x
    for _ in range(m // 2):
        xpk = _poly_powmod(xpk, p, f, p)
        if len(_poly_gcd(f, _poly_sub(xpk, x, p), p)) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# field context
# ---------------------------------------------------------------------------

class FieldContext:
    """The field F_q, q = p**m, presented as F_p[t]/(modulus).

    ``modulus`` is monic of degree m, stored lowest coefficient first with
    the leading 1 included.  Contexts compare equal iff (p, modulus) agree.
    """

    def __init__(self, p: int, modulus: tuple[int, ...] | list[int]):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported (p must be odd)")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = len(modulus) - 1
        self.modulus = modulus
        self.q = p**self.m
        self._pows = tuple(p**k for k in range(self.m + 1))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"FieldContext(F_{self.p})"
        return f"FieldContext(F_{self.p}^{self.m}, modulus={list(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldContext) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __reduce__(self):
        # tables are rebuilt on demand, never pickled
        return (FieldContext, (self.p, self.modulus))

    # -- encodings ---------------------------------------------------------

    def digits(self, x: int) -> list[int]:
        """Coefficient vector (length m, lowest first) of the element x."""
        out = []
        for _ in range(self.m):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def from_digits(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError(f"expected at most {self.m} coefficients, got {len(coeffs)}")
        return sum((int(c) % self.p) * self._pows[k] for k, c in enumerate(coeffs))

    def element(self, value) -> FieldElement:
        """Wrap an integer encoding or a coefficient vector."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.from_digits(value))
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError(f"encoding {value} out of range for q={self.q}")
        return FieldElement(self, value)

    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def from_int(self, n: int) -> int:
        """Encoding of the image of the integer n in the prime subfield."""
        return n % self.p

    def random(self, rng: random.Random | np.random.Generator, nonzero: bool = False) -> int:
        lo = 1 if nonzero else 0
        if isinstance(rng, np.random.Generator):
            return int(rng.integers(lo, self.q))
        return rng.randrange(lo, self.q)

    # -- scalar arithmetic on encodings -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p, out = self.p, 0
        for w in self._pows[:-1]:
            out += ((a // w + b // w) % p) * w
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        p = self.p
        return sum(((-(a // w)) % p) * w for w in self._pows[:-1])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        if self.q <= TABLE_LIMIT:
            return int(self._exp[(int(self._log[a]) + int(self._log[b])) % (self.q - 1)])
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _poly_mul(self.digits(a), self.digits(b), self.p)
        return self.from_digits(_poly_mod(prod, list(self.modulus), self.p) if prod else [])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.m == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        # inverse of x -> x^p on F_{p^m} is x -> x^(p^(m-1))
        return self.pow(a, self.p ** (self.m - 1))

    # -- tables and vectorized arithmetic -----------------------------------

    @cached_property
    def primitive_element(self) -> int:
        """Smallest encoding generating the multiplicative group."""
        factors = _prime_factors(self.q - 1)
        for g in range(2 if self.q > 2 else 1, self.q):
            if all(self._pow_poly(g, (self.q - 1) // r) != 1 for r in factors):
                return g
        return 1

    def _pow_poly(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_poly(result, a)
            a = self._mul_poly(a, a)
            e >>= 1
        return result

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        if self.q > TABLE_LIMIT:
            raise RuntimeError("field too large for log tables")
        p, m, q = self.p, self.m, self.q
        g = self.primitive_element
        # multiplication by g as an m x m matrix over F_p acting on digit vectors
        mult = np.zeros((m, m), dtype=np.int64)
        for k in range(m):
            mult[:, k] = self.digits(self._mul_poly(g, self._pows[k]))
        weights = np.array(self._pows[:-1], dtype=np.int64)
        block = max(1, int(q**0.5))
        first = np.zeros((block, m), dtype=np.int64)
        v = np.zeros(m, dtype=np.int64)
        v[0] = 1
        for k in range(block):
            first[k] = v
            v = mult @ v % p
        step = np.eye(m, dtype=np.int64)
        for _ in range(block):
            step = mult @ step % p
        chunks = [first]
        total = block
        cur = first
        while total < q - 1:
            cur = cur @ step.T % p
            chunks.append(cur)
            total += block
        digits = np.concatenate(chunks)[: q - 1]
        exp = (digits @ weights).astype(np.int64)
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)
        if (log[1:] < 0).any():
            raise RuntimeError("primitive element table construction failed")
        return exp, log

    @property
    def _exp(self) -> np.ndarray:
        return self._tables[0]

    @property
    def _log(self) -> np.ndarray:
        return self._tables[1]

    @property
    def vectorized(self) -> bool:
        return self.m == 1 or self.q <= TABLE_LIMIT

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (a + b) % self.p
        if not self.vectorized:
            return np.vectorize(self.add, otypes=[np.int64])(a, b)
        p = self.p
        out = np.zeros(np.broadcast_shapes(np.shape(a), np.shape(b)), dtype=np.int64)
        for w in self._pows[:-1]:
            out += ((a // w + b // w) % p) * w
        return out

    def vneg(self, a: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return -a % self.p
        if not self.vectorized:
            return np.vectorize(self.neg, otypes=[np.int64])(a)
        p = self.p
        out = np.zeros(np.shape(a), dtype=np.int64)
        for w in self._pows[:-1]:
            out += ((-(a // w)) % p) * w
        return out

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return a * b % self.p
        if not self.vectorized:
            return np.vectorize(self.mul, otypes=[np.int64])(a, b)
        exp, log = self._tables
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = exp[(log[a] + log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a: np.ndarray) -> np.ndarray:
        """Elementwise inverse; zero entries map to zero."""
        if not self.vectorized or self.m == 1:
            return np.vectorize(lambda x: self.inv(x) if x else 0, otypes=[np.int64])(a)
        exp, log = self._tables
        a = np.asarray(a, dtype=np.int64)
        return np.where(a == 0, 0, exp[(-log[a]) % (self.q - 1)])


@lru_cache(maxsize=None)
def make_field(p: int, m: int = 1, seed: int = 0) -> FieldContext:
    """Field of order p**m with a modulus found by a seeded random search.

    Candidates are monic polynomials of degree m with coefficients drawn
    from ``random.Random(seed)``; the first irreducible one is used, so the
    result depends only on (p, m, seed).  For m = 1 the modulus is x.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if p == 2:
        raise ValueError("characteristic 2 is not supported (p must be odd)")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if m == 1:
        return FieldContext(p, (0, 1))
    rng = random.Random(seed)
    while True:
        cand = [rng.randrange(p) for _ in range(m)] + [1]
        if cand[0] != 0 and is_irreducible(cand, p):
            return FieldContext(p, tuple(cand))


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    ctx: FieldContext
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.sub(o, self.value))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.mul(self.value, self.ctx.inv(o)))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def frobenius(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.frobenius(self.value))

    def pth_root(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.pth_root(self.value))

    @property
    def coeffs(self) -> list[int]:
        return self.ctx.digits(self.value)

    def __repr__(self) -> str:
        if self.ctx.m == 1:
            return str(self.value)
        return "[" + ",".join(map(str, self.coeffs)) + "]"


def pth_root(x: FieldElement) -> FieldElement:
    """The unique y with y**p == x."""
    return x.pth_root()


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

@dataclass
class FqMatrix:
    """Dense matrix over a FieldContext; ``data`` holds element encodings."""

    ctx: FieldContext
    data: np.ndarray

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.int64)
        if self.data.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")

    @classmethod
    def zeros(cls, ctx: FieldContext, rows: int, cols: int) -> FqMatrix:
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def from_rows(cls, ctx: FieldContext, rows: list[list], cols: int | None = None) -> FqMatrix:
        enc = [[int(ctx.element(x).value) for x in row] for row in rows]
        if not enc:
            return cls.zeros(ctx, 0, cols or 0)
        return cls(ctx, np.array(enc, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def entries(self) -> list[FieldElement]:
        return [FieldElement(self.ctx, int(v)) for v in self.data.ravel()]

    def __getitem__(self, key: tuple[int, int]) -> FieldElement:
        return FieldElement(self.ctx, int(self.data[key]))

    def transpose(self) -> FqMatrix:
        return FqMatrix(self.ctx, self.data.T.copy())

    def columns(self, idx) -> FqMatrix:
        return FqMatrix(self.ctx, self.data[:, idx])


def prefix_ranks(mat: FqMatrix) -> list[int]:
    """Ranks of the leading column blocks: entry c is rank(mat[:, :c+1]).

    Column-by-column elimination with first-nonzero pivoting; a column adds
    a pivot exactly when it is independent of the columns before it.
    """
    ctx = mat.ctx
    a = mat.data.copy()
    nrows, ncols = a.shape
    out = []
    r = 0
    for c in range(ncols):
        if r < nrows:
            nz = np.flatnonzero(a[r:, c])
            if nz.size:
                piv = r + int(nz[0])
                if piv != r:
                    a[[r, piv]] = a[[piv, r]]
                pivot_row = ctx.vmul(a[r, c:], ctx.inv(int(a[r, c])))
                a[r, c:] = pivot_row
                below = r + 1 + np.flatnonzero(a[r + 1:, c])
                if below.size:
                    factors = ctx.vneg(a[below, c])
                    a[below, c:] = ctx.vadd(a[below, c:], ctx.vmul(factors[:, None], pivot_row[None, :]))
                r += 1
        out.append(r)
    return out


def rank(mat: FqMatrix) -> int:
    if mat.cols == 0 or mat.rows == 0:
        return 0
    return prefix_ranks(mat)[-1]


def rank_and_kernel(mat: FqMatrix) -> tuple[int, int]:
    """(rank, dimension of the right kernel) of mat."""
    r = rank(mat)
    return r, mat.cols - r


def rank_scalar(mat: FqMatrix) -> int:
    """Element-by-element Gaussian elimination; reference for `rank`."""
    ctx = mat.ctx
    a = [[int(x) for x in row] for row in mat.data]
    nrows, ncols = mat.rows, mat.cols
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ctx.inv(a[r][c])
        a[r] = [ctx.mul(x, inv) for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = ctx.neg(a[i][c])
                a[i] = [ctx.add(x, ctx.mul(f, y)) for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r
