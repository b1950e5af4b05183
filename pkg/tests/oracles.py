"""Independent reference computations used by the tests.

None of these share code paths with the package: coefficients of f^lam come
from the multinomial expansion, determinants from the permutation expansion
over explicit polynomials in a_0..a_d, and ranks over F_p from sympy.
"""

from __future__ import annotations

import itertools
from math import factorial, prod

from sympy import GF
from sympy.polys.matrices import DomainMatrix


def compositions(lam: int, d: int, n: int):
    """Exponent vectors e_0..e_d with sum(e) = lam and sum(t e_t) = n."""

    def rec(t, left, weight, acc):
        if t < 0:
            if left == 0 and weight == 0:
                yield tuple(reversed(acc))
            return
        for e in range(min(left, weight // t if t else left) + 1):
            if t == 0 and e != left:
                continue
            yield from rec(t - 1, left - e, weight - t * e, acc + [e])

    yield from rec(d, lam, n, [])


def multinomial(lam: int, e) -> int:
    return factorial(lam) // prod(factorial(x) for x in e)


def b_multinomial(ctx, coeffs: list[int], lam: int, n: int) -> int:
    """x^n coefficient of (sum a_t x^t)^lam, field elements given as encodings."""
    d = len(coeffs) - 1
    total = 0
    for e in compositions(lam, d, n):
        term = ctx.from_int(multinomial(lam, e))
        for t, et in enumerate(e):
            if et:
                term = ctx.mul(term, ctx.pow(coeffs[t], et))
        total = ctx.add(total, term)
    return total


# -- polynomials in a_0..a_d over F_p, as {exponent tuple: coefficient} ------

def sym_b(p: int, d: int, lam: int, n: int) -> dict:
    out = {}
    for e in compositions(lam, d, n):
        c = multinomial(lam, e) % p
        if c:
            out[e] = c
    return out


def sym_mul(f: dict, g: dict, p: int) -> dict:
    out: dict = {}
    for ef, cf in f.items():
        for eg, cg in g.items():
            e = tuple(x + y for x, y in zip(ef, eg))
            out[e] = (out.get(e, 0) + cf * cg) % p
    return {e: c for e, c in out.items() if c}


def sym_add(f: dict, g: dict, p: int, sign: int = 1) -> dict:
    out = dict(f)
    for e, c in g.items():
        out[e] = (out.get(e, 0) + sign * c) % p
    return {e: c for e, c in out.items() if c}


def perm_sign(perm) -> int:
    inv = sum(1 for a, b in itertools.combinations(range(len(perm)), 2) if perm[a] > perm[b])
    return -1 if inv % 2 else 1


def sym_det(entries: list[list[dict]], p: int, nvars: int) -> dict:
    """Permutation-expansion determinant of a square matrix of polynomials."""
    n = len(entries)
    total: dict = {}
    one = {(0,) * nvars: 1}
    for perm in itertools.permutations(range(n)):
        term = one
        for r in range(n):
            term = sym_mul(term, entries[r][perm[r]], p)
            if not term:
                break
        if term:
            total = sym_add(total, term, p, perm_sign(perm))
    return total


def leading_exponent(f: dict) -> tuple[int, ...]:
    """Largest monomial when exponents are compared from a_d downwards."""
    return max(f, key=lambda e: e[::-1])


# -- fields and ranks ---------------------------------------------------------

def _conv(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def monic_polys(p: int, deg: int):
    for low in itertools.product(range(p), repeat=deg):
        yield list(low) + [1]


def reducible_by_enumeration(f: list[int], p: int) -> bool:
    """True iff f (monic, lowest first) is a product of two monic factors of positive degree."""
    m = len(f) - 1
    for k in range(1, m // 2 + 1):
        for g in monic_polys(p, k):
            for h in monic_polys(p, m - k):
                if _conv(g, h, p) == list(f):
                    return True
    return False


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    dm = DomainMatrix([[GF(p)(x) for x in r] for r in rows], (len(rows), len(rows[0])), GF(p))
    return dm.rank()


def det_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows:
        return 1
    dm = DomainMatrix([[GF(p)(x) for x in r] for r in rows], (len(rows), len(rows)), GF(p))
    return int(dm.det()) % p


# -- Cartier operator computed from its definition -----------------------------

def _naive_poly_mul(ctx, f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for s, x in enumerate(f):
        for t, y in enumerate(g):
            out[s + t] = ctx.add(out[s + t], ctx.mul(x, y))
    return out


def cartier_image(ctx, p: int, coeffs: list[int], i: int, j: int) -> dict:
    """C(y^(j-1) x^(i-1) dx) as {(i_out, j_out): coefficient}, p-th roots taken.

    Uses y^(j-1) = (y^p - f)^(j-1) = sum_k binom(j-1, k) y^(pk) (-f)^(j-1-k),
    C(y^(pk) g(x) dx) = y^k C(g dx), and C(x^(n-1) dx) = x^(n/p - 1) dx if p | n.
    """
    neg_f = [ctx.neg(c) for c in coeffs]
    out: dict = {}
    for k in range(j):
        binom = factorial(j - 1) // (factorial(k) * factorial(j - 1 - k))
        g = [0] * (i - 1) + [1]  # x^(i-1)
        for _ in range(j - 1 - k):
            g = _naive_poly_mul(ctx, g, neg_f)
        for deg, c in enumerate(g):
            n = deg + 1
            if c and n % p == 0:
                key = (n // p, k + 1)
                val = ctx.pth_root(ctx.mul(ctx.from_int(binom), c))
                out[key] = ctx.add(out.get(key, 0), val)
    return {k: v for k, v in out.items() if v}


def embed_into(small, large):
    """Field embedding F_{p^m} -> F_{p^M} (m | M) sending t to a root of small's modulus."""
    mod = list(small.modulus)

    def ev(r):
        acc = 0
        for c in reversed(mod):
            acc = large.add(large.mul(acc, r), c)
        return acc

    root = next(r for r in range(large.q) if ev(r) == 0)
    powers = [large.pow(root, k) for k in range(small.m)]

    def embed(x: int) -> int:
        acc = 0
        for c, w in zip(small.digits(x), powers):
            acc = large.add(acc, large.mul(c, w))
        return acc

    return embed
