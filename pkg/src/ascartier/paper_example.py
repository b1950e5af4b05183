"""Re-derive the p=5, d=18, J=3 worked example and compare it with golden values."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .certificate import greedy_sigma0, in_support, minor_spec, phi

CHECKS = ("index_sets", "matrix", "phi", "steps", "sigma0", "leading_monomial")


def load_golden(path: str | Path | None = None) -> dict:
    if path is None:
        text = resources.files("ascartier").joinpath("data/paper_example.json").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return json.loads(text)


def derive(p: int, d: int, J: int) -> dict:
    """The example's tables, computed from scratch, in the golden-file layout."""
    minor = minor_spec(p, d, J)
    sets = minor.sets
    matrix, phis = [], []
    for row in sets.R:
        i, lam = row
        matrix.append([f"b_{{{lam},{p * i - ip}}}" if in_support(p, d, row, ip) else None for ip in sets.C])
        phis.append([phi(p, d, row, ip) if in_support(p, d, row, ip) else None for ip in sets.C])
    cert = greedy_sigma0(minor)
    return {
        "p": p,
        "d": d,
        "J": J,
        "index_sets": {"C": list(sets.C), "R": [list(r) for r in sets.R]},
        "matrix": matrix,
        "phi": phis,
        "steps": [[ell, list(rows), list(cols)] for ell, rows, cols in cert.step_order()],
        "sigma0": [[i, cert.sigma0[i]] for rows in (s[1] for s in cert.step_order()) for i in rows],
        "leading_monomial": str(cert.leading_monomial),
    }


def _normalize(check: str, value):
    # sets are compared as sets; the paper lists them unordered
    if check == "steps":
        return sorted((ell, sorted(rows), sorted(cols)) for ell, rows, cols in value)
    if check == "sigma0":
        return sorted(map(tuple, value))
    return value


def _locate(expected, got, path: str = "") -> str:
    if isinstance(expected, list) and isinstance(got, list):
        if len(expected) != len(got):
            return f"{path or 'value'}: length {len(got)} != expected {len(expected)}"
        for k, (e, g) in enumerate(zip(expected, got)):
            if e != g:
                return _locate(e, g, f"{path}[{k}]")
    if isinstance(expected, dict) and isinstance(got, dict):
        for k in expected:
            if expected[k] != got.get(k):
                return _locate(expected[k], got.get(k), f"{path}.{k}")
    return f"{path or 'value'}: got {got!r}, expected {expected!r}"


def compare(golden: dict, derived: dict) -> list[tuple[str, bool, str]]:
    out = []
    for check in CHECKS:
        e = _normalize(check, golden.get(check))
        g = _normalize(check, derived.get(check))
        ok = e == g
        out.append((check, ok, "" if ok else _locate(e, g)))
    return out


def run(golden_path: str | Path | None = None) -> list[tuple[str, bool, str]]:
    golden = load_golden(golden_path)
    return compare(golden, derive(golden["p"], golden["d"], golden["J"]))
