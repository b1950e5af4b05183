"""Random searches for coefficient tuples whose curve attains the minimal a-number."""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .algebra import FieldContext
from .bounds import L
from .cartier import a_number
from .curve import CurveParams, check_params

CSV_HEADER = ("p", "d", "m", "seed", "trial", "anumber", "L", "is_witness")


def trial_rng(seed: int, p: int, d: int, trial: int) -> np.random.Generator:
    # keyed per trial so results do not depend on how trials are sharded
    return np.random.default_rng([seed, p, d, trial])


def trial_curve(field: FieldContext, d: int, seed: int, trial: int) -> CurveParams:
    return CurveParams.random(field, d, trial_rng(seed, field.p, d, trial))


def serialize_coeffs(curve: CurveParams) -> list:
    """Integers over a prime field, coefficient vectors over extensions."""
    if curve.field.m == 1:
        return [c.value for c in curve.coeffs]
    return [c.coeffs for c in curve.coeffs]


@dataclass
class ScanRecord:
    p: int
    d: int
    m: int
    modulus: list[int]
    seed: int
    trials: int
    L: int
    anumbers: list[int]
    count_at_L: int
    witness: list | None
    witness_trial: int | None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> ScanRecord:
        return cls(**data)


def _run_trials(field: FieldContext, d: int, seed: int, trials: list[int]) -> list[tuple[int, int]]:
    return [(t, a_number(trial_curve(field, d, seed, t))) for t in trials]


def scan_point(field: FieldContext, d: int, trials: int, seed: int, threads: int = 1) -> ScanRecord:
    p = field.p
    check_params(p, d)
    if trials < 0:
        raise ValueError("trials must be non-negative")
    indices = list(range(trials))
    if threads > 1 and trials > 1:
        shards = [indices[k::threads] for k in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(_run_trials, [field] * threads, [d] * threads, [seed] * threads, shards)
            results = sorted(r for part in parts for r in part)
    else:
        results = _run_trials(field, d, seed, indices)
    anumbers = [a for _, a in results]
    bound = L(p, d)
    hits = [t for t, a in results if a == bound]
    witness = None
    if hits:
        witness = serialize_coeffs(trial_curve(field, d, seed, hits[0]))
    return ScanRecord(
        p=p,
        d=d,
        m=field.m,
        modulus=list(field.modulus),
        seed=seed,
        trials=trials,
        L=bound,
        anumbers=anumbers,
        count_at_L=len(hits),
        witness=witness,
        witness_trial=hits[0] if hits else None,
    )


def run_scan(field: FieldContext, degrees, trials: int, seed: int, threads: int = 1) -> list[ScanRecord]:
    return [scan_point(field, d, trials, seed, threads) for d in degrees if d % field.p]


def write_scan(records: list[ScanRecord], out: Path) -> tuple[Path, Path]:
    """CSV of per-trial rows at ``out`` plus a JSON sidecar of the records."""
    out = Path(out)
    sidecar = out.with_suffix(".json")
    with open(out, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for rec in records:
            for trial, a in enumerate(rec.anumbers):
                w.writerow((rec.p, rec.d, rec.m, rec.seed, trial, a, rec.L, int(a == rec.L)))
    with open(sidecar, "w", encoding="utf-8", newline="\n") as fh:
        json.dump([rec.to_dict() for rec in records], fh, indent=1)
        fh.write("\n")
    return out, sidecar


def read_records(path: Path) -> list[ScanRecord]:
    with open(path, encoding="utf-8") as fh:
        return [ScanRecord.from_dict(x) for x in json.load(fh)]
