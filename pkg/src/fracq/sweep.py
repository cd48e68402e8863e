"""Parameter-grid sweeps over the corpus."""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .bounds import BoundReport, TheoremId, verify
from .errors import DomainError
from .functions import DENSITY_IDS, FUNCTION_IDS, UNIT, Interval, catalog_densities, catalog_functions

DEFAULT_ALPHAS = (0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0)
DEFAULT_PS = (1.25, 2.0, 4.0, 10.0)
SOUND_FRACTIONAL = (TheoremId.T1_Eq9, TheoremId.T2_Eq7, TheoremId.T3_Eq16,
                    TheoremId.T4_Eq14_corrected)


@dataclass
class SweepConfig:
    theorems: list = field(default_factory=lambda: list(SOUND_FRACTIONAL))
    function_ids: list = field(default_factory=lambda: list(FUNCTION_IDS))
    density_ids: list = field(default_factory=lambda: list(DENSITY_IDS))
    alphas: list = field(default_factory=lambda: list(DEFAULT_ALPHAS))
    ps: list = field(default_factory=lambda: list(DEFAULT_PS))
    interval: Interval = UNIT
    tol_override: float | None = None
    output_path: str | None = None
    format: str = "json"

    def __post_init__(self):
        if not self.theorems:
            raise DomainError("no theorems selected")
        try:
            self.theorems = [TheoremId(t) for t in self.theorems]
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        for fid in self.function_ids:
            if fid not in FUNCTION_IDS:
                raise DomainError(f"unknown function id {fid!r}")
        for did in self.density_ids:
            if did not in DENSITY_IDS:
                raise DomainError(f"unknown density id {did!r}")
        self.alphas = [float(a) for a in self.alphas]
        self.ps = [float(p) for p in self.ps]
        if any(not (a >= 0 and math.isfinite(a)) for a in self.alphas):
            raise DomainError("alphas must be finite and >= 0")
        if any(not p > 1 for p in self.ps):
            raise DomainError("ps must all exceed 1")
        if not isinstance(self.interval, Interval):
            self.interval = _parse_interval(self.interval)
        if self.tol_override is not None and not self.tol_override > 0:
            raise DomainError("tol_override must be positive")
        if self.format not in ("json", "csv"):
            raise DomainError(f"format must be 'json' or 'csv', got {self.format!r}")

    @classmethod
    def from_json(cls, path: str) -> "SweepConfig":
        try:
            with open(path) as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise DomainError(f"cannot read config {path}: {exc}") from None
        if not isinstance(raw, dict):
            raise DomainError("config must be a JSON object")
        unknown = set(raw) - set(cls.__dataclass_fields__)
        if unknown:
            raise DomainError(f"unknown config keys: {', '.join(sorted(unknown))}")
        return cls(**raw)


def _parse_interval(raw) -> Interval:
    if isinstance(raw, str):
        return Interval.parse(raw)
    if isinstance(raw, dict):
        return Interval(float(raw["a"]), float(raw["b"]))
    if isinstance(raw, (list, tuple)) and len(raw) == 2:
        return Interval(float(raw[0]), float(raw[1]))
    raise DomainError(f"cannot interpret interval {raw!r}")


def expand_tasks(cfg: SweepConfig) -> list[tuple]:
    """One picklable tuple per check: (theorem, fid, did, alpha, p, a, b, tol)."""
    a, b, tol = cfg.interval.a, cfg.interval.b, cfg.tol_override
    tasks = []
    for th in cfg.theorems:
        alphas = cfg.alphas if th.fractional else [0.0]
        ps = cfg.ps if th.needs_p else [None]
        dids = cfg.density_ids if th.needs_density else [None]
        for fid in cfg.function_ids:
            for did in dids:
                for alpha in alphas:
                    for p in ps:
                        tasks.append((th.value, fid, did, alpha, p, a, b, tol))
    return tasks


@lru_cache(maxsize=None)
def _catalogs(a: float, b: float):
    iv = Interval(a, b)
    return ({f.id: f for f in catalog_functions(iv)}, {d.id: d for d in catalog_densities(iv)})


def run_task(task: tuple) -> BoundReport:
    theorem, fid, did, alpha, p, a, b, tol = task
    funcs, dens = _catalogs(a, b)
    return verify(theorem, funcs[fid], alpha=alpha, p=p,
                  d=dens[did] if did is not None else None, tol=tol)


def run_sweep(cfg: SweepConfig, jobs: int = 1) -> list[BoundReport]:
    """Evaluate every check of ``cfg``; the result is sorted deterministically."""
    tasks = expand_tasks(cfg)
    if jobs <= 1 or len(tasks) < 2:
        reports = [run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    return sorted(reports, key=BoundReport.sort_key)


def summarize(reports: list[BoundReport]) -> tuple[int, int, float]:
    """(checks, violations, largest slack deficit)."""
    violations = sum(not r.holds for r in reports)
    deficit = max((max(0.0, -r.slack) for r in reports), default=0.0)
    return len(reports), violations, deficit


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
