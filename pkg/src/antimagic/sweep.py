"""Parameter sweeps over the labelable families, written out as CSV."""

from __future__ import annotations

import csv
import io
import itertools
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .families import FamilySpec, normalize_kind, parse_h_spec
from .labelers import LABELABLE, VerificationError, label_spec
from .oracle import brute_force_antimagic

log = logging.getLogger(__name__)

HEADER = ("family", "params", "q", "verified", "chain", "millis")

# inclusive (low, high) per parameter; past the highs a sweep gets slow
SUPPORT_BOUNDS = {
    "barbell": {"n": (3, 400)},
    "cycle_corona": {"m": (3, 100), "n": (3, 100)},
    "bistar_corona": {"x": (2, 50), "n": (2, 50)},
    "cycle": {"n": (3, 10_000)},
}
CHECKS = ("verify", "chain", "oracle")
ORACLE_MAX_EDGES = 9


class SweepConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    family: str
    ranges: dict[str, tuple[int, int]]
    h: tuple[str, ...] = ()
    checks: tuple[str, ...] = ("verify", "chain")
    output: Optional[str] = None
    x_le_n: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", normalize_kind(self.family))
        if self.family not in LABELABLE:
            raise SweepConfigError(f"family {self.family!r} has no labeler")
        bounds = SUPPORT_BOUNDS[self.family]
        if set(self.ranges) != set(bounds):
            raise SweepConfigError(f"{self.family} sweep needs ranges for {sorted(bounds)}")
        for name, (lo, hi) in self.ranges.items():
            blo, bhi = bounds[name]
            if lo > hi:
                raise SweepConfigError(f"empty range for {name}: [{lo}, {hi}]")
            if lo < blo or hi > bhi:
                raise SweepConfigError(f"{name} range [{lo}, {hi}] outside supported [{blo}, {bhi}]")
        if self.family == "bistar_corona" and not self.h:
            raise SweepConfigError("bistar_corona sweep needs at least one H spec")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise SweepConfigError(f"unknown checks {sorted(unknown)}")

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> SweepConfig:
        try:
            ranges = {k: (int(v[0]), int(v[1])) for k, v in data["ranges"].items()}
            return cls(
                family=data["family"],
                ranges=ranges,
                h=tuple(data.get("h", ())),
                checks=tuple(data.get("checks", ("verify", "chain"))),
                output=data.get("output"),
                x_le_n=bool(data.get("x_le_n", True)),
            )
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            if isinstance(exc, SweepConfigError):
                raise
            raise SweepConfigError(f"malformed sweep config: {exc}") from exc

    @classmethod
    def load(cls, path: str | Path) -> SweepConfig:
        return cls.from_json(json.loads(Path(path).read_text()))

    def instances(self) -> list[tuple[dict[str, int], Optional[str]]]:
        """Parameter dicts (with H spec) in sorted parameter-tuple order."""
        names = sorted(self.ranges)
        if self.family == "bistar_corona":
            names = ["x", "n"]
        grids = [range(self.ranges[k][0], self.ranges[k][1] + 1) for k in names]
        out = []
        for combo in itertools.product(*grids):
            params = dict(zip(names, combo))
            if self.family == "bistar_corona":
                if self.x_le_n and params["x"] > params["n"]:
                    continue
                out.extend((params, h) for h in self.h)
            else:
                out.append((params, None))
        return out


@dataclass
class SweepRow:
    family: str
    params: str
    q: int
    verified: bool
    chain: bool
    millis: float
    notes: dict[str, Any] = field(default_factory=dict)

    def as_csv(self) -> list[str]:
        return [self.family, self.params, str(self.q), str(self.verified).lower(),
                str(self.chain).lower(), f"{self.millis:.3f}"]


def run_instance(family: str, params: dict[str, int], h: Optional[str], checks: tuple[str, ...]) -> SweepRow:
    hg = parse_h_spec(h) if h is not None else None
    spec = FamilySpec(family, params, hg)
    label = ";".join(f"{k}={v}" for k, v in params.items()) + (f";h={h}" if h else "")
    t0 = time.perf_counter()
    try:
        cert = label_spec(spec)
    except VerificationError as exc:
        millis = (time.perf_counter() - t0) * 1000
        log.error("%s %s: %s", family, label, exc)
        return SweepRow(family, label, spec.build().edge_count, False, False, millis)
    millis = (time.perf_counter() - t0) * 1000

    q = cert.graph.edge_count
    verified = cert.report.distinct and sum(cert.report.weights) == q * (q + 1)
    chain = cert.chain_holds() if "chain" in checks else True
    notes = dict(cert.notes)
    if "oracle" in checks and q <= ORACLE_MAX_EDGES:
        found = brute_force_antimagic(cert.graph)
        notes["oracle"] = found.exists
        verified = verified and found.exists
    return SweepRow(family, label, q, verified, chain, millis, notes)


def _run_packed(args: tuple) -> SweepRow:
    return run_instance(*args)


def run_sweep(config: SweepConfig, jobs: int = 1) -> list[SweepRow]:
    work = [(config.family, p, h, config.checks) for p, h in config.instances()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_packed, work, chunksize=8))
    return [_run_packed(w) for w in work]


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    for row in rows:
        writer.writerow(row.as_csv())
    return buf.getvalue()
