"""Exponent sweeps over a scenario with CSV and SVG emission."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .bounds import MONOGAMY, comparison_bounds
from .config import TOL
from .errors import DomainError
from .scenario import Scenario
from .svg import line_chart

FORMATS = ("csv", "svg", "both")
FLAG_NAMES = ("valid", "s_in_window", "zjz_proven", "sound")


@dataclass(frozen=True)
class SweepRow:
    exponent: float
    our_bound: float
    joint_power: float
    comparison: dict[str, float]
    flags: dict[str, bool]


@dataclass
class SweepResult:
    scenario: Scenario
    rows: list[SweepRow]
    csv_path: Optional[Path] = None
    svg_path: Optional[Path] = None
    paths: list[Path] = field(default_factory=list)

    @property
    def our_label(self) -> str:
        return our_label(self.scenario)

    def column(self, name: str) -> list[float]:
        if name in ("our", self.our_label):
            return [r.our_bound for r in self.rows]
        if name == "joint_power":
            return [r.joint_power for r in self.rows]
        return [r.comparison[name] for r in self.rows]


def our_label(sc: Scenario) -> str:
    return "Z1" if sc.mode == MONOGAMY else "W1"


def evaluate_row(sc: Scenario, exponent: float) -> SweepRow:
    """One grid point; a failed bound precondition yields a flagged NaN row."""
    mv = sc.measure_vector
    joint_power = mv.joint**exponent
    nan_comps = {c: math.nan for c in sc.comparisons}
    try:
        report = comparison_bounds(
            mv, sc.params(exponent), p=sc.p, alternates="ZLJM_t" in sc.comparisons
        )
    except DomainError:
        flags = dict.fromkeys(FLAG_NAMES, False)
        return SweepRow(exponent, math.nan, joint_power, nan_comps, flags)
    value = report.our_bound
    if sc.mode == MONOGAMY:
        sound = joint_power >= value - TOL.soundness
    else:
        sound = joint_power <= value + TOL.soundness
    flags = {
        "valid": report.flags["ratio_ok"],
        "s_in_window": report.flags["s_in_window"],
        "zjz_proven": report.flags["zjz_proven"],
        "sound": sound,
    }
    comps = {c: report.comparison.get(c, math.nan) for c in sc.comparisons}
    return SweepRow(exponent, value, joint_power, comps, flags)


def _fmt(v: float) -> str:
    return format(v, ".15g")


def rows_to_csv(sc: Scenario, rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["exponent", "joint_power", our_label(sc), *sc.comparisons, "flags"])
    for r in rows:
        flags = ";".join(f"{k}={int(r.flags[k])}" for k in FLAG_NAMES)
        writer.writerow(
            [_fmt(r.exponent), _fmt(r.joint_power), _fmt(r.our_bound)]
            + [_fmt(r.comparison[c]) for c in sc.comparisons]
            + [flags]
        )
    return buf.getvalue()


def rows_to_svg(sc: Scenario, rows: list[SweepRow]) -> str:
    x = [r.exponent for r in rows]
    ours = our_label(sc)
    symbol = "alpha" if sc.mode == MONOGAMY else "beta"
    series = {f"{ours} (s={sc.s:.4g})": [r.our_bound for r in rows]}
    for c in sc.comparisons:
        series[c] = [r.comparison[c] for r in rows]
    series[f"{sc.measure_vector.label}^{symbol}"] = [r.joint_power for r in rows]
    kind = "lower" if sc.mode == MONOGAMY else "upper"
    return line_chart(
        x,
        series,
        title=f"{sc.name}: {kind} bounds, g={sc.g:g}, a={sc.a:.6g}",
        xlabel=symbol,
        ylabel=f"{sc.measure_vector.label}^{symbol} bounds",
        dashed=[next(iter(series))],
    )


def run_sweep(sc: Scenario, out_dir=None, fmt: str = "both") -> SweepResult:
    """Evaluate every exponent of the scenario grid, optionally writing files.

    Files are ``<out_dir>/<output>.csv`` and ``.svg``; nothing is written when
    ``out_dir`` is None. OSError propagates on write failure.
    """
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    rows = [evaluate_row(sc, e) for e in sc.exponents()]
    result = SweepResult(sc, rows)
    if out_dir is None:
        return result
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if fmt in ("csv", "both"):
        result.csv_path = out / f"{sc.output}.csv"
        with open(result.csv_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(rows_to_csv(sc, rows))
        result.paths.append(result.csv_path)
    if fmt in ("svg", "both"):
        result.svg_path = out / f"{sc.output}.svg"
        with open(result.svg_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(rows_to_svg(sc, rows))
        result.paths.append(result.svg_path)
    return result
