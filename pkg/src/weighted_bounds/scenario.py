"""Scenario files: JSON description of a state or measure vector plus sweep settings."""

from __future__ import annotations

import copy
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Union

from .bounds import (
    ALTERNATE_IDS,
    COMPARISON_IDS,
    MODES,
    MONOGAMY,
    BoundParams,
    example1_a,
    example1_s,
    max_admissible_a,
    threshold_ratio,
)
from .errors import DomainError, InputError, ValidationError
from .linalg import PureState
from .measures import MEASURES, MeasureVector, build_measure_vector, state_measure_vector
from .presets import PRESETS

KNOWN_KEYS = {
    "name", "state", "measure_vector", "measure", "mode", "g", "a", "s",
    "exponent_range", "comparisons", "p", "output",
}
A_PRESETS = ("example1", "max")
S_PRESETS = ("example1", "critical", "midpoint")


@dataclass(frozen=True)
class Scenario:
    name: str
    mode: str
    g: float
    a: float
    s: float
    exponent_range: tuple[float, float, float]
    comparisons: tuple[str, ...]
    measure_vector: MeasureVector
    state: Optional[PureState] = None
    measure: Optional[str] = None
    p: float = 0.5
    output: str = "sweep"

    def exponents(self) -> list[float]:
        lo, hi, step = self.exponent_range
        count = int(math.floor((hi - lo) / step + 1e-9)) + 1
        return [round(lo + k * step, 12) for k in range(count)]

    def params(self, exponent: float) -> BoundParams:
        return BoundParams(self.mode, self.g, exponent, self.a, self.s)


def _number(raw: dict, key: str, where: str = "") -> float:
    value = raw[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"field '{where}{key}': expected a number, got {value!r}")
    return float(value)


def _parse_state(raw: Any) -> tuple[PureState, Optional[list]]:
    if not isinstance(raw, dict):
        raise InputError("field 'state': expected an object")
    for key in ("dims", "amplitudes"):
        if key not in raw:
            raise InputError(f"field 'state.{key}' is missing")
    dims = raw["dims"]
    if not isinstance(dims, list) or not all(isinstance(d, int) for d in dims):
        raise InputError("field 'state.dims': expected a list of integers")
    amps = []
    for i, pair in enumerate(raw["amplitudes"]):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
        ):
            raise InputError(f"field 'state.amplitudes[{i}]': expected [re, im]")
        amps.append(complex(pair[0], pair[1]))
    names = raw.get("names")
    if names is not None and (
        not isinstance(names, list) or not all(isinstance(n, str) for n in names)
    ):
        raise InputError("field 'state.names': expected a list of strings")
    try:
        state = PureState.from_amplitudes(dims, amps, normalize=bool(raw.get("normalize", False)))
    except DomainError as exc:
        raise ValidationError(f"state: {exc}") from exc
    return state, names


def _parse_measure_vector(raw: Any) -> MeasureVector:
    if not isinstance(raw, dict):
        raise InputError("field 'measure_vector': expected an object")
    if "joint" not in raw or "parts" not in raw:
        raise InputError("field 'measure_vector' needs 'joint' and 'parts'")
    joint = _number(raw, "joint", "measure_vector.")
    parts = raw["parts"]
    if not isinstance(parts, list):
        raise InputError("field 'measure_vector.parts': expected a list")
    values = [_number({"v": v}, "v", f"measure_vector.parts[{i}].") for i, v in enumerate(parts)]
    try:
        return build_measure_vector(
            joint, values, label=str(raw.get("label", "E")), names=raw.get("names")
        )
    except DomainError as exc:
        raise ValidationError(f"measure_vector: {exc}") from exc


def _resolve_a(value: Any, mv: MeasureVector, g: float) -> float:
    if isinstance(value, str):
        if value == "example1":
            return example1_a(g)
        if value == "max":
            a = max_admissible_a(mv, g)
            if not math.isfinite(a):
                raise ValidationError("a = 'max' is unbounded for this measure vector")
            return a
        raise InputError(f"field 'a': unknown preset {value!r}; use a number or one of {A_PRESETS}")
    return _number({"a": value}, "a")


def _resolve_s(value: Any, mv: MeasureVector, g: float, a: float, mode: str) -> float:
    if isinstance(value, str):
        if value == "example1":
            return example1_s(g)
        if value in ("critical", "midpoint"):
            try:
                lo = threshold_ratio(mv, a, g, mode)
            except DomainError as exc:
                raise ValidationError(f"s = {value!r}: {exc}") from exc
            return lo if value == "critical" else (lo + 1) / 2
        raise InputError(f"field 's': unknown preset {value!r}; use a number or one of {S_PRESETS}")
    return _number({"s": value}, "s")


def parse_scenario(raw: dict) -> Scenario:
    """Validate a decoded scenario object."""
    if not isinstance(raw, dict):
        raise InputError("scenario must be a JSON object")
    unknown = set(raw) - KNOWN_KEYS
    if unknown:
        raise InputError(f"unknown field(s): {', '.join(sorted(unknown))}")
    has_state = raw.get("state") is not None
    has_mv = raw.get("measure_vector") is not None
    if has_state == has_mv:
        raise ValidationError("exactly one of 'state' and 'measure_vector' is required")
    for key in ("mode", "g", "exponent_range"):
        if key not in raw:
            raise InputError(f"field '{key}' is missing")

    mode = raw["mode"]
    if mode not in MODES:
        raise InputError(f"field 'mode': expected one of {MODES}, got {mode!r}")
    g = _number(raw, "g")

    state = None
    measure = raw.get("measure")
    if has_state:
        state, names = _parse_state(raw["state"])
        measure = measure or "concurrence"
        if measure not in MEASURES:
            raise ValidationError(f"measure {measure!r} cannot be computed from a state")
        try:
            mv = state_measure_vector(state, measure, subsystem_names=names)
        except DomainError as exc:
            raise ValidationError(str(exc)) from exc
    else:
        mv = _parse_measure_vector(raw["measure_vector"])
    if len(mv.parts) < 2:
        raise ValidationError("at least two pairwise measure values are required")

    rng = raw["exponent_range"]
    if (
        not isinstance(rng, list)
        or len(rng) != 3
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in rng)
    ):
        raise InputError("field 'exponent_range': expected [lo, hi, step]")
    lo, hi, step = (float(v) for v in rng)
    if step <= 0 or hi < lo:
        raise ValidationError("exponent_range needs step > 0 and hi >= lo")

    a = _resolve_a(raw.get("a", 1.0), mv, g)
    s = _resolve_s(raw.get("s", 1.0), mv, g, a, mode)
    p = _number(raw, "p") if "p" in raw else 0.5

    comparisons = raw.get("comparisons", list(COMPARISON_IDS))
    if not isinstance(comparisons, list) or not all(isinstance(c, str) for c in comparisons):
        raise InputError("field 'comparisons': expected a list of bound ids")
    allowed = COMPARISON_IDS + ALTERNATE_IDS
    bad = [c for c in comparisons if c not in allowed]
    if bad:
        raise ValidationError(f"unknown comparison id(s) {bad}; allowed {allowed}")
    if len(mv.parts) > 2 and any(c != "ZLJM" for c in comparisons):
        raise ValidationError("only ZLJM is defined for more than two pairwise parts")

    # parameter domain check, independent of the swept exponent
    probe = g if mode == MONOGAMY else max(g, lo)
    try:
        BoundParams(mode, g, probe, a, s)
    except DomainError as exc:
        raise ValidationError(str(exc)) from exc
    if not 0 < p <= 1:
        raise ValidationError(f"p must lie in (0, 1], got {p}")

    return Scenario(
        name=str(raw.get("name", "scenario")),
        mode=mode,
        g=g,
        a=a,
        s=s,
        exponent_range=(lo, hi, step),
        comparisons=tuple(comparisons),
        measure_vector=mv,
        state=state,
        measure=measure if has_state else mv.label,
        p=p,
        output=str(raw.get("output", raw.get("name", "sweep"))),
    )


def load_scenario(source: Union[str, Path, dict]) -> Scenario:
    """Load a preset by name (``example1``, ``example2``), a JSON file, or a dict.

    Raises
    ------
    InputError
        Unreadable JSON or a malformed field.
    ValidationError
        A well-formed scenario that breaks an invariant.
    OSError
        The file cannot be read.
    """
    if isinstance(source, dict):
        return parse_scenario(copy.deepcopy(source))
    if isinstance(source, str) and source in PRESETS:
        return parse_scenario(copy.deepcopy(PRESETS[source]))
    path = Path(source)
    text = path.read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return parse_scenario(raw)
