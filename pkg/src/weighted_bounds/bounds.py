"""s-parameterized weighted monogamy (lower) and polygamy (upper) bounds.

Notation follows the measure vector: pairwise values ``E_1 >= E_2 >= ...``
are sorted descending, ``g`` is the base power (gamma for monogamy, delta for
polygamy), ``e`` the target exponent (alpha or beta) and ``x = e / g``.
Everything reduces to the kernel

    h(x, y) = (1 + a/y)^(x-1) + (1 + y/a)^(x-1) * t^x,

which peaks (x <= 1) or bottoms out (x >= 1) at ``y = a/t`` with value
``(1 + t)^x``. The smaller measure always carries the ``(1 + a/s)`` factor.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace
from typing import Sequence, Union

import numpy as np

from .config import TOL
from .errors import BoundWarning, DomainError
from .measures import MeasureVector

MONOGAMY = "monogamy"
POLYGAMY = "polygamy"
MODES = (MONOGAMY, POLYGAMY)

COMPARISON_IDS = ("ZLJM", "JFQ", "ZJZ")
# ZLJM evaluated with t substituted for a, as printed for the polygamy example
ALTERNATE_IDS = ("ZLJM_t",)

# presets used by the worked examples
EXAMPLE1_A_BASE = 1.05
EXAMPLE1_S_BASE = 0.72
EXAMPLE2_A = 1.2


def example1_a(gamma: float) -> float:
    return EXAMPLE1_A_BASE ** (gamma / 2)


def example1_s(gamma: float) -> float:
    return EXAMPLE1_S_BASE ** (gamma / 2)


@dataclass(frozen=True)
class BoundParams:
    """Exponent pair, ratio parameter ``a`` and weight parameter ``s``.

    Monogamy needs ``g >= 2`` and ``0 <= exponent <= g``; polygamy needs
    ``0 < g <= 1`` and ``exponent >= g``.
    """

    mode: str
    g: float
    exponent: float
    a: float = 1.0
    s: float = 1.0

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {self.mode!r}")
        for name in ("g", "exponent", "a", "s"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.mode == MONOGAMY:
            if self.g < 2:
                raise DomainError(f"monogamy requires gamma >= 2, got {self.g}")
            if not 0 <= self.exponent <= self.g:
                raise DomainError(
                    f"monogamy requires 0 <= alpha <= gamma, got alpha={self.exponent}"
                )
        else:
            if not 0 < self.g <= 1:
                raise DomainError(f"polygamy requires 0 < delta <= 1, got {self.g}")
            if self.exponent < self.g:
                raise DomainError(
                    f"polygamy requires beta >= delta, got beta={self.exponent}"
                )
        if self.a < 1:
            raise DomainError(f"a must be >= 1, got {self.a}")
        if self.s <= 0:
            raise DomainError(f"s must be > 0, got {self.s}")

    @property
    def x(self) -> float:
        return self.exponent / self.g


@dataclass(frozen=True)
class BoundReport:
    mode: str
    our_bound: float
    params: BoundParams
    t: float
    s_window: tuple[float, float]
    flags: dict[str, bool]
    comparison: dict[str, float] = field(default_factory=dict)
    names: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(self.flags.values())


def kernel_h(x, y, a, t):
    """``(1 + a/y)^(x-1) + (1 + y/a)^(x-1) t^x``; array arguments broadcast.

    A :class:`BoundWarning` is issued when ``t < a``; the value is still
    returned.
    """
    xa, ya, aa, ta = (np.asarray(v, dtype=float) for v in (x, y, a, t))
    if np.any(ya <= 0):
        raise DomainError("kernel_h requires y > 0")
    if np.any(ta < aa):
        warnings.warn("kernel_h evaluated with t < a", BoundWarning, stacklevel=2)
    value = (1 + aa / ya) ** (xa - 1) + (1 + ya / aa) ** (xa - 1) * ta**xa
    if value.ndim == 0:
        return float(value)
    return value


@dataclass(frozen=True)
class Lemma1Check:
    x: float
    t: float
    a: float
    s: float
    power: float  # (1 + t)^x
    kernel: float  # h(x, s)
    relation: str  # ">=", "<=" or "=="
    margin: float  # >= 0 when the relation holds

    @property
    def holds(self) -> bool:
        return self.margin >= -TOL.norm


def check_lemma1(x: float, t: float, a: float, s: float) -> Lemma1Check:
    """Compare ``(1 + t)^x`` with ``h(x, s)``.

    For ``0 <= x <= 1`` the power dominates, for ``x >= 1`` the kernel does;
    at ``x == 1`` both sides are ``1 + t``.
    """
    if a < 1 or t < a:
        raise DomainError(f"need t >= a >= 1, got t={t}, a={a}")
    if s <= 0:
        raise DomainError(f"need s > 0, got {s}")
    if x < 0:
        raise DomainError(f"need x >= 0, got {x}")
    power = (1 + t) ** x
    kernel = kernel_h(x, s, a, t)
    if x == 1:
        relation, margin = "==", -abs(power - kernel)
    elif x < 1:
        relation, margin = ">=", power - kernel
    else:
        relation, margin = "<=", kernel - power
    return Lemma1Check(x, t, a, s, power, kernel, relation, margin)


def _parts(mv: Union[MeasureVector, Sequence[float]]) -> tuple[float, ...]:
    parts = tuple(mv.parts) if isinstance(mv, MeasureVector) else tuple(float(p) for p in mv)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise DomainError("parts must be sorted descending")
    return parts


def max_admissible_a(mv: Union[MeasureVector, Sequence[float]], g: float) -> float:
    """Largest ``a`` with ``E_i^g >= a E_{i+1}^g`` along the whole chain."""
    parts = _parts(mv)
    ratios = [
        math.inf if lo == 0 else (hi / lo) ** g for hi, lo in zip(parts, parts[1:])
    ]
    return min(ratios) if ratios else math.inf


def _check_chain(parts: Sequence[float], g: float, a: float) -> None:
    for i, (hi, lo) in enumerate(zip(parts, parts[1:])):
        if hi**g < a * lo**g * (1 - TOL.ratio):
            raise DomainError(
                f"ratio condition E_{i + 1}^g >= a E_{i + 2}^g fails "
                f"({hi}^{g} < {a} * {lo}^{g}); max admissible a = "
                f"{max_admissible_a(parts, g):.15g}"
            )


def _ratio_t(parts: Sequence[float], g: float) -> float:
    return math.inf if parts[1] == 0 else parts[0] ** g / parts[1] ** g


def threshold_ratio(
    mv: Union[MeasureVector, Sequence[float]], a: float, g: float, mode: str = MONOGAMY
) -> float:
    """``max_k a p_{k+1} / (p_1 + ... + p_k)`` with ``p_i = E_i^g``.

    Lower end of the s-window; equals ``a / t`` for two parts.
    """
    if mode not in MODES:
        raise DomainError(f"unknown mode {mode!r}")
    parts = _parts(mv)
    if len(parts) < 2:
        raise DomainError("threshold ratio needs at least two parts")
    if parts[0] == 0:
        raise DomainError("leading part is zero")
    p = [e**g for e in parts]
    prefix = np.cumsum(p)
    return max(a * p[k + 1] / prefix[k] for k in range(len(p) - 1))


def _tripartite_value(large: float, small: float, x: float, e: float, a: float, s: float) -> float:
    return (1 + a / s) ** (x - 1) * small**e + (1 + s / a) ** (x - 1) * large**e


def _chain_value(parts: Sequence[float], x: float, e: float, a: float, s: float) -> float:
    outer = (1 + a / s) ** (x - 1)
    inner = (1 + s / a) ** (x - 1)
    n = len(parts)
    return outer * sum(inner ** (n - 1 - k) * v**e for k, v in enumerate(parts))


def _prepare(mv, params: BoundParams, mode: str, tripartite: bool) -> tuple[float, ...]:
    if params.mode != mode:
        raise DomainError(f"{mode} bound called with {params.mode} parameters")
    parts = _parts(mv)
    if tripartite and len(parts) != 2:
        raise DomainError(f"tripartite bound needs exactly 2 parts, got {len(parts)}")
    if len(parts) < 2:
        raise DomainError("at least two pairwise parts are required")
    _check_chain(parts, params.g, params.a)
    return parts


def _report(mv, parts, params: BoundParams, value: float, comparison=None) -> BoundReport:
    lo = threshold_ratio(parts, params.a, params.g, params.mode) if parts[0] > 0 else 0.0
    t = _ratio_t(parts, params.g)
    flags = {
        "ratio_ok": t >= params.a * (1 - TOL.ratio),
        "s_in_window": lo <= params.s <= 1.0,
        "exponent_ok": True,
        "zjz_proven": params.mode == POLYGAMY or params.exponent <= params.g / 2,
    }
    names = mv.names if isinstance(mv, MeasureVector) else ()
    return BoundReport(
        mode=params.mode,
        our_bound=float(value),
        params=params,
        t=t,
        s_window=(float(lo), 1.0),
        flags=flags,
        comparison=dict(comparison or {}),
        names=names,
    )


def monogamy_bound_tripartite(mv, params: BoundParams) -> BoundReport:
    """Lower bound on ``E_{A|BC}^alpha`` from two pairwise values.

    ``(1 + a/s)^(alpha/gamma - 1) E_2^alpha + (1 + s/a)^(alpha/gamma - 1) E_1^alpha``
    """
    parts = _prepare(mv, params, MONOGAMY, tripartite=True)
    value = _tripartite_value(parts[0], parts[1], params.x, params.exponent, params.a, params.s)
    return _report(mv, parts, params, value)


def monogamy_bound_multipartite(mv, params: BoundParams) -> BoundReport:
    """Lower bound on ``E_{A|B1...B_{N-1}}^alpha`` for a descending chain.

    ``(1 + a/s)^(x-1) sum_i ((1 + s/a)^(x-1))^(N-1-i) E_i^alpha``. With two
    parts this is the tripartite bound times an extra ``(1 + a/s)^(x-1)`` on
    the ``E_1`` term, i.e. slightly weaker.
    """
    parts = _prepare(mv, params, MONOGAMY, tripartite=False)
    value = _chain_value(parts, params.x, params.exponent, params.a, params.s)
    return _report(mv, parts, params, value)


def polygamy_bound_tripartite(mv, params: BoundParams) -> BoundReport:
    """Upper bound on ``E_{A|BC}^beta``; same closed form with ``x = beta/delta``."""
    parts = _prepare(mv, params, POLYGAMY, tripartite=True)
    value = _tripartite_value(parts[0], parts[1], params.x, params.exponent, params.a, params.s)
    return _report(mv, parts, params, value)


def polygamy_bound_multipartite(mv, params: BoundParams) -> BoundReport:
    parts = _prepare(mv, params, POLYGAMY, tripartite=False)
    value = _chain_value(parts, params.x, params.exponent, params.a, params.s)
    return _report(mv, parts, params, value)


def our_bound(mv, params: BoundParams) -> BoundReport:
    """Tripartite closed form for two parts, chain form otherwise."""
    n = len(_parts(mv))
    if params.mode == MONOGAMY:
        op = monogamy_bound_tripartite if n == 2 else monogamy_bound_multipartite
    else:
        op = polygamy_bound_tripartite if n == 2 else polygamy_bound_multipartite
    return op(mv, params)


def comparison_bounds(mv, params: BoundParams, p: float = 0.5, alternates: bool = False) -> BoundReport:
    """Our bound together with the prior-work bounds under the same ``a``.

    ``ZLJM`` is our formula at ``s = 1``. For two parts the ``JFQ`` and
    ``ZJZ`` forms are added; with ``alternates`` also ``ZLJM_t``, the ZLJM
    form with ``t`` in place of ``a``.
    """
    if not 0 < p <= 1:
        raise DomainError(f"p must lie in (0, 1], got {p}")
    report = our_bound(mv, params)
    parts = _parts(mv)
    x, e, a = params.x, params.exponent, params.a
    comp = {}
    if len(parts) == 2:
        large, small = parts
        comp["ZLJM"] = _tripartite_value(large, small, x, e, a, 1.0)
        comp["JFQ"] = small**e + ((1 + a) ** x - 1) / a**x * large**e
        comp["ZJZ"] = p**x * small**e + ((1 + a) ** x - p**x) / a**x * large**e
        if alternates and math.isfinite(report.t):
            t = report.t
            comp["ZLJM_t"] = (1 + t) ** (x - 1) * small**e + (1 + 1 / t) ** (x - 1) * large**e
    else:
        comp["ZLJM"] = _chain_value(parts, x, e, a, 1.0)
    return replace(report, comparison=comp)


def intro_weights(a: float, s: float, alpha: float) -> tuple[float, float]:
    """Weights ``w1 = (1 + s/a)^alpha``, ``w2 = (1 + a/s)^alpha``.

    They satisfy ``w1^(-1/alpha) + w2^(-1/alpha) = 1``, and with
    ``1/beta = 1/gamma - 1/alpha`` the powers ``w_i^(1/beta)`` are the
    tripartite prefactors.
    """
    if a < 1 or s <= 0:
        raise DomainError(f"need a >= 1 and s > 0, got a={a}, s={s}")
    if alpha <= 0:
        raise DomainError("weights are undefined for alpha <= 0")
    return (1 + s / a) ** alpha, (1 + a / s) ** alpha


@dataclass(frozen=True)
class TightnessSweep:
    s_grid: tuple[float, ...]
    values: tuple[float, ...]
    in_window: tuple[bool, ...]
    best_index: int
    t: float
    s_window: tuple[float, float]
    # value approached as s -> a/t, (E_1^g + E_2^g)^(e/g); two parts only
    limit_value: float | None

    @property
    def best_s(self) -> float:
        return self.s_grid[self.best_index]

    @property
    def best_value(self) -> float:
        return self.values[self.best_index]


def tightness_sweep(mv, params: BoundParams, s_grid: Sequence[float]) -> TightnessSweep:
    """Evaluate our bound over ``s_grid`` (``params.s`` is ignored).

    The tightest point is the largest value for monogamy and the smallest for
    polygamy.
    """
    grid = [float(s) for s in s_grid]
    if not grid:
        raise DomainError("s grid is empty")
    if any(s <= 0 for s in grid):
        raise DomainError("s grid values must be > 0")
    reports = [our_bound(mv, replace(params, s=s)) for s in grid]
    values = tuple(r.our_bound for r in reports)
    pick = max if params.mode == MONOGAMY else min
    best = pick(range(len(values)), key=values.__getitem__)
    parts = _parts(mv)
    limit = None
    if len(parts) == 2:
        g, e = params.g, params.exponent
        limit = (parts[0] ** g + parts[1] ** g) ** (e / g)
    return TightnessSweep(
        s_grid=tuple(grid),
        values=values,
        in_window=tuple(r.flags["s_in_window"] for r in reports),
        best_index=best,
        t=reports[0].t,
        s_window=reports[0].s_window,
        limit_value=limit,
    )
