"""Seeded random checks of the kernel inequalities and derived identities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .bounds import _tripartite_value, intro_weights, kernel_h

TOLERANCE = 1e-12


@dataclass(frozen=True)
class InvariantResult:
    name: str
    count: int
    failures: int
    worst_margin: float
    tolerance: float
    counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = (
            f"[{status}] {self.name}: {self.count} samples, {self.failures} failures, "
            f"worst margin {self.worst_margin:.3e} (tolerance -{self.tolerance:g})"
        )
        if self.counterexample is not None:
            pairs = ", ".join(f"{k}={v!r}" for k, v in self.counterexample.items())
            text += f"\n    counterexample: {pairs}"
        return text


@dataclass(frozen=True)
class PropertyReport:
    seed: int
    samples: int
    results: tuple[InvariantResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]


def _summarize(name: str, margin: np.ndarray, columns: dict, tol: float = TOLERANCE) -> InvariantResult:
    margin = np.asarray(margin, dtype=float)
    bad = margin < -tol
    worst = int(np.argmin(margin))
    example = None
    if bad.any():
        example = {k: float(np.asarray(v)[worst]) for k, v in columns.items()}
        example["margin"] = float(margin[worst])
    return InvariantResult(name, margin.size, int(bad.sum()), float(margin[worst]), tol, example)


def _positive(rng, hi: float, size: int) -> np.ndarray:
    # uniform on (0, hi]
    return hi * (1.0 - rng.random(size))


def _lemma1(rng, n: int, kernel: Callable, polygamy: bool) -> InvariantResult:
    a = rng.uniform(1, 3, n)
    t = a + rng.uniform(0, 5, n)
    s = _positive(rng, 2.0, n)
    x = rng.uniform(1, 5, n) if polygamy else rng.uniform(0, 1, n)
    power = (1 + t) ** x
    h = np.asarray(kernel(x, s, a, t))
    margin = h - power if polygamy else power - h
    name = "lemma1_upper (x in [1,5])" if polygamy else "lemma1_lower (x in [0,1])"
    return _summarize(name, margin, {"a": a, "t": t, "s": s, "x": x})


def _lemma2(rng, n: int) -> InvariantResult:
    margins, cols = [], {"N": [], "a": [], "s": [], "x": [], "p": []}
    sizes = rng.integers(2, 5, n)
    for size in (2, 3, 4):
        m = int((sizes == size).sum())
        if m == 0:
            continue
        a = rng.uniform(1, 3, m)
        s = _positive(rng, 2.0, m)
        x = rng.uniform(0, 1, m)
        p = np.empty((m, size))
        p[:, -1] = _positive(rng, 1.0, m)
        for i in range(size - 2, -1, -1):
            p[:, i] = p[:, i + 1] * a * (1 + rng.uniform(0, 2, m))
        outer = (1 + a / s) ** (x - 1)
        inner = (1 + s / a) ** (x - 1)
        powers = np.arange(size - 1, -1, -1)
        rhs = outer * np.sum(inner[:, None] ** powers * p ** x[:, None], axis=1)
        lhs = p.sum(axis=1) ** x
        margins.append(lhs - rhs)
        cols["N"].append(np.full(m, size))
        for key, val in (("a", a), ("s", s), ("x", x)):
            cols[key].append(val)
        cols["p"].append(p[:, 0])
    columns = {k: np.concatenate(v) for k, v in cols.items()}
    columns["p1"] = columns.pop("p")
    return _summarize("lemma2_chain (N in {2,3,4})", np.concatenate(margins), columns)


def _critical_point(rng, n: int, kernel: Callable) -> list[InvariantResult]:
    a = rng.uniform(1, 3, n)
    t = a + rng.uniform(0, 5, n)
    x = rng.uniform(0, 2, n)
    diff = np.abs(np.asarray(kernel(x, a / t, a, t)) - (1 + t) ** x)
    kernel_res = _summarize("kernel_at_critical_point", -diff, {"a": a, "t": t, "x": x})

    big = _positive(rng, 1.0, n)
    small = big * rng.uniform(0.05, 1.0, n)
    poly = rng.random(n) < 0.5
    g = np.where(poly, rng.uniform(0.1, 1.0, n), rng.uniform(2, 4, n))
    e = np.where(poly, g * rng.uniform(1, 3, n), g * rng.uniform(0, 1, n))
    tt = (big / small) ** g
    aa = 1 + (tt - 1) * rng.random(n)
    value = np.array(
        [
            _tripartite_value(b, sm, ei / gi, ei, ai, ai / ti)
            for b, sm, gi, ei, ai, ti in zip(big, small, g, e, aa, tt)
        ]
    )
    target = (big**g + small**g) ** (e / g)
    bound_res = _summarize(
        "bound_at_critical_s",
        -np.abs(value - target),
        {"E1": big, "E2": small, "g": g, "e": e, "a": aa},
    )
    return [kernel_res, bound_res]


def _dominance(rng, n: int, kernel: Callable) -> InvariantResult:
    a = rng.uniform(1, 3, n)
    t = a + rng.uniform(0, 5, n)
    s = a / t + (1 - a / t) * rng.random(n)
    poly = rng.random(n) < 0.5
    x = np.where(poly, rng.uniform(1, 5, n), rng.uniform(0, 1, n))
    ours = np.asarray(kernel(x, s, a, t))
    at_one = np.asarray(kernel(x, 1.0, a, t))
    margin = np.where(poly, at_one - ours, ours - at_one)
    return _summarize(
        "dominance_over_s1 (s in [a/t,1])", margin, {"a": a, "t": t, "s": s, "x": x}
    )


def _weights(rng, n: int) -> list[InvariantResult]:
    a = rng.uniform(1, 3, n)
    s = _positive(rng, 2.0, n)
    gamma = rng.uniform(2, 4, n)
    alpha = gamma * _positive(rng, 1.0, n)
    resid, pref = np.empty(n), np.empty(n)
    for i in range(n):
        w1, w2 = intro_weights(a[i], s[i], alpha[i])
        resid[i] = abs(w1 ** (-1 / alpha[i]) + w2 ** (-1 / alpha[i]) - 1)
        inv_beta = 1 / gamma[i] - 1 / alpha[i]
        x = alpha[i] / gamma[i]
        pref[i] = max(
            abs(w1**inv_beta - (1 + s[i] / a[i]) ** (x - 1)),
            abs(w2**inv_beta - (1 + a[i] / s[i]) ** (x - 1)),
        )
    cols = {"a": a, "s": s, "alpha": alpha, "gamma": gamma}
    return [
        _summarize("intro_weights_normalization", -resid, cols),
        _summarize("intro_weights_prefactors", -pref, cols),
    ]


def run_property_suite(seed: int = 42, samples: int = 100_000, kernel: Callable = kernel_h) -> PropertyReport:
    """Run every sampled invariant deterministically from ``seed``.

    ``samples`` drives the kernel inequalities; the chain check uses a tenth
    of it, the identities at most 10^3 (critical point) and 10^4 (weights).
    ``kernel`` can be replaced to self-test the harness.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    results = [
        _lemma1(rng, samples, kernel, polygamy=False),
        _lemma1(rng, samples, kernel, polygamy=True),
        _lemma2(rng, max(1, samples // 10)),
        *_critical_point(rng, min(samples, 1000), kernel),
        _dominance(rng, samples, kernel),
        *_weights(rng, min(samples, 10_000)),
    ]
    return PropertyReport(seed, samples, tuple(results))


def corrupted_kernel(x, y, a, t):
    """Kernel inflated by 1%; breaks the lower-bound direction for self-tests."""
    return 1.01 * np.asarray(kernel_h(x, y, a, t))
