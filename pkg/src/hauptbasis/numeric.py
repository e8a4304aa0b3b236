"""Floating-point evaluation of q-expansions and numeric verification.

Series are summed at points of the upper half-plane with Im tau above a
configurable floor, which keeps |q| small enough that the truncation tail of
every registered expansion stays far below double-precision noise.  On top of
the evaluator sit the weight-k transformation residual, the weight-0
Hauptmodul invariance residual, and a log-log regression estimating the
vanishing order of a form at an elliptic point.

The derivative of an automorphic function transforms with cocycle exponent 2
(chain rule), so a weight-k form built from (theta w)^(k/2) picks up exactly
(c tau + d)^k; that is the law checked here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .basis import build_basis
from .groups import moebius_apply
from .qseries import PrecisionError

__all__ = [
    "EvalConfig",
    "eval_series",
    "automorphy_residual",
    "invariance_residual",
    "vanishing_slope",
    "DEFAULT_RADII",
]

TWO_PI_I = 2j * math.pi

DEFAULT_RADII = tuple(10 ** (-3 + i / 3) for i in range(4))


@dataclass(frozen=True)
class EvalConfig:
    """Evaluation parameters: how many exponent slots to sum, the admissible
    lower bound on Im tau, and the residual threshold for pass/fail checks."""

    terms_used: int = 80
    min_imag: float = 0.8
    tolerance: float = 1e-8
    near_zero_guard: float = 1e-30

    def __post_init__(self):
        if self.min_imag <= 0:
            raise ValueError("min_imag must be positive")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.terms_used < 1:
            raise ValueError("terms_used must be at least 1")


DEFAULT_CONFIG = EvalConfig()


def eval_series(f, tau, cfg=DEFAULT_CONFIG):
    """Sum c_e * exp(2 pi i tau e / h) over stored exponents e < terms_used."""
    tau = complex(tau)
    if tau.imag < cfg.min_imag:
        raise ValueError(
            f"series accuracy not guaranteed: Im tau = {tau.imag:.4f} is below "
            f"the admissible floor {cfg.min_imag}"
        )
    if f.prec < cfg.terms_used:
        raise PrecisionError(
            f"window shortfall: evaluation uses {cfg.terms_used} exponent slots, "
            f"series window is {f.prec}"
        )
    x = cmath.exp(TWO_PI_I * tau / f.base_den)
    total = 0j
    for e, c in sorted(f.terms.items()):
        if e >= cfg.terms_used:
            break
        total += float(c) * x**e
    return total


def automorphy_residual(gd, k, j, gamma, tau, cfg=DEFAULT_CONFIG, basis=None):
    """Relative residual of the weight-k law h_j(g tau) = (c tau + d)^k h_j(tau).

    Both tau and g(tau) must clear the admissibility floor, so callers pick
    (gamma, tau) pairs accordingly; the registry's designated test points are
    chosen that way.  A prebuilt basis may be passed to amortize sweeps.
    """
    tau = complex(tau)
    gtau = moebius_apply(gamma, tau)
    if basis is None:
        basis = build_basis(gd, k, window=cfg.terms_used)
    form = basis.forms[j]
    left = eval_series(form, gtau, cfg)
    base = eval_series(form, tau, cfg)
    cocycle = (float(gamma.c) * tau + float(gamma.d)) ** k
    return abs(left - cocycle * base) / max(abs(base), cfg.near_zero_guard)


def invariance_residual(gd, gamma, tau, cfg=DEFAULT_CONFIG):
    """Relative residual of the weight-0 law w(g tau) = w(tau) for the
    group's Hauptmodul."""
    tau = complex(tau)
    gtau = moebius_apply(gamma, tau)
    w = gd.hauptmodul
    left = eval_series(w, gtau, cfg)
    base = eval_series(w, tau, cfg)
    return abs(left - base) / max(abs(base), cfg.near_zero_guard)


def vanishing_slope(gd, k, j, vertex, radii=DEFAULT_RADII, cfg=DEFAULT_CONFIG,
                    basis=None, samples=12):
    """Estimate the vanishing order of h_j at an elliptic vertex location.

    Samples |h_j| on circles of the given radii around the stored location
    and returns the least-squares slope of log max|h_j| against log radius.
    A zero of order m shows up as a slope close to m.
    """
    if vertex.location is None:
        raise ValueError("vertex has no stored location in the upper half-plane")
    center = complex(vertex.location)
    if basis is None:
        basis = build_basis(gd, k, window=cfg.terms_used)
    form = basis.forms[j]
    points_ok = all(
        (center + r * cmath.exp(2j * math.pi * t / samples)).imag >= cfg.min_imag
        for r in radii
        for t in range(samples)
    )
    if not points_ok:
        raise ValueError("inadmissible sample points: a circle dips below the floor")
    xs, ys = [], []
    for r in radii:
        peak = max(
            abs(eval_series(form, center + r * cmath.exp(2j * math.pi * t / samples), cfg))
            for t in range(samples)
        )
        xs.append(math.log(r))
        ys.append(math.log(peak))
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    sxx = sum((x - mean_x) ** 2 for x in xs)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    return sxy / sxx
