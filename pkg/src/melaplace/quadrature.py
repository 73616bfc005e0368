"""Adaptive Gauss-Legendre quadrature.

One engine sits under every integral in the package.  A panel is accepted
when the difference between its order-n and order-2n Gauss-Legendre values
meets tolerance, otherwise it is halved; half-line integrals are summed
over geometrically widening panels until the tail stops contributing.
Integrands must be vectorized: they receive a float ndarray of nodes and
return an array of (possibly complex) values.

The unit-interval path removes the x**(z-1) endpoint singularity with the
substitution x = exp(-t), which turns the integral into a plain half-line
one; no singular-weight rules are needed anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteIntegrand, TailDivergence

# first geometric panel width on half-line integrals
_FIRST_TAIL_WIDTH = 1.0
# hard cap on geometric tail panels; widths grow so this covers ~1e19
_MAX_TAIL_PANELS = 512


@dataclass(frozen=True)
class QuadratureSpec:
    """Knobs for every numerical integral.

    panel_order is the Gauss-Legendre node count per panel; the error
    estimate doubles it.  abs_tol is the floor below which relative error
    is not enforced.  tail_growth is the width ratio between consecutive
    half-line panels.
    """

    panel_order: int = 16
    rel_tol: float = 1e-10
    abs_tol: float = 1e-13
    max_panels: int = 4096
    tail_growth: float = 2.0

    def __post_init__(self):
        if self.panel_order < 2:
            raise ValueError("panel_order must be at least 2")
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_panels < 1:
            raise ValueError("max_panels must be at least 1")
        if not self.tail_growth > 1:
            raise ValueError("tail_growth must exceed 1")

    def to_json(self) -> dict:
        return {
            "panel_order": self.panel_order,
            "rel_tol": self.rel_tol,
            "abs_tol": self.abs_tol,
            "max_panels": self.max_panels,
            "tail_growth": self.tail_growth,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "QuadratureSpec":
        return cls(**{k: doc[k] for k in doc})


@dataclass(frozen=True)
class Estimate:
    """Integral value with its error estimate and convergence bookkeeping."""

    value: complex
    err_est: float
    panels_used: int
    converged: bool


_GL_CACHE: dict = {}


def _gl(n: int):
    if n not in _GL_CACHE:
        _GL_CACHE[n] = np.polynomial.legendre.leggauss(n)
    return _GL_CACHE[n]


def _panel_value(f, a: float, b: float, order: int) -> complex:
    nodes, weights = _gl(order)
    half = 0.5 * (b - a)
    xs = 0.5 * (a + b) + half * nodes
    vals = np.asarray(f(xs), dtype=complex)
    if not np.all(np.isfinite(vals)):
        bad = xs[~np.isfinite(vals)][0]
        raise NonFiniteIntegrand(f"integrand not finite near t = {bad!r}")
    return half * complex(np.dot(weights, vals))


def _tolerance(q: QuadratureSpec, scale: float) -> float:
    return max(q.abs_tol, q.rel_tol * scale)


def integrate_finite(f, a: float, b: float, q: QuadratureSpec | None = None) -> Estimate:
    """Adaptive integral of f over [a, b].

    Panels failing the order-n vs order-2n comparison are halved until the
    panel budget runs out; converged reports whether the final accumulated
    error estimate meets tolerance.
    """
    q = q or QuadratureSpec()
    if a > b:
        raise ValueError("integrate_finite requires a <= b")
    if a == b:
        return Estimate(0j, 0.0, 0, True)
    stack = [(float(a), float(b))]
    total = 0j
    err_sum = 0.0
    used = 0
    capped = False
    width_floor = 1e-14 * max(1.0, abs(a), abs(b))
    while stack:
        lo, hi = stack.pop()
        coarse = _panel_value(f, lo, hi, q.panel_order)
        fine = _panel_value(f, lo, hi, 2 * q.panel_order)
        err = abs(fine - coarse)
        used += 1
        if err <= _tolerance(q, abs(fine)) or (hi - lo) <= width_floor:
            total += fine
            err_sum += err
        elif used + len(stack) + 2 > q.max_panels:
            total += fine
            err_sum += err
            capped = True
        else:
            mid = 0.5 * (lo + hi)
            stack.append((mid, hi))
            stack.append((lo, mid))
    converged = (not capped) and err_sum <= _tolerance(q, abs(total))
    return Estimate(total, err_sum, used, converged)


def integrate_halfline(f, a: float, q: QuadratureSpec | None = None) -> Estimate:
    """Integral of f over [a, inf) by geometrically widening panels.

    Stops once two consecutive panels are negligible both absolutely and
    relative to the running total.  Three consecutive growing panel
    magnitudes raise TailDivergence.
    """
    q = q or QuadratureSpec()
    lo = float(a)
    width = _FIRST_TAIL_WIDTH
    total = 0j
    err_sum = 0.0
    used = 0
    quiet = 0
    stopped = False
    densities: list = []
    for _ in range(_MAX_TAIL_PANELS):
        est = integrate_finite(f, lo, lo + width, q)
        total += est.value
        err_sum += est.err_est
        used += est.panels_used
        mag = abs(est.value)
        negligible = mag <= q.abs_tol and (
            mag <= q.rel_tol * abs(total) or abs(total) <= q.abs_tol
        )
        if negligible:
            quiet += 1
            if quiet >= 2:
                stopped = True
                err_sum += mag
                break
        else:
            quiet = 0
        # widths grow geometrically, so divergence is judged on the mean
        # magnitude per unit length, not on the raw panel integral
        if mag > q.abs_tol:
            densities.append(mag / width)
        else:
            densities.clear()
        if len(densities) >= 4 and (
            densities[-1] > densities[-2] > densities[-3] > densities[-4]
        ):
            raise TailDivergence(
                f"tail panels keep growing past t = {lo + width:g}"
            )
        if used >= q.max_panels:
            break
        lo += width
        width *= q.tail_growth
    converged = stopped and err_sum <= _tolerance(q, abs(total))
    return Estimate(total, err_sum, used, converged)


def integrate_unit_singular(f, sigma: float, q: QuadratureSpec | None = None) -> Estimate:
    """Integral of f over (0, 1] where f behaves like x**(sigma-1) at zero.

    The substitution x = exp(-t) maps the integral onto [0, inf) with the
    singularity absorbed into exponential decay exp(-sigma*t); sigma <= 0
    means the integral diverges and is rejected up front.
    """
    q = q or QuadratureSpec()
    if sigma <= 0.0:
        raise TailDivergence(
            f"effective endpoint exponent sigma = {sigma:g} is outside the "
            "convergence region"
        )

    def transformed(t):
        u = np.exp(-t)
        out = np.zeros(np.shape(t), dtype=complex)
        live = u > 0.0
        if np.any(live):
            # below u ~ 1e-308 the true contribution is u**sigma * O(1) -> 0
            out[live] = np.asarray(f(u[live]), dtype=complex) * u[live]
        return out

    return integrate_halfline(transformed, 0.0, q)
