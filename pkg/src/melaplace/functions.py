"""Built-in test-function catalog with exact growth metadata.

The catalog is closed on purpose: every entry carries analytically known
growth bounds, which is what lets contour placement be checked from
metadata instead of runtime divergence probing.  Five kinds are provided:

    exp         f(x) = exp(-g*x)                 on [0, inf)
    power       F(y) = y**g                      on (0, 1]
    mixedexp    f(x) = exp(-g1*x)*sin(x)**2 + exp(-g2*x)*cos(x)**2
    mixedpower  F(y) = y**g1*sin(y)**2 + y**g2*cos(y)**2
    expminusx   f(x) = exp(-x)                   (the Gamma-function demo)

Evaluation accepts scalars or numpy arrays.  Optional spectator parameters
(``alphas``) ride along through serialization but never enter evaluation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedMap


class FunctionKind(enum.Enum):
    EXP = "exp"
    POWER = "power"
    MIXED_EXP = "mixedexp"
    MIXED_POWER = "mixedpower"
    EXP_MINUS_X = "expminusx"


class DomainHint(enum.Enum):
    HALF_LINE = "half_line"
    UNIT_INTERVAL = "unit_interval"
    FULL_LINE = "full_line"


_PARAM_COUNT = {
    FunctionKind.EXP: 1,
    FunctionKind.POWER: 1,
    FunctionKind.MIXED_EXP: 2,
    FunctionKind.MIXED_POWER: 2,
    FunctionKind.EXP_MINUS_X: 0,
}

_POWER_FAMILY = (FunctionKind.POWER, FunctionKind.MIXED_POWER)


@dataclass(frozen=True)
class FunctionSpec:
    """A catalog entry: kind plus its real parameters.

    ``params`` holds g (or g1, g2); ``alphas`` are inert spectator
    parameters carried through serialization only.
    """

    kind: FunctionKind
    params: tuple = ()
    alphas: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        want = _PARAM_COUNT[self.kind]
        if len(self.params) != want:
            raise ValueError(
                f"{self.kind.value} takes exactly {want} parameter(s), "
                f"got {len(self.params)}"
            )
        for p in self.params + self.alphas:
            if not math.isfinite(p):
                raise ValueError("parameters must be finite reals")

    # -- convenience constructors ------------------------------------
    @classmethod
    def exp(cls, gamma, alphas=()):
        return cls(FunctionKind.EXP, (gamma,), tuple(alphas))

    @classmethod
    def power(cls, gamma, alphas=()):
        return cls(FunctionKind.POWER, (gamma,), tuple(alphas))

    @classmethod
    def mixed_exp(cls, g1, g2, alphas=()):
        return cls(FunctionKind.MIXED_EXP, (g1, g2), tuple(alphas))

    @classmethod
    def mixed_power(cls, g1, g2, alphas=()):
        return cls(FunctionKind.MIXED_POWER, (g1, g2), tuple(alphas))

    @classmethod
    def exp_minus_x(cls, alphas=()):
        return cls(FunctionKind.EXP_MINUS_X, (), tuple(alphas))

    @property
    def domain_hint(self) -> DomainHint:
        if self.kind in _POWER_FAMILY:
            return DomainHint.UNIT_INTERVAL
        return DomainHint.HALF_LINE

    def to_json(self) -> dict:
        doc = {"kind": self.kind.value, "params": list(self.params)}
        if self.alphas:
            doc["alphas"] = list(self.alphas)
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "FunctionSpec":
        return cls(
            FunctionKind(doc["kind"]),
            tuple(doc.get("params", ())),
            tuple(doc.get("alphas", ())),
        )


@dataclass(frozen=True)
class GrowthBounds:
    """Critical growth indices: |f(x)| bounded by amplitude*exp(right_index*x)
    on the exponential side, F(y) by amplitude/y**right_index on the power
    side.  ``left_index`` is the matching lower bound (-inf when absent)."""

    right_index: float
    left_index: float
    amplitude: float = 1.0

    def __post_init__(self):
        if not self.left_index <= self.right_index:
            raise ValueError("left_index must not exceed right_index")
        if not self.amplitude > 0:
            raise ValueError("amplitude must be positive")


@dataclass(frozen=True)
class Strip:
    """Vertical holomorphy strip c1 < Re z < c2 (borders may be infinite)."""

    c1: float
    c2: float

    def __post_init__(self):
        if not self.c1 < self.c2:
            raise ValueError("strip requires c1 < c2")

    def contains(self, re_z: float) -> bool:
        return self.c1 < re_z < self.c2


def evaluate(spec: FunctionSpec, x):
    """Pointwise value of the catalog function; x may be a scalar or ndarray.

    Power-family kinds require x >= 0.
    """
    xa = np.asarray(x, dtype=float)
    if spec.kind in _POWER_FAMILY and np.any(xa < 0.0):
        raise DomainError(f"{spec.kind.value} requires a nonnegative argument")
    if spec.kind is FunctionKind.EXP:
        out = np.exp(-spec.params[0] * xa)
    elif spec.kind is FunctionKind.POWER:
        out = xa ** spec.params[0]
    elif spec.kind is FunctionKind.MIXED_EXP:
        g1, g2 = spec.params
        out = np.exp(-g1 * xa) * np.sin(xa) ** 2 + np.exp(-g2 * xa) * np.cos(xa) ** 2
    elif spec.kind is FunctionKind.MIXED_POWER:
        g1, g2 = spec.params
        out = xa ** g1 * np.sin(xa) ** 2 + xa ** g2 * np.cos(xa) ** 2
    else:
        out = np.exp(-xa)
    if np.isscalar(x) or np.ndim(x) == 0:
        return float(out)
    return out


def growth_bounds(spec: FunctionSpec) -> GrowthBounds:
    """Exact analytic growth indices for a catalog entry."""
    if spec.kind in (FunctionKind.EXP, FunctionKind.POWER):
        g = spec.params[0]
        return GrowthBounds(right_index=-g, left_index=-g)
    if spec.kind in (FunctionKind.MIXED_EXP, FunctionKind.MIXED_POWER):
        g1, g2 = spec.params
        return GrowthBounds(right_index=-min(g1, g2), left_index=-max(g1, g2))
    return GrowthBounds(right_index=-1.0, left_index=-1.0)


def to_moment_form(spec: FunctionSpec) -> FunctionSpec:
    """Map a half-line function f to the moment-side F with F(y) = f(-ln y).

    Only exponentials land back inside the catalog: exp(-g*x) becomes y**g.
    Everything else raises UnsupportedMap so no entry ever loses its exact
    growth metadata.
    """
    if spec.domain_hint is not DomainHint.HALF_LINE:
        raise UnsupportedMap("the map applies to half-line (Laplace-side) functions")
    if spec.kind is FunctionKind.EXP:
        return FunctionSpec.power(spec.params[0], spec.alphas)
    if spec.kind is FunctionKind.EXP_MINUS_X:
        return FunctionSpec.power(1.0, spec.alphas)
    raise UnsupportedMap(
        f"f(-ln y) for {spec.kind.value} is not representable in the catalog"
    )
