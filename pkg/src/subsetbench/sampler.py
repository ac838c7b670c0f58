"""Synthetic Pareto front generators.

Six front families on the unit box, each the positive part of an l_p sphere
or its affine inversion f -> 1 - f:

    linear-triangular    sum f_i        = 1   (p = 1)
    convex-triangular    sum sqrt(f_i)  = 1   (p = 1/2)
    concave-triangular   sum f_i^2      = 1   (p = 2)
    linear-inverted      sum (1 - f_i)  = 1
    convex-inverted      sum (1 - f_i)^2 = 1
    concave-inverted     sum sqrt(1 - f_i) = 1

Sampling is uniform in the cone measure of the l_p sphere: draw per-coordinate
magnitudes as g**(1/p) with g ~ Gamma(1/p, 1) and normalize by the p-norm.
For p = 1 this is the flat Dirichlet simplex; for p = 2 it matches normalized
absolute Gaussian vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import PointSet, Seed

__all__ = ["FrontKind", "FrontSpec", "sample_lp_sphere", "generate_front"]

GENERATOR_NAME = "numpy-philox"


class FrontKind(str, Enum):
    LINEAR_TRIANGULAR = "linear-triangular"
    CONVEX_TRIANGULAR = "convex-triangular"
    CONCAVE_TRIANGULAR = "concave-triangular"
    LINEAR_INVERTED = "linear-inverted"
    CONVEX_INVERTED = "convex-inverted"
    CONCAVE_INVERTED = "concave-inverted"

    @property
    def inverted(self) -> bool:
        return self.value.endswith("inverted")

    @property
    def power(self) -> float:
        # Shape of the underlying l_p sphere. Inverted fronts flip convexity:
        # the convex-inverted surface is the image of the p=2 sphere, the
        # concave-inverted one of the p=1/2 sphere.
        base = {
            FrontKind.LINEAR_TRIANGULAR: 1.0,
            FrontKind.CONVEX_TRIANGULAR: 0.5,
            FrontKind.CONCAVE_TRIANGULAR: 2.0,
            FrontKind.LINEAR_INVERTED: 1.0,
            FrontKind.CONVEX_INVERTED: 2.0,
            FrontKind.CONCAVE_INVERTED: 0.5,
        }
        return base[self]


@dataclass(frozen=True)
class FrontSpec:
    """Recipe for one sampled front: kind, objectives, size, seed."""

    kind: FrontKind
    m: int
    n: int
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "kind", FrontKind(self.kind))
        if self.m < 2:
            raise ValueError("need at least 2 objectives")
        if self.n < 1:
            raise ValueError("need at least 1 point")

    @property
    def dataset_id(self) -> str:
        return f"{self.kind.value}-m{self.m}-n{self.n}-s{self.seed}"


def sample_lp_sphere(m: int, p: float, n: int, seed: Seed | int) -> np.ndarray:
    """Sample ``n`` points on the positive part of the unit l_p sphere.

    Returns an ``(n, m)`` array with ``sum_i s_i**p == 1`` per row. Uniform in
    the cone measure induced by normalizing draws from the exponential-power
    law with density proportional to exp(-|x|**p).
    """
    if m < 2:
        raise ValueError("need at least 2 coordinates")
    if p <= 0:
        raise ValueError("p must be positive")
    if n < 1:
        raise ValueError("need at least 1 sample")
    rng = Seed.coerce(seed).rng()
    # |x|**p ~ Gamma(1/p, 1) when x follows the exponential-power law.
    g = rng.gamma(1.0 / p, 1.0, size=(n, m))
    x = g ** (1.0 / p)
    norm = (g.sum(axis=1)) ** (1.0 / p)
    return x / norm[:, None]


def generate_front(spec: FrontSpec) -> PointSet:
    """Materialize the sampled front for ``spec`` (bit-reproducible)."""
    s = sample_lp_sphere(spec.m, spec.kind.power, spec.n, spec.seed)
    f = 1.0 - s if spec.kind.inverted else s
    return PointSet(f, label=spec.dataset_id)


def surface_residual(points: PointSet | np.ndarray, kind: FrontKind) -> np.ndarray:
    """Per-point deviation |sum term_i - 1| from the surface the kind samples."""
    f = points.points if isinstance(points, PointSet) else np.asarray(points, dtype=np.float64)
    g = 1.0 - f if kind.inverted else f
    return np.abs((g ** kind.power).sum(axis=1) - 1.0)
