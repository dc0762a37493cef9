"""Clifford hypersurfaces S^n1(cos r) x S^n2(sin r) in the unit (n+1)-sphere.

A shape is the product of a round n1-sphere of radius cos r and a round
n2-sphere of radius sin r, sitting at latitude r inside S^(n+1) with
n = n1 + n2.  Principal curvatures with respect to the unit normal that
points toward growing r are -tan r on the first factor and cot r on the
second, so the shape operator satisfies A^2 - beta0 A - Id = 0 with
beta0 = cot r - tan r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .specfn import sphere_area

__all__ = [
    "CliffordShape",
    "CurvatureData",
    "curvature",
    "area_sphere",
    "area_rp",
    "parallel_jacobian",
    "quadratic_roots",
]

_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class CliffordShape:
    """Latitude-r product sphere S^n1(cos r) x S^n2(sin r) in S^(n1+n2+1).

    Factor dimensions may be zero (a geodesic sphere about a lower
    dimensional core) but not both; the latitude r must be strictly
    between 0 and pi/2 so neither factor collapses.
    """

    n1: int
    n2: int
    r: float

    def __post_init__(self) -> None:
        for name, value in (("n1", self.n1), ("n2", self.n2)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be >= 0, got {value}")
        if self.n1 + self.n2 < 1:
            raise ValueError("n1 + n2 must be at least 1")
        r = float(self.r)
        if not (0.0 < r < _HALF_PI):
            raise ValueError(f"latitude must lie in (0, pi/2), got {r}")
        object.__setattr__(self, "r", r)

    @property
    def n(self) -> int:
        """Hypersurface dimension."""
        return self.n1 + self.n2

    @property
    def ambient_dim(self) -> int:
        return self.n1 + self.n2 + 1


@dataclass(frozen=True)
class CurvatureData:
    """Principal curvatures with multiplicities, plus derived invariants.

    mean is the mean curvature H = (n1 kappa1 + n2 kappa2) / n, norm_sq the
    squared second-fundamental-form norm, and beta = tan r - cot r the
    coefficient in A^2 + beta A - Id = 0.
    """

    kappa1: float
    mult1: int
    kappa2: float
    mult2: int
    mean: float
    norm_sq: float
    beta: float


def curvature(shape: CliffordShape) -> CurvatureData:
    """Principal curvature data of the shape for the outward (increasing r)
    unit normal: kappa1 = -tan r on the cos r factor, kappa2 = cot r on the
    sin r factor."""
    s = math.sin(shape.r)
    c = math.cos(shape.r)
    kappa1 = -s / c
    kappa2 = c / s
    n = shape.n
    mean = (shape.n1 * kappa1 + shape.n2 * kappa2) / n
    norm_sq = shape.n1 * kappa1 * kappa1 + shape.n2 * kappa2 * kappa2
    beta = s / c - c / s
    return CurvatureData(
        kappa1=kappa1,
        mult1=shape.n1,
        kappa2=kappa2,
        mult2=shape.n2,
        mean=mean,
        norm_sq=norm_sq,
        beta=beta,
    )


def area_sphere(shape: CliffordShape) -> float:
    """n-dimensional area of the shape inside the unit sphere:

        |S^n1| |S^n2| cos^n1(r) sin^n2(r).
    """
    c = math.cos(shape.r)
    s = math.sin(shape.r)
    return (
        sphere_area(shape.n1)
        * sphere_area(shape.n2)
        * c**shape.n1
        * s**shape.n2
    )


def area_rp(shape: CliffordShape) -> float:
    """Area of the image in real projective space, where the antipodal map
    identifies the surface with itself two to one."""
    return 0.5 * area_sphere(shape)


def parallel_jacobian(shape: CliffordShape, t: float) -> float:
    """Area density of the normal flow by distance t:

        (cos(r+t)/cos r)^n1 (sin(r+t)/sin r)^n2,

    equal to the product of (cos t + kappa_i sin t) over principal
    curvatures.  Vanishes exactly at the focal latitudes r + t = 0 and
    r + t = pi/2 when the collapsing factor has positive dimension, and may
    be negative past them.
    """
    t = float(t)
    latitude = shape.r + t
    if latitude == _HALF_PI and shape.n1 > 0:
        return 0.0
    c_ratio = math.cos(latitude) / math.cos(shape.r)
    s_ratio = math.sin(latitude) / math.sin(shape.r)
    return c_ratio**shape.n1 * s_ratio**shape.n2


def quadratic_roots(beta0: float) -> tuple[float, float]:
    """Roots mu_- < 0 < mu_+ of mu^2 - beta0 mu - 1 = 0, computed without
    cancellation: the root of larger magnitude comes from the stable branch
    of the quadratic formula and the other from the product mu_- mu_+ = -1.
    """
    beta0 = float(beta0)
    if not math.isfinite(beta0):
        raise ValueError(f"coefficient must be finite, got {beta0}")
    disc = math.hypot(beta0, 2.0)
    if beta0 >= 0.0:
        mu_plus = 0.5 * (beta0 + disc)
        mu_minus = -1.0 / mu_plus
    else:
        mu_minus = 0.5 * (beta0 - disc)
        mu_plus = -1.0 / mu_minus
    return mu_minus, mu_plus
