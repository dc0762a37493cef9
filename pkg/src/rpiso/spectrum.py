"""Laplace spectrum and second-variation stability of Clifford shapes.

Eigenfunctions on the product S^n1(cos r) x S^n2(sin r) separate into
spherical harmonics of degrees (k1, k2), with Laplace eigenvalue

    k1 (k1 + n1 - 1) / cos^2 r + k2 (k2 + n2 - 1) / sin^2 r.

A mode descends to real projective space exactly when k1 + k2 is even.
The shape is a stable two-sided critical point of area among
antipodally-symmetric variations iff the first positive even eigenvalue
is at least n + |A|^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .clifford import CliffordShape, curvature

__all__ = [
    "EigenMode",
    "StabilityReport",
    "laplace_eigenvalue",
    "first_even_eigenvalue",
    "stability_margin",
    "stability_interval",
    "geodesic_sphere_margin",
    "stability_report",
]

# A computed margin at least this close to zero counts as stable; the
# boundary latitudes themselves have exact margin zero in exact arithmetic.
STABILITY_SLACK = 1e-12

# Degree pairs that can realize the smallest positive antipodally-even
# eigenvalue: any other even pair dominates one of these three in both
# separated eigenvalue terms.
_EVEN_CANDIDATES = ((1, 1), (2, 0), (0, 2))


@dataclass(frozen=True)
class EigenMode:
    """One separated eigenmode: factor degrees and its Laplace eigenvalue."""

    k1: int
    k2: int
    value: float


@dataclass(frozen=True)
class StabilityReport:
    """Stability summary of one Clifford shape.

    margin = lambda1 - n - |A|^2 where lambda1 is the first positive even
    eigenvalue; interval_lo/interval_hi is the closed latitude interval on
    which shapes of the same factor dimensions are stable.
    """

    shape: CliffordShape
    mode: EigenMode
    lambda1: float
    margin: float
    stable: bool
    interval_lo: float
    interval_hi: float


def laplace_eigenvalue(shape: CliffordShape, k1: int, k2: int) -> float:
    """Laplace eigenvalue of the degree-(k1, k2) product harmonic.

    A factor of dimension zero carries only the constant and sign
    harmonics, so its degree must be 0 or 1.
    """
    for name, value, dim in (("k1", k1, shape.n1), ("k2", k2, shape.n2)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"{name} must be an integer, got {value!r}")
        if value < 0:
            raise ValueError(f"{name} must be >= 0, got {value}")
        if dim == 0 and value > 1:
            raise ValueError(
                f"{name}={value} has no harmonic on a 0-dimensional factor"
            )
    c = math.cos(shape.r)
    s = math.sin(shape.r)
    return k1 * (k1 + shape.n1 - 1) / (c * c) + k2 * (k2 + shape.n2 - 1) / (s * s)


def first_even_eigenvalue(shape: CliffordShape) -> EigenMode:
    """Smallest positive eigenvalue among modes with k1 + k2 even.

    Requires both factor dimensions positive.  Only the degree pairs
    (1, 1), (2, 0), (0, 2) can attain the minimum; ties resolve to the
    first of these in that order.
    """
    if shape.n1 < 1 or shape.n2 < 1:
        raise ValueError("first_even_eigenvalue requires n1 >= 1 and n2 >= 1")
    best: EigenMode | None = None
    for k1, k2 in _EVEN_CANDIDATES:
        value = laplace_eigenvalue(shape, k1, k2)
        if best is None or value < best.value:
            best = EigenMode(k1=k1, k2=k2, value=value)
    assert best is not None
    return best


def stability_margin(shape: CliffordShape) -> float:
    """First positive even eigenvalue minus the Jacobi potential n + |A|^2.

    Nonnegative exactly on the closed interval returned by
    stability_interval.  The (1, 1) mode satisfies the Jacobi equation at
    every latitude, so the margin is never strictly positive; inside the
    interval it is identically zero.
    """
    data = curvature(shape)
    lam = first_even_eigenvalue(shape).value
    return lam - shape.n - data.norm_sq


def stability_interval(n1: int, n2: int) -> tuple[float, float]:
    """Closed latitude interval [lo, hi] of stable shapes for fixed factor
    dimensions:

        tan(lo) = sqrt(n2 / (n1 + 2)),  tan(hi) = sqrt((n2 + 2) / n1).
    """
    for name, value in (("n1", n1), ("n2", n2)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"{name} must be an integer, got {value!r}")
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")
    lo = math.atan(math.sqrt(n2 / (n1 + 2.0)))
    hi = math.atan(math.sqrt((n2 + 2.0) / n1))
    return lo, hi


def geodesic_sphere_margin(n: int, r: float) -> float:
    """Stability margin of the geodesic sphere of radius r in projective
    space, which is zero identically.

    The lifted surface is a pair of antipodal round spheres that the deck
    map swaps, so no parity constraint applies and the relevant eigenvalue
    is the degree-1 value n/sin^2 r.  The Jacobi potential is
    n + n cot^2 r = n/sin^2 r as well, so the margin cancels exactly at
    every radius: geodesic spheres are degenerate-stable throughout.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"n must be an integer, got {n!r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    r = float(r)
    if not (0.0 < r < 0.5 * math.pi):
        raise ValueError(f"radius must lie in (0, pi/2), got {r}")
    return 0.0


def stability_report(shape: CliffordShape) -> StabilityReport:
    """Bundle eigenvalue, margin, verdict, and the stability interval."""
    mode = first_even_eigenvalue(shape)
    data = curvature(shape)
    margin = mode.value - shape.n - data.norm_sq
    lo, hi = stability_interval(shape.n1, shape.n2)
    return StabilityReport(
        shape=shape,
        mode=mode,
        lambda1=mode.value,
        margin=margin,
        stable=margin >= -STABILITY_SLACK,
        interval_lo=lo,
        interval_hi=hi,
    )
