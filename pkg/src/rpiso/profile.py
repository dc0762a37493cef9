"""Isoperimetric profiles of real projective space from tube envelopes.

For each k in {0, .., n} the distance tubes around a totally geodesic
RP^k inside RP^(n+1) are bounded by Clifford shapes
S^k(cos r) x S^(n-k)(sin r).  Sweeping r fills the whole space, giving a
perimeter-vs-volume curve per k; the candidate isoperimetric profile is
the lower envelope of these n + 1 curves.  The same tubes double-covered
in the round sphere give the antipodally-symmetric comparison profile.

Enclosed volume has the closed form

    v_k(r) = V_total * I_{sin^2 r}((n - k + 1)/2, (k + 1)/2),

with I the regularized incomplete beta, which is also what the direct
integral (1/2) |S^k| |S^(n-k)| cossin_integral(k, n-k, r) evaluates to.
All grid paths reuse one vectorized bisection so that batched and scalar
queries agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .clifford import CliffordShape, area_rp, area_sphere
from .specfn import _betainc_xc, _betainc_xc_vec, sphere_area

__all__ = [
    "Space",
    "TubeFamily",
    "ProfilePoint",
    "CrossingNotFound",
    "total_volume",
    "tube_volume",
    "tube_perimeter",
    "radius_for_volume",
    "profile_at",
    "profile_curve",
    "transition_volumes",
    "successive_check",
]

_HALF_PI = 0.5 * math.pi

# Volume solves stop when |v(r) - v| <= VOLUME_TOL * total volume.
VOLUME_TOL = 1e-12

_MAX_BISECT = 200


class Space(Enum):
    """Ambient space: the projective quotient, or its double cover with
    antipodally-symmetric competitors (every quantity exactly doubles)."""

    PROJECTIVE = "rp"
    SPHERE_ANTIPODAL = "sphere"


class CrossingNotFound(RuntimeError):
    """No sign change between adjacent tube perimeter curves: the expected
    envelope transition is absent."""


@dataclass(frozen=True)
class TubeFamily:
    """Tubes around a totally geodesic RP^k in RP^(ambient_dim), swept by
    the boundary latitude r in [0, pi/2]."""

    ambient_dim: int
    k: int
    space: Space = Space.PROJECTIVE

    def __post_init__(self) -> None:
        if not isinstance(self.ambient_dim, int) or isinstance(self.ambient_dim, bool):
            raise ValueError(f"ambient_dim must be an integer, got {self.ambient_dim!r}")
        if self.ambient_dim < 2:
            raise ValueError(f"ambient_dim must be >= 2, got {self.ambient_dim}")
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise ValueError(f"k must be an integer, got {self.k!r}")
        if not (0 <= self.k <= self.n):
            raise ValueError(
                f"k must lie in [0, {self.n}] for ambient_dim {self.ambient_dim}, got {self.k}"
            )
        if not isinstance(self.space, Space):
            raise ValueError(f"space must be a Space, got {self.space!r}")

    @property
    def n(self) -> int:
        """Boundary hypersurface dimension."""
        return self.ambient_dim - 1


@dataclass(frozen=True)
class ProfilePoint:
    """One point of the candidate profile: the cheapest tube boundary among
    all k at the given enclosed volume."""

    volume: float
    perimeter: float
    best_k: int
    best_r: float


def total_volume(ambient_dim: int, space: Space = Space.PROJECTIVE) -> float:
    """Volume of the ambient space: |S^d| for the sphere, half for RP^d."""
    if not isinstance(ambient_dim, int) or isinstance(ambient_dim, bool):
        raise ValueError(f"ambient_dim must be an integer, got {ambient_dim!r}")
    if ambient_dim < 2:
        raise ValueError(f"ambient_dim must be >= 2, got {ambient_dim}")
    if not isinstance(space, Space):
        raise ValueError(f"space must be a Space, got {space!r}")
    area = sphere_area(ambient_dim)
    return area if space is Space.SPHERE_ANTIPODAL else 0.5 * area


def _beta_params(k: int, n: int) -> tuple[float, float]:
    return 0.5 * (n - k + 1), 0.5 * (k + 1)


def tube_volume(fam: TubeFamily, r: float) -> float:
    """Volume enclosed by the latitude-r tube boundary around RP^k.

    Strictly increasing from 0 at r = 0 to the full ambient volume at
    r = pi/2 for every k; evaluated through the incomplete-beta closed
    form of the cos^k sin^(n-k) integral.
    """
    r = float(r)
    if not (0.0 <= r <= _HALF_PI):
        raise ValueError(f"radius must lie in [0, pi/2], got {r}")
    a, b = _beta_params(fam.k, fam.n)
    s = math.sin(r)
    c = math.cos(r)
    frac = _betainc_xc(s * s, c * c, a, b)
    return total_volume(fam.ambient_dim, fam.space) * frac


def tube_perimeter(fam: TubeFamily, r: float) -> float:
    """Area of the latitude-r tube boundary, a Clifford shape of factor
    dimensions (k, n - k)."""
    r = float(r)
    if not (0.0 < r < _HALF_PI):
        raise ValueError(f"radius must lie in (0, pi/2), got {r}")
    shape = CliffordShape(fam.k, fam.n - fam.k, r)
    if fam.space is Space.SPHERE_ANTIPODAL:
        return area_sphere(shape)
    return area_rp(shape)


def radius_for_volume(fam: TubeFamily, v: float) -> float:
    """Latitude whose tube encloses volume v, for v strictly inside
    (0, total).  Bisection on the monotone volume map, run until the
    enclosed volume matches to VOLUME_TOL of the ambient total."""
    v = float(v)
    total = total_volume(fam.ambient_dim, fam.space)
    if not (0.0 < v < total):
        raise ValueError(f"volume must lie in (0, {total}), got {v}")
    tol = VOLUME_TOL * total
    lo = 0.0
    hi = _HALF_PI
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        vm = tube_volume(fam, mid)
        if abs(vm - v) <= tol:
            return mid
        if vm < v:
            lo = mid
        else:
            hi = mid
    raise RuntimeError(
        f"volume bisection failed to converge for k={fam.k}, v={v}"
    )


def _radii_for_fractions(n: int, k: int, v_frac: np.ndarray) -> np.ndarray:
    """Vectorized latitude solve: I_{sin^2 r}(a, b) = v_frac per element.

    Each element freezes at its own convergence step, so results do not
    depend on what else shares the batch.
    """
    a, b = _beta_params(k, n)
    v_frac = np.asarray(v_frac, dtype=float)
    lo = np.zeros(v_frac.shape)
    hi = np.full(v_frac.shape, _HALF_PI)
    out = np.full(v_frac.shape, np.nan)
    active = np.ones(v_frac.shape, dtype=bool)
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        s = np.sin(mid)
        c = np.cos(mid)
        frac = _betainc_xc_vec(s * s, c * c, a, b)
        done = active & (np.abs(frac - v_frac) <= VOLUME_TOL)
        out[done] = mid[done]
        active &= ~done
        if not active.any():
            return out
        below = frac < v_frac
        lo = np.where(active & below, mid, lo)
        hi = np.where(active & ~below, mid, hi)
    raise RuntimeError(f"volume bisection failed to converge for k={k}")


def _perimeters_at(n: int, k: int, r: np.ndarray, space: Space) -> np.ndarray:
    """Tube boundary areas C_k cos^k(r) sin^(n-k)(r) on an array of radii."""
    coeff = sphere_area(k) * sphere_area(n - k)
    if space is Space.PROJECTIVE:
        coeff *= 0.5
    return coeff * np.cos(r) ** k * np.sin(r) ** (n - k)


def _envelope(
    ambient_dim: int, volumes: np.ndarray, space: Space
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Lower envelope over k of the tube perimeters at fixed volumes.

    Returns (best_k, perimeter, radius) arrays; ties pick the smallest k.
    """
    n = ambient_dim - 1
    total = total_volume(ambient_dim, space)
    v_frac = np.asarray(volumes, dtype=float) / total
    perims = np.empty((n + 1, v_frac.size))
    radii = np.empty((n + 1, v_frac.size))
    for k in range(n + 1):
        rk = _radii_for_fractions(n, k, v_frac)
        radii[k] = rk
        perims[k] = _perimeters_at(n, k, rk, space)
    best = np.argmin(perims, axis=0)
    cols = np.arange(v_frac.size)
    return best, perims[best, cols], radii[best, cols]


def profile_at(
    ambient_dim: int, v: float, space: Space = Space.PROJECTIVE
) -> ProfilePoint:
    """Best tube boundary enclosing volume v among all core dimensions k."""
    v = float(v)
    total = total_volume(ambient_dim, space)
    if not (0.0 < v < total):
        raise ValueError(f"volume must lie in (0, {total}), got {v}")
    best, perim, radius = _envelope(ambient_dim, np.array([v]), space)
    return ProfilePoint(
        volume=v,
        perimeter=float(perim[0]),
        best_k=int(best[0]),
        best_r=float(radius[0]),
    )


def _volume_grid(total: float, samples: int) -> np.ndarray:
    return total * (np.arange(1, samples + 1) / (samples + 1))


def profile_curve(
    ambient_dim: int, samples: int, space: Space = Space.PROJECTIVE
) -> list[ProfilePoint]:
    """Profile sampled at samples interior volumes v_i = total * i/(samples+1)."""
    _check_samples(samples)
    total = total_volume(ambient_dim, space)
    volumes = _volume_grid(total, samples)
    best, perims, radii = _envelope(ambient_dim, volumes, space)
    return [
        ProfilePoint(
            volume=float(volumes[i]),
            perimeter=float(perims[i]),
            best_k=int(best[i]),
            best_r=float(radii[i]),
        )
        for i in range(samples)
    ]


def _perimeter_gap(
    ambient_dim: int, k: int, v: float, space: Space
) -> float:
    """P_k(v) - P_{k+1}(v) through scalar radius solves."""
    low = radius_for_volume(TubeFamily(ambient_dim, k, space), v)
    high = radius_for_volume(TubeFamily(ambient_dim, k + 1, space), v)
    return tube_perimeter(TubeFamily(ambient_dim, k, space), low) - tube_perimeter(
        TubeFamily(ambient_dim, k + 1, space), high
    )


def _bisect_crossing(gap, lo: float, hi: float, tol: float) -> float:
    """Root of a sign-changing function on [lo, hi] by plain bisection."""
    g_lo = gap(lo)
    g_hi = gap(hi)
    if g_lo == 0.0:
        return lo
    if g_hi == 0.0:
        return hi
    if (g_lo < 0.0) == (g_hi < 0.0):
        raise CrossingNotFound(
            f"no sign change on [{lo}, {hi}] (gap {g_lo:.3e} .. {g_hi:.3e})"
        )
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol:
            return mid
        g_mid = gap(mid)
        if g_mid == 0.0:
            return mid
        if (g_mid < 0.0) == (g_lo < 0.0):
            lo = mid
            g_lo = g_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


_SCAN_POINTS = 1024


def transition_volumes(
    ambient_dim: int, space: Space = Space.PROJECTIVE
) -> list[tuple[int, int, float]]:
    """Envelope handoff volumes between adjacent tube families.

    For each k the perimeter gap P_k - P_{k+1} is sampled on a coarse
    volume grid to bracket its sign change, then bisected to VOLUME_TOL of
    the total volume.  Raises CrossingNotFound if some adjacent pair never
    exchanges optimality, which would break the successive ordering.
    """
    total = total_volume(ambient_dim, space)
    n = ambient_dim - 1
    grid = _volume_grid(total, _SCAN_POINTS)
    v_frac = grid / total
    perims = np.empty((n + 1, grid.size))
    for k in range(n + 1):
        rk = _radii_for_fractions(n, k, v_frac)
        perims[k] = _perimeters_at(n, k, rk, space)
    tol = VOLUME_TOL * total
    out: list[tuple[int, int, float]] = []
    for k in range(n):
        gap_vals = perims[k] - perims[k + 1]
        sign_flip = np.nonzero(np.signbit(gap_vals[:-1]) != np.signbit(gap_vals[1:]))[0]
        if sign_flip.size == 0:
            raise CrossingNotFound(
                f"tube families k={k} and k={k + 1} never exchange optimality "
                f"in ambient dimension {ambient_dim}"
            )
        # The handoff on the lower envelope is the first crossing where the
        # smaller k stops winning.
        i = int(sign_flip[0])
        v_star = _bisect_crossing(
            lambda v: _perimeter_gap(ambient_dim, k, v, space),
            float(grid[i]),
            float(grid[i + 1]),
            tol,
        )
        out.append((k, k + 1, v_star))
    out.sort(key=lambda item: item[2])
    return out


def successive_check(
    ambient_dim: int, samples: int, space: Space = Space.PROJECTIVE
) -> bool:
    """True when the envelope's best k is nondecreasing in volume and every
    k from 0 to n appears: tube families hand off one after another."""
    _check_samples(samples, minimum=100)
    best, _, _ = _envelope(
        ambient_dim,
        _volume_grid(total_volume(ambient_dim, space), samples),
        space,
    )
    if not np.all(np.diff(best) >= 0):
        return False
    return set(np.unique(best).tolist()) == set(range(ambient_dim))


def _check_samples(samples: int, minimum: int = 2) -> int:
    if not isinstance(samples, int) or isinstance(samples, bool):
        raise ValueError(f"samples must be an integer, got {samples!r}")
    if samples < minimum:
        raise ValueError(f"samples must be >= {minimum}, got {samples}")
    return samples
