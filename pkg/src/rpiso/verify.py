"""Verification suite: every module invariant as a named, tolerated check.

Each check returns a CheckResult with a human-readable detail string; the
CLI verify command runs them all and conjoins the verdicts.  Tolerances
live in DEFAULT_TOLERANCES and can be overridden by name.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import clifford, profile, spectrum, specfn, willmore

__all__ = ["CheckResult", "DEFAULT_TOLERANCES", "run_all"]

_HALF_PI = 0.5 * math.pi

DEFAULT_TOLERANCES: dict[str, float] = {
    "profile_symmetry": 1e-8,
    "endpoint_margin": 1e-9,
    "identity": 1e-12,
    "specfn_agree": 1e-10,
    "sphere_area": 1e-12,
    "willmore_min": 1e-6,
    "logf_fd": 1e-5,
    "rp3_perimeter": 1e-9,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _tol(overrides: dict[str, float] | None, name: str) -> float:
    if overrides and name in overrides:
        return overrides[name]
    return DEFAULT_TOLERANCES[name]


def check_successive(max_dim: int = 10, samples: int = 2000) -> CheckResult:
    """Successive handoff of tube families in every ambient dimension."""
    failures = []
    for dim in range(3, max_dim + 1):
        if not profile.successive_check(dim, samples):
            failures.append(dim)
    if failures:
        return CheckResult(
            "successive_profiles", False, f"failed for ambient dims {failures}"
        )
    return CheckResult(
        "successive_profiles",
        True,
        f"argmin k nondecreasing and complete for dims 3..{max_dim}, {samples} samples",
    )


def check_profile_arcs(
    dim: int = 7, samples: int = 2000, overrides: dict[str, float] | None = None
) -> CheckResult:
    """Arc count, transition count, and volume symmetry of one profile."""
    tol = _tol(overrides, "profile_symmetry")
    points = profile.profile_curve(dim, samples)
    ks = [p.best_k for p in points]
    arcs = 1 + sum(1 for i in range(1, len(ks)) if ks[i] != ks[i - 1])
    crossings = profile.transition_volumes(dim)
    worst = 0.0
    for i in range(samples // 2):
        left = points[i].perimeter
        right = points[samples - 1 - i].perimeter
        worst = max(worst, abs(left - right) / max(left, right))
    ok = arcs == dim and len(crossings) == dim - 1 and worst <= tol
    return CheckResult(
        "profile_arcs",
        ok,
        f"dim {dim}: {arcs} arcs (want {dim}), {len(crossings)} transitions "
        f"(want {dim - 1}), symmetry defect {worst:.2e} (tol {tol:.0e})",
    )


def check_stability(
    max_n: int = 9, radii: int = 1000, overrides: dict[str, float] | None = None
) -> CheckResult:
    """Margin sign agrees with the closed-form latitude interval; the
    three-candidate eigenvalue minimum survives a brute-force search."""
    tol = _tol(overrides, "endpoint_margin")
    rs = np.linspace(0.01, _HALF_PI - 0.01, radii)
    even_modes = [
        (k1, k2)
        for k1 in range(7)
        for k2 in range(7)
        if k1 + k2 <= 6 and (k1 + k2) % 2 == 0 and k1 + k2 > 0
    ]
    for n1 in range(1, max_n):
        for n2 in range(1, max_n - n1 + 1):
            lo, hi = spectrum.stability_interval(n1, n2)
            for end in (lo, hi):
                margin = spectrum.stability_margin(clifford.CliffordShape(n1, n2, end))
                if abs(margin) > tol:
                    return CheckResult(
                        "stability_equivalence",
                        False,
                        f"({n1},{n2}) endpoint r={end}: margin {margin:.2e}",
                    )
            for r in rs:
                shape = clifford.CliffordShape(n1, n2, float(r))
                margin = spectrum.stability_margin(shape)
                if lo <= r <= hi:
                    if margin < -tol:
                        return CheckResult(
                            "stability_equivalence",
                            False,
                            f"({n1},{n2}) r={r}: negative margin {margin:.2e} inside interval",
                        )
                elif margin >= 0.0:
                    return CheckResult(
                        "stability_equivalence",
                        False,
                        f"({n1},{n2}) r={r}: nonnegative margin {margin:.2e} outside interval",
                    )
            # Brute force on a thinned grid: the three candidates must
            # already attain the minimum over all low even modes.
            for r in rs[::25]:
                shape = clifford.CliffordShape(n1, n2, float(r))
                best = spectrum.first_even_eigenvalue(shape).value
                brute = min(
                    spectrum.laplace_eigenvalue(shape, k1, k2) for k1, k2 in even_modes
                )
                if brute < best * (1.0 - 1e-14):
                    return CheckResult(
                        "stability_equivalence",
                        False,
                        f"({n1},{n2}) r={r}: brute force {brute} beats candidates {best}",
                    )
    pairs = sum(1 for a in range(1, max_n) for _ in range(1, max_n - a + 1))
    return CheckResult(
        "stability_equivalence",
        True,
        f"sign agreement and candidate optimality over {pairs} factor pairs, {radii} radii",
    )


def check_identities(
    count: int = 1000, seed: int = 20240817, overrides: dict[str, float] | None = None
) -> CheckResult:
    """Trace identity, per-curvature quadratic, and Jacobian transport on
    random shapes."""
    tol = _tol(overrides, "identity")
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(count):
        n1 = int(rng.integers(0, 7))
        n2 = int(rng.integers(0 if n1 > 0 else 1, 7))
        r = float(rng.uniform(0.05, _HALF_PI - 0.05))
        shape = clifford.CliffordShape(n1, n2, r)
        data = clifford.curvature(shape)
        n = shape.n
        trace = data.norm_sq - n + data.beta * n * data.mean
        worst = max(worst, abs(trace))
        for kappa in (data.kappa1, data.kappa2):
            worst = max(worst, abs(kappa * kappa + data.beta * kappa - 1.0))
        t = float(rng.uniform(0.0, _HALF_PI - r - 0.01))
        moved = clifford.CliffordShape(n1, n2, r + t)
        lhs = clifford.parallel_jacobian(shape, t) * clifford.area_sphere(shape)
        rhs = clifford.area_sphere(moved)
        worst = max(worst, abs(lhs - rhs) / rhs)
    ok = worst <= tol
    return CheckResult(
        "algebraic_identities",
        ok,
        f"worst identity residual {worst:.2e} over {count} random shapes (tol {tol:.0e})",
    )


def check_specfn(overrides: dict[str, float] | None = None) -> CheckResult:
    """Quadrature vs closed form, and sphere_area against known values and
    its Gamma recurrence."""
    agree_tol = _tol(overrides, "specfn_agree")
    area_tol = _tol(overrides, "sphere_area")
    worst = 0.0
    for n1 in range(11):
        for n2 in range(11):
            for r in (0.1, 0.5, 1.0, 1.5):
                quad = specfn.cossin_integral(n1, n2, r)
                closed = specfn.cossin_integral_closed(n1, n2, r)
                worst = max(worst, abs(quad - closed) / max(abs(closed), 1e-300))
    if worst > agree_tol:
        return CheckResult(
            "special_functions", False, f"quadrature mismatch {worst:.2e}"
        )
    known = [
        (1, 2.0 * math.pi),
        (2, 4.0 * math.pi),
        (3, 2.0 * math.pi**2),
    ]
    for d, expected in known:
        err = abs(specfn.sphere_area(d) - expected) / expected
        if err > area_tol:
            return CheckResult(
                "special_functions", False, f"sphere_area({d}) off by {err:.2e}"
            )
    rec_worst = 0.0
    for d in range(2, 61):
        lhs = specfn.sphere_area(d)
        rhs = 2.0 * math.pi * specfn.sphere_area(d - 2) / (d - 1)
        rec_worst = max(rec_worst, abs(lhs - rhs) / rhs)
    ok = rec_worst <= area_tol
    return CheckResult(
        "special_functions",
        ok,
        f"quadrature agreement {worst:.2e}, recurrence defect {rec_worst:.2e}",
    )


def check_willmore_minimum(
    max_n: int = 9, r_samples: int = 10_000, overrides: dict[str, float] | None = None
) -> CheckResult:
    """Grid minimum of the tube Willmore energy matches the balanced
    Clifford area; the degenerate family is constant."""
    tol = _tol(overrides, "willmore_min")
    for n in range(2, max_n + 1):
        energy, k, _ = willmore.energy_minimum(n, r_samples)
        target = willmore.width_candidate(n)
        err = abs(energy - target) / target
        if err > tol or k not in (n // 2, (n + 1) // 2):
            return CheckResult(
                "willmore_minimum",
                False,
                f"n={n}: min {energy} at k={k}, want {target} near balanced k",
            )
        bound = 2.0 * specfn.sphere_area(n)
        rs = np.linspace(0.05, _HALF_PI - 0.05, 101)
        const_err = max(
            abs(
                willmore.tube_willmore_energy(clifford.CliffordShape(0, n, float(r)))
                - bound
            )
            / bound
            for r in rs
        )
        if const_err > 1e-10:
            return CheckResult(
                "willmore_minimum",
                False,
                f"n={n}: k=0 family drifts from 2|S^n| by {const_err:.2e}",
            )
    return CheckResult(
        "willmore_minimum",
        True,
        f"energy minima match width candidate to {tol:.0e} for n=2..{max_n}",
    )


def check_area_chain(
    max_n: int = 50, overrides: dict[str, float] | None = None
) -> CheckResult:
    """Inequality chain, log-convexity, and the finite-difference probe of
    the second log derivative."""
    fd_tol = _tol(overrides, "logf_fd")
    for n in range(2, max_n + 1):
        if not willmore.verify_area_chain(n):
            return CheckResult("area_chain", False, f"chain fails at n={n}")
    # Probe where the second derivative is O(0.05) or larger; at a 1e-4
    # step the difference quotient's rounding floor is ~1e-6 absolute, so
    # smaller true values cannot be resolved to 1e-5 relative.
    worst = 0.0
    for n in (2, 3, 7):
        for x in (0.3, 0.7, 1.3):
            h = 1e-4
            fd = (
                math.log(willmore.clifford_area_f(n, x + h))
                - 2.0 * math.log(willmore.clifford_area_f(n, x))
                + math.log(willmore.clifford_area_f(n, x - h))
            ) / (h * h)
            exact = willmore.logf_second_derivative(n, x)
            worst = max(worst, abs(fd - exact) / abs(exact))
    ok = worst <= fd_tol
    return CheckResult(
        "area_chain",
        ok,
        f"chain and convexity hold for n=2..{max_n}; fd defect {worst:.2e} (tol {fd_tol:.0e})",
    )


def check_rp3(overrides: dict[str, float] | None = None) -> CheckResult:
    """Classified RP^3 behavior: torus beats sphere at the half volume,
    spheres win at small volume."""
    tol = _tol(overrides, "rp3_perimeter")
    total = profile.total_volume(3)
    half = total / 2.0
    point = profile.profile_at(3, half)
    torus_ok = point.best_k == 1 and abs(point.perimeter - math.pi**2) <= tol
    # Elementary geodesic-sphere candidate: solve 2r - sin 2r = pi/2 for the
    # half-volume ball radius, then evaluate its boundary area.
    lo, hi = 0.0, _HALF_PI
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if 2.0 * mid - math.sin(2.0 * mid) < _HALF_PI:
            lo = mid
        else:
            hi = mid
    sphere_perimeter = 4.0 * math.pi * math.sin(0.5 * (lo + hi)) ** 2
    beats = point.perimeter < sphere_perimeter
    small = profile.profile_at(3, 0.02 * total)
    ok = torus_ok and beats and small.best_k == 0
    return CheckResult(
        "rp3_crosscheck",
        ok,
        f"half volume: k={point.best_k} perimeter {point.perimeter:.12f} "
        f"vs sphere {sphere_perimeter:.6f}; small volume k={small.best_k}",
    )


def run_all(
    max_dim: int = 10,
    samples: int = 2000,
    overrides: dict[str, float] | None = None,
) -> list[CheckResult]:
    """Full verification battery, ordered as the criteria are stated."""
    if overrides:
        unknown = set(overrides) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise ValueError(f"unknown tolerance overrides: {sorted(unknown)}")
    arcs_dim = min(7, max_dim)
    return [
        check_successive(max_dim=max_dim, samples=samples),
        check_profile_arcs(dim=arcs_dim, samples=samples, overrides=overrides),
        check_stability(overrides=overrides),
        check_identities(overrides=overrides),
        check_specfn(overrides=overrides),
        check_willmore_minimum(overrides=overrides),
        check_area_chain(overrides=overrides),
        check_rp3(overrides=overrides),
    ]
