"""Critical directions of the section functionals on the constraint sphere.

The structured search walks the one-parameter families of directions whose
coordinates take at most two distinct values besides the apex.  By symmetry
the gradient of a permutation-invariant functional at such a direction lies
in the fixed subspace of the pattern's isotropy group, so vanishing of the
derivative along the family curve is equivalent to full first-order
criticality; every candidate is nevertheless re-checked against the exact
Lagrange residual before it is reported.

Gradients of the closed forms are taken by complex-step differentiation,
which is exact to rounding and keeps the residual filter meaningful at the
1e-9 level.  Classification uses a finite-difference Hessian restricted to
an orthonormal tangent basis of the constraints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Optional

import numpy as np

from .bodies import (
    Body,
    Canonical,
    Functional,
    Kind,
    RegimeTag,
    SectionQuery,
    canonical_direction,
    make_direction,
    regime_check,
    sample_direction,
    thresholds,
)
from .closed_form import closed_A, closed_P, maximizer_direction
from .errors import (
    DomainError,
    NoFlipFound,
    NotCritical,
    RegimeViolation,
    Unsupported,
)
from .oracle import perimeter_exact, section_volume_exact

_RESIDUAL_TOL = 1e-9
_CLASSIFY_RESIDUAL_TOL = 1e-6
_DEGENERATE_BAND = 1e-9
_HESS_STEP = 1e-4
_GRAD_STEP = 1e-6
_CSTEP = 1e-200


class Classification(Enum):
    LOCAL_MAX = "LocalMax"
    LOCAL_MIN = "LocalMin"
    SADDLE = "Saddle"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class CriticalPoint:
    """A first-order critical direction of A(., t) or P(., t)."""

    coords: np.ndarray
    t: float
    functional: Functional
    multipliers: tuple
    structure: tuple  # (apex coordinate, multiplicity of the equal block)
    classification: Classification
    coefficient: Optional[float]
    residual: float


@dataclass(frozen=True)
class ThresholdReport:
    """Analytic vs. empirically scanned classification flip of the
    canonical direction."""

    body: Body
    functional: Functional
    analytic: float
    empirical: float

    @property
    def gap(self) -> float:
        return abs(self.analytic - self.empirical)


def canonical_form(body: Body, coords: np.ndarray) -> np.ndarray:
    """Representative of the direction under the body's symmetry group.

    The simplex is invariant under coordinate permutations, the cube and
    cross-polytope additionally under sign flips.
    """
    if body.kind is Kind.SIMPLEX:
        return np.sort(coords)[::-1].copy()
    return np.sort(np.abs(coords))[::-1].copy()


def _retract(body: Body, x: np.ndarray) -> np.ndarray:
    if body.kind is Kind.SIMPLEX:
        x = x - np.mean(x)
    return x / np.linalg.norm(x)


def _log_closed(body: Body, functional: Functional, z: np.ndarray, t: float):
    """log of the vertex-separating closed form at raw coordinates ``z``.

    Complex-safe: the apex and the sign pattern are read off the real part,
    everything else is analytic, so a complex step differentiates exactly.
    Validity (the regime) is the caller's responsibility.
    """
    n = body.n
    if body.kind is Kind.SIMPLEX:
        b = z[np.argsort(-z.real)]
        gaps = b[0] - b[1:]
        if functional is Functional.VOLUME:
            return (
                0.5 * math.log(n + 1.0) - math.lgamma(n)
                + (n - 1) * np.log(b[0] - t) - np.sum(np.log(gaps))
            )
        w = np.sqrt(n - (n + 1.0) * b[1:] ** 2)
        s = np.sum(w * gaps / np.prod(gaps))
        return (n - 2) * np.log(b[0] - t) - math.lgamma(n - 1) + np.log(s)
    sigma = np.where(z.real >= 0.0, 1.0, -1.0)
    b = (sigma * z)[np.argsort(-(sigma * z).real)]
    if body.kind is Kind.CROSSPOLYTOPE:
        if functional is Functional.VOLUME:
            return (
                (n - 1) * math.log(2.0) - math.lgamma(n)
                + (n - 2) * np.log(b[0]) + (n - 1) * np.log(b[0] - t)
                - np.sum(np.log(b[0] ** 2 - b[1:] ** 2))
            )
        eps = np.array(list(product((1.0, -1.0), repeat=n - 1)))
        dots = b[0] + eps @ b[1:]
        w = np.sqrt(1.0 - dots ** 2 / n)
        s = np.sum(w / np.prod(b[0] - eps * b[1:][None, :], axis=1))
        return (
            0.5 * math.log(n) - math.lgamma(n - 1)
            + (n - 2) * np.log(b[0] - t) + np.log(s)
        )
    half = 0.5 * np.sum(b) - t
    if functional is Functional.VOLUME:
        return (n - 1) * np.log(half) - math.lgamma(n) - np.sum(np.log(b))
    w = np.sum(b * np.sqrt(1.0 - b ** 2))
    return np.log(w) + (n - 2) * np.log(half) - math.lgamma(n - 1) - np.sum(np.log(b))


def _closed_usable(body: Body, functional: Functional, x: np.ndarray, t: float) -> bool:
    """Whether the raw closed form equals the functional at ``x``."""
    if body.kind is Kind.CUBE and float(np.min(np.abs(x))) < 1e-9:
        return False
    try:
        q = SectionQuery(body, make_direction(body, x.copy()), t)
    except Exception:
        return False
    reg = regime_check(q)
    return reg.tag is RegimeTag.VERTEX_SEPARATING


def _cgrad(body: Body, functional: Functional, x: np.ndarray, t: float) -> np.ndarray:
    """Complex-step gradient of the log closed form."""
    d = x.size
    g = np.empty(d)
    for k in range(d):
        zz = x.astype(complex)
        zz[k] += 1j * _CSTEP
        g[k] = float(np.imag(_log_closed(body, functional, zz, t))) / _CSTEP
    return g


def log_value(body: Body, functional: Functional, x: np.ndarray, t: float) -> float:
    """log of the functional, via the closed form in regime, else the
    exact oracle; -inf for empty or degenerate sections."""
    try:
        direction = make_direction(body, x.copy())
    except Exception:
        return -math.inf
    q = SectionQuery(body, direction, t)
    try:
        sv = closed_A(q) if functional is Functional.VOLUME else closed_P(q)
        val = sv.value
    except (RegimeViolation, Unsupported):
        if functional is Functional.VOLUME:
            val = section_volume_exact(q)
        else:
            val = perimeter_exact(q)
    return math.log(val) if val > 0.0 else -math.inf


def _fd_grad(body: Body, functional: Functional, x: np.ndarray, t: float,
             h: float = 1e-5) -> np.ndarray:
    g = np.empty(x.size)
    for k in range(x.size):
        e = np.zeros(x.size)
        e[k] = h
        g[k] = (log_value(body, functional, x + e, t)
                - log_value(body, functional, x - e, t)) / (2.0 * h)
    return g


def _gradient(body: Body, functional: Functional, x: np.ndarray, t: float) -> np.ndarray:
    if _closed_usable(body, functional, x, t):
        return _cgrad(body, functional, x, t)
    return _fd_grad(body, functional, x, t)


def _lagrange(body: Body, x: np.ndarray, g: np.ndarray):
    """Multipliers and residual of grad + lam*a (+ mu*1 for the simplex)."""
    cols = [x]
    if body.kind is Kind.SIMPLEX:
        cols.append(np.ones_like(x))
    basis = np.stack(cols, axis=1)
    coef, *_ = np.linalg.lstsq(basis, -g, rcond=None)
    residual = float(np.linalg.norm(g + basis @ coef))
    return tuple(float(c) for c in coef), residual


def _tangent_basis(body: Body, x: np.ndarray) -> np.ndarray:
    rows = [x]
    if body.kind is Kind.SIMPLEX:
        rows.append(np.ones_like(x) / math.sqrt(x.size))
    m = np.stack(rows)
    _, _, vt = np.linalg.svd(m, full_matrices=True)
    return vt[len(rows):].T  # columns span the tangent space


def second_order_coefficient(body: Body, t: float, functional: Functional) -> float:
    """Multiplier of the curve's second derivative at the canonical
    direction; its sign decides local max vs. min there.

    Simplex: (n-k)/(alpha - t) - (n+2) alpha with alpha = sqrt(n/(n+1)),
    k = 1 for volume, 2 for perimeter.  Cross-polytope (volume):
    (n-1)/(1-t) - (n+2).  Cube: (n-k)/(sqrt(n) - 2t) - 2 sqrt(n).
    """
    n = body.n
    k = 1 if functional is Functional.VOLUME else 2
    if body.kind is Kind.SIMPLEX:
        alpha = math.sqrt(n / (n + 1.0))
        if abs(alpha - t) < 1e-14:
            raise DomainError("pole at t = sqrt(n/(n+1))")
        return (n - k) / (alpha - t) - (n + 2.0) * alpha
    if body.kind is Kind.CROSSPOLYTOPE:
        if functional is not Functional.VOLUME:
            raise Unsupported(
                "no closed second-order coefficient for the cross-polytope perimeter"
            )
        if abs(1.0 - t) < 1e-14:
            raise DomainError("pole at t = 1")
        return (n - 1) / (1.0 - t) - (n + 2.0)
    root = math.sqrt(n)
    if abs(root - 2.0 * t) < 1e-14:
        raise DomainError("pole at t = sqrt(n)/2")
    return (n - k) / (root - 2.0 * t) - 2.0 * root


def _coefficient_or_none(body: Body, t: float, functional: Functional,
                         x: np.ndarray) -> Optional[float]:
    """The closed coefficient, only where the direction is the canonical one."""
    try:
        canon = maximizer_direction(body, functional).coords
    except Exception:
        return None
    if np.max(np.abs(canonical_form(body, x) - canonical_form(body, canon))) > 1e-9:
        return None
    try:
        return second_order_coefficient(body, t, functional)
    except (DomainError, Unsupported):
        return None


def classify(body: Body, a, t: float, functional: Functional) -> CriticalPoint:
    """Finite-difference second-order classification at a critical point.

    Builds an orthonormal tangent basis of the constraint sphere, forms the
    central-difference Hessian of the log functional, and classifies by
    eigenvalue signs; eigenvalues within tolerance of zero give Degenerate.
    """
    x = np.asarray(a.coords if hasattr(a, "coords") else a, dtype=float)
    x = _retract(body, x.copy())
    g = _gradient(body, functional, x, t)
    if not np.all(np.isfinite(g)):
        raise NotCritical("objective is not differentiable here (empty section?)")
    multipliers, residual = _lagrange(body, x, g)
    if not math.isfinite(residual) or residual > _CLASSIFY_RESIDUAL_TOL:
        raise NotCritical(f"Lagrange residual {residual:.3e} exceeds 1e-6")
    basis = _tangent_basis(body, x)
    m = basis.shape[1]
    h = _HESS_STEP

    def phi(u: np.ndarray) -> float:
        return log_value(body, functional, _retract(body, x + basis @ u), t)

    f0 = phi(np.zeros(m))
    hess = np.empty((m, m))
    for i in range(m):
        ei = np.zeros(m)
        ei[i] = h
        hess[i, i] = (phi(ei) - 2.0 * f0 + phi(-ei)) / h ** 2
    for i in range(m):
        for j in range(i + 1, m):
            ei = np.zeros(m)
            ej = np.zeros(m)
            ei[i] = h
            ej[j] = h
            val = (phi(ei + ej) - phi(ei - ej) - phi(ej - ei) + phi(-ei - ej)) / (
                4.0 * h ** 2
            )
            hess[i, j] = hess[j, i] = val
    eigs = np.linalg.eigvalsh(hess)
    tol = 1e-6 * max(float(np.max(np.abs(eigs))), 1e-6)
    if bool(np.any(np.abs(eigs) <= tol)):
        cls = Classification.DEGENERATE
    elif bool(np.all(eigs < 0.0)):
        cls = Classification.LOCAL_MAX
    elif bool(np.all(eigs > 0.0)):
        cls = Classification.LOCAL_MIN
    else:
        cls = Classification.SADDLE
    srt = np.sort(x)[::-1]
    apex = float(np.max(np.abs(x))) if body.kind is not Kind.SIMPLEX else float(srt[0])
    mult = int(np.sum(np.abs(np.abs(x) - np.abs(x).max()) <= 1e-9))
    return CriticalPoint(
        coords=x,
        t=t,
        functional=functional,
        multipliers=multipliers,
        structure=(apex, mult),
        classification=cls,
        coefficient=_coefficient_or_none(body, t, functional, x),
        residual=residual,
    )


def _curve_points(body: Body, m: int, s: float):
    """Two-value ansatz directions as a function of the free parameter.

    Simplex: (a1 = s, x repeated m times, y repeated n-m times) with x a
    branch of the norm constraint quadratic and y fixed by the zero sum.
    Cross-polytope: (a1 = s, sqrt((1-s^2)/m) * m, zeros).
    Cube: (x = s repeated m times, y = sqrt((1-m s^2)/(n-m)) repeated).
    """
    return [z.real.copy() for z in _curve_points_complex(body, m, complex(s))]


def _curve_windows(body: Body, m: int, t: float):
    """Parameter windows on which the ansatz stays a valid unit direction."""
    n = body.n
    if body.kind is Kind.SIMPLEX:
        # the apex must separate (a1 > t); its largest feasible value is
        # sqrt(n/(n+1)), attained when all other coordinates agree
        return (max(t + 1e-9, 1e-6), math.sqrt(n / (n + 1.0)) - 1e-9)
    if body.kind is Kind.CROSSPOLYTOPE:
        return (1.0 / math.sqrt(m + 1.0) + 1e-9, 1.0 - 1e-9)
    return (1e-6, 1.0 / math.sqrt(m) - 1e-9)


def _curve_valid(body: Body, functional: Functional, coords: np.ndarray,
                 t: float) -> bool:
    if np.any(~np.isfinite(coords)):
        return False
    return _closed_usable(body, functional, coords, t)


def _curve_derivative(body: Body, functional: Functional, m: int, s: float,
                      branch: int, t: float) -> Optional[float]:
    """d/ds of the log functional along the ansatz curve (complex step)."""
    pts = _curve_points_complex(body, m, s + 1j * _CSTEP)
    if branch >= len(pts):
        return None
    z = pts[branch]
    if np.any(~np.isfinite(z.real)):
        return None
    val = _log_closed(body, functional, z, t)
    out = float(np.imag(val)) / _CSTEP
    return out if math.isfinite(out) else None


def _curve_points_complex(body: Body, m: int, s: complex):
    n = body.n
    if body.kind is Kind.SIMPLEX:
        disc = (2.0 * s * m) ** 2 - 4.0 * (m * n) * ((n - m + 1) * s * s - (n - m))
        if disc.real < 0.0:
            return []
        d2 = np.sqrt(disc + 0j)
        out = []
        for sign in (1.0, -1.0):
            xval = (-2.0 * s * m + sign * d2) / (2.0 * m * n)
            yval = -(s + m * xval) / (n - m)
            out.append(np.concatenate(([s], np.repeat(xval, m), np.repeat(yval, n - m))))
        return out
    if body.kind is Kind.CROSSPOLYTOPE:
        x2 = (1.0 - s * s) / m
        if x2.real <= 0.0:
            return []
        xval = np.sqrt(x2 + 0j)
        return [np.concatenate(([s], np.repeat(xval, m), np.zeros(n - 1 - m)))]
    y2 = (1.0 - m * s * s) / (n - m)
    if y2.real <= 0.0:
        return []
    yval = np.sqrt(y2 + 0j)
    return [np.concatenate((np.repeat(s, m), np.repeat(yval, n - m)))]


def _canonical_candidates(body: Body, functional: Functional):
    """Directions that are critical for symmetry reasons alone."""
    n = body.n
    if body.kind is Kind.SIMPLEX:
        return [canonical_direction(body, Canonical.APEX).coords]
    if body.kind is Kind.CROSSPOLYTOPE:
        return [canonical_direction(body, Canonical.APEX).coords]
    out = [canonical_direction(body, Canonical.MAIN_DIAGONAL).coords]
    for m in range(1, n):
        coords = np.zeros(n)
        coords[:m] = 1.0 / math.sqrt(m)
        out.append(coords)
    return out


def structured_critical_points(
    body: Body, t: float, functional: Functional = Functional.VOLUME
) -> list:
    """All critical points of the two-value symmetric ansatz at depth ``t``.

    Walks each multiplicity pattern's constraint curve, brackets sign
    changes of the derivative of the log functional along the curve, refines
    them by bisection to 1e-13, and keeps candidates whose full Lagrange
    residual passes 1e-9.  The canonical directions are always included.
    """
    n = body.n
    grid_size = 400
    found = []

    def push(coords: np.ndarray):
        coords = _retract(body, coords.copy())
        key = np.round(canonical_form(body, coords), 9)
        for prev in found:
            if np.max(np.abs(np.round(canonical_form(body, prev), 9) - key)) <= 1e-8:
                return
        found.append(coords)

    for coords in _canonical_candidates(body, functional):
        push(coords)

    n_branches = 2 if body.kind is Kind.SIMPLEX else 1
    for m in range(1, n):
        lo, hi = _curve_windows(body, m, t)
        if lo >= hi:
            continue
        grid = np.linspace(lo, hi, grid_size)
        for branch in range(n_branches):
            prev_s = None
            prev_d = None
            for s in grid:
                pts = _curve_points(body, m, float(s))
                if branch >= len(pts) or not _curve_valid(
                    body, functional, pts[branch], t
                ):
                    prev_s = prev_d = None
                    continue
                der = _curve_derivative(body, functional, m, float(s), branch, t)
                if der is None or not math.isfinite(der):
                    prev_s = prev_d = None
                    continue
                if prev_d is not None and der * prev_d < 0.0:
                    root = _bisect_curve(
                        body, functional, m, branch, prev_s, float(s), t
                    )
                    if root is not None:
                        pts_r = _curve_points(body, m, root)
                        if branch < len(pts_r):
                            push(pts_r[branch])
                prev_s, prev_d = float(s), der

    out = []
    for coords in found:
        g = _gradient(body, functional, coords, t)
        multipliers, residual = _lagrange(body, coords, g)
        if residual > _RESIDUAL_TOL and not _is_symmetry_critical(body, coords):
            continue
        try:
            cp = classify(body, coords, t, functional)
        except NotCritical:
            continue
        out.append(cp)
    out.sort(key=lambda cp: -cp.structure[0])
    return out


def _is_symmetry_critical(body: Body, coords: np.ndarray) -> bool:
    """Canonical directions are critical exactly, even where the gradient
    has to be taken by finite differences (zero cube coordinates)."""
    c = canonical_form(body, coords)
    vals = np.unique(np.round(c[np.abs(c) > 1e-12], 9))
    return vals.size == 1


def _bisect_curve(body, functional, m, branch, lo, hi, t, iters=100):
    dlo = _curve_derivative(body, functional, m, lo, branch, t)
    dhi = _curve_derivative(body, functional, m, hi, branch, t)
    if dlo is None or dhi is None or dlo * dhi > 0.0:
        return None
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        dm = _curve_derivative(body, functional, m, mid, branch, t)
        if dm is None:
            return None
        if dm == 0.0 or hi - lo < 1e-13:
            return mid
        if dm * dlo < 0.0:
            hi = mid
        else:
            lo, dlo = mid, dm
    return 0.5 * (lo + hi)


def crosspoly_phi(n: int, m: int, a1: float) -> float:
    """The structured-solution depth map of the cross-polytope volume
    ansatz: the critical pattern (a1, m equal coordinates) occurs at
    t = Phi(n, m, a1)."""
    num = ((m + 1.0) * a1 * a1 + 2.0 * m - 1.0) * a1
    den = (m + 1.0) * n * a1 * a1 + 2.0 * m - n
    if abs(den) < 1e-15:
        raise DomainError("pole of Phi")
    return num / den


def sphere_maximize(
    body: Body,
    t: float,
    functional: Functional,
    restarts: int = 64,
    rng: Optional[np.random.Generator] = None,
):
    """Multi-start projected gradient ascent of the log functional on the
    constraint sphere.  Returns (direction, value) for the best run, with
    the direction canonicalized under the body's symmetry group."""
    if rng is None:
        rng = np.random.default_rng(42)
    best_x, best_v = None, -math.inf
    for _ in range(max(1, restarts)):
        x = sample_direction(body, rng).coords.copy()
        x = _support_prephase(body, x, t)
        x, v = _ascend(body, functional, x, t)
        if v > best_v:
            best_v, best_x = v, x
    if best_x is None:
        raise DomainError(
            "no direction yields a nonempty section at depth t=%g" % t
        )
    coords = canonical_form(body, best_x)
    if body.kind is Kind.SIMPLEX:
        coords = _retract(body, coords)
    direction = make_direction(body, coords)
    return direction, math.exp(best_v) if math.isfinite(best_v) else 0.0


def _support_prephase(body: Body, x: np.ndarray, t: float, iters: int = 200):
    """Walk toward the supporting vertex until the section is nonempty."""
    verts = body.vertices()
    for _ in range(iters):
        if body.support(x) > t + 1e-12:
            return x
        v = verts[int(np.argmax(verts @ x))]
        x = _retract(body, x + 0.2 * v)
    return x


def _ascend(body: Body, functional: Functional, x: np.ndarray, t: float,
            max_iter: int = 10000):
    v = log_value(body, functional, x, t)
    if not math.isfinite(v):
        return x, v
    for _ in range(max_iter):
        g = _gradient(body, functional, x, t)
        basis = _tangent_basis(body, x)
        gt = basis @ (basis.T @ g)
        gnorm = float(np.linalg.norm(gt))
        if gnorm < 1e-10:
            break
        step = 1.0 / max(1.0, gnorm)
        improved = False
        for _ in range(40):
            cand = _retract(body, x + step * gt)
            vc = log_value(body, functional, cand, t)
            if vc > v + 1e-4 * step * gnorm * gnorm:
                x, v = cand, vc
                improved = True
                break
            step *= 0.5
        if not improved:
            break
    return x, v


def _flip_tangent(body: Body) -> np.ndarray:
    """Tangent direction along which the canonical classification flips."""
    n = body.n
    if body.kind is Kind.SIMPLEX:
        v = np.zeros(n + 1)
        v[1], v[2] = 1.0, -1.0
        return v / math.sqrt(2.0)
    if body.kind is Kind.CROSSPOLYTOPE:
        v = np.zeros(n)
        v[1] = 1.0
        return v
    v = np.zeros(n)
    v[0], v[1] = 1.0, -1.0
    return v / math.sqrt(2.0)


def _directional_curvature(body: Body, functional: Functional, x: np.ndarray,
                           v: np.ndarray, t: float, h: float = 5e-3) -> float:
    """5-point second derivative of the log functional along a tangent."""

    def g(u: float) -> float:
        return log_value(body, functional, _retract(body, x + u * v), t)

    return (
        -g(2 * h) + 16.0 * g(h) - 30.0 * g(0.0) + 16.0 * g(-h) - g(-2 * h)
    ) / (12.0 * h * h)


def threshold_scan(body: Body, functional: Functional) -> ThresholdReport:
    """Locates the depth at which the canonical direction's curvature along
    the flipping tangent changes sign, by bisection to 1e-6, and compares it
    with the analytic threshold constant."""
    table = thresholds(body)
    if functional is Functional.VOLUME:
        analytic = table.volume_threshold
    else:
        if body.kind is Kind.CROSSPOLYTOPE:
            raise Unsupported("no cross-polytope perimeter threshold constant")
        analytic = (
            table.cube_n3_perimeter_flip
            if body.kind is Kind.CUBE and body.n == 3
            else table.perimeter_threshold
        )
    x = maximizer_direction(body, functional).coords
    v = _flip_tangent(body)
    hi_lim = body.vertex_depth()
    lo = 0.05 * hi_lim
    hi = 0.98 * hi_lim

    def sigma(t: float) -> float:
        return _directional_curvature(body, functional, x, v, t)

    # walk down from the vertex, where the canonical direction is a local
    # maximum, and bisect the uppermost curvature sign change
    grid = np.linspace(hi, lo, 60)
    prev_t, prev_s = float(grid[0]), sigma(float(grid[0]))
    bracket = None
    for t in grid[1:]:
        st = sigma(float(t))
        if math.isfinite(st) and math.isfinite(prev_s) and st * prev_s < 0.0:
            bracket = (float(t), prev_t)
            break
        prev_t, prev_s = float(t), st
    if bracket is None:
        raise NoFlipFound(
            f"no curvature sign change on [{lo:.6f}, {hi:.6f}] "
            f"(body={body.kind.value}, n={body.n}, {functional.value})"
        )
    lo, hi = bracket
    slo, shi = sigma(lo), sigma(hi)
    while hi - lo > 1e-6:
        mid = 0.5 * (lo + hi)
        sm = sigma(mid)
        if sm == 0.0:
            lo = hi = mid
            break
        if sm * slo < 0.0:
            hi, shi = mid, sm
        else:
            lo, slo = mid, sm
    return ThresholdReport(body, functional, analytic, 0.5 * (lo + hi))
