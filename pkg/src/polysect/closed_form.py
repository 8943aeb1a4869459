"""Closed forms and analytic integral representations for section functionals.

``A(a, t)`` is the (n-1)-volume of the section and ``P(a, t)`` the
(n-2)-volume of its relative boundary.  The closed forms below are valid in
the vertex-separating regime (one vertex strictly above the hyperplane, all
of its neighbours strictly below); outside of it :class:`RegimeViolation`
is raised, except for empty sections which evaluate to 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Optional

import numpy as np

from .bodies import (
    Body,
    Canonical,
    Functional,
    Kind,
    Regime,
    RegimeTag,
    SectionQuery,
    canonical_direction,
    regime_check,
)
from .errors import DimensionOutOfRange, RegimeViolation, Unsupported
from .oracle import (
    rational_product_integral,
    sinc_cos_product_integral,
    sinc_product_integral,
)

#: closed forms switch to log-space products above this dimension
_LOG_SPACE_N = 30

#: direct enumeration bound for the cross-polytope perimeter sign sum
_MAX_SIGN_SUM_N = 20

#: coordinate gaps below this make the product forms numerically singular
_GAP_EPS = 1e-13


@dataclass(frozen=True)
class SectionValue:
    """A functional value together with how and where it was computed."""

    value: float
    method: str
    regime: Optional[Regime] = None
    warning: bool = False


def _regime_or_raise(q: SectionQuery) -> Regime:
    reg = regime_check(q)
    if reg.tag is RegimeTag.GENERAL:
        raise RegimeViolation(
            "closed form requires the vertex-separating regime "
            f"(body={q.body.kind.value}, n={q.body.n}, t={q.t})"
        )
    return reg


def _stable_product(factors: np.ndarray, n: int) -> float:
    """Plain product for moderate n, log-space for large n."""
    if n <= _LOG_SPACE_N:
        return float(np.prod(factors))
    return float(np.exp(np.sum(np.log(factors))))


def closed_A(q: SectionQuery) -> SectionValue:
    """Section volume in the vertex-separating regime.

    Simplex:        sqrt(n+1)/(n-1)! * (a1-t)^{n-1} / prod_j (a1 - a_j)
    Cross-polytope: 2^{n-1}/(n-1)! * a1^{n-2} (a1-t)^{n-1} / prod_j (a1^2 - a_j^2)
    Cube:           ((1/2) sum a_j - t)^{n-1} / ((n-1)! prod_j a_j)

    in the apex-first normalized frame, where ``a1`` is the apex coordinate.
    """
    body, t = q.body, q.t
    n = body.n
    reg = _regime_or_raise(q)
    if reg.tag is RegimeTag.EMPTY:
        return SectionValue(0.0, "closed", reg)
    b = reg.normalized
    if body.kind is Kind.SIMPLEX:
        gaps = b[0] - b[1:]
        if float(np.min(gaps)) < _GAP_EPS:
            raise RegimeViolation("apex coordinate gap below 1e-13")
        val = (
            math.sqrt(n + 1.0) / math.factorial(n - 1)
            * (b[0] - t) ** (n - 1) / _stable_product(gaps, n)
        )
    elif body.kind is Kind.CROSSPOLYTOPE:
        gaps = b[0] ** 2 - b[1:] ** 2
        if float(np.min(b[0] - b[1:])) < _GAP_EPS:
            raise RegimeViolation("apex coordinate gap below 1e-13")
        val = (
            2.0 ** (n - 1) / math.factorial(n - 1)
            * b[0] ** (n - 2) * (b[0] - t) ** (n - 1) / _stable_product(gaps, n)
        )
    else:
        if float(np.min(b)) < _GAP_EPS:
            raise RegimeViolation("cube closed form needs all coordinates nonzero")
        val = (
            (0.5 * float(np.sum(b)) - t) ** (n - 1)
            / (math.factorial(n - 1) * _stable_product(b, n))
        )
    return SectionValue(float(val), "closed", reg)


def closed_P(q: SectionQuery) -> SectionValue:
    """Section perimeter in the vertex-separating regime (n >= 3).

    Simplex:
        1/(n-2)! * sum_j sqrt(n - (n+1) a_j^2)
                   * prod_{k != j} 1/(a1 - a_k) * (a1 - t)^{n-2}
    Cross-polytope (sum over the 2^{n-1} facets at the apex):
        sqrt(n)/(n-2)! * sum_eps sqrt(1 - <a, eps>^2 / n)
                   * prod_j 1/(a1 - eps_j a_j) * (a1 - t)^{n-2}
    Cube:
        1/(n-2)! * sum_k a_k sqrt(1 - a_k^2)
                   * ((1/2) sum a_j - t)^{n-2} / prod_j a_j
    """
    body, t = q.body, q.t
    n = body.n
    if n < 3:
        raise DimensionOutOfRange("perimeter needs n >= 3")
    reg = _regime_or_raise(q)
    if reg.tag is RegimeTag.EMPTY:
        return SectionValue(0.0, "closed", reg)
    b = reg.normalized
    if body.kind is Kind.SIMPLEX:
        gaps = b[0] - b[1:]
        if float(np.min(gaps)) < _GAP_EPS:
            raise RegimeViolation("apex coordinate gap below 1e-13")
        weights = np.sqrt(np.maximum(n - (n + 1.0) * b[1:] ** 2, 0.0))
        prod_all = _stable_product(gaps, n)
        val = (
            (b[0] - t) ** (n - 2) / math.factorial(n - 2)
            * float(np.sum(weights * gaps / prod_all))
        )
    elif body.kind is Kind.CROSSPOLYTOPE:
        if n > _MAX_SIGN_SUM_N:
            raise Unsupported(
                f"cross-polytope perimeter sign sum limited to n <= {_MAX_SIGN_SUM_N}"
            )
        if float(np.min(b[0] - b[1:])) < _GAP_EPS:
            raise RegimeViolation("apex coordinate gap below 1e-13")
        eps = np.array(list(product((1.0, -1.0), repeat=n - 1)))
        dots = b[0] + eps @ b[1:]
        weights = np.sqrt(np.maximum(1.0 - dots ** 2 / n, 0.0))
        denom = b[0] - eps * b[1:][None, :]
        prods = np.prod(denom, axis=1)
        val = (
            math.sqrt(n) / math.factorial(n - 2)
            * (b[0] - t) ** (n - 2) * float(np.sum(weights / prods))
        )
    else:
        if float(np.min(b)) < _GAP_EPS:
            raise RegimeViolation("cube closed form needs all coordinates nonzero")
        weights = b * np.sqrt(np.maximum(1.0 - b ** 2, 0.0))
        val = (
            float(np.sum(weights))
            * (0.5 * float(np.sum(b)) - t) ** (n - 2)
            / (math.factorial(n - 2) * _stable_product(b, n))
        )
    return SectionValue(float(val), "closed", reg)


def analytic_A_integral(q: SectionQuery, tol: float = 1e-10) -> SectionValue:
    """Cube section volume through the sinc-product Fourier representation

        A(a, t) = (2/pi) Int_0^inf prod_j sinc(a_j s) cos(2 t s) ds.
    """
    if q.body.kind is not Kind.CUBE:
        raise Unsupported("the sinc-product representation applies to the cube")
    val = sinc_product_integral(q.a.coords, q.t, tol=tol)
    return SectionValue(float(val), "integral")


def analytic_P_integral(q: SectionQuery, tol: float = 1e-10) -> SectionValue:
    """Section perimeter through integral representations (n >= 3).

    Cube (any t):   2 sum_k sqrt(1 - a_k^2) *
                    (2/pi) Int_0^inf prod_{j != k} sinc(a_j s) cos(a_k s) cos(2ts) ds
    Simplex (any t): 1/(n-2)! sum_j sqrt(n - (n+1) a_j^2) *
                    (1/2 pi) Int_R prod_{k != j} 1/(1 + i (a_k - t) s) ds
    Cross-polytope (t = 0): 1/(n-2)! sum_{eps in {-1,1}^n} sqrt(n - <a,eps>^2) *
                    (1/2 pi) Int_R prod_j 1/(1 + i eps_j a_j s) ds

    The rational products are evaluated by residues; a face whose product
    retains a single factor contributes the principal value 1/2.
    """
    body, t = q.body, q.t
    n = body.n
    a = q.a.coords
    if n < 3:
        raise DimensionOutOfRange("perimeter needs n >= 3")
    if body.kind is Kind.CUBE:
        total = 0.0
        for k in range(n):
            others = np.delete(a, k)
            total += 2.0 * math.sqrt(max(1.0 - a[k] ** 2, 0.0)) \
                * sinc_cos_product_integral(others, [a[k]], t, tol=tol)
        return SectionValue(float(total), "integral")
    if body.kind is Kind.SIMPLEX:
        total = 0.0
        for j in range(n + 1):
            coeffs = np.delete(a, j) - t
            weight = math.sqrt(max(n - (n + 1.0) * a[j] ** 2, 0.0))
            total += weight * _rational_or_half(coeffs)
        return SectionValue(float(total) / math.factorial(n - 2), "integral")
    if abs(t) > 1e-12:
        raise Unsupported(
            "cross-polytope perimeter representation is for central sections"
        )
    if n > _MAX_SIGN_SUM_N:
        raise Unsupported(
            f"cross-polytope face sum limited to n <= {_MAX_SIGN_SUM_N}"
        )
    total = 0.0
    for eps in product((1.0, -1.0), repeat=n):
        e = np.array(eps)
        dot = float(e @ a)
        weight = math.sqrt(max(n - dot * dot, 0.0))
        total += weight * _rational_or_half(e * a)
    return SectionValue(float(total) / math.factorial(n - 2), "integral")


def _rational_or_half(coeffs: np.ndarray) -> float:
    nz = coeffs[np.abs(coeffs) > 1e-14]
    if nz.shape[0] == 0:
        return 0.0
    if nz.shape[0] == 1:
        return 0.5  # principal value of (1/2 pi) Int 1/(1 + i c s) ds
    return rational_product_integral(nz)


#: validity windows (t_lo, t_hi] of the extremal closed forms, per body kind
def _extremal_range(body: Body, functional: Functional) -> tuple:
    n = body.n
    if body.kind is Kind.SIMPLEX:
        alpha = math.sqrt(n / (n + 1.0))
        if functional is Functional.VOLUME:
            lo = 1.25 / math.sqrt(6.0) if n == 2 else body.edge_midpoint_depth()
            return lo, alpha
        if n == 4:
            return math.sqrt(1.5) * math.sqrt(0.3), alpha
        return body.edge_midpoint_depth(), alpha
    if body.kind is Kind.CROSSPOLYTOPE:
        if functional is Functional.VOLUME:
            lo = 0.75 if n == 2 else 1.0 / math.sqrt(2.0)
        else:
            lo = 0.8 if n == 3 else 1.0 / math.sqrt(2.0)
        return lo, 1.0
    if functional is Functional.VOLUME:
        lo = 3.0 * math.sqrt(2.0) / 8.0 if n == 2 else math.sqrt(n - 1.0) / 2.0
    else:
        lo = ((math.sqrt(3.0) + 8.0 * math.sqrt(2.0)) / 18.0 if n == 3
              else math.sqrt(n - 1.0) / 2.0)
    return lo, math.sqrt(n) / 2.0


def extremal_value(body: Body, t: float, functional: Functional) -> SectionValue:
    """Maximal section functional value over all directions, in closed form.

    Outside the proven validity window the formula value is still returned
    but flagged with ``warning=True`` (clamped to 0 beyond the vertex).
    """
    n = body.n
    if functional is Functional.PERIMETER and n < 3:
        raise DimensionOutOfRange("perimeter needs n >= 3")
    if body.kind is Kind.SIMPLEX:
        alpha = math.sqrt(n / (n + 1.0))
        if functional is Functional.VOLUME:
            val = (
                math.sqrt(n + 1.0) / math.factorial(n - 1)
                * (n / (n + 1.0)) ** (n / 2.0) * (alpha - t) ** (n - 1)
            )
        else:
            val = (
                n * math.sqrt(n - 1.0) / math.factorial(n - 2)
                * (n / (n + 1.0)) ** ((n - 2) / 2.0) * (alpha - t) ** (n - 2)
            )
    elif body.kind is Kind.CROSSPOLYTOPE:
        if functional is Functional.VOLUME:
            val = 2.0 ** (n - 1) / math.factorial(n - 1) * (1.0 - t) ** (n - 1)
        else:
            val = (
                math.sqrt(n - 1.0) / math.factorial(n - 2)
                * 2.0 ** (n - 1) * (1.0 - t) ** (n - 2)
            )
    else:
        half_diag = math.sqrt(n) / 2.0
        if functional is Functional.VOLUME:
            val = n ** (n / 2.0) / math.factorial(n - 1) * (half_diag - t) ** (n - 1)
        else:
            val = (
                math.sqrt(n - 1.0) / math.factorial(n - 2)
                * n ** (n / 2.0) * (half_diag - t) ** (n - 2)
            )
    lo, hi = _extremal_range(body, functional)
    warning = not (lo < t <= hi)
    if t > hi:
        val = 0.0
    return SectionValue(float(val), "closed", warning=warning)


def maximizer_direction(body: Body, functional: Functional):
    """The canonical direction attaining :func:`extremal_value`."""
    if body.kind is Kind.CUBE:
        return canonical_direction(body, Canonical.MAIN_DIAGONAL)
    return canonical_direction(body, Canonical.APEX)
