"""Candidate certificate polynomials for two-distance linear-programming bounds.

Given admissible inner products a > b, each candidate is a low-degree
polynomial P vanishing at a and b whose Gegenbauer expansion is checked for
nonnegativity.  When all expansion coefficients f_k are nonnegative and
f_0 > 0, the quantity P(1) / f_0 upper-bounds the cardinality of any
spherical set in R^n whose pairwise inner products lie in {a, b}.

The five shapes:

    i=1  (t - a)(t - b)
    i=2  (t - a)(t - b)(t + c)   with c chosen so that f_1 = 0
    i=3  (t - a)(t - b)(t + a + b)    which forces f_2 = 0
    i=4  (t - a)(t - b)(t^2 + c t + d)  with (c, d) solving f_1 = f_2 = 0
    i=5  (t - a)(t - b)(t^2 + c t + d)  with (c, d) solving f_2 = f_3 = 0

For i=2 the multiplier is undefined when a + b = 0; for i=4/i=5 a singular
linear system likewise puts the candidate out of domain.  Out-of-domain
candidates carry the value +inf so that minima over candidates are always
well defined.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .gegenbauer import GegenbauerExpansion, as_monomial, to_gegenbauer

DEFAULT_TOL = 1e-9
# Relative determinant threshold below which a 2x2 multiplier solve
# (and the i=2 division by a+b) counts as singular.
SINGULAR_REL_TOL = 1e-12

CANDIDATE_INDICES = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class InnerProductPair:
    """An admissible inner-product pair: -1 <= b < a < 1 on the sphere in R^n."""

    n: int
    a: float
    b: float

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"dimension must satisfy n >= 2, got {self.n}")
        if not (-1.0 <= self.b < self.a < 1.0):
            raise ValueError(
                f"inner products must satisfy -1 <= b < a < 1, got a={self.a}, b={self.b}"
            )


@dataclass(frozen=True)
class CandidateBound:
    """One candidate certificate and its outcome.

    value is P(1) / f_0 when in_domain, +inf otherwise.  c and d are the
    extra-factor coefficients when the shape has them (None when absent or
    when the construction is undefined).
    """

    index: int
    c: float | None
    d: float | None
    poly: np.ndarray | None
    expansion: GegenbauerExpansion | None
    in_domain: bool
    value: float


def _undefined(index: int) -> CandidateBound:
    return CandidateBound(index, None, None, None, None, False, math.inf)


def _solve_multiplier(n: int, quad: np.ndarray, rows: tuple[int, int]):
    """Solve for (c, d) in (t-a)(t-b)(t^2 + c t + d) zeroing two expansion rows.

    The expansion is affine in (c, d):  E(c, d) = E0 + c * Ec + d * Ed, where
    the three terms come from t^2 * quad, t * quad and quad.
    """
    e0 = to_gegenbauer(n, npoly.polymul(quad, [0.0, 0.0, 1.0])).coeffs
    ec = np.zeros(5)
    ed = np.zeros(5)
    ec[:4] = to_gegenbauer(n, npoly.polymul(quad, [0.0, 1.0])).coeffs
    ed[:3] = to_gegenbauer(n, quad).coeffs
    r0, r1 = rows
    m00, m01 = ec[r0], ed[r0]
    m10, m11 = ec[r1], ed[r1]
    det = m00 * m11 - m01 * m10
    scale = max(1.0, abs(m00 * m11), abs(m01 * m10))
    if abs(det) < SINGULAR_REL_TOL * scale:
        return None
    rhs0, rhs1 = -e0[r0], -e0[r1]
    c = (rhs0 * m11 - m01 * rhs1) / det
    d = (m00 * rhs1 - rhs0 * m10) / det
    return c, d


def build_candidate(i: int, pair: InnerProductPair, tol: float = DEFAULT_TOL) -> CandidateBound:
    """Construct candidate i for the pair and run its domain check."""
    if i not in CANDIDATE_INDICES:
        raise ValueError(f"candidate index must be one of {CANDIDATE_INDICES}, got {i}")
    n, a, b = pair.n, pair.a, pair.b
    quad = npoly.polyfromroots([a, b])
    c: float | None = None
    d: float | None = None
    if i == 1:
        poly = quad
    elif i == 2:
        s = a + b
        if abs(s) < SINGULAR_REL_TOL * max(1.0, abs(a) + abs(b)):
            return _undefined(i)
        c = ((n + 2) * a * b + 3.0) / ((n + 2) * s)
        poly = npoly.polymul(quad, [c, 1.0])
    elif i == 3:
        c = a + b
        poly = npoly.polymul(quad, [c, 1.0])
    else:
        rows = (1, 2) if i == 4 else (2, 3)
        solved = _solve_multiplier(n, quad, rows)
        if solved is None:
            return _undefined(i)
        c, d = solved
        poly = npoly.polymul(quad, [d, c, 1.0])
    poly = as_monomial(poly)
    expansion = to_gegenbauer(n, poly)
    f = expansion.coeffs
    in_domain = bool(f[0] > tol and np.all(f >= -tol))
    value = float(npoly.polyval(1.0, poly) / f[0]) if in_domain else math.inf
    return CandidateBound(i, c, d, poly, expansion, in_domain, value)


def candidate_values(n: int, a, b, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Vectorized candidate values over arrays of pairs.

    Returns an array of shape (5, len(a)); entry [i-1, j] is the value of
    candidate i at (a[j], b[j]), +inf when out of domain.  Closed forms are
    used throughout; build_candidate is the reference implementation and the
    two routes are pinned to each other by tests.
    """
    if n < 2:
        raise ValueError(f"dimension must satisfy n >= 2, got {n}")
    a = np.atleast_1d(np.asarray(a, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    s = a + b
    p = a * b
    at_one = (1.0 - a) * (1.0 - b)  # quadratic factor evaluated at t = 1
    out = np.full((5,) + a.shape, np.inf)

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        # i = 1
        f0 = p + 1.0 / n
        f1 = -s
        dom = (f1 >= -tol) & (f0 > tol)
        out[0] = np.where(dom, at_one / f0, np.inf)

        # i = 2: c zeroes f_1; undefined at s = 0
        defined = np.abs(s) >= SINGULAR_REL_TOL * np.maximum(1.0, np.abs(a) + np.abs(b))
        safe_s = np.where(defined, s, 1.0)
        c2 = ((n + 2) * p + 3.0) / ((n + 2) * safe_s)
        f2 = (c2 - s) * (n - 1) / n
        f0 = p * c2 + (c2 - s) / n
        dom = defined & (f2 >= -tol) & (f0 > tol)
        out[1] = np.where(dom, at_one * (1.0 + c2) / f0, np.inf)

        # i = 3: extra root at -(a+b) forces f_2 = 0
        f1 = p - s * s + 3.0 / (n + 2)
        f0 = p * s
        dom = (f1 >= -tol) & (f0 > tol)
        out[2] = np.where(dom, at_one * (1.0 + s) / f0, np.inf)

        # i = 4: quartic with f_1 = f_2 = 0
        alpha = p + 3.0 / (n + 2)
        det = alpha - s * s
        nonsing = np.abs(det) >= SINGULAR_REL_TOL * np.maximum(1.0, np.maximum(np.abs(alpha), s * s))
        safe_det = np.where(nonsing, det, 1.0)
        beta = 3.0 * s / (n + 2)
        gamma = -p - 6.0 / (n + 4)
        c4 = (beta + s * gamma) / safe_det
        d4 = (alpha * gamma + s * beta) / safe_det
        f3 = (c4 - s) * (n - 1) / (n + 2)
        f0 = p * d4 + (d4 - s * c4 + p) / n + 3.0 / (n * (n + 2))
        dom = nonsing & (f3 >= -tol) & (f0 > tol)
        out[3] = np.where(dom, at_one * (1.0 + c4 + d4) / f0, np.inf)

        # i = 5: quartic with f_2 = f_3 = 0, solved by c = s directly
        d5 = s * s - p - 6.0 / (n + 4)
        f1 = s * (p - d5)
        f0 = p * d5 + (d5 - s * s + p) / n + 3.0 / (n * (n + 2))
        dom = (f1 >= -tol) & (f0 > tol)
        out[4] = np.where(dom, at_one * (1.0 + s + d5) / f0, np.inf)

    return out


def best_bound(pair: InnerProductPair, tol: float = DEFAULT_TOL) -> tuple[float, tuple[int, ...]]:
    """Minimum candidate value for the pair and the indices attaining it.

    Returns (+inf, ()) when no candidate is in domain.
    """
    cands = [build_candidate(i, pair, tol) for i in CANDIDATE_INDICES]
    best = min(c.value for c in cands)
    if math.isinf(best):
        return math.inf, ()
    winners = tuple(
        c.index for c in cands if c.value - best <= 1e-9 * max(1.0, abs(best))
    )
    return best, winners


@dataclass(frozen=True)
class DelsarteCheck:
    """Outcome of the positive-semidefinite certificate check."""

    bound: int | None
    violation: str | None

    @property
    def ok(self) -> bool:
        return self.violation is None


def delsarte_check(expansion: GegenbauerExpansion, t_values, tol: float = DEFAULT_TOL) -> DelsarteCheck:
    """Certificate check: all f_k >= 0, f_0 > 0, and f <= 0 on the given t set.

    On success the integer floor(f(1) / f_0) bounds the size of any spherical
    set in R^n whose pairwise inner products all lie in t_values.
    """
    f = expansion.coeffs
    if np.any(f < -tol):
        k = int(np.argmin(f))
        return DelsarteCheck(None, f"negative Gegenbauer coefficient f_{k} = {f[k]:.6g}")
    if not f[0] > tol:
        return DelsarteCheck(None, f"nonpositive constant coefficient f_0 = {f[0]:.6g}")
    for t in t_values:
        val = expansion(t)
        if val > tol:
            return DelsarteCheck(None, f"positive value f({t:.6g}) = {val:.6g} on the inner-product set")
    bound = floor_nudged(float(f.sum()) / float(f[0]))
    return DelsarteCheck(bound, None)


def floor_nudged(x: float, eps: float = 1e-9) -> int:
    """Floor with a one-sided epsilon so that values a hair under an integer round up."""
    return math.floor(x + eps)
