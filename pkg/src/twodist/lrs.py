"""Sweep of certificate bounds over the ratio windows of large two-distance sets.

For a two-distance set in R^n with inner products a > b and a + b < 0
that is large enough (more than 2n + 3 points), the smaller inner product
is pinned to b = (k a - 1)/(k - 1) for some integer 2 <= k <= K(n) with
K(n) = floor((1 + sqrt(2n)) / 2), and a is confined to the window

    I_k = [(2 - k)/k, 1/(2k - 1)).

Maximizing the pointwise-best candidate bound over each window and
flooring gives a cardinality bound for the whole a + b < 0 regime once it
is combined with the 2n + 3 fallback; sets with a + b >= 0 are covered
separately by the harmonic-independence argument, giving n(n+1)/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bound_polys import (
    DEFAULT_TOL,
    InnerProductPair,
    best_bound,
    candidate_values,
    floor_nudged,
)

DEFAULT_GRID = 20001
DEFAULT_REFINE_TOL = 1e-10
# Value agreement threshold for "which candidate attains the minimum".
WINNER_REL_TOL = 1e-9


def b_k(k: int, a: float) -> float:
    """Forced smaller inner product (k*a - 1)/(k - 1)."""
    if k < 2:
        raise ValueError(f"ratio index must satisfy k >= 2, got {k}")
    return (k * a - 1.0) / (k - 1.0)


def k_max(n: int) -> int:
    """Largest ratio index to sweep: max(floor((1 + sqrt(2n))/2), 2)."""
    if n < 2:
        raise ValueError(f"dimension must satisfy n >= 2, got {n}")
    return max(math.floor((1.0 + math.sqrt(2.0 * n)) / 2.0), 2)


def interval(k: int) -> tuple[float, float]:
    """Closure [lo, hi] of the admissible window for a at ratio index k."""
    if k < 2:
        raise ValueError(f"ratio index must satisfy k >= 2, got {k}")
    return (2.0 - k) / k, 1.0 / (2.0 * k - 1.0)


def q_bound(n: int, k: int, a: float, tol: float = DEFAULT_TOL) -> float:
    """Best candidate value at (a, b_k(a)); +inf when no candidate applies."""
    lo, hi = interval(k)
    if not (lo - 1e-12 <= a <= hi + 1e-12):
        raise ValueError(f"a={a} outside the closed window [{lo}, {hi}] for k={k}")
    b = max(b_k(k, a), -1.0)
    value, _ = best_bound(InnerProductPair(n, a, b), tol)
    return value


def _q_grid(n: int, k: int, a: np.ndarray, tol: float) -> np.ndarray:
    b = np.maximum(b_k_array(k, a), -1.0)
    return candidate_values(n, a, b, tol).min(axis=0)


def b_k_array(k: int, a: np.ndarray) -> np.ndarray:
    if k < 2:
        raise ValueError(f"ratio index must satisfy k >= 2, got {k}")
    return (k * np.asarray(a, dtype=float) - 1.0) / (k - 1.0)


def _golden_max(f, lo: float, hi: float, width_tol: float) -> tuple[float, float]:
    """Golden-section maximization of f on [lo, hi]; returns (best value, argmax)."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = f(x1), f(x2)
    best, best_x = (f1, x1) if f1 >= f2 else (f2, x2)
    while hi - lo > width_tol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = f(x2)
            if f2 > best:
                best, best_x = f2, x2
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = f(x1)
            if f1 > best:
                best, best_x = f1, x1
    return best, best_x


def _inf_ranges(xs: np.ndarray, mask: np.ndarray) -> tuple[tuple[float, float], ...]:
    """Contiguous grid stretches where the mask holds, as (a_start, a_end) pairs."""
    idx = np.flatnonzero(mask)
    if idx.size == 0:
        return ()
    breaks = np.flatnonzero(np.diff(idx) > 1)
    starts = np.concatenate(([0], breaks + 1))
    ends = np.concatenate((breaks, [idx.size - 1]))
    return tuple((float(xs[idx[s]]), float(xs[idx[e]])) for s, e in zip(starts, ends))


@dataclass(frozen=True)
class KSlice:
    """One (n, k) window: its interval, the maximized bound, and the floor."""

    n: int
    k: int
    lo: float
    hi: float
    phi: float
    a_star: float
    omega_hat_nk: int | float
    conclusive: bool
    inf_ranges: tuple[tuple[float, float], ...] = ()

    @property
    def interval(self) -> tuple[float, float]:
        return self.lo, self.hi


@lru_cache(maxsize=512)
def k_slice(
    n: int,
    k: int,
    grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> KSlice:
    """Maximize Q over the closed window for (n, k) and floor the result.

    A dense grid locates candidate maxima; each bracket is then tightened by
    golden-section search down to refine_tol.  If Q is +inf anywhere on the
    closure the slice is inconclusive: the LP machinery has no finite bound
    for this (n, k) and the offending stretches of a are recorded.
    """
    if n < 4:
        raise ValueError(f"window sweep requires n >= 4, got {n}")
    if not 2 <= k <= k_max(n):
        raise ValueError(f"ratio index must satisfy 2 <= k <= {k_max(n)} for n={n}, got {k}")
    if grid < 2:
        raise ValueError(f"grid must have at least 2 points, got {grid}")
    lo, hi = interval(k)
    xs = np.linspace(lo, hi, grid)
    qs = _q_grid(n, k, xs, tol)
    inf_mask = np.isinf(qs)
    if inf_mask.any():
        ranges = _inf_ranges(xs, inf_mask)
        return KSlice(n, k, lo, hi, math.inf, math.nan, math.inf, False, ranges)

    best_idx = int(np.argmax(qs))
    phi_val = float(qs[best_idx])
    a_star = float(xs[best_idx])

    # Local maxima brackets (plateau-tolerant); endpoints count.
    left = np.empty(grid)
    left[0] = -np.inf
    left[1:] = qs[:-1]
    right = np.empty(grid)
    right[-1] = -np.inf
    right[:-1] = qs[1:]
    peaks = np.flatnonzero((qs >= left) & (qs >= right))
    if peaks.size > 64:
        peaks = peaks[np.argsort(qs[peaks])[-64:]]

    def q_scalar(x: float) -> float:
        return q_bound(n, k, x, tol)

    for idx in peaks:
        b_lo = float(xs[max(idx - 1, 0)])
        b_hi = float(xs[min(idx + 1, grid - 1)])
        refined, arg = _golden_max(q_scalar, b_lo, b_hi, refine_tol)
        if refined > phi_val:
            phi_val, a_star = refined, arg
    if math.isinf(phi_val):
        # Refinement fell into an out-of-domain pocket between grid points.
        return KSlice(n, k, lo, hi, math.inf, math.nan, math.inf, False, ())
    return KSlice(n, k, lo, hi, phi_val, a_star, _floor_bound(n, phi_val), True, ())


def _floor_bound(n: int, phi_val: float) -> int:
    """max(floor(phi), 2n + 3): small windows never beat the trivial bound."""
    return max(floor_nudged(phi_val), 2 * n + 3)


def phi(
    n: int,
    k: int,
    grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> float:
    """Maximum of Q over the closed window; +inf when inconclusive."""
    return k_slice(n, k, grid, tol, refine_tol).phi


def omega_hat_nk(
    n: int,
    k: int,
    grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> int | float:
    """Cardinality bound for the (n, k) window (an integer, or +inf)."""
    return k_slice(n, k, grid, tol, refine_tol).omega_hat_nk


def omega_hat(
    n: int,
    grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> tuple[int | float, int]:
    """Worst (largest) window bound over k = 2..k_max(n), with the smallest k attaining it."""
    if n < 7:
        raise ValueError(f"the sweep bound requires n >= 7, got {n}")
    best = -math.inf
    best_k = 2
    for k in range(2, k_max(n) + 1):
        w = k_slice(n, k, grid, tol, refine_tol).omega_hat_nk
        if w > best:
            best, best_k = w, k
    return best, best_k


def rho(n: int) -> int:
    """Cardinality of the midpoint construction, n(n+1)/2; the a + b >= 0 ceiling."""
    if n < 7:
        raise ValueError(f"the a+b >= 0 ceiling requires n >= 7, got {n}")
    return n * (n + 1) // 2


def g_upper(
    n: int,
    grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> int | float:
    """Upper bound for the maximum two-distance set size in R^n (n >= 7)."""
    return max(omega_hat(n, grid, tol, refine_tol)[0], rho(n))


@dataclass(frozen=True)
class TableRow:
    n: int
    omega_hat: int | float
    rho: int
    k_star: int
    g_upper: int | float
    conclusive: bool


def table(
    n_min: int,
    n_max: int,
    grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> list[TableRow]:
    """Bound table rows for n_min..n_max; inconclusive rows are flagged, not fatal."""
    if not 7 <= n_min <= n_max:
        raise ValueError(f"need 7 <= n_min <= n_max, got {n_min}..{n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        w, ks = omega_hat(n, grid, tol, refine_tol)
        r = rho(n)
        conclusive = math.isfinite(w)
        rows.append(TableRow(n, w, r, ks, max(w, r), conclusive))
    return rows


@dataclass(frozen=True)
class ProfileSample:
    a: float
    q: float
    winning: tuple[int, ...]


def profile(n: int, k: int, samples: int, tol: float = DEFAULT_TOL) -> list[ProfileSample]:
    """Uniform samples of Q over the closed window, with the attaining candidates."""
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    if n < 4:
        raise ValueError(f"window sweep requires n >= 4, got {n}")
    if not 2 <= k <= k_max(n):
        raise ValueError(f"ratio index must satisfy 2 <= k <= {k_max(n)} for n={n}, got {k}")
    lo, hi = interval(k)
    xs = np.linspace(lo, hi, samples)
    b = np.maximum(b_k_array(k, xs), -1.0)
    vals = candidate_values(n, xs, b, tol)
    qs = vals.min(axis=0)
    out = []
    for j in range(samples):
        q = float(qs[j])
        if math.isinf(q):
            winning: tuple[int, ...] = ()
        else:
            close = vals[:, j] - q <= WINNER_REL_TOL * max(1.0, abs(q))
            winning = tuple(int(i) + 1 for i in np.flatnonzero(close))
        out.append(ProfileSample(float(xs[j]), q, winning))
    return out
