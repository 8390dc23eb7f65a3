"""Explicit two-distance point sets and numerical certificates.

The midpoint construction takes all n(n+1)/2 midpoints of the edges of a
regular simplex with n + 1 vertices (equivalently, the vectors e_i + e_j
for 1 <= i < j <= n+1), recenters, rescales to unit norm, and expresses
the result in an orthonormal frame of the hyperplane x_1 + ... + x_{n+1} = 0
so that it lives honestly in R^n.  Its two inner products are

    a = (n - 3) / (2(n - 1))     (pairs sharing a simplex vertex)
    b = -2 / (n - 1)             (disjoint pairs)

with a + b = (n - 7) / (2(n - 1)) >= 0 exactly when n >= 7.

verify_two_distance and gram_check certify arbitrary unit point sets;
independence_rank measures the dimension spanned by the associated
quadratic functions together with the linear coordinate functionals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

UNIT_NORM_TOL = 1e-10
CLUSTER_DIAMETER_TOL = 1e-8
CLUSTER_GAP_TOL = 1e-6
EIG_TOL = 1e-8
RANK_REL_TOL = 1e-8
DEFAULT_SEED = 42


@dataclass(frozen=True)
class UnitPointSet:
    """m unit vectors in R^n, one per row of points."""

    n: int
    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != self.n:
            raise ValueError(f"points must be an (m, {self.n}) array, got shape {pts.shape}")
        norms = np.einsum("ij,ij->i", pts, pts)
        worst = float(np.max(np.abs(norms - 1.0))) if len(pts) else 0.0
        if worst > UNIT_NORM_TOL:
            raise ValueError(f"points must be unit vectors; worst squared-norm error {worst:.3g}")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def gram(self) -> np.ndarray:
        return self.points @ self.points.T


def _helmert_frame(d: int) -> np.ndarray:
    """(d-1) x d matrix with orthonormal rows spanning the hyperplane sum(x) = 0."""
    h = np.zeros((d - 1, d))
    for j in range(1, d):
        scale = 1.0 / math.sqrt(j * (j + 1))
        h[j - 1, :j] = scale
        h[j - 1, j] = -j * scale
    return h


def lambda_params(n: int) -> tuple[float, float]:
    """Inner products (a, b) of the midpoint construction in R^n."""
    if n < 2:
        raise ValueError(f"midpoint construction requires n >= 2, got {n}")
    return (n - 3.0) / (2.0 * (n - 1.0)), -2.0 / (n - 1.0)


def lambda_set(n: int) -> UnitPointSet:
    """The n(n+1)/2 recentered and rescaled simplex-edge midpoints, in R^n."""
    if n < 2:
        raise ValueError(f"midpoint construction requires n >= 2, got {n}")
    d = n + 1
    idx_i, idx_j = np.triu_indices(d, k=1)
    raw = np.zeros((len(idx_i), d))
    raw[np.arange(len(idx_i)), idx_i] = 1.0
    raw[np.arange(len(idx_j)), idx_j] += 1.0
    centered = raw - 2.0 / d
    centered /= math.sqrt(2.0 * (n - 1.0) / d)
    coords = centered @ _helmert_frame(d).T
    return UnitPointSet(n, coords)


@dataclass(frozen=True)
class TwoDistanceCertificate:
    """Clustering verdict for the off-diagonal Gram entries of a point set.

    a >= b are the cluster centers; pair_counts are the cluster sizes in the
    same order.  When valid is False, diagnostic says what went wrong.
    """

    a: float
    b: float
    pair_counts: tuple[int, int]
    valid: bool
    diagnostic: str | None = None


def verify_two_distance(
    s: UnitPointSet,
    diameter_tol: float = CLUSTER_DIAMETER_TOL,
    gap_tol: float = CLUSTER_GAP_TOL,
) -> TwoDistanceCertificate:
    """Split sorted off-diagonal Gram entries at the largest gap and test the clusters."""
    m = len(s)
    if m < 3:
        raise ValueError(f"need at least 3 points to classify, got {m}")
    g = s.gram()
    vals = np.sort(g[np.triu_indices(m, k=1)])
    if vals[-1] - vals[0] < diameter_tol:
        center = float(vals.mean())
        return TwoDistanceCertificate(
            center, center, (len(vals), 0), False, "one-distance set: a single inner product"
        )
    gaps = np.diff(vals)
    split = int(np.argmax(gaps))
    low, high = vals[: split + 1], vals[split + 1 :]
    diam_low = float(low[-1] - low[0])
    diam_high = float(high[-1] - high[0])
    gap = float(gaps[split])
    a = float(high.mean())
    b = float(low.mean())
    counts = (len(high), len(low))
    if diam_low < diameter_tol and diam_high < diameter_tol and gap > gap_tol:
        return TwoDistanceCertificate(a, b, counts, True)
    return TwoDistanceCertificate(
        a, b, counts, False, "not two-distance: more than two inner-product clusters"
    )


def gram_check(s: UnitPointSet, eig_tol: float = EIG_TOL) -> tuple[bool, int]:
    """(is positive semidefinite, numerical rank) of the Gram matrix."""
    w = np.linalg.eigvalsh(s.gram())
    psd = bool(w[0] > -eig_tol)
    rank = int(np.count_nonzero(w > eig_tol))
    return psd, rank


def independence_rank(
    s: UnitPointSet,
    a: float,
    b: float,
    seed: int = DEFAULT_SEED,
    rel_tol: float = RANK_REL_TOL,
) -> int:
    """Rank of {F(<x, x_i>)}_i together with the n coordinate functionals.

    F(t) = (t - a)(t - b) / ((1 - a)(1 - b)) satisfies F(<x_i, x_j>) = delta_ij
    on a two-distance set with inner products {a, b}.  All m + n functions are
    evaluated at the m set points plus n + 20 seeded random unit vectors, and
    the numerical rank of the evaluation matrix is returned.  Requires
    a + b >= 0: for a + b < 0 the functions need not be independent and the
    argument does not apply.
    """
    if a + b < 0:
        raise ValueError(
            f"hypothesis violated: requires a + b >= 0, got a + b = {a + b:.6g}"
        )
    x = s.points
    m, n = x.shape
    rng = np.random.default_rng(seed)
    extra = rng.standard_normal((n + 20, n))
    extra /= np.linalg.norm(extra, axis=1, keepdims=True)
    eval_pts = np.vstack([x, extra])  # (m + n + 20, n)
    inner = x @ eval_pts.T
    top = (inner - a) * (inner - b) / ((1.0 - a) * (1.0 - b))
    matrix = np.vstack([top, eval_pts.T])  # (m + n) x (m + n + 20)
    sv = np.linalg.svd(matrix, compute_uv=False)
    return int(np.count_nonzero(sv > rel_tol * sv[0]))
