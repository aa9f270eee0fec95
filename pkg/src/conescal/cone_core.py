"""Cone geometry primitives.

This module provides the shared vocabulary of the package:

* seminorm specifications and their (batched) evaluation,
* cone representations (orthant, halfspace intersections, finitely generated
  convex cones, unions of rays, and seminorm-defined cones of the form
  ``C = {y : <xstar, y> >= alpha * psi(y)}``),
* membership classification with relative tolerances,
* unit-seminorm base sets and their convex hulls,
* polytope predicates (zero containment, disjointness with witnesses),
* a small dense two-phase simplex solver with Bland's rule -- the only
  linear-programming engine used anywhere in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .errors import (
    DegenerateSeminorm,
    InteriorUnsupported,
    LPFailure,
    UnsupportedRepresentation,
)

__all__ = [
    "SEMINORM_KINDS",
    "CONE_KINDS",
    "SeminormSpec",
    "ConeRep",
    "BaseSet",
    "Polytope",
    "Tolerances",
    "LPResult",
    "point",
    "points_matrix",
    "l1",
    "l2",
    "linf",
    "abs_functional",
    "max_abs_functionals",
    "sum_abs_functionals",
    "psi_max_of_sublinear",
    "seminorms_equal",
    "eval_seminorm",
    "eval_seminorm_many",
    "dual_gauge",
    "orthant",
    "halfspace",
    "generated",
    "ray_union",
    "bishop_phelps",
    "negate_cone",
    "cone_membership",
    "is_member",
    "lineality",
    "normlike_base",
    "base_set",
    "hull_S0",
    "polytope",
    "polytope_contains_zero",
    "polytope_contains_point",
    "polytopes_disjoint",
    "sample_cone_points",
    "sample_interior_points",
    "dedupe_rows",
    "null_space",
    "solve_lp",
]

SEMINORM_KINDS = (
    "L1",
    "L2",
    "LInf",
    "AbsFunctional",
    "MaxAbsFunctionals",
    "SumAbsFunctionals",
    "PsiMaxOfSublinear",
)

CONE_KINDS = ("Orthant", "Halfspace", "Generated", "RayUnion", "BishopPhelps")

MEMBERSHIP_LABELS = ("Interior", "Boundary", "Member", "Outside")


# ---------------------------------------------------------------------------
# point / matrix validation
# ---------------------------------------------------------------------------

def point(values, dim: Optional[int] = None) -> np.ndarray:
    """Validate and return a point as a 1-D float64 array of finite reals."""
    arr = np.array(values, dtype=float, copy=True)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1:
        raise ValueError(f"a point must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("a point must have at least one coordinate")
    if not np.all(np.isfinite(arr)):
        raise ValueError("point coordinates must be finite reals")
    if dim is not None and arr.size != dim:
        raise ValueError(f"expected a point of dimension {dim}, got {arr.size}")
    return arr


def points_matrix(rows, dim: Optional[int] = None) -> np.ndarray:
    """Validate a sequence of points into a (k, n) float64 matrix (k may be 0)."""
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        arr = np.array(rows, dtype=float, copy=True)
    else:
        rows = list(rows)
        if not rows:
            if dim is None:
                raise ValueError("cannot infer the dimension of an empty point list")
            return np.zeros((0, dim))
        arr = np.array([point(r) for r in rows], dtype=float)
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite reals")
    if dim is not None and arr.shape[0] and arr.shape[1] != dim:
        raise ValueError(f"expected points of dimension {dim}, got {arr.shape[1]}")
    if dim is not None and arr.shape[0] == 0:
        arr = arr.reshape(0, dim)
    return arr


def dedupe_rows(rows: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Drop rows that are within ``tol`` (inf-norm) of an earlier kept row."""
    kept: list[np.ndarray] = []
    for r in rows:
        if not any(np.max(np.abs(r - k)) <= tol for k in kept):
            kept.append(r)
    if not kept:
        return rows.reshape(0, rows.shape[1] if rows.ndim == 2 else 0)
    return np.array(kept)


def null_space(A: np.ndarray, rtol: float = 1e-12) -> np.ndarray:
    """Orthonormal basis (rows) of the null space of ``A``."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    if A.shape[0] == 0:
        return np.eye(A.shape[1])
    _, s, vt = np.linalg.svd(A)
    cutoff = rtol * max(A.shape) * (s[0] if s.size else 0.0)
    rank = int(np.sum(s > cutoff))
    return vt[rank:].copy()


# ---------------------------------------------------------------------------
# seminorms
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SeminormSpec:
    """A seminorm on R^n.

    ``kind`` is one of ``SEMINORM_KINDS``.  ``mat`` holds one functional per
    row for the functional-based kinds and is ``None`` for the coordinate
    norms L1/L2/LInf (which work in any dimension).
    """

    kind: str
    mat: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.kind not in SEMINORM_KINDS:
            raise ValueError(f"unknown seminorm kind {self.kind!r}")
        if self.kind in ("L1", "L2", "LInf"):
            if self.mat is not None:
                raise ValueError(f"{self.kind} takes no functionals")
        else:
            if self.mat is None or self.mat.ndim != 2 or self.mat.shape[0] == 0:
                raise ValueError(f"{self.kind} needs at least one functional")
            if not np.all(np.isfinite(self.mat)):
                raise ValueError("functional entries must be finite reals")


def l1() -> SeminormSpec:
    return SeminormSpec("L1")


def l2() -> SeminormSpec:
    return SeminormSpec("L2")


def linf() -> SeminormSpec:
    return SeminormSpec("LInf")


def abs_functional(w) -> SeminormSpec:
    """psi(y) = |<w, y>| (a seminorm; degenerate on the hyperplane w-perp)."""
    return SeminormSpec("AbsFunctional", point(w).reshape(1, -1))


def max_abs_functionals(ws) -> SeminormSpec:
    """psi(y) = max_i |<w_i, y>|."""
    return SeminormSpec("MaxAbsFunctionals", points_matrix(ws))


def sum_abs_functionals(ws) -> SeminormSpec:
    """psi(y) = sum_i |<w_i, y>|."""
    return SeminormSpec("SumAbsFunctionals", points_matrix(ws))


def psi_max_of_sublinear(cs) -> SeminormSpec:
    """psi(y) = max(phi(y), phi(-y)) for the sublinear phi(y) = max_i <c_i, y>.

    Since max(max_i a_i, max_i -a_i) = max_i |a_i|, this evaluates exactly as
    max_i |<c_i, y>| and shares that code path.
    """
    return SeminormSpec("PsiMaxOfSublinear", points_matrix(cs))


def seminorms_equal(a: SeminormSpec, b: SeminormSpec) -> bool:
    if a.kind != b.kind:
        return False
    if a.mat is None and b.mat is None:
        return True
    if a.mat is None or b.mat is None:
        return False
    return a.mat.shape == b.mat.shape and bool(np.array_equal(a.mat, b.mat))


def _kernel_code(psi: SeminormSpec, n: int):
    """Translate a SeminormSpec into (kernel kind code, functional matrix)."""
    empty = np.zeros((0, n))
    if psi.kind == "L1":
        return _kernels.KIND_L1, empty
    if psi.kind == "L2":
        return _kernels.KIND_L2, empty
    if psi.kind == "LInf":
        return _kernels.KIND_LINF, empty
    mat = np.ascontiguousarray(psi.mat, dtype=float)
    if mat.shape[1] != n:
        raise ValueError(
            f"seminorm functionals have dimension {mat.shape[1]}, point has {n}"
        )
    if psi.kind in ("AbsFunctional", "MaxAbsFunctionals", "PsiMaxOfSublinear"):
        return _kernels.KIND_MAXABS, mat
    if psi.kind == "SumAbsFunctionals":
        return _kernels.KIND_SUMABS, mat
    raise ValueError(f"unknown seminorm kind {psi.kind!r}")


def eval_seminorm(psi: SeminormSpec, y) -> float:
    """Evaluate psi at a single point."""
    arr = point(y)
    code, mat = _kernel_code(psi, arr.size)
    return float(
        _kernels.seminorm_many(code, mat, np.ascontiguousarray(arr.reshape(1, -1)))[0]
    )


def eval_seminorm_many(psi: SeminormSpec, Y) -> np.ndarray:
    """Evaluate psi on every row of ``Y``; returns a (N,) array."""
    arr = np.ascontiguousarray(np.atleast_2d(np.asarray(Y, dtype=float)))
    code, mat = _kernel_code(psi, arr.shape[1])
    return np.asarray(_kernels.seminorm_many(code, mat, arr))


def margins_many(psi: SeminormSpec, Y, xstar, alpha: float, sign: float) -> np.ndarray:
    """Rows of ``Y`` -> <xstar, y> + sign * alpha * psi(y) (batched)."""
    arr = np.ascontiguousarray(np.atleast_2d(np.asarray(Y, dtype=float)))
    code, mat = _kernel_code(psi, arr.shape[1])
    xs = np.ascontiguousarray(np.asarray(xstar, dtype=float))
    return np.asarray(
        _kernels.margin_many(code, mat, arr, xs, float(alpha), float(sign))
    )


def dual_gauge(psi: SeminormSpec, xstar, tol: Optional["Tolerances"] = None) -> float:
    """sup { <xstar, y> : psi(y) <= 1 }.

    Returns ``math.inf`` when the supremum is unbounded (xstar not dominated
    by the seminorm).  Closed forms for the coordinate norms, a least-squares
    collinearity test for AbsFunctional, and an LP for the remaining kinds.
    """
    xs = point(xstar)
    n = xs.size
    if psi.kind == "L1":
        return float(np.max(np.abs(xs)))
    if psi.kind == "L2":
        return float(np.linalg.norm(xs))
    if psi.kind == "LInf":
        return float(np.sum(np.abs(xs)))
    mat = psi.mat
    if psi.kind == "AbsFunctional":
        w = mat[0]
        wn = float(w @ w)
        if wn == 0.0:
            return 0.0 if not np.any(xs) else math.inf
        c = float(xs @ w) / wn
        if np.max(np.abs(xs - c * w)) > 1e-9 * max(1.0, np.max(np.abs(xs))):
            return math.inf
        return abs(c)
    # MaxAbs / PsiMax: ball {y : -1 <= M y <= 1}; SumAbs: sum_i |<m_i,y>| <= 1
    m = mat.shape[0]
    if psi.kind in ("MaxAbsFunctionals", "PsiMaxOfSublinear"):
        A_ub = np.vstack([mat, -mat])
        b_ub = np.ones(2 * m)
        res = solve_lp(-xs, A_ub=A_ub, b_ub=b_ub, bounds=[(None, None)] * n)
    else:  # SumAbsFunctionals
        # variables (y free, s >= 0): <m_i,y> - s_i <= 0, -<m_i,y> - s_i <= 0,
        # sum s <= 1; maximize <xstar, y>
        A_ub = np.zeros((2 * m + 1, n + m))
        b_ub = np.zeros(2 * m + 1)
        A_ub[:m, :n] = mat
        A_ub[m : 2 * m, :n] = -mat
        for i in range(m):
            A_ub[i, n + i] = -1.0
            A_ub[m + i, n + i] = -1.0
        A_ub[2 * m, n:] = 1.0
        b_ub[2 * m] = 1.0
        c = np.concatenate([-xs, np.zeros(m)])
        bounds = [(None, None)] * n + [(0, None)] * m
        res = solve_lp(c, A_ub=A_ub, b_ub=b_ub, bounds=bounds)
    if res.status == "unbounded":
        return math.inf
    if res.status != "optimal":  # pragma: no cover - ball LPs are always feasible
        raise LPFailure(f"dual gauge LP ended with status {res.status}", res.status)
    return float(-res.objective)


# ---------------------------------------------------------------------------
# tolerances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Tolerances:
    """Shared tolerance bundle.

    eps_mem: membership / feasibility slack (relative, see _scale).
    eps_strict: strict-inequality threshold for certificates and verdicts.
    eps_opt: optimality slack when comparing objective values.
    eps_root: root-finding resolution (must not exceed eps_mem).
    """

    eps_mem: float = 1e-9
    eps_strict: float = 1e-7
    eps_opt: float = 1e-9
    eps_root: float = 1e-10

    def __post_init__(self):
        for name in ("eps_mem", "eps_strict", "eps_opt", "eps_root"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a positive finite real, got {v!r}")
        if self.eps_root > self.eps_mem:
            raise ValueError(
                f"eps_root ({self.eps_root}) must not exceed eps_mem ({self.eps_mem})"
            )


DEFAULT_TOL = Tolerances()


def _tol(tol: Optional[Tolerances]) -> Tolerances:
    return DEFAULT_TOL if tol is None else tol


# ---------------------------------------------------------------------------
# cone representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ConeRep:
    """A cone in R^n in one of five representations.

    Orthant          : {y : y >= 0} (componentwise)
    Halfspace        : {y : normals @ y >= 0} (finite intersection)
    Generated        : conic hull of finitely many generators (convex)
    RayUnion         : union of the rays R+ * g_i (generally non-convex)
    BishopPhelps     : {y : <xstar, y> >= alpha * psi(y)} (convex)
    """

    kind: str
    dim: int
    normals: Optional[np.ndarray] = None
    generators: Optional[np.ndarray] = None
    xstar: Optional[np.ndarray] = None
    alpha: Optional[float] = None
    psi: Optional[SeminormSpec] = None


def orthant(n: int) -> ConeRep:
    if not (isinstance(n, int) and n >= 1):
        raise ValueError(f"orthant dimension must be a positive integer, got {n!r}")
    return ConeRep("Orthant", n)


def halfspace(normals) -> ConeRep:
    W = points_matrix(normals)
    if W.shape[0] == 0:
        raise ValueError("a halfspace cone needs at least one normal")
    if np.any(np.max(np.abs(W), axis=1) == 0.0):
        raise ValueError("halfspace normals must be nonzero")
    return ConeRep("Halfspace", W.shape[1], normals=W)


def _generator_matrix(gens, dim: Optional[int]) -> tuple[np.ndarray, int]:
    G = points_matrix(gens, dim)
    if G.shape[0] == 0:
        if dim is None:
            raise ValueError("an empty generator list needs an explicit dim")
        return G, dim
    if np.any(np.max(np.abs(G), axis=1) == 0.0):
        raise ValueError("generators must be nonzero")
    return G, G.shape[1]


def generated(gens, dim: Optional[int] = None) -> ConeRep:
    """Conic hull of the generators; an empty list is the zero cone {0}."""
    G, n = _generator_matrix(gens, dim)
    return ConeRep("Generated", n, generators=G)


def ray_union(rays, dim: Optional[int] = None) -> ConeRep:
    """Union of the rays R+ * g_i; an empty list is the zero cone {0}."""
    G, n = _generator_matrix(rays, dim)
    return ConeRep("RayUnion", n, generators=G)


def bishop_phelps(xstar, alpha: float, psi: SeminormSpec) -> ConeRep:
    xs = point(xstar)
    if not (isinstance(alpha, (int, float)) and math.isfinite(alpha) and alpha >= 0):
        raise ValueError(f"alpha must be a finite real >= 0, got {alpha!r}")
    if psi.mat is not None and psi.mat.shape[1] != xs.size:
        raise ValueError("seminorm functionals and xstar disagree on dimension")
    return ConeRep("BishopPhelps", xs.size, xstar=xs, alpha=float(alpha), psi=psi)


def negate_cone(cone: ConeRep) -> ConeRep:
    """The cone -K in the same representation kind."""
    if cone.kind == "Orthant":
        return halfspace(-np.eye(cone.dim))
    if cone.kind == "Halfspace":
        return halfspace(-cone.normals)
    if cone.kind == "Generated":
        return ConeRep("Generated", cone.dim, generators=-cone.generators)
    if cone.kind == "RayUnion":
        return ConeRep("RayUnion", cone.dim, generators=-cone.generators)
    if cone.kind == "BishopPhelps":
        return bishop_phelps(-cone.xstar, cone.alpha, cone.psi)
    raise UnsupportedRepresentation(f"unknown cone kind {cone.kind!r}")


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def _scale(y: np.ndarray, extra: float = 0.0) -> float:
    return max(1.0, float(np.max(np.abs(y))) if y.size else 0.0, extra)


def is_member(status: str) -> bool:
    """True for any of the member-side classifications."""
    return status in ("Interior", "Boundary", "Member")


def _classify_margins(margins: np.ndarray, eps: float) -> str:
    lo = float(np.min(margins)) if margins.size else math.inf
    if lo > eps:
        return "Interior"
    if lo >= -eps:
        return "Boundary"
    return "Outside"


def cone_membership(
    cone: ConeRep,
    y,
    tol: Optional[Tolerances] = None,
    *,
    need_interior: bool = False,
) -> str:
    """Classify ``y`` against the cone.

    Returns "Interior" / "Boundary" / "Outside" for representations with a
    closed-form interior (Orthant, Halfspace, BishopPhelps -- where
    "Interior" means the strict cone {<xstar,y> > alpha * psi(y)}), and
    "Member" / "Outside" for Generated and RayUnion cones.  Passing
    ``need_interior=True`` for the latter raises InteriorUnsupported instead
    of silently under-reporting.
    """
    t = _tol(tol)
    yv = point(y, cone.dim)
    if cone.kind == "Orthant":
        return _classify_margins(yv, t.eps_mem * _scale(yv))
    if cone.kind == "Halfspace":
        W = cone.normals
        margins = W @ yv
        row_scale = np.maximum(1.0, np.max(np.abs(W), axis=1))
        eps = t.eps_mem * _scale(yv)
        lo = float(np.min(margins / row_scale))
        if lo > eps:
            return "Interior"
        if lo >= -eps:
            return "Boundary"
        return "Outside"
    if cone.kind == "BishopPhelps":
        psi_val = eval_seminorm(cone.psi, yv)
        margin = float(cone.xstar @ yv) - cone.alpha * psi_val
        eps = t.eps_mem * _scale(yv, psi_val)
        if margin > eps:
            return "Interior"
        if margin >= -eps:
            return "Boundary"
        return "Outside"
    if cone.kind == "Generated":
        if need_interior:
            raise InteriorUnsupported(
                "interior classification is not available for Generated cones"
            )
        return _generated_membership(cone.generators, yv, t)
    if cone.kind == "RayUnion":
        if need_interior:
            raise InteriorUnsupported(
                "interior classification is not available for RayUnion cones"
            )
        return _ray_union_membership(cone.generators, yv, t)
    raise UnsupportedRepresentation(f"unknown cone kind {cone.kind!r}")


def _generated_membership(G: np.ndarray, y: np.ndarray, t: Tolerances) -> str:
    sc = _scale(y)
    if G.shape[0] == 0:
        return "Member" if np.max(np.abs(y), initial=0.0) <= t.eps_mem * sc else "Outside"
    dist = _conic_distance(G, y)
    return "Member" if dist <= t.eps_mem * sc else "Outside"


def _conic_distance(G: np.ndarray, y: np.ndarray) -> float:
    """Chebyshev distance from ``y`` to the conic hull of the rows of ``G``.

    LP over (lambda >= 0, d >= 0): minimize d subject to
    |G^T lambda - y|_inf <= d.
    """
    m, n = G.shape
    A_ub = np.zeros((2 * n, m + 1))
    A_ub[:n, :m] = G.T
    A_ub[n:, :m] = -G.T
    A_ub[:, m] = -1.0
    b_ub = np.concatenate([y, -y])
    c = np.zeros(m + 1)
    c[m] = 1.0
    res = solve_lp(c, A_ub=A_ub, b_ub=b_ub)
    if res.status != "optimal":  # pragma: no cover - always feasible/bounded
        raise LPFailure(f"conic distance LP ended with status {res.status}", res.status)
    return float(res.objective)


def _ray_union_membership(G: np.ndarray, y: np.ndarray, t: Tolerances) -> str:
    sc = _scale(y)
    if np.max(np.abs(y), initial=0.0) <= t.eps_mem * sc:
        return "Member"
    for g in G:
        tt = float(g @ y) / float(g @ g)
        if tt < 0.0:
            tt = 0.0
        if np.max(np.abs(y - tt * g)) <= t.eps_mem * sc:
            return "Member"
    return "Outside"


# ---------------------------------------------------------------------------
# lineality
# ---------------------------------------------------------------------------

def lineality(cone: ConeRep, tol: Optional[Tolerances] = None) -> np.ndarray:
    """Orthonormal basis (rows) of the lineality space ell(K) = K cap -K.

    Orthant cones are pointed; halfspace cones have ell = null(W); for the
    seminorm-defined cones ell = {y : <xstar,y> = 0 and psi(y) = 0} when
    alpha > 0 (the kernel of [xstar; psi-functionals]) and null(xstar) when
    alpha = 0.  Generated/RayUnion representations are not supported.
    """
    if cone.kind == "Orthant":
        return np.zeros((0, cone.dim))
    if cone.kind == "Halfspace":
        return null_space(cone.normals)
    if cone.kind == "BishopPhelps":
        if cone.alpha == 0.0:
            return null_space(cone.xstar.reshape(1, -1))
        psi = cone.psi
        if psi.kind in ("L1", "L2", "LInf"):
            return np.zeros((0, cone.dim))  # psi is a norm => pointed
        rows = np.vstack([cone.xstar.reshape(1, -1), psi.mat])
        return null_space(rows)
    raise UnsupportedRepresentation(
        f"lineality is not available for {cone.kind} representations"
    )


# ---------------------------------------------------------------------------
# base sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BaseSet:
    """Points of a cone normalized to unit seminorm level.

    ``exactness`` is "ExactVertices" when the points generate the cone
    exactly (finitely generated cases) and "Sampled" otherwise.
    """

    points: np.ndarray
    exactness: str
    seminorm: SeminormSpec

    def __len__(self) -> int:
        return self.points.shape[0]


def base_set(
    pts,
    exactness: str,
    psi: SeminormSpec,
    tol: float = 1e-9,
    dim: Optional[int] = None,
) -> BaseSet:
    """Construct a BaseSet, enforcing |psi(p) - 1| <= tol for every point."""
    if exactness not in ("ExactVertices", "Sampled"):
        raise ValueError(f"exactness must be ExactVertices or Sampled, got {exactness!r}")
    P = points_matrix(pts, dim)
    if P.shape[0]:
        vals = eval_seminorm_many(psi, P)
        worst = float(np.max(np.abs(vals - 1.0)))
        if worst > tol:
            raise ValueError(
                f"base points must sit on the unit seminorm level (off by {worst:.3e})"
            )
    return BaseSet(P, exactness, psi)


def _sphere_directions(n: int, count: int, seed: int) -> np.ndarray:
    """Deterministic direction set covering the unit sphere.

    In the plane this is an angular grid whose size is rounded up to a
    multiple of 8 so the coordinate axes and both diagonals appear exactly.
    In higher dimensions: signed axes, sign-pattern corners and seeded
    Gaussian directions.
    """
    if n == 1:
        return np.array([[1.0], [-1.0]])
    if n == 2:
        m = max(8, int(math.ceil(count / 8.0)) * 8)
        ang = 2.0 * math.pi * np.arange(m) / m
        return np.column_stack([np.cos(ang), np.sin(ang)])
    rng = np.random.default_rng(seed)
    dirs = [np.eye(n), -np.eye(n)]
    if 2**n <= 64:
        corners = np.array(
            [[(1.0 if (k >> i) & 1 else -1.0) for i in range(n)] for k in range(2**n)]
        )
    else:
        corners = rng.choice([-1.0, 1.0], size=(64, n))
    dirs.append(corners / np.sqrt(n))
    have = 2 * n + corners.shape[0]
    if count > have:
        g = rng.standard_normal((count - have, n))
        norms = np.linalg.norm(g, axis=1)
        norms[norms == 0.0] = 1.0
        dirs.append(g / norms[:, None])
    return np.vstack(dirs)


def normlike_base(
    cone: ConeRep,
    psi: SeminormSpec,
    tol: Optional[Tolerances] = None,
    *,
    density: Optional[int] = None,
    seed: int = 0,
) -> BaseSet:
    """Unit-psi-level base of the cone.

    Finitely generated kinds (Orthant, Generated, RayUnion) return their
    normalized generators with exactness "ExactVertices".  Halfspace and
    BishopPhelps cones are sampled on the psi-sphere and membership-filtered
    ("Sampled").  Raises DegenerateSeminorm when a required cone direction
    has psi = 0 (no unit-level representative exists).
    """
    t = _tol(tol)
    if cone.kind in ("Orthant", "Generated", "RayUnion"):
        G = np.eye(cone.dim) if cone.kind == "Orthant" else cone.generators
        pts = []
        for g in G:
            v = eval_seminorm(psi, g)
            if v <= 1e-12 * _scale(g):
                raise DegenerateSeminorm(
                    "a generator has zero seminorm; no unit-level base point exists"
                )
            pts.append(g / v)
        P = dedupe_rows(np.array(pts).reshape(len(pts), cone.dim), 1e-9)
        return BaseSet(P.reshape(-1, cone.dim), "ExactVertices", psi)

    if cone.kind in ("Halfspace", "BishopPhelps"):
        n = cone.dim
        dens = density if density is not None else 64 * n
        dirs = _sphere_directions(n, dens, seed)
        pts = []
        for d in dirs:
            v = eval_seminorm(psi, d)
            if v <= 1e-12:
                # psi vanishes on this direction: only a problem if the
                # direction belongs to the cone
                if is_member(cone_membership(cone, d, t)):
                    raise DegenerateSeminorm(
                        "the seminorm vanishes on a cone direction; the cone has no bounded base"
                    )
                continue
            p = d / v
            if is_member(cone_membership(cone, p, t)):
                pts.append(p)
        P = np.array(pts).reshape(len(pts), n) if pts else np.zeros((0, n))
        return BaseSet(dedupe_rows(P, 1e-9).reshape(-1, n), "Sampled", psi)

    raise UnsupportedRepresentation(f"unknown cone kind {cone.kind!r}")


# ---------------------------------------------------------------------------
# polytopes
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Polytope:
    """Convex hull of finitely many vertices (V-representation)."""

    vertices: np.ndarray

    def __len__(self) -> int:
        return self.vertices.shape[0]


def polytope(rows, dim: Optional[int] = None) -> Polytope:
    """Build a polytope, deduplicating vertices at inf-norm tolerance 1e-9."""
    V = points_matrix(rows, dim)
    V = dedupe_rows(V, 1e-9).reshape(-1, V.shape[1])
    return Polytope(V)


def hull_S0(base: BaseSet, include_zero: bool = True) -> Polytope:
    """Convex hull of the base points, optionally including the origin."""
    rows = base.points
    if include_zero:
        rows = np.vstack([np.zeros((1, rows.shape[1])), rows]) if rows.size else np.zeros(
            (1, base.points.shape[1])
        )
    return polytope(rows, dim=base.points.shape[1])


def polytope_contains_point(
    P: Polytope, y, tol_abs: float
) -> tuple[bool, float]:
    """Whether ``y`` is within Chebyshev distance ``tol_abs`` of the polytope.

    Returns (verdict, distance).  Distance is computed by an LP over convex
    weights: min d s.t. |V^T lam - y|_inf <= d, sum lam = 1, lam >= 0.
    """
    V = P.vertices
    yv = point(y, V.shape[1] if V.shape[0] else None)
    if V.shape[0] == 0:
        return False, math.inf
    k, n = V.shape
    A_ub = np.zeros((2 * n, k + 1))
    A_ub[:n, :k] = V.T
    A_ub[n:, :k] = -V.T
    A_ub[:, k] = -1.0
    b_ub = np.concatenate([yv, -yv])
    A_eq = np.zeros((1, k + 1))
    A_eq[0, :k] = 1.0
    c = np.zeros(k + 1)
    c[k] = 1.0
    res = solve_lp(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=np.array([1.0]))
    if res.status != "optimal":  # pragma: no cover - always feasible/bounded
        raise LPFailure(f"containment LP ended with status {res.status}", res.status)
    dist = float(res.objective)
    return dist <= tol_abs, dist


def polytope_contains_zero(P: Polytope, tol: Optional[Tolerances] = None) -> bool:
    """Whether the origin belongs to the polytope (within relative eps_mem)."""
    t = _tol(tol)
    V = P.vertices
    if V.shape[0] == 0:
        return False
    sc = max(1.0, float(np.max(np.abs(V))))
    ok, _ = polytope_contains_point(P, np.zeros(V.shape[1]), t.eps_mem * sc)
    return ok


def polytopes_disjoint(
    P: Polytope, Q: Polytope, tol: Optional[Tolerances] = None
) -> tuple[bool, dict]:
    """Decide disjointness of two polytopes with an explicit witness.

    Disjoint: returns (True, {"functional": u, "beta_p": .., "beta_q": ..,
    "margin": delta}) with <u, p> >= beta_p > beta_q >= <u, q> for all
    vertices.  Not disjoint (within tolerance): returns (False, {"point": z,
    "distance": d}) where z is a near-common point.

    The separating functional is found by a max-margin LP with the
    normalization |u|_inf <= 1, margin capped at 1.
    """
    t = _tol(tol)
    VP, VQ = P.vertices, Q.vertices
    if VP.shape[0] == 0 or VQ.shape[0] == 0:
        return True, {"functional": None, "margin": math.inf,
                      "note": "an empty polytope is disjoint from everything"}
    n = VP.shape[1]
    sc = max(1.0, float(np.max(np.abs(VP))), float(np.max(np.abs(VQ))))
    kp, kq = VP.shape[0], VQ.shape[0]
    # variables: u (n, in [-1,1]), beta (free), delta (<= 1)
    nv = n + 2
    A_ub = np.zeros((kp + kq, nv))
    b_ub = np.zeros(kp + kq)
    # -<u,p> + beta + delta <= 0
    A_ub[:kp, :n] = -VP
    A_ub[:kp, n] = 1.0
    A_ub[:kp, n + 1] = 1.0
    # <u,q> - beta + delta <= 0
    A_ub[kp:, :n] = VQ
    A_ub[kp:, n] = -1.0
    A_ub[kp:, n + 1] = 1.0
    c = np.zeros(nv)
    c[n + 1] = -1.0  # maximize delta
    bounds = [(-1.0, 1.0)] * n + [(None, None), (None, 1.0)]
    res = solve_lp(c, A_ub=A_ub, b_ub=b_ub, bounds=bounds)
    if res.status != "optimal":  # pragma: no cover
        raise LPFailure(f"separation LP ended with status {res.status}", res.status)
    u = res.x[:n]
    delta = float(res.x[n + 1])
    if delta > t.eps_strict * sc:
        return True, {
            "functional": u,
            "beta_p": float(np.min(VP @ u)),
            "beta_q": float(np.max(VQ @ u)),
            "margin": delta,
        }
    # near-common point: min |P^T lam - Q^T mu|_inf over convex weights
    k = kp + kq
    A_ub2 = np.zeros((2 * n, k + 1))
    A_ub2[:n, :kp] = VP.T
    A_ub2[:n, kp:k] = -VQ.T
    A_ub2[n:, :k] = -A_ub2[:n, :k]
    A_ub2[:, k] = -1.0
    b_ub2 = np.zeros(2 * n)
    A_eq = np.zeros((2, k + 1))
    A_eq[0, :kp] = 1.0
    A_eq[1, kp:k] = 1.0
    c2 = np.zeros(k + 1)
    c2[k] = 1.0
    res2 = solve_lp(c2, A_ub=A_ub2, b_ub=b_ub2, A_eq=A_eq, b_eq=np.ones(2))
    if res2.status != "optimal":  # pragma: no cover
        raise LPFailure(f"common point LP ended with status {res2.status}", res2.status)
    lam = res2.x[:kp]
    z = VP.T @ lam
    return False, {"point": z, "distance": float(res2.objective)}


# ---------------------------------------------------------------------------
# cone sampling helpers
# ---------------------------------------------------------------------------

def sample_cone_points(
    cone: ConeRep,
    psi: SeminormSpec,
    count: int,
    seed: int = 0,
    tol: Optional[Tolerances] = None,
    *,
    base: Optional[BaseSet] = None,
    max_total_weight: float = 4.0,
) -> np.ndarray:
    """Deterministic sample of cone members (rows).

    Convex kinds use nonnegative combinations of base points (total weight
    <= ``max_total_weight``); RayUnion cones scale single rays.  May return
    fewer rows than requested only for the zero cone.
    """
    t = _tol(tol)
    rng = np.random.default_rng(seed)
    n = cone.dim
    if cone.kind == "RayUnion":
        G = cone.generators
        if G.shape[0] == 0:
            return np.zeros((1, n))
        idx = rng.integers(0, G.shape[0], size=count)
        scales = rng.uniform(0.0, max_total_weight, size=count)
        return G[idx] * scales[:, None]
    B = base.points if base is not None else normlike_base(cone, psi, t, seed=seed).points
    if B.shape[0] == 0:
        return np.zeros((1, n))
    k = B.shape[0]
    if count == 0:
        return np.zeros((0, n))
    kmax = min(4, k)
    nsel = rng.integers(1, kmax + 1, size=count)
    order = np.argsort(rng.random((count, k)), axis=1)
    sel_mask = np.zeros((count, k), dtype=bool)
    np.put_along_axis(sel_mask, order[:, :kmax],
                      np.arange(kmax)[None, :] < nsel[:, None], axis=1)
    W = np.where(sel_mask, rng.uniform(0.0, 1.0, size=(count, k)), 0.0)
    s = W.sum(axis=1, keepdims=True)
    totals = rng.uniform(0.0, max_total_weight, size=(count, 1))
    W = np.divide(W, s, out=np.zeros_like(W), where=s > 0.0) * totals
    return W @ B


def sample_interior_points(
    cone: ConeRep,
    psi: SeminormSpec,
    count: int,
    seed: int = 0,
    tol: Optional[Tolerances] = None,
) -> np.ndarray:
    """Deterministic sample of interior points, or an empty array when the
    interior is (provably or apparently) empty.

    Orthant: strictly positive vectors.  Halfspace: a strict-margin anchor
    from an LP plus cone perturbations.  BishopPhelps: anchored at the best
    strict base point (the strict cone is the interior when nonempty).
    Generated: strictly positive combinations of spanning generators
    (interior is empty when the generators do not span).  RayUnion: empty
    for n >= 2; the 1-D ray is handled like Generated.
    """
    t = _tol(tol)
    rng = np.random.default_rng(seed)
    n = cone.dim

    if cone.kind == "Orthant":
        return rng.uniform(0.2, 2.0, size=(count, n))

    if cone.kind in ("Generated", "RayUnion"):
        G = cone.generators
        if G.shape[0] == 0:
            return np.zeros((0, n))
        if cone.kind == "RayUnion" and n >= 2:
            return np.zeros((0, n))
        if np.linalg.matrix_rank(G) < n:
            return np.zeros((0, n))
        W = rng.uniform(0.1, 1.0, size=(count, G.shape[0]))
        return W @ G

    if cone.kind == "Halfspace":
        W = cone.normals
        # anchor: maximize m s.t. W y >= m, |y|_inf <= 1
        m_rows = W.shape[0]
        A_ub = np.zeros((m_rows, n + 1))
        A_ub[:, :n] = -W
        A_ub[:, n] = 1.0
        c = np.zeros(n + 1)
        c[n] = -1.0
        bounds = [(-1.0, 1.0)] * n + [(None, None)]
        res = solve_lp(c, A_ub=A_ub, b_ub=np.zeros(m_rows), bounds=bounds)
        if res.status != "optimal" or res.x[n] <= t.eps_strict:
            return np.zeros((0, n))
        anchor = res.x[:n]
        extra = sample_cone_points(cone, psi, count, seed=seed + 1, tol=t)
        scales = rng.uniform(0.5, 2.0, size=count)
        return anchor * scales[:, None] + extra * rng.uniform(0.0, 1.0, size=(count, 1))

    if cone.kind == "BishopPhelps":
        B = normlike_base(cone, psi, t, seed=seed).points
        if B.shape[0] == 0:
            return np.zeros((0, n))
        margins = margins_many(cone.psi, B, cone.xstar, cone.alpha, -1.0)
        best = int(np.argmax(margins))
        if margins[best] <= t.eps_strict:
            return np.zeros((0, n))
        anchor = B[best]
        extra = sample_cone_points(cone, psi, count, seed=seed + 1, tol=t, base=BaseSet(B, "Sampled", psi))
        scales = rng.uniform(0.5, 2.0, size=count)
        return anchor * scales[:, None] + extra * rng.uniform(0.0, 1.0, size=(count, 1))

    raise UnsupportedRepresentation(f"unknown cone kind {cone.kind!r}")


# ---------------------------------------------------------------------------
# linear programming (two-phase dense simplex, Bland's rule)
# ---------------------------------------------------------------------------

@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded" | "maxiter"
    x: Optional[np.ndarray]
    objective: Optional[float]


_COST_EPS = 1e-9
_PIV_EPS = 1e-11


def solve_lp(
    c,
    A_ub=None,
    b_ub=None,
    A_eq=None,
    b_eq=None,
    bounds=None,
    *,
    max_iter: Optional[int] = None,
) -> LPResult:
    """Minimize ``c @ x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``
    and variable bounds (default ``(0, None)`` per variable).

    Dense two-phase simplex with Bland's rule (deterministic, cycle-free).
    ``bounds`` follows the usual convention: a list of (lo, hi) pairs per
    variable, or a single pair applied to all; ``None`` means unbounded on
    that side.
    """
    c_orig = np.asarray(c, dtype=float).copy()
    n = c_orig.size
    Au = np.zeros((0, n)) if A_ub is None else np.atleast_2d(np.asarray(A_ub, dtype=float)).copy()
    bu = np.zeros(0) if b_ub is None else np.atleast_1d(np.asarray(b_ub, dtype=float)).copy()
    Ae = np.zeros((0, n)) if A_eq is None else np.atleast_2d(np.asarray(A_eq, dtype=float)).copy()
    be = np.zeros(0) if b_eq is None else np.atleast_1d(np.asarray(b_eq, dtype=float)).copy()
    if Au.shape[0] != bu.size or (Au.shape[0] and Au.shape[1] != n):
        raise ValueError("A_ub/b_ub shapes are inconsistent with c")
    if Ae.shape[0] != be.size or (Ae.shape[0] and Ae.shape[1] != n):
        raise ValueError("A_eq/b_eq shapes are inconsistent with c")

    if bounds is None:
        blist = [(0.0, None)] * n
    elif isinstance(bounds, tuple) and len(bounds) == 2 and not isinstance(bounds[0], (list, tuple)):
        blist = [bounds] * n
    else:
        blist = list(bounds)
        if len(blist) != n:
            raise ValueError(f"bounds must have length {n}")

    cw = c_orig.copy()
    transforms: list[tuple[str, float]] = []
    ub_rows: list[tuple[int, float]] = []
    free_cols: list[int] = []
    for j, (lo, hi) in enumerate(blist):
        lo_f = None if lo is None else float(lo)
        hi_f = None if hi is None else float(hi)
        if lo_f is not None and hi_f is not None and hi_f < lo_f - 1e-15:
            return LPResult("infeasible", None, None)
        if lo_f is not None:
            if lo_f != 0.0:
                if Au.shape[0]:
                    bu -= Au[:, j] * lo_f
                if Ae.shape[0]:
                    be -= Ae[:, j] * lo_f
            transforms.append(("shift", lo_f))
            if hi_f is not None:
                ub_rows.append((j, hi_f - lo_f))
        elif hi_f is not None:
            # x_j = hi - u_j with u_j >= 0
            if Au.shape[0]:
                bu -= Au[:, j] * hi_f
            if Ae.shape[0]:
                be -= Ae[:, j] * hi_f
            if Au.shape[0]:
                Au[:, j] = -Au[:, j]
            if Ae.shape[0]:
                Ae[:, j] = -Ae[:, j]
            cw[j] = -cw[j]
            transforms.append(("negshift", hi_f))
        else:
            free_cols.append(j)
            transforms.append(("free", 0.0))

    nvars = n + len(free_cols)
    if free_cols:
        Au = np.hstack([Au, -Au[:, free_cols]]) if Au.shape[0] else np.zeros((0, nvars))
        Ae = np.hstack([Ae, -Ae[:, free_cols]]) if Ae.shape[0] else np.zeros((0, nvars))
        cw = np.concatenate([cw, -cw[free_cols]])
    else:
        if not Au.shape[0]:
            Au = np.zeros((0, nvars))
        if not Ae.shape[0]:
            Ae = np.zeros((0, nvars))

    if ub_rows:
        extra = np.zeros((len(ub_rows), nvars))
        extra_b = np.zeros(len(ub_rows))
        for i, (j, ub_val) in enumerate(ub_rows):
            extra[i, j] = 1.0
            extra_b[i] = ub_val
        Au = np.vstack([Au, extra]) if Au.shape[0] else extra
        bu = np.concatenate([bu, extra_b])

    m1, m2 = Au.shape[0], Ae.shape[0]
    m = m1 + m2
    nstruct = nvars + m1  # structural columns: variables + slacks
    A = np.zeros((m, nstruct))
    b = np.concatenate([bu, be])
    if m1:
        A[:m1, :nvars] = Au
        A[:m1, nvars:] = np.eye(m1)
    if m2:
        A[m1:, :nvars] = Ae

    # normalize rhs >= 0
    neg = b < 0.0
    A[neg] = -A[neg]
    b = np.where(neg, -b, b)

    # phase-1 basis: prefer untouched slacks, otherwise artificials
    basis = np.full(m, -1, dtype=np.intp)
    art_cols: list[int] = []
    next_col = nstruct
    for i in range(m):
        if i < m1 and not neg[i]:
            basis[i] = nvars + i
        else:
            basis[i] = next_col
            art_cols.append(i)
            next_col += 1
    n_art = len(art_cols)
    ncols = nstruct + n_art

    T = np.zeros((m + 1, ncols + 1))
    T[:m, :nstruct] = A
    T[:m, ncols] = b
    for k, i in enumerate(art_cols):
        T[i, nstruct + k] = 1.0

    if max_iter is None:
        max_iter = 2000 + 60 * (m + ncols)

    b_scale = max(1.0, float(np.max(b)) if b.size else 0.0)

    if n_art:
        # phase-1 objective: minimize sum of artificials
        T[m, :] = 0.0
        T[m, nstruct:ncols] = 1.0
        for i in art_cols:
            T[m, :] -= T[i, :]
        status = _kernels.simplex_pivot_loop(T, basis, ncols, _COST_EPS, _PIV_EPS, max_iter)
        if status == 2:
            return LPResult("maxiter", None, None)
        phase1_val = -T[m, ncols]
        if phase1_val > 1e-8 * b_scale:
            return LPResult("infeasible", None, None)
        # drive remaining artificials out of the basis
        drop_rows = []
        for i in range(m):
            if basis[i] >= nstruct:
                pcol = -1
                for j in range(nstruct):
                    if abs(T[i, j]) > 1e-9:
                        pcol = j
                        break
                if pcol >= 0:
                    _kernels.pivot(T, basis, i, pcol)
                else:
                    drop_rows.append(i)
        if drop_rows:
            keep = [i for i in range(m) if i not in set(drop_rows)]
            T = np.ascontiguousarray(T[keep + [m], :])
            basis = basis[keep].copy()
            m = len(keep)

    # phase-2 objective row
    cost = np.zeros(ncols + 1)
    cost[:nvars] = cw
    T[m, :] = cost
    for i in range(m):
        cb = cost[basis[i]] if basis[i] < nstruct else 0.0
        if cb != 0.0:
            T[m, :] -= cb * T[i, :]
    status = _kernels.simplex_pivot_loop(T, basis, nstruct, _COST_EPS, _PIV_EPS, max_iter)
    if status == 2:
        return LPResult("maxiter", None, None)
    if status == 1:
        return LPResult("unbounded", None, None)

    x_std = np.zeros(nstruct)
    for i in range(m):
        if basis[i] < nstruct:
            x_std[basis[i]] = T[i, ncols]
    u = x_std[:nvars]
    x = np.zeros(n)
    fi = 0
    for j, (kind_t, val) in enumerate(transforms):
        if kind_t == "shift":
            x[j] = u[j] + val
        elif kind_t == "negshift":
            x[j] = val - u[j]
        else:  # free: u_j - u_extra
            x[j] = u[j] - u[n + fi]
            fi += 1
    return LPResult("optimal", x, float(c_orig @ x))
