"""Scalarizing functions.

Two families are provided:

* seminorm-linear functions ``phi(y) = <xstar, y> + alpha * psi(y)`` attached
  to a :class:`ScalarizingPair` -- the sublevel set ``{phi <= 0}`` is exactly
  ``-C`` for the induced cone ``C = {y : <xstar,y> >= alpha * psi(y)}``, and
  ``{phi < 0}`` is minus its strict cone;

* sup-translation (Gerstewitz) functions
  ``phi(y) = inf {t : y in t*k + (a - K)}`` for a cone ``K``, an anchor ``a``
  and a direction ``k``.

Both come with sampling-based checkers for the representing property
(``{phi <= 0} = -K``) and for cone monotonicity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .cone_core import (
    ConeRep,
    SeminormSpec,
    Tolerances,
    _tol,
    bishop_phelps,
    cone_membership,
    dual_gauge,
    eval_seminorm,
    eval_seminorm_many,
    is_member,
    margins_many,
    negate_cone,
    point,
    sample_cone_points,
    sample_interior_points,
    seminorms_equal,
)
from .errors import (
    InteriorUnsupported,
    NoFiniteValue,
    PreconditionViolated,
    UnsupportedRepresentation,
)

__all__ = [
    "ScalarizingPair",
    "scalarizing_pair",
    "SeminormLinearSpec",
    "GerstewitzSpec",
    "ScalarizerSpec",
    "induced_cone",
    "strict_margin",
    "eval_seminorm_linear",
    "eval_seminorm_linear_many",
    "eval_gerstewitz",
    "eval_gerstewitz_many",
    "eval_scalarizer",
    "RepresentingReport",
    "check_representing",
    "MonotoneReport",
    "check_monotone",
]


@dataclass(frozen=True, eq=False)
class ScalarizingPair:
    """A functional/weight pair (xstar, alpha) together with its seminorm."""

    xstar: np.ndarray
    alpha: float
    psi: SeminormSpec


def scalarizing_pair(xstar, alpha: float, psi: SeminormSpec) -> ScalarizingPair:
    xs = point(xstar)
    if not (isinstance(alpha, (int, float)) and math.isfinite(alpha) and alpha >= 0):
        raise ValueError(f"alpha must be a finite real >= 0, got {alpha!r}")
    if not isinstance(psi, SeminormSpec):
        raise TypeError(f"psi must be a SeminormSpec, got {type(psi).__name__}")
    if psi.mat is not None and psi.mat.shape[1] != xs.size:
        raise ValueError("seminorm functionals and xstar disagree on dimension")
    return ScalarizingPair(xs, float(alpha), psi)


def induced_cone(pair: ScalarizingPair) -> ConeRep:
    """The cone C = {y : <xstar, y> >= alpha * psi(y)} defined by the pair."""
    return bishop_phelps(pair.xstar, pair.alpha, pair.psi)


def strict_margin(pair: ScalarizingPair, tol: Optional[Tolerances] = None) -> float:
    """gauge(psi, xstar) - alpha; positive iff the strict cone is nonempty."""
    g = dual_gauge(pair.psi, pair.xstar, _tol(tol))
    return g - pair.alpha if math.isfinite(g) else math.inf


@dataclass(frozen=True, eq=False)
class SeminormLinearSpec:
    pair: ScalarizingPair


@dataclass(frozen=True, eq=False)
class GerstewitzSpec:
    cone: ConeRep
    a: np.ndarray
    k: np.ndarray


ScalarizerSpec = Union[SeminormLinearSpec, GerstewitzSpec]


def gerstewitz_spec(cone: ConeRep, a, k) -> GerstewitzSpec:
    av = point(a, cone.dim)
    kv = point(k, cone.dim)
    if float(np.max(np.abs(kv))) == 0.0:
        raise ValueError("the direction k must be nonzero")
    return GerstewitzSpec(cone, av, kv)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def eval_seminorm_linear(pair: ScalarizingPair, y) -> float:
    """phi(y) = <xstar, y> + alpha * psi(y)."""
    yv = point(y, pair.xstar.size)
    return float(pair.xstar @ yv) + pair.alpha * eval_seminorm(pair.psi, yv)


def eval_seminorm_linear_many(pair: ScalarizingPair, Y) -> np.ndarray:
    """Batched phi over the rows of ``Y``."""
    return margins_many(pair.psi, Y, pair.xstar, pair.alpha, 1.0)


def _gerstewitz_rows(W: np.ndarray, z: np.ndarray, k: np.ndarray, t: Tolerances) -> float:
    """inf {t : W z <= t * (W k)} -- the halfspace-representation closed form.

    Requires ``W k >= 0`` with at least one strictly positive row; then the
    value is the max of num/den over the positive rows, or ``math.inf`` when
    a vanishing row excludes every translate.
    """
    num = W @ z
    den = W @ k
    row_scale = np.maximum(1.0, np.max(np.abs(W), axis=1))
    den_eps = 1e-12 * max(1.0, float(np.max(np.abs(k)))) * row_scale
    z_scale = max(1.0, float(np.max(np.abs(z))))
    if np.any(den < -den_eps):
        raise PreconditionViolated(
            "the direction k must satisfy <w_i, k> >= 0 for every cone normal"
        )
    pos = den > den_eps
    if not np.any(pos):
        raise PreconditionViolated(
            "the direction k must satisfy <w_i, k> > 0 for at least one cone normal"
        )
    zero_violated = (~pos) & (num > t.eps_mem * z_scale * row_scale)
    if np.any(zero_violated):
        return math.inf
    return float(np.max(num[pos] / den[pos]))


def _gerstewitz_bp(
    cone: ConeRep, a: np.ndarray, k: np.ndarray, y: np.ndarray, t: Tolerances
) -> float:
    """Bisection on g(t) = phi_pair(y - a - t*k), valid when k is in the
    strict cone of the pair (then g is convex, nonincreasing, with
    g -> -inf at +inf and g -> +inf at -inf; {g <= 0} = [root, inf))."""
    xs, alpha, psi = cone.xstar, cone.alpha, cone.psi
    k_scale = max(1.0, float(np.max(np.abs(k))))
    dpos = float(xs @ k) - alpha * eval_seminorm(psi, k)
    if dpos <= t.eps_strict * k_scale:
        raise PreconditionViolated(
            "the direction k must lie strictly inside the seminorm-defined cone"
        )
    z = y - a

    def g(tt: float) -> float:
        w = z - tt * k
        return float(xs @ w) + alpha * eval_seminorm(psi, w)

    s = (1.0 + float(np.max(np.abs(z)))) / (1.0 + dpos)
    hi = s
    for _ in range(60):
        if g(hi) <= 0.0:
            break
        hi *= 2.0
    else:  # pragma: no cover - impossible for k in the strict cone
        raise NoFiniteValue("failed to bracket the sublevel set from above")
    lo = -s
    for _ in range(60):
        if g(lo) > 0.0:
            break
        lo *= 2.0
    else:  # pragma: no cover
        raise NoFiniteValue("failed to bracket the sublevel set from below")
    while hi - lo > t.eps_root * max(1.0, abs(lo), abs(hi)):
        mid = 0.5 * (lo + hi)
        if g(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def eval_gerstewitz(cone: ConeRep, a, k, y, tol: Optional[Tolerances] = None) -> float:
    """phi(y) = inf {t : y in t*k + (a - K)}.

    Closed form for Orthant/Halfspace cones (requires W k >= 0 with a
    strictly positive row); bisection for seminorm-defined (BishopPhelps)
    cones with k in the strict cone.  ``math.inf`` signals an empty sublevel
    set on a degenerate normal; PreconditionViolated a bad direction.
    """
    t = _tol(tol)
    av = point(a, cone.dim)
    kv = point(k, cone.dim)
    yv = point(y, cone.dim)
    if float(np.max(np.abs(kv))) == 0.0:
        raise PreconditionViolated("the direction k must be nonzero")
    if cone.kind == "Orthant":
        return _gerstewitz_rows(np.eye(cone.dim), yv - av, kv, t)
    if cone.kind == "Halfspace":
        return _gerstewitz_rows(cone.normals, yv - av, kv, t)
    if cone.kind == "BishopPhelps":
        return _gerstewitz_bp(cone, av, kv, yv, t)
    raise UnsupportedRepresentation(
        f"sup-translation scalarizer needs a closed-form or seminorm-defined cone, got {cone.kind}"
    )


def eval_gerstewitz_many(
    cone: ConeRep, a, k, Y, tol: Optional[Tolerances] = None
) -> np.ndarray:
    """Batched sup-translation values over the rows of ``Y``.

    Orthant/Halfspace cones are evaluated vectorized (rows with positive
    denominator only; degenerate rows fall back to the scalar path).
    """
    t = _tol(tol)
    arr = np.atleast_2d(np.asarray(Y, dtype=float))
    av = point(a, cone.dim)
    kv = point(k, cone.dim)
    if cone.kind in ("Orthant", "Halfspace"):
        W = np.eye(cone.dim) if cone.kind == "Orthant" else cone.normals
        den = W @ kv
        row_scale = np.maximum(1.0, np.max(np.abs(W), axis=1))
        den_eps = 1e-12 * max(1.0, float(np.max(np.abs(kv)))) * row_scale
        if np.all(den > den_eps):
            ratios = (arr - av) @ W.T / den
            return np.max(ratios, axis=1)
    return np.array([eval_gerstewitz(cone, av, kv, row, t) for row in arr])


def eval_scalarizer(spec: ScalarizerSpec, y, tol: Optional[Tolerances] = None) -> float:
    if isinstance(spec, SeminormLinearSpec):
        return eval_seminorm_linear(spec.pair, y)
    if isinstance(spec, GerstewitzSpec):
        return eval_gerstewitz(spec.cone, spec.a, spec.k, y, tol)
    raise TypeError(f"not a scalarizer spec: {spec!r}")


# ---------------------------------------------------------------------------
# representing / monotonicity checkers
# ---------------------------------------------------------------------------

@dataclass
class RepresentingReport:
    holds: bool
    counterexample: Optional[np.ndarray]
    checked: int
    exact: bool  # True when decided algebraically rather than by sampling


def _box_samples(n: int, count: int, radius: float, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.uniform(-radius, radius, size=(count, n))


def check_representing(
    phi: ScalarizerSpec,
    cone: ConeRep,
    strict: bool = False,
    samples: int = 512,
    tol: Optional[Tolerances] = None,
    *,
    seed: int = 0,
) -> RepresentingReport:
    """Does ``{phi <= 0} = -K`` hold (strict: ``{phi < 0} = -int K``)?

    Sampled check over a centered box and over scaled cone elements; a pair
    evaluated against its own induced cone is decided algebraically.
    """
    t = _tol(tol)
    n = cone.dim
    if isinstance(phi, SeminormLinearSpec) and cone.kind == "BishopPhelps":
        p = phi.pair
        if (
            np.array_equal(p.xstar, cone.xstar)
            and p.alpha == cone.alpha
            and seminorms_equal(p.psi, cone.psi)
        ):
            if not strict:
                return RepresentingReport(True, None, 0, True)
            # strict representing <=> the strict cone equals the interior;
            # guaranteed when the strict cone is nonempty
            if strict_margin(p, t) > t.eps_strict:
                return RepresentingReport(True, None, 0, True)
    neg = negate_cone(cone)
    psi_for_sampling = (
        cone.psi if cone.kind == "BishopPhelps" else SeminormSpec("L2")
    )

    def phi_val(yy: np.ndarray) -> float:
        return eval_scalarizer(phi, yy, t)

    checked = 0
    box = _box_samples(n, samples, 3.0, seed)
    cone_pts = sample_cone_points(cone, psi_for_sampling, max(16, samples // 4), seed=seed + 1, tol=t)
    if strict:
        int_pts = sample_interior_points(cone, psi_for_sampling, max(16, samples // 4), seed=seed + 2, tol=t)
    else:
        int_pts = np.zeros((0, n))

    for y in box:
        checked += 1
        sc = max(1.0, float(np.max(np.abs(y))))
        v = phi_val(y)
        status = cone_membership(neg, y, t, need_interior=strict)
        if strict:
            inside = status == "Interior"
            if v <= -t.eps_strict * sc and not inside:
                return RepresentingReport(False, y, checked, False)
            if inside and v >= t.eps_strict * sc:
                return RepresentingReport(False, y, checked, False)
        else:
            inside = is_member(status)
            if v <= -t.eps_strict * sc and not inside:
                return RepresentingReport(False, y, checked, False)
            if inside and v > t.eps_strict * sc:
                return RepresentingReport(False, y, checked, False)
    for p in cone_pts:
        checked += 1
        sc = max(1.0, float(np.max(np.abs(p))))
        if phi_val(-p) > t.eps_strict * sc:  # -p in -K must have phi <= 0
            return RepresentingReport(False, -p, checked, False)
    for p in int_pts:
        checked += 1
        sc = max(1.0, float(np.max(np.abs(p))))
        if phi_val(-p) >= t.eps_strict * sc:
            return RepresentingReport(False, -p, checked, False)
    return RepresentingReport(True, None, checked, False)


@dataclass
class MonotoneReport:
    verdict: str  # "HoldsOnSamples" | "Fails"
    mode: str
    counterexample: Optional[tuple[np.ndarray, np.ndarray]]  # (ybar, d)
    checked: int
    note: str = ""

    @property
    def holds_on_samples(self) -> bool:
        return self.verdict != "Fails"


MONOTONE_MODES = ("increasing", "strictly", "strongly")


def check_monotone(
    phi: ScalarizerSpec,
    cone: ConeRep,
    mode: str,
    samples: int = 256,
    tol: Optional[Tolerances] = None,
    *,
    seed: int = 0,
) -> MonotoneReport:
    """Sampled falsifier for cone monotonicity of a scalarizing function.

    mode "increasing": for d in K require phi(ybar - d) <= phi(ybar);
    counterexample when the increase exceeds eps_strict * max(1, psi(d)).
    mode "strictly":   d from int K, strict decrease required; flagged when
    the decrease is smaller than eps_strict * psi(d).
    mode "strongly":   d from K \\ {0}, same strict-decrease threshold.

    Directions are normalized to unit inf-norm, so the thresholds act at
    unit scale.  Verdicts are "HoldsOnSamples" or "Fails" (with a (ybar, d)
    witness); an empty interior makes "strictly" vacuous.
    """
    t = _tol(tol)
    if mode not in MONOTONE_MODES:
        raise ValueError(f"mode must be one of {MONOTONE_MODES}, got {mode!r}")
    n = cone.dim
    rng = np.random.default_rng(seed)
    psi_meas = phi.pair.psi if isinstance(phi, SeminormLinearSpec) else SeminormSpec("L2")
    psi_sampling = cone.psi if cone.kind == "BishopPhelps" else SeminormSpec("L2")

    if mode == "strictly":
        if cone.kind in ("Generated", "RayUnion"):
            raise InteriorUnsupported(
                f"strict monotonicity needs an interior classification; {cone.kind} "
                "representations do not certify one"
            )
        D = sample_interior_points(cone, psi_sampling, samples, seed=seed + 7, tol=t)
        if D.shape[0] == 0:
            return MonotoneReport(
                "HoldsOnSamples", mode, None, 0, "interior empty; vacuous"
            )
    else:
        D = sample_cone_points(cone, psi_sampling, samples, seed=seed + 7, tol=t)
    norms = np.max(np.abs(D), axis=1)
    keep = norms > 1e-9
    D = D[keep] / norms[keep][:, None]
    if D.shape[0] == 0:
        return MonotoneReport("HoldsOnSamples", mode, None, 0, "no nonzero directions sampled")
    reps = int(math.ceil(samples / D.shape[0]))
    D = np.tile(D, (reps, 1))[:samples]
    Ybar = rng.uniform(-3.0, 3.0, size=(D.shape[0], n))

    psi_d = eval_seminorm_many(psi_meas, D)
    if isinstance(phi, SeminormLinearSpec):
        vals_bar = eval_seminorm_linear_many(phi.pair, Ybar)
        vals_down = eval_seminorm_linear_many(phi.pair, Ybar - D)
    else:
        vals_bar = np.array([eval_scalarizer(phi, y, t) for y in Ybar])
        vals_down = np.array([eval_scalarizer(phi, y, t) for y in Ybar - D])
    diff = vals_down - vals_bar

    if mode == "increasing":
        bad = diff > t.eps_strict * np.maximum(1.0, psi_d)
    else:
        bad = diff >= -t.eps_strict * psi_d
    if np.any(bad):
        i = int(np.argmax(bad))
        return MonotoneReport("Fails", mode, (Ybar[i], D[i]), int(D.shape[0]))
    return MonotoneReport("HoldsOnSamples", mode, None, int(D.shape[0]))
