"""Augmented dual classes of a cone.

For a cone K, a seminorm psi, and a pair (xstar, alpha) with alpha >= 0, put
``h(y) = <xstar, y> - alpha * psi(y)``.  The three classes checked here are

* ``APlus``:  h >= 0 on K;
* ``ACirc``:  xstar is in the (classical) dual cone of K, xstar != 0, and
  h > 0 on the interior of K;
* ``ASharp``: h > 0 on K \\ {0}.

Because h is superadditive and positively homogeneous, nonnegativity
(resp. strict positivity) of h on a generating set decides APlus (resp.
ASharp) exactly for finitely generated cones; for sampled bases the verdicts
degrade to "HoldsOnSamples".  ``find_sharp_pair`` / ``find_circ_pair``
search for members of ASharp / ACirc by maximizing the worst base margin
with a linear program.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cone_core import (
    BaseSet,
    ConeRep,
    SeminormSpec,
    Tolerances,
    _tol,
    eval_seminorm_many,
    margins_many,
    normlike_base,
    sample_interior_points,
    solve_lp,
)
from .scalarizers import ScalarizingPair, scalarizing_pair

__all__ = [
    "AUG_DUAL_CLASSES",
    "AugDualReport",
    "aug_dual_membership",
    "find_sharp_pair",
    "find_circ_pair",
]

AUG_DUAL_CLASSES = ("APlus", "ACirc", "ASharp")


@dataclass
class AugDualReport:
    pair: ScalarizingPair
    cls: str
    verdict: str  # "Holds" | "HoldsOnSamples" | "Fails"
    margin: float
    witness: Optional[np.ndarray]
    exactness: str  # exactness of the base the verdict rests on
    note: str = ""


def _unit_interior_dirs(
    cone: ConeRep, psi: SeminormSpec, count: int, seed: int, t: Tolerances
) -> np.ndarray:
    """psi-normalized interior directions (empty when the interior is)."""
    D = sample_interior_points(cone, psi, count, seed=seed, tol=t)
    if D.shape[0] == 0:
        return D
    s = eval_seminorm_many(psi, D)
    keep = s > 1e-12
    return D[keep] / s[keep][:, None]


def aug_dual_membership(
    pair: ScalarizingPair,
    cone: ConeRep,
    cls: str,
    tol: Optional[Tolerances] = None,
    *,
    base: Optional[BaseSet] = None,
    seed: int = 0,
    interior_samples: int = 128,
) -> AugDualReport:
    """Decide whether (xstar, alpha) belongs to the given augmented dual class.

    APlus/ASharp test the h-margin on a psi-normalized base of K (exact for
    ExactVertices bases); ACirc additionally needs xstar nonnegative on K and
    tests strict positivity on sampled interior directions, so its positive
    verdict is capped at "HoldsOnSamples".
    """
    t = _tol(tol)
    if cls not in AUG_DUAL_CLASSES:
        raise ValueError(f"cls must be one of {AUG_DUAL_CLASSES}, got {cls!r}")
    if base is None:
        base = normlike_base(cone, pair.psi, t, seed=seed)
    B = base.points
    sc = max(1.0, float(np.max(np.abs(pair.xstar))), pair.alpha)
    positive = "Holds" if base.exactness == "ExactVertices" else "HoldsOnSamples"

    if B.shape[0] == 0:
        # the zero cone: every condition on K \ {0} or int K is vacuous
        if cls == "ACirc" and float(np.max(np.abs(pair.xstar))) == 0.0:
            return AugDualReport(pair, cls, "Fails", 0.0, None, base.exactness,
                                 "xstar must be nonzero")
        return AugDualReport(pair, cls, positive, math.inf, None, base.exactness,
                             "empty base; vacuous")

    h = margins_many(pair.psi, B, pair.xstar, pair.alpha, -1.0)
    i_min = int(np.argmin(h))
    m = float(h[i_min])

    if cls == "APlus":
        if m >= -t.eps_mem * sc:
            return AugDualReport(pair, cls, positive, m, None, base.exactness)
        return AugDualReport(pair, cls, "Fails", m, B[i_min], base.exactness)

    if cls == "ASharp":
        if m > t.eps_strict * sc:
            return AugDualReport(pair, cls, positive, m, None, base.exactness)
        return AugDualReport(pair, cls, "Fails", m, B[i_min], base.exactness)

    # ACirc
    if float(np.max(np.abs(pair.xstar))) == 0.0:
        return AugDualReport(pair, cls, "Fails", 0.0, None, base.exactness,
                             "xstar must be nonzero")
    lin = B @ pair.xstar
    j = int(np.argmin(lin))
    if lin[j] < -t.eps_mem * sc:
        return AugDualReport(pair, cls, "Fails", float(lin[j]), B[j], base.exactness,
                             "xstar is negative on the cone")
    D = _unit_interior_dirs(cone, pair.psi, interior_samples, seed + 11, t)
    if D.shape[0] == 0:
        return AugDualReport(pair, cls, "HoldsOnSamples", float(lin[j]), None,
                             base.exactness, "interior empty or unsupported; vacuous")
    hd = margins_many(pair.psi, D, pair.xstar, pair.alpha, -1.0)
    jd = int(np.argmin(hd))
    if hd[jd] <= t.eps_strict * sc:
        return AugDualReport(pair, cls, "Fails", float(hd[jd]), D[jd], base.exactness,
                             "h not strictly positive on an interior direction")
    return AugDualReport(pair, cls, "HoldsOnSamples", float(min(lin[j], hd[jd])), None,
                         base.exactness)


def _margin_lp(
    rows_margin: np.ndarray,
    rows_nonneg: np.ndarray,
    n: int,
    alpha_min: float,
) -> Optional[tuple[np.ndarray, float, float]]:
    """Maximize m over (xstar, alpha >= alpha_min, m, s) subject to
    |xstar_i| <= s, s + alpha <= 1, m <= 1,
    <b, xstar> - alpha >= m   for b in rows_margin,
    <b, xstar> >= 0           for b in rows_nonneg.
    Returns (xstar, alpha, m) at the optimum, or None on solver failure."""
    nv = n + 3  # xstar, alpha, m, s
    A = []
    b = []
    for i in range(n):
        r = np.zeros(nv); r[i] = 1.0; r[n + 2] = -1.0
        A.append(r); b.append(0.0)
        r = np.zeros(nv); r[i] = -1.0; r[n + 2] = -1.0
        A.append(r); b.append(0.0)
    r = np.zeros(nv); r[n] = 1.0; r[n + 2] = 1.0
    A.append(r); b.append(1.0)
    r = np.zeros(nv); r[n + 1] = 1.0
    A.append(r); b.append(1.0)
    for row in rows_margin:
        r = np.zeros(nv); r[:n] = -row; r[n] = 1.0; r[n + 1] = 1.0
        A.append(r); b.append(0.0)
    for row in rows_nonneg:
        r = np.zeros(nv); r[:n] = -row
        A.append(r); b.append(0.0)
    c = np.zeros(nv); c[n + 1] = -1.0
    bounds = [(None, None)] * n + [(alpha_min, None), (None, None), (0.0, None)]
    res = solve_lp(c, A_ub=np.array(A), b_ub=np.array(b), bounds=bounds)
    if res.status != "optimal":
        return None
    x = res.x
    return x[:n].copy(), float(x[n]), float(x[n + 1])


def find_sharp_pair(
    cone: ConeRep,
    psi: SeminormSpec,
    tol: Optional[Tolerances] = None,
    *,
    alpha_min: float = 0.05,
    base: Optional[BaseSet] = None,
    seed: int = 0,
) -> Optional[ScalarizingPair]:
    """Search ASharp for a pair with alpha >= alpha_min by maximizing the
    worst base margin; None when no pair clears the strictness threshold."""
    t = _tol(tol)
    if not (math.isfinite(alpha_min) and alpha_min >= 0):
        raise ValueError("alpha_min must be a finite real >= 0")
    if base is None:
        base = normlike_base(cone, psi, t, seed=seed)
    got = _margin_lp(base.points, np.zeros((0, cone.dim)), cone.dim, alpha_min)
    if got is None:
        return None
    xstar, alpha, m = got
    if m <= t.eps_strict:
        return None
    pair = scalarizing_pair(xstar, alpha, psi)
    rep = aug_dual_membership(pair, cone, "ASharp", t, base=base, seed=seed)
    return pair if rep.verdict in ("Holds", "HoldsOnSamples") else None


def find_circ_pair(
    cone: ConeRep,
    psi: SeminormSpec,
    tol: Optional[Tolerances] = None,
    *,
    alpha_min: float = 0.05,
    base: Optional[BaseSet] = None,
    seed: int = 0,
    interior_samples: int = 128,
) -> Optional[ScalarizingPair]:
    """Search ACirc: xstar nonnegative on a base of K, with the h-margin
    maximized over sampled interior directions.  None when the interior is
    empty (nothing to certify against) or no pair clears the threshold."""
    t = _tol(tol)
    if not (math.isfinite(alpha_min) and alpha_min >= 0):
        raise ValueError("alpha_min must be a finite real >= 0")
    if base is None:
        base = normlike_base(cone, psi, t, seed=seed)
    D = _unit_interior_dirs(cone, psi, interior_samples, seed + 11, t)
    if D.shape[0] == 0:
        return None
    got = _margin_lp(D, base.points, cone.dim, alpha_min)
    if got is None:
        return None
    xstar, alpha, m = got
    if m <= t.eps_strict or float(np.max(np.abs(xstar))) <= t.eps_strict:
        return None
    pair = scalarizing_pair(xstar, alpha, psi)
    rep = aug_dual_membership(pair, cone, "ACirc", t, base=base, seed=seed,
                              interior_samples=interior_samples)
    return pair if rep.verdict in ("Holds", "HoldsOnSamples") else None
