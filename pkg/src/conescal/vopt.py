"""Finite vector optimization problems and their scalarization pipelines.

A problem is a finite list of labeled outcome vectors ordered by a cone K.
This module provides brute-force efficiency oracles (efficient, weakly
efficient, and two flavors of properly efficient points), enumeration
solvers for the scalar problems

    (P_phi^a)    phi(f(x) - a) -> min          over the labels,
    (P_phi^ak)   lambda -> min  s.t. phi(f(x) - a - lambda*k) <= 0,

and ``run_theorem_pipeline``, which checks the hypotheses of the main
scalarization results on a concrete instance, searches for the asserted
scalarizing pair, and re-verifies every conclusion independently (solution-set
identities, boundary conditions, efficiency inclusions, dilating-cone
containment).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .augdual import aug_dual_membership, find_sharp_pair
from .cone_core import (
    BaseSet,
    ConeRep,
    SeminormSpec,
    Tolerances,
    _tol,
    cone_membership,
    eval_seminorm_many,
    hull_S0,
    is_member,
    negate_cone,
    normlike_base,
    point,
    polytopes_disjoint,
    ray_union,
    sample_cone_points,
    sample_interior_points,
    solve_lp,
)
from .errors import (
    CoveringViolated,
    DegenerateDirection,
    HypothesisFailed,
    InteriorUnsupported,
    PreconditionViolated,
)
from .scalarizers import (
    GerstewitzSpec,
    ScalarizerSpec,
    ScalarizingPair,
    SeminormLinearSpec,
    eval_gerstewitz_many,
    eval_seminorm_linear,
    eval_seminorm_linear_many,
    induced_cone,
)
from .separation import (
    check_condition,
    dilating_inclusion_check,
    find_circ_separating_pair,
    find_separating_pair,
    separating_pair_from_bases,
)

__all__ = [
    "VOProblem",
    "vo_problem",
    "SolutionSet",
    "ScalarSolveResult",
    "AMAP_VARIANTS",
    "THEOREMS",
    "eff_set",
    "weff_set",
    "amap_cone",
    "peff_A_set",
    "peff_henig_check",
    "solve_P_phi_a",
    "solve_P_phi_ak",
    "eff_certificate_via_PS",
    "hyperplane_decompose",
    "PipelineReport",
    "run_theorem_pipeline",
]

AMAP_VARIANTS = ("RaysOfDifferences", "RaysOfDifferencesPlusK")
THEOREMS = ("WEff_Th", "PEff_Th", "Henig_Th1", "Henig_Th2")


@dataclass(frozen=True, eq=False)
class VOProblem:
    """A finite vector optimization instance: minimize f over the labels
    with respect to the cone order induced by K."""

    labels: tuple
    images: np.ndarray  # row i is f(labels[i])
    K: ConeRep
    psi: SeminormSpec
    tol: Tolerances


def vo_problem(
    labels,
    images,
    K: ConeRep,
    psi: Optional[SeminormSpec] = None,
    tol: Optional[Tolerances] = None,
) -> VOProblem:
    labs = tuple(labels)
    if len(labs) == 0:
        raise ValueError("a problem needs at least one label")
    if len(set(labs)) != len(labs):
        raise ValueError("labels must be unique")
    F = np.atleast_2d(np.asarray(images, dtype=float))
    if F.shape[0] != len(labs):
        raise ValueError(
            f"{len(labs)} labels but {F.shape[0]} images"
        )
    if F.shape[1] != K.dim:
        raise ValueError(
            f"images have dimension {F.shape[1]} but the cone lives in R^{K.dim}"
        )
    if not np.all(np.isfinite(F)):
        raise ValueError("images must be finite")
    return VOProblem(labs, F.copy(), K, psi or SeminormSpec("L2"), _tol(tol))


@dataclass(frozen=True, eq=False)
class SolutionSet:
    concept: str
    members: tuple
    certificates: dict = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class ScalarSolveResult:
    minimizers: tuple
    optimum: float
    per_label_values: tuple


def _index(p: VOProblem, xbar) -> int:
    try:
        return p.labels.index(xbar)
    except ValueError:
        raise ValueError(f"unknown label {xbar!r}") from None


def _with_cone(p: VOProblem, C: ConeRep) -> VOProblem:
    return VOProblem(p.labels, p.images, C, p.psi, p.tol)


# ---------------------------------------------------------------------------
# efficiency oracles
# ---------------------------------------------------------------------------

def _dominated_mask(p: VOProblem, strict: bool) -> np.ndarray:
    """mask[i] is True iff some other image improves on image i.

    Weak (strict=False): f(x) - f(xbar_i) in -K \\ {0};
    strict: f(x) - f(xbar_i) in -int K.  Thresholds mirror the pointwise
    membership classifier so the scan and per-point checks agree.
    """
    t = p.tol
    F = p.images
    m, n = F.shape
    K = p.K
    if strict and K.kind in ("Generated", "RayUnion"):
        raise InteriorUnsupported(
            f"interior classification is not available for {K.kind} cones"
        )
    out = np.zeros(m, dtype=bool)
    negK = negate_cone(K) if K.kind in ("Generated", "RayUnion") else None
    for i in range(m):
        D = F - F[i]
        norms = np.max(np.abs(D), axis=1) if n else np.zeros(m)
        nz = norms > t.eps_mem
        nz[i] = False
        if not np.any(nz) and not strict:
            continue
        sc = np.maximum(1.0, norms)
        if K.kind == "Orthant":
            mx = np.max(D, axis=1)
            hit = (mx < -t.eps_mem * sc) if strict else (mx <= t.eps_mem * sc)
        elif K.kind == "Halfspace":
            W = K.normals
            row_scale = np.maximum(1.0, np.max(np.abs(W), axis=1))
            mx = np.max((D @ W.T) / row_scale, axis=1)
            hit = (mx < -t.eps_mem * sc) if strict else (mx <= t.eps_mem * sc)
        elif K.kind == "BishopPhelps":
            psi_vals = eval_seminorm_many(K.psi, -D)
            margin = (-D) @ K.xstar - K.alpha * psi_vals
            sc = np.maximum(sc, psi_vals)
            hit = (margin > t.eps_mem * sc) if strict else (margin >= -t.eps_mem * sc)
        else:
            hit = np.zeros(m, dtype=bool)
            for j in range(m):
                if not nz[j]:
                    continue
                hit[j] = is_member(cone_membership(negK, D[j], t))
        out[i] = bool(np.any(hit & nz))
    return out


def eff_set(p: VOProblem) -> SolutionSet:
    """Labels whose image is not improved by any other image modulo K.

    xbar is efficient iff no x has f(x) - f(xbar) in -K \\ {0}; ties
    (duplicate images) do not disqualify each other.
    """
    dominated = _dominated_mask(p, strict=False)
    members = tuple(lab for lab, d in zip(p.labels, dominated) if not d)
    return SolutionSet("Eff", members)


def weff_set(p: VOProblem) -> SolutionSet:
    """Labels not strictly improved: no x with f(x) - f(xbar) in -int K."""
    dominated = _dominated_mask(p, strict=True)
    members = tuple(lab for lab, d in zip(p.labels, dominated) if not d)
    return SolutionSet("WEff", members)


def amap_cone(p: VOProblem, xbar, variant: str, k_samples: int = 8) -> ConeRep:
    """The cone of improvement directions at xbar, as a union of rays.

    RaysOfDifferences spans the nonzero image differences f(x) - f(xbar);
    RaysOfDifferencesPlusK additionally shifts every difference (and 0) by
    scaled cone-base samples -- a sampled under-approximation of the
    difference-plus-cone variant.
    """
    if variant not in AMAP_VARIANTS:
        raise ValueError(f"variant must be one of {AMAP_VARIANTS}, got {variant!r}")
    t = p.tol
    i = _index(p, xbar)
    D = p.images - p.images[i]
    norms = np.max(np.abs(D), axis=1)
    diffs = D[norms > t.eps_mem]
    if variant == "RaysOfDifferences":
        return ray_union(diffs, dim=p.K.dim)

    base = normlike_base(p.K, p.psi, t, seed=0).points
    if base.shape[0] > k_samples:
        pick = np.linspace(0, base.shape[0] - 1, k_samples).round().astype(int)
        base = base[np.unique(pick)]
    s = max(1.0, float(np.max(norms)) if norms.size else 1.0)
    gens: list[np.ndarray] = [d for d in diffs]
    roots = np.vstack([diffs, np.zeros((1, p.K.dim))])
    for d in roots:
        for c in (0.25 * s, 0.5 * s, s, 2.0 * s):
            for b in base:
                gens.append(d + c * b)
    uniq: dict = {}
    for g in gens:
        nrm = float(np.max(np.abs(g)))
        if nrm <= t.eps_mem:
            continue
        gn = g / nrm
        uniq.setdefault(tuple(np.round(gn, 9)), gn)
    return ray_union(np.array(list(uniq.values())), dim=p.K.dim)


def peff_A_set(p: VOProblem, variant: str = "RaysOfDifferences",
               k_samples: int = 8) -> SolutionSet:
    """Efficient labels whose improvement-direction rays avoid -K \\ {0}."""
    t = p.tol
    efficient = set(eff_set(p).members)
    negK = negate_cone(p.K)
    members = []
    for lab in p.labels:
        if lab not in efficient:
            continue
        A = amap_cone(p, lab, variant, k_samples)
        clean = True
        for g in A.generators:
            if float(np.max(np.abs(g))) <= t.eps_mem:
                continue
            if is_member(cone_membership(negK, g, t)):
                clean = False
                break
        if clean:
            members.append(lab)
    return SolutionSet(f"PEffA({variant})", tuple(members))


def peff_henig_check(
    p: VOProblem,
    xbar,
    alpha_min: float = 0.05,
    *,
    seed: int = 0,
) -> Optional[ScalarizingPair]:
    """Certify Henig proper efficiency of xbar through a dilating cone.

    Searches for a pair (xstar, alpha) whose induced cone C strictly
    contains K while the improvement rays at xbar avoid -C, then confirms
    that xbar stays efficient when the problem is re-ordered by C.  Returns
    the witnessing pair, or None when the search fails (certification is
    sufficient, not necessary).
    """
    t = p.tol
    A = amap_cone(p, xbar, "RaysOfDifferences")
    if A.generators.shape[0] == 0:
        pair = find_sharp_pair(p.K, p.psi, t, alpha_min=alpha_min, seed=seed)
    else:
        cert = find_separating_pair(
            A, p.K, p.psi, strict=True, alpha_min=alpha_min, tol=t, seed=seed
        )
        pair = cert.pair if cert is not None else None
    if pair is None:
        return None
    C = induced_cone(pair)
    if xbar in eff_set(_with_cone(p, C)).members:
        return pair
    return None


# ---------------------------------------------------------------------------
# scalar solvers
# ---------------------------------------------------------------------------

def _result_from_values(p: VOProblem, vals: np.ndarray) -> ScalarSolveResult:
    vals = np.atleast_1d(np.asarray(vals, dtype=float))
    finite = np.isfinite(vals)
    per = tuple(float(v) for v in vals)
    if not np.any(finite):
        return ScalarSolveResult((), math.inf, per)
    opt = float(np.min(vals[finite]))
    thr = p.tol.eps_opt * max(1.0, abs(opt))
    mins = tuple(
        lab for lab, v in zip(p.labels, vals)
        if math.isfinite(v) and v - opt <= thr
    )
    return ScalarSolveResult(mins, opt, per)


def solve_P_phi_a(p: VOProblem, phi: ScalarizerSpec, a) -> ScalarSolveResult:
    """Enumerate phi(f(x) - a) over the labels; minimizers within eps_opt."""
    av = point(a, p.K.dim)
    Y = p.images - av
    if isinstance(phi, SeminormLinearSpec):
        vals = eval_seminorm_linear_many(phi.pair, Y)
    elif isinstance(phi, GerstewitzSpec):
        vals = eval_gerstewitz_many(phi.cone, phi.a, phi.k, Y, p.tol)
    else:
        raise TypeError(f"not a scalarizer spec: {phi!r}")
    return _result_from_values(p, vals)


def solve_P_phi_ak(p: VOProblem, cone_C: ConeRep, a, k) -> ScalarSolveResult:
    """Per-label minimal translation step along k that reaches a - C.

    The value at x is the least lambda with f(x) - a - lambda*k in -C;
    labels with no finite translate report +inf (infeasible).
    """
    vals = eval_gerstewitz_many(cone_C, a, k, p.images, p.tol)
    return _result_from_values(p, vals)


def eff_certificate_via_PS(
    p: VOProblem,
    xbar,
    P,
    T,
    R,
) -> Optional[dict]:
    """Search P x T x R for a decomposition f(xbar) = a + s*k whose
    translation problem is solved exactly by the labels sharing f(xbar).

    T must lie in K but avoid its lineality space (checked).  Raises
    CoveringViolated when no decomposition matches f(xbar); returns None
    when decompositions exist but none verifies through the solver.
    """
    t = p.tol
    i = _index(p, xbar)
    if xbar not in eff_set(p).members:
        raise PreconditionViolated(f"{xbar!r} is not an efficient label")
    negK = negate_cone(p.K)
    T_pts = [point(tau, p.K.dim) for tau in T]
    for tau in T_pts:
        if not is_member(cone_membership(p.K, tau, t)):
            raise PreconditionViolated("every direction in T must lie in the cone")
        if is_member(cone_membership(negK, tau, t)):
            raise PreconditionViolated(
                "directions in T must avoid the lineality space of the cone"
            )
    fx = p.images[i]
    sc = max(1.0, float(np.max(np.abs(fx))))
    candidates = []
    for a in P:
        av = point(a, p.K.dim)
        for kv in T_pts:
            for s in R:
                if float(np.max(np.abs(fx - (av + float(s) * kv)))) <= t.eps_mem * sc:
                    candidates.append((av, kv, float(s)))
    if not candidates:
        raise CoveringViolated(
            f"f({xbar!r}) admits no decomposition a + s*k over the given sets"
        )
    same = {
        lab for lab, row in zip(p.labels, p.images)
        if float(np.max(np.abs(row - fx))) <= t.eps_mem * sc
    }
    for av, kv, s in candidates:
        try:
            res = solve_P_phi_ak(p, p.K, av, kv)
        except PreconditionViolated:
            continue
        if not math.isfinite(res.optimum):
            continue
        if set(res.minimizers) == same and abs(res.optimum - s) <= 1e-8 * max(1.0, abs(s)):
            return {"a": av, "k": kv, "s": s}
    return None


def hyperplane_decompose(ystar, a, k, y) -> dict:
    """Split y = p + t*k with p on the hyperplane {<ystar,.> = <ystar,a>}.

    Requires <ystar,k> > 0 (DegenerateDirection otherwise); then
    t = (<ystar,y> - <ystar,a>) / <ystar,k> and p = y - t*k.
    """
    ys = point(ystar)
    av = point(a, ys.size)
    kv = point(k, ys.size)
    yv = point(y, ys.size)
    den = float(ys @ kv)
    if den <= 0.0:
        raise DegenerateDirection(
            f"<ystar, k> = {den} must be positive to sweep the hyperplane"
        )
    tval = float(ys @ (yv - av)) / den
    return {"t": tval, "p": yv - tval * kv}


# ---------------------------------------------------------------------------
# theorem pipelines
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PipelineReport:
    which: str
    xbar: object
    hypothesis: dict
    pair: Optional[ScalarizingPair]
    conclusions: dict
    passed: bool
    details: dict = field(default_factory=dict)


def _unit_rows(psi: SeminormSpec, rows: np.ndarray) -> np.ndarray:
    if rows.shape[0] == 0:
        return rows
    s = eval_seminorm_many(psi, rows)
    keep = s > 1e-12
    return rows[keep] / s[keep][:, None]


def _dense_base_points(K: ConeRep, psi: SeminormSpec, t: Tolerances,
                       seed: int, extra: int = 96) -> tuple[np.ndarray, str]:
    """Base points of K enriched with normalized conic-combination samples.

    Generator bases can under-fill the base hull for non-additive seminorms,
    so hull-level tests (solidity, intersection) use this densified set."""
    b = normlike_base(K, psi, t, seed=seed)
    blocks = [b.points]
    more = _unit_rows(psi, sample_cone_points(K, psi, extra, seed=seed + 11, tol=t))
    if more.shape[0]:
        blocks.append(more)
    return np.vstack(blocks), b.exactness


def _hull_is_full_dim(V: np.ndarray, n: int) -> bool:
    if V.shape[0] < n + 1:
        return False
    C = V - V.mean(axis=0)
    s = np.linalg.svd(C, compute_uv=False)
    scale = max(1.0, float(s[0]) if s.size else 0.0)
    return int(np.sum(s > 1e-9 * scale)) >= n


def _meets_relative_interior(VA: np.ndarray, VK: np.ndarray,
                             t: Tolerances) -> Optional[np.ndarray]:
    """A point of conv({0} u VA) carried by an all-positive convex combination
    of VK, or None when the two stay apart.

    Solved as: maximize delta subject to VA^T lam = VK^T mu, sum lam <= 1,
    sum mu = 1, lam >= 0, mu_j >= delta.  Points with every mu_j positive are
    exactly the relative interior of conv(VK)."""
    na, nk = VA.shape[0], VK.shape[0]
    if nk == 0:
        return None
    n = VK.shape[1]
    nv = na + nk + 1
    A_eq = np.zeros((n + 1, nv))
    if na:
        A_eq[:n, :na] = VA.T
    A_eq[:n, na:na + nk] = -VK.T
    A_eq[n, na:na + nk] = 1.0
    b_eq = np.zeros(n + 1)
    b_eq[n] = 1.0
    rows = []
    if na:
        r = np.zeros(nv)
        r[:na] = 1.0
        rows.append((r, 1.0))
    for j in range(nk):
        r = np.zeros(nv)
        r[na + j] = -1.0
        r[na + nk] = 1.0
        rows.append((r, 0.0))
    A_ub = np.array([r for r, _ in rows])
    b_ub = np.array([v for _, v in rows])
    c = np.zeros(nv)
    c[na + nk] = -1.0
    bounds = [(0.0, None)] * (na + nk) + [(None, None)]
    res = solve_lp(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq, bounds=bounds)
    if res.status != "optimal":
        return None
    delta = float(res.x[na + nk])
    if delta <= t.eps_strict:
        return None
    mu = res.x[na:na + nk]
    return VK.T @ mu


def _same_image_labels(p: VOProblem, i: int) -> set:
    fx = p.images[i]
    sc = max(1.0, float(np.max(np.abs(p.images))))
    return {
        lab for lab, row in zip(p.labels, p.images)
        if float(np.max(np.abs(row - fx))) <= p.tol.eps_mem * sc
    }


def _identity_blocks(p: VOProblem, i: int, pair: ScalarizingPair,
                     exact_solution_set: bool, seed: int) -> dict:
    """Solution-set identities for the two scalar problems anchored at f(xbar).

    exact_solution_set=True demands argmin == {labels sharing f(xbar)}
    (efficiency-grade identity); False only requires xbar among the
    minimizers with optimum 0 (weak-efficiency grade).  Both include the
    boundary condition: optimal translates must land on the boundary of -C.
    """
    t = p.tol
    xbar = p.labels[i]
    fx = p.images[i]
    C = induced_cone(pair)
    sc = max(1.0, float(np.max(np.abs(p.images))))
    val_tol = 1e-8 * sc
    same = _same_image_labels(p, i)
    out: dict = {}

    res_a = solve_P_phi_a(p, SeminormLinearSpec(pair), fx)
    if exact_solution_set:
        ok_a = set(res_a.minimizers) == same and abs(res_a.optimum) <= val_tol
    else:
        ok_a = xbar in res_a.minimizers and abs(res_a.optimum) <= val_tol
    out["translated_scalarizer_argmin"] = "Holds" if ok_a else "Fails"

    ks = sample_interior_points(C, pair.psi, 5, seed=seed + 13, tol=t)
    trans_verdict = "HoldsOnSamples"
    boundary_verdict = "HoldsOnSamples"
    if ks.shape[0] == 0:
        out["translation_problem_solutions"] = "HoldsOnSamples"
        out["translation_boundary_touch"] = "HoldsOnSamples"
        return out
    pos = {lab: j for j, lab in enumerate(p.labels)}
    for k in ks:
        res = solve_P_phi_ak(p, C, fx, k)
        if exact_solution_set:
            ok = set(res.minimizers) == same and abs(res.optimum) <= val_tol
        else:
            ok = xbar in res.minimizers and abs(res.optimum) <= val_tol
        if not ok:
            trans_verdict = "Fails"
            break
        for lab in res.minimizers:
            j = pos[lab]
            lam = res.per_label_values[j]
            touch = p.images[j] - fx - lam * k
            if abs(eval_seminorm_linear(pair, touch)) > 1e-6 * sc:
                boundary_verdict = "Fails"
                break
        if boundary_verdict == "Fails":
            break
    out["translation_problem_solutions"] = trans_verdict
    out["translation_boundary_touch"] = boundary_verdict
    return out


def _run_weff(p: VOProblem, i: int, alpha_min: float, k_samples: int,
              seed: int) -> PipelineReport:
    t = p.tol
    xbar = p.labels[i]
    K, psi, n = p.K, p.psi, p.K.dim
    if K.kind in ("Generated", "RayUnion"):
        raise InteriorUnsupported(
            "the weak pipeline orders by the interior, which is not "
            f"classifiable for {K.kind} cones"
        )
    hypothesis: dict = {}
    details: dict = {}

    if sample_interior_points(K, psi, 4, seed=seed, tol=t).shape[0] == 0:
        raise HypothesisFailed("K_solid")
    hypothesis["K_solid"] = "HoldsOnSamples"

    A = amap_cone(p, xbar, "RaysOfDifferencesPlusK", k_samples)
    VK_dense, k_exact = _dense_base_points(K, psi, t, seed)
    VK = -VK_dense
    exact_pts = -normlike_base(K, psi, t, seed=seed).points
    if k_exact == "ExactVertices" and _hull_is_full_dim(exact_pts, n):
        hypothesis["S_minus_K_solid"] = "Holds"
    elif _hull_is_full_dim(VK, n):
        hypothesis["S_minus_K_solid"] = "HoldsOnSamples"
    else:
        raise HypothesisFailed("S_minus_K_solid")

    VA = normlike_base(A, psi, t, seed=seed + 1).points
    meet = _meets_relative_interior(VA, VK, t)
    if meet is not None:
        raise HypothesisFailed("S_A0_meets_int_S_minus_K", witness=meet)
    hypothesis["S_A0_disjoint_from_int_S_minus_K"] = "HoldsOnSamples"

    pair = None
    aug_verdict = "Fails"
    cert = find_separating_pair(A, K, psi, strict=False,
                                alpha_min=alpha_min, tol=t, seed=seed)
    if cert is not None:
        rep = aug_dual_membership(cert.pair, K, "ACirc", t, seed=seed)
        if rep.verdict != "Fails":
            pair, aug_verdict = cert.pair, rep.verdict
            details["certificate"] = cert
    if pair is None:
        cert = find_circ_separating_pair(A, K, psi, alpha_min=alpha_min,
                                         tol=t, seed=seed)
        if cert is not None:
            rep = aug_dual_membership(cert.pair, K, "ACirc", t, seed=seed)
            if rep.verdict != "Fails":
                pair, aug_verdict = cert.pair, rep.verdict
                details["certificate"] = cert
    if pair is None:
        return PipelineReport("WEff_Th", xbar, hypothesis, None,
                              {"pair_found": "Fails"}, False, details)

    conclusions = {"pair_found": "Holds", "pair_in_circ_class": aug_verdict}
    C = induced_cone(pair)
    q = _with_cone(p, C)
    conclusions["xbar_weakly_efficient_under_pair_cone"] = (
        "Holds" if xbar in weff_set(q).members else "Fails"
    )
    conclusions.update(_identity_blocks(p, i, pair, False, seed))
    passed = all(v != "Fails" for v in conclusions.values())
    return PipelineReport("WEff_Th", xbar, hypothesis, pair, conclusions,
                          passed, details)


def _strict_pair_conclusions(p: VOProblem, i: int, pair: ScalarizingPair,
                             exact_solution_set: bool, seed: int) -> dict:
    t = p.tol
    xbar = p.labels[i]
    conclusions: dict = {"pair_found": "Holds"}
    rep = aug_dual_membership(pair, p.K, "ASharp", t, seed=seed)
    conclusions["pair_in_sharp_class"] = rep.verdict
    conclusions["alpha_positive"] = "Holds" if pair.alpha > 0 else "Fails"
    C = induced_cone(pair)
    q = _with_cone(p, C)
    eff_C = eff_set(q).members
    if exact_solution_set:
        conclusions["xbar_efficient_under_pair_cone"] = (
            "Holds" if xbar in eff_C else "Fails"
        )
    else:
        conclusions["xbar_weakly_efficient_under_pair_cone"] = (
            "Holds" if xbar in weff_set(q).members else "Fails"
        )
    conclusions.update(_identity_blocks(p, i, pair, exact_solution_set, seed))
    eff_K = set(eff_set(p).members)
    conclusions["efficiency_under_pair_cone_implies_K"] = (
        "Holds" if set(eff_C) <= eff_K else "Fails"
    )
    return conclusions


def _run_peff(p: VOProblem, i: int, alpha_min: float, seed: int) -> PipelineReport:
    t = p.tol
    xbar = p.labels[i]
    K, psi = p.K, p.psi
    hypothesis: dict = {}
    details: dict = {}

    A = amap_cone(p, xbar, "RaysOfDifferences")
    rep4 = check_condition("Cond4", A, K, psi, t, seed=seed)
    if not rep4.holds:
        raise HypothesisFailed("Cond4", witness=rep4.witness)
    hypothesis["Cond4"] = rep4.verdict
    hypothesis["compact_hulls"] = "Holds"

    if A.generators.shape[0] == 0:
        pair = find_sharp_pair(K, psi, t, alpha_min=alpha_min, seed=seed)
    else:
        cert = find_separating_pair(A, K, psi, strict=True,
                                    alpha_min=alpha_min, tol=t, seed=seed)
        pair = cert.pair if cert is not None else None
        if cert is not None:
            details["certificate"] = cert
    if pair is None:
        return PipelineReport("PEff_Th", xbar, hypothesis, None,
                              {"pair_found": "Fails"}, False, details)

    conclusions = _strict_pair_conclusions(p, i, pair, True, seed)
    passed = all(v != "Fails" for v in conclusions.values())
    return PipelineReport("PEff_Th", xbar, hypothesis, pair, conclusions,
                          passed, details)


def _sample_outside_neg_interior(pair_D: ScalarizingPair, psi: SeminormSpec,
                                 K: ConeRep, t: Tolerances, seed: int,
                                 count: int = 96) -> np.ndarray:
    """Seminorm-normalized directions outside -int D for D the pair's cone.

    d avoids -int D iff <xstar_D, d> + alpha_D * psi(d) >= 0.  The sample
    mixes sphere directions with the cone base of K (which such a complement
    always contains for a dilating D)."""
    n = K.dim
    rng = np.random.default_rng(seed + 17)
    cand = rng.standard_normal((40 * count, n))
    cand = np.vstack([cand, np.eye(n), -np.eye(n),
                      normlike_base(K, psi, t, seed=seed).points])
    cand = _unit_rows(psi, cand)
    lin = cand @ pair_D.xstar + pair_D.alpha
    keep = cand[lin >= 0.0]
    if keep.shape[0] > count:
        sel = np.linspace(0, keep.shape[0] - 1, count).round().astype(int)
        keep = keep[np.unique(sel)]
    return keep


def _run_henig(p: VOProblem, i: int, which: str, alpha_min: float,
               seed: int) -> PipelineReport:
    t = p.tol
    xbar = p.labels[i]
    K, psi = p.K, p.psi
    hypothesis: dict = {}
    details: dict = {}

    pair_D = find_sharp_pair(K, psi, t, alpha_min=max(alpha_min, 0.05), seed=seed)
    if pair_D is None:
        raise HypothesisFailed("dilating_cone_search")
    D = induced_cone(pair_D)
    details["dilating_pair"] = pair_D
    hypothesis["dilating_cone"] = aug_dual_membership(
        pair_D, K, "ASharp", t, seed=seed
    ).verdict

    qD = _with_cone(p, D)
    if which == "Henig_Th1":
        cond = "xbar_efficient_for_dilating_cone"
        ok = xbar in eff_set(qD).members
    else:
        cond = "xbar_weakly_efficient_for_dilating_cone"
        ok = xbar in weff_set(qD).members
    if not ok:
        raise HypothesisFailed(cond)
    hypothesis[cond] = "Holds"

    B_dbar = _sample_outside_neg_interior(pair_D, psi, K, t, seed)
    base_dbar = BaseSet(B_dbar, "Sampled", psi)
    base_K = normlike_base(K, psi, t, seed=seed)
    neg_base = BaseSet(-base_K.points, base_K.exactness, psi)
    PA = hull_S0(base_dbar, include_zero=True)
    PK = hull_S0(neg_base, include_zero=False)
    disjoint, info = polytopes_disjoint(PA, PK, t)
    if not disjoint:
        raise HypothesisFailed("Cond4_complement_of_dilating_interior",
                               witness=info.get("point"))
    hypothesis["Cond4_complement_of_dilating_interior"] = "HoldsOnSamples"

    cert = separating_pair_from_bases(base_dbar, base_K, K, strict=True,
                                      alpha_min=alpha_min, tol=t, seed=seed)
    if cert is None:
        return PipelineReport(which, xbar, hypothesis, None,
                              {"pair_found": "Fails"}, False, details)
    details["certificate"] = cert
    pair = cert.pair

    conclusions = _strict_pair_conclusions(p, i, pair, which == "Henig_Th1", seed)
    dil = dilating_inclusion_check(pair, D, tol=t, seed=seed)
    conclusions["strict_cone_inside_dilating_cone"] = dil.verdict
    passed = all(v != "Fails" for v in conclusions.values())
    return PipelineReport(which, xbar, hypothesis, pair, conclusions,
                          passed, details)


def run_theorem_pipeline(
    p: VOProblem,
    which: str,
    xbar,
    *,
    alpha_min: float = 0.05,
    k_samples: int = 8,
    seed: int = 0,
) -> PipelineReport:
    """Check a scalarization result end to end on a concrete instance.

    WEff_Th: hypothesis = solid base hull of -K and the zero-anchored hull
    of the improvement rays (difference-plus-cone variant) missing its
    interior; conclusion = a circ-class pair whose cone keeps xbar weakly
    efficient, with the translated-scalarizer and translation-problem
    identities at optimum zero.

    PEff_Th: hypothesis = disjoint base hulls (Cond4) for the
    rays-of-differences variant; conclusion = a sharp-class pair with
    positive alpha keeping xbar efficient, exact solution-set identities,
    and efficiency under the pair cone implying efficiency under K.

    Henig_Th1/Henig_Th2: hypothesis = a dilating cone D with xbar
    (weakly, for Th2) efficient under D and the complement of -int D
    separable from -K; conclusions as in PEff_Th (Th1) or the weak
    identities (Th2), plus the strict cone of the found pair landing in
    the interior of D.

    Raises HypothesisFailed naming the failing condition; reports carry
    every conclusion verdict separately.
    """
    if which not in THEOREMS:
        raise ValueError(f"which must be one of {THEOREMS}, got {which!r}")
    i = _index(p, xbar)
    if which == "WEff_Th":
        return _run_weff(p, i, alpha_min, k_samples, seed)
    if which == "PEff_Th":
        return _run_peff(p, i, alpha_min, seed)
    return _run_henig(p, i, which, alpha_min, seed)
