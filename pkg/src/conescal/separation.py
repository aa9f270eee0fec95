"""Nonlinear cone separation: condition checkers and certificates.

Given two cones A and K (to be separated from -K) and a seminorm psi, the
checkers here decide the hull conditions

* Cond4: conv({0} u B_A) and conv(B_{-K}) are disjoint,
* Cond5: A meets cl(conv(-K)) only at 0,
* Cond6: 0 is not in conv(B_{-K}),
* Cond9: conv(B_{-K}) equals the seminorm-ball slice {psi <= 1, <xstar,.> >= alpha},

where B_M denotes a psi-normalized base of the cone M.  ``find_separating_pair``
searches for a pair (xstar, alpha) whose cone C = {y : <xstar,y> >= alpha*psi(y)}
contains K (strictly inside for strict certificates) while A meets -C only at
the origin; certificates carry margins and independently re-checkable
conclusions, which ``verify_certificate`` re-tests on fresh samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .cone_core import (
    BaseSet,
    ConeRep,
    SeminormSpec,
    Tolerances,
    _tol,
    cone_membership,
    eval_seminorm,
    eval_seminorm_many,
    generated,
    hull_S0,
    is_member,
    margins_many,
    negate_cone,
    normlike_base,
    polytope_contains_point,
    polytope_contains_zero,
    polytopes_disjoint,
    sample_cone_points,
    sample_interior_points,
    solve_lp,
)
from .scalarizers import ScalarizingPair, induced_cone, scalarizing_pair

__all__ = [
    "CONDITIONS",
    "ConditionReport",
    "check_condition",
    "check_condition_9",
    "SeparationCertificate",
    "find_separating_pair",
    "separating_pair_from_bases",
    "find_circ_separating_pair",
    "VerificationRecord",
    "verify_certificate",
    "dilating_inclusion_check",
]

CONDITIONS = ("Cond4", "Cond5", "Cond6")


@dataclass
class ConditionReport:
    cond: str
    verdict: str  # "Holds" | "HoldsOnSamples" | "Fails"
    witness: Optional[np.ndarray]
    exactness: str  # "Exact" | "Sampled"
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.verdict != "Fails"


def _conv_cone_of_neg(K: ConeRep) -> ConeRep:
    """A representation of cl(conv(-K)); only RayUnion needs an actual hull."""
    if K.kind == "RayUnion":
        return generated(-K.generators)
    return negate_cone(K)


def _neg_base(K: ConeRep, psi: SeminormSpec, t: Tolerances, seed: int) -> BaseSet:
    """A psi-normalized base of -K, as the negation of a base of K.

    The catalog seminorms are symmetric, so negating a base of K gives a
    base of -K with the same exactness (finitely generated cones keep their
    exact vertices, which negate_cone's halfspace form would lose)."""
    b = normlike_base(K, psi, t, seed=seed)
    return BaseSet(-b.points, b.exactness, b.seminorm)


def _generator_matrix(A: ConeRep) -> Optional[np.ndarray]:
    """Generators of the convex cone A as rows, or None when A has no
    finite generator representation (halfspace intersections, nonlinear
    cones)."""
    if A.kind == "Orthant":
        return np.eye(A.dim)
    if A.kind == "Generated":
        return np.asarray(A.generators, dtype=float)
    return None


def _conic_intersection_witness(G: np.ndarray, M: ConeRep) -> Optional[np.ndarray]:
    """A nonzero point of cone(G) ∩ M for polyhedral M, or None if the
    intersection is {0}.

    Both sets are closed under positive scaling, so the intersection is
    nontrivial iff it contains a point z with <c, z> = 1 for some
    c in {±e_1, ..., ±e_n} (scale any nonzero z by the reciprocal of its
    largest-magnitude coordinate).  Each normalization is one small
    feasibility LP over the conic weights; every one infeasible decides
    the trivial intersection exactly, which pointwise probing of the
    generators cannot (the cones can meet through a face that contains no
    generator of either)."""
    n = G.shape[1]
    a = G.shape[0]
    if a == 0:
        return None
    for j in range(n):
        for sgn in (1.0, -1.0):
            norm_row = sgn * G[:, j]
            if M.kind == "Generated":
                H = np.asarray(M.generators, dtype=float)
                h = H.shape[0]
                if h == 0:
                    return None
                A_eq = np.vstack([
                    np.hstack([G.T, -H.T]),
                    np.concatenate([norm_row, np.zeros(h)]),
                ])
                b_eq = np.concatenate([np.zeros(n), [1.0]])
                res = solve_lp(np.zeros(a + h), A_eq=A_eq, b_eq=b_eq)
                if res.status == "optimal":
                    return G.T @ res.x[:a]
            elif M.kind == "Halfspace":
                W = np.asarray(M.normals, dtype=float)
                res = solve_lp(
                    np.zeros(a),
                    A_ub=-(W @ G.T),
                    b_ub=np.zeros(W.shape[0]),
                    A_eq=norm_row[None, :],
                    b_eq=np.array([1.0]),
                )
                if res.status == "optimal":
                    return G.T @ res.x
            else:
                raise ValueError(f"no polyhedral intersection for kind {M.kind!r}")
    return None


def check_condition(
    cond: str,
    A: Optional[ConeRep],
    K: ConeRep,
    psi: SeminormSpec,
    tol: Optional[Tolerances] = None,
    *,
    seed: int = 0,
) -> ConditionReport:
    """Check one of the hull separation conditions for the pair (A, K).

    Cond6 ignores A (pass None).  Verdicts are exact ("Holds"/"Fails") when
    the bases involved have exact vertices, otherwise "HoldsOnSamples".
    """
    t = _tol(tol)
    if cond not in CONDITIONS:
        raise ValueError(f"cond must be one of {CONDITIONS}, got {cond!r}")
    base_negK = _neg_base(K, psi, t, seed)

    if cond == "Cond6":
        P = hull_S0(base_negK, include_zero=False)
        exact = "Exact" if base_negK.exactness == "ExactVertices" else "Sampled"
        if P.vertices.shape[0] == 0:
            return ConditionReport(cond, "Holds" if exact == "Exact" else "HoldsOnSamples",
                                   None, exact, "empty base")
        if polytope_contains_zero(P, t):
            return ConditionReport(cond, "Fails", np.zeros(K.dim), exact)
        verdict = "Holds" if exact == "Exact" else "HoldsOnSamples"
        return ConditionReport(cond, verdict, None, exact)

    if A is None:
        raise ValueError(f"{cond} needs the cone A")
    base_A = normlike_base(A, psi, t, seed=seed + 1)
    both_exact = (
        base_A.exactness == "ExactVertices" and base_negK.exactness == "ExactVertices"
    )
    exact = "Exact" if both_exact else "Sampled"

    if cond == "Cond4":
        PA = hull_S0(base_A, include_zero=True)
        PK = hull_S0(base_negK, include_zero=False)
        if PK.vertices.shape[0] == 0:
            return ConditionReport(cond, "Holds" if both_exact else "HoldsOnSamples",
                                   None, exact, "empty -K base")
        disjoint, info = polytopes_disjoint(PA, PK, t)
        if disjoint:
            verdict = "Holds" if both_exact else "HoldsOnSamples"
            return ConditionReport(cond, verdict, None, exact)
        return ConditionReport(cond, "Fails", info.get("point"), exact)

    # Cond5: the nonzero part of A must avoid cl(conv(-K)).  Base points
    # (the generators, for generator representations) are probed first for
    # cheap witnesses; a union of rays is decided entirely by that probe,
    # since membership of a generator settles its whole ray.
    M = _conv_cone_of_neg(K)
    for p in base_A.points:
        if float(np.max(np.abs(p))) <= 1e-12:
            continue
        if is_member(cone_membership(M, p, t)):
            return ConditionReport(cond, "Fails", p, exact)
    if A.kind == "RayUnion":
        verdict = "Holds" if both_exact else "HoldsOnSamples"
        return ConditionReport(cond, verdict, None, exact)
    # Convex A can meet cl(conv(-K)) through a face that contains no
    # generator of either cone, so the generator probe alone cannot certify
    # a Holds; with finite generators on one side and a polyhedral hull on
    # the other, the trivial-intersection question is a small family of
    # feasibility LPs and the verdict is exact.
    GA = _generator_matrix(A)
    if GA is not None and M.kind in ("Generated", "Halfspace"):
        z = _conic_intersection_witness(GA, M)
        if z is not None:
            return ConditionReport(cond, "Fails", z, "Exact")
        return ConditionReport(cond, "Holds", None, "Exact")
    # Nonpolyhedral representation on at least one side: random conic
    # combinations can refute but never certify, whatever the bases' quality.
    combos = sample_cone_points(A, psi, 64, seed=seed + 2, tol=t)
    for p in combos:
        if float(np.max(np.abs(p))) <= 1e-12:
            continue
        if is_member(cone_membership(M, p, t)):
            return ConditionReport(cond, "Fails", p, exact)
    return ConditionReport(cond, "HoldsOnSamples", None, "Sampled")


def check_condition_9(
    K: ConeRep,
    psi: SeminormSpec,
    pair: ScalarizingPair,
    samples: int = 256,
    tol: Optional[Tolerances] = None,
    *,
    seed: int = 0,
) -> ConditionReport:
    """Bidirectional sampled test of conv(B_{-K}) = {x : psi(x) <= 1, <xstar,x> >= alpha}.

    Hull samples must land in the slice, and slice samples must be within
    Chebyshev reach of the hull (a looser slack for sampled bases, whose
    hulls underestimate curved true hulls).
    """
    t = _tol(tol)
    base = _neg_base(K, psi, t, seed)
    B = base.points
    n = K.dim
    exact = "Exact" if base.exactness == "ExactVertices" else "Sampled"
    if B.shape[0] == 0:
        return ConditionReport("Cond9", "Fails", None, exact,
                               "empty base; slice nonempty iff alpha <= gauge")
    rng = np.random.default_rng(seed + 3)

    # hull samples -> slice
    W = rng.dirichlet(np.ones(B.shape[0]), size=min(samples, 256))
    hull_pts = np.vstack([B, W @ B])
    psi_vals = eval_seminorm_many(psi, hull_pts)
    lin_vals = hull_pts @ pair.xstar
    sc = max(1.0, float(np.max(np.abs(pair.xstar))), pair.alpha)
    slack_in = 1e-9 * sc if exact == "Exact" else 1e-6 * sc
    for i in range(hull_pts.shape[0]):
        if psi_vals[i] > 1.0 + 1e-9 or lin_vals[i] < pair.alpha - slack_in:
            return ConditionReport("Cond9", "Fails", hull_pts[i], exact,
                                   "hull point escapes the slice")

    # slice samples -> hull: a deterministic grid over the unit box (it hits
    # measure-zero slices whose faces pass through dyadic points exactly)
    # plus random box points, filtered by psi(x) <= 1 and <xstar,x> >= alpha
    if n <= 3:
        axis = np.linspace(-1.0, 1.0, 17 if n == 3 else 41)
        mesh = np.meshgrid(*([axis] * n), indexing="ij")
        cand = np.stack([m.ravel() for m in mesh], axis=1)
    else:
        cand = np.zeros((0, n))
    cand = np.vstack([cand, rng.uniform(-1.5, 1.5, size=(50 * samples, n))])
    psi_c = eval_seminorm_many(psi, cand)
    lin_c = cand @ pair.xstar
    in_slice = (psi_c <= 1.0) & (lin_c >= pair.alpha)
    slice_pts = cand[in_slice]
    if slice_pts.shape[0] > samples:
        idx = rng.permutation(slice_pts.shape[0])[:samples]
        slice_pts = slice_pts[idx]
    P = hull_S0(base, include_zero=False)
    slack_out = 1e-3 * max(1.0, float(np.max(np.abs(B)))) if exact == "Sampled" else 1e-6
    for x in slice_pts:
        inside, _dist = polytope_contains_point(P, x, slack_out)
        if not inside:
            return ConditionReport("Cond9", "Fails", x, exact,
                                   "slice point outside the hull")
    found = int(slice_pts.shape[0])
    note = f"{found} slice samples" if found else "slice empty on samples"
    return ConditionReport("Cond9", "HoldsOnSamples", None, exact, note)


# ---------------------------------------------------------------------------
# separating pairs
# ---------------------------------------------------------------------------

@dataclass
class SeparationCertificate:
    pair: ScalarizingPair
    strict: bool
    margin_K: float
    margin_A: float
    conclusions: dict = field(default_factory=dict)
    exactness: str = "Sampled"


def _separation_lp(
    K_rows: np.ndarray,
    A_rows: np.ndarray,
    n: int,
    alpha_min: float,
    strict: bool,
    K_nonneg_rows: Optional[np.ndarray] = None,
) -> Optional[tuple[np.ndarray, float, float]]:
    """Maximize m over (xstar, alpha >= alpha_min, m, s) subject to
    |xstar_i| <= s,  s + alpha <= 1,  m <= 1,
    <b, xstar> - alpha >= m          for b among K_rows,
    <b, xstar> - alpha >= 0          for b among K_nonneg_rows,
    <a, xstar> + alpha >= m (strict) or >= 0 (weak)   for a among A_rows."""
    nv = n + 3
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
    for row in K_rows:
        r = np.zeros(nv); r[:n] = -row; r[n] = 1.0; r[n + 1] = 1.0
        A.append(r); b.append(0.0)
    if K_nonneg_rows is not None:
        for row in K_nonneg_rows:
            r = np.zeros(nv); r[:n] = -row; r[n] = 1.0
            A.append(r); b.append(0.0)
    for row in A_rows:
        r = np.zeros(nv); r[:n] = -row; r[n] = -1.0
        if strict:
            r[n + 1] = 1.0
        A.append(r); b.append(0.0)
    c = np.zeros(nv); c[n + 1] = -1.0
    bounds = [(None, None)] * n + [(alpha_min, None), (None, None), (0.0, None)]
    res = solve_lp(c, A_ub=np.array(A), b_ub=np.array(b), bounds=bounds)
    if res.status != "optimal":
        return None
    x = res.x
    return x[:n].copy(), float(x[n]), float(x[n + 1])


def _conclusion_verdicts(
    pair: ScalarizingPair,
    K: ConeRep,
    strict: bool,
    base_A: Optional[BaseSet],
    base_K: BaseSet,
    t: Tolerances,
    seed: int,
) -> tuple[dict, Optional[np.ndarray]]:
    """Re-check the separation conclusions via cone memberships.

    strict: K base points Interior in C and A base points Outside -C;
    weak:   K base points Member of C and A base points not Interior in -C;
    plus sampled interior points of K landing Interior in C.
    Returns (verdicts, witness-of-first-failure).
    """
    C = induced_cone(pair)
    negC = negate_cone(C)
    verdicts = {"K_in_C": "Holds", "A_meets_minus_C_only_at_0": "Holds",
                "interior_inclusions": "HoldsOnSamples"}
    if base_K.exactness != "ExactVertices":
        verdicts["K_in_C"] = "HoldsOnSamples"
    if base_A is not None and base_A.exactness != "ExactVertices":
        verdicts["A_meets_minus_C_only_at_0"] = "HoldsOnSamples"
    witness = None

    for bpt in base_K.points:
        status = cone_membership(C, bpt, t, need_interior=strict)
        ok = status == "Interior" if strict else is_member(status)
        if not ok:
            verdicts["K_in_C"] = "Fails"
            witness = witness if witness is not None else bpt
    if base_A is not None:
        for apt in base_A.points:
            status = cone_membership(negC, apt, t, need_interior=not strict)
            bad = is_member(status) if strict else status == "Interior"
            if bad:
                verdicts["A_meets_minus_C_only_at_0"] = "Fails"
                witness = witness if witness is not None else apt
    psi_s = K.psi if K.kind == "BishopPhelps" else SeminormSpec("L2")
    D = sample_interior_points(K, psi_s, 32, seed=seed + 5, tol=t)
    if D.shape[0] == 0:
        verdicts["interior_inclusions"] = "HoldsOnSamples"
    else:
        for d in D:
            if cone_membership(C, d, t, need_interior=True) != "Interior":
                verdicts["interior_inclusions"] = "Fails"
                witness = witness if witness is not None else d
                break
    return verdicts, witness


def separating_pair_from_bases(
    base_A: BaseSet,
    base_K: BaseSet,
    K: ConeRep,
    strict: bool = True,
    alpha_min: float = 0.05,
    tol: Optional[Tolerances] = None,
    *,
    seed: int = 0,
) -> Optional[SeparationCertificate]:
    """Pair search over explicit psi-normalized bases of A and K.

    This is the core of ``find_separating_pair``, exposed for callers that
    construct the A-side base themselves (for instance the sampled base of
    the complement of a dilating cone, which has no ConeRep).  Conclusions
    are re-verified against the supplied base points plus sampled interior
    points of K.
    """
    t = _tol(tol)
    if not (math.isfinite(alpha_min) and alpha_min >= 0):
        raise ValueError("alpha_min must be a finite real >= 0")
    psi = base_K.seminorm
    got = _separation_lp(base_K.points, base_A.points, K.dim, alpha_min, strict)
    if got is None:
        return None
    xstar, alpha, m = got
    if strict and m <= t.eps_strict:
        return None
    if not strict and m < -t.eps_mem:
        return None
    pair = scalarizing_pair(xstar, alpha, psi)
    margin_K = float(np.min(margins_many(psi, base_K.points, xstar, alpha, -1.0))) \
        if base_K.points.shape[0] else math.inf
    margin_A = float(np.min(margins_many(psi, base_A.points, xstar, alpha, 1.0))) \
        if base_A.points.shape[0] else math.inf
    verdicts, _w = _conclusion_verdicts(pair, K, strict, base_A, base_K, t, seed)
    if any(v == "Fails" for v in verdicts.values()):
        return None
    both_exact = (
        base_K.exactness == "ExactVertices" and base_A.exactness == "ExactVertices"
    )
    return SeparationCertificate(
        pair=pair,
        strict=strict,
        margin_K=margin_K,
        margin_A=margin_A,
        conclusions=verdicts,
        exactness="Exact" if both_exact else "Sampled",
    )


def find_separating_pair(
    A: ConeRep,
    K: ConeRep,
    psi: SeminormSpec,
    strict: bool = True,
    alpha_min: float = 0.05,
    tol: Optional[Tolerances] = None,
    *,
    seed: int = 0,
) -> Optional[SeparationCertificate]:
    """Search for a pair separating A from -K by maximizing the K-side margin.

    The LP maximizes m subject to <xstar,b> - alpha >= m on the K base,
    <xstar,a> + alpha >= m (strict) / >= 0 (weak) on the A base, alpha >=
    alpha_min and the normalization |xstar|_inf + alpha <= 1.  A certificate
    is returned only when the margin clears the threshold and every
    conclusion re-verifies through cone memberships.
    """
    t = _tol(tol)
    base_K = normlike_base(K, psi, t, seed=seed)
    base_A = normlike_base(A, psi, t, seed=seed + 1)
    return separating_pair_from_bases(
        base_A, base_K, K, strict, alpha_min, t, seed=seed
    )


def find_circ_separating_pair(
    A: ConeRep,
    K: ConeRep,
    psi: SeminormSpec,
    alpha_min: float = 0.05,
    tol: Optional[Tolerances] = None,
    *,
    seed: int = 0,
    interior_samples: int = 64,
) -> Optional[SeparationCertificate]:
    """Weak-separation variant that pushes the margin onto the interior of K.

    Maximizes m subject to <xstar,d> - alpha >= m over psi-normalized sampled
    interior directions d of K, <xstar,b> - alpha >= 0 over the K base, and
    <xstar,a> + alpha >= 0 over the A base.  A positive optimal margin makes
    the pair a candidate member of the strictly-on-the-interior augmented
    dual class even when the base margin itself is zero (K touching the
    boundary of the induced cone).  Returns a weak certificate, or None when
    the interior sample is empty or the margin stays at zero.
    """
    t = _tol(tol)
    if not (math.isfinite(alpha_min) and alpha_min >= 0):
        raise ValueError("alpha_min must be a finite real >= 0")
    base_K = normlike_base(K, psi, t, seed=seed)
    base_A = normlike_base(A, psi, t, seed=seed + 1)
    dirs = sample_interior_points(K, psi, interior_samples, seed=seed + 7, tol=t)
    if dirs.shape[0] == 0:
        return None
    s = eval_seminorm_many(psi, dirs)
    keep = s > 1e-12
    if not np.any(keep):
        return None
    dirs = dirs[keep] / s[keep][:, None]
    got = _separation_lp(
        dirs, base_A.points, K.dim, alpha_min, strict=False,
        K_nonneg_rows=base_K.points,
    )
    if got is None:
        return None
    xstar, alpha, m = got
    if m <= t.eps_strict:
        return None
    pair = scalarizing_pair(xstar, alpha, psi)
    margin_K = float(np.min(margins_many(psi, base_K.points, xstar, alpha, -1.0))) \
        if base_K.points.shape[0] else math.inf
    margin_A = float(np.min(margins_many(psi, base_A.points, xstar, alpha, 1.0))) \
        if base_A.points.shape[0] else math.inf
    verdicts, _w = _conclusion_verdicts(pair, K, False, base_A, base_K, t, seed)
    if any(v == "Fails" for v in verdicts.values()):
        return None
    return SeparationCertificate(
        pair=pair,
        strict=False,
        margin_K=margin_K,
        margin_A=margin_A,
        conclusions=verdicts,
        exactness="Sampled",
    )


@dataclass
class VerificationRecord:
    conclusions: dict
    passed: bool
    witness: Optional[np.ndarray]


def verify_certificate(
    cert: SeparationCertificate,
    A: ConeRep,
    K: ConeRep,
    samples: int = 256,
    tol: Optional[Tolerances] = None,
    *,
    seed: int = 1,
) -> VerificationRecord:
    """Re-test a certificate's conclusions on fresh samples.

    Draws new conic combinations from K and A (normalized to unit seminorm
    level), re-checks the membership conclusions and the margin conventions
    (strict requires positive margins); any failure flips the record to
    not-passed with a witness.
    """
    t = _tol(tol)
    pair = cert.pair
    psi = pair.psi
    C = induced_cone(pair)
    negC = negate_cone(C)
    conclusions = dict(cert.conclusions)
    witness = None
    ok = True

    if cert.strict and not (cert.margin_K > t.eps_strict and cert.margin_A > t.eps_strict):
        conclusions["margin_convention"] = "Fails"
        return VerificationRecord(conclusions, False, None)
    conclusions["margin_convention"] = "Holds"

    def _unit(rows: np.ndarray) -> np.ndarray:
        if rows.shape[0] == 0:
            return rows
        s = eval_seminorm_many(psi, rows)
        keep = s > 1e-12
        return rows[keep] / s[keep][:, None]

    K_pts = _unit(sample_cone_points(K, psi, samples, seed=seed, tol=t))
    A_pts = _unit(sample_cone_points(A, psi, samples, seed=seed + 1, tol=t))
    for bpt in K_pts:
        status = cone_membership(C, bpt, t, need_interior=cert.strict)
        good = status == "Interior" if cert.strict else is_member(status)
        if not good:
            conclusions["K_in_C"] = "Fails"
            witness = bpt if witness is None else witness
            ok = False
            break
    for apt in A_pts:
        status = cone_membership(negC, apt, t, need_interior=not cert.strict)
        bad = is_member(status) if cert.strict else status == "Interior"
        if bad:
            conclusions["A_meets_minus_C_only_at_0"] = "Fails"
            witness = apt if witness is None else witness
            ok = False
            break
    psi_s = K.psi if K.kind == "BishopPhelps" else SeminormSpec("L2")
    D = sample_interior_points(K, psi_s, min(64, samples), seed=seed + 2, tol=t)
    for d in D:
        if cone_membership(C, d, t, need_interior=True) != "Interior":
            conclusions["interior_inclusions"] = "Fails"
            witness = d if witness is None else witness
            ok = False
            break
    return VerificationRecord(conclusions, ok, witness)


def dilating_inclusion_check(
    pair: ScalarizingPair,
    D: ConeRep,
    samples: int = 256,
    tol: Optional[Tolerances] = None,
    *,
    seed: int = 0,
) -> ConditionReport:
    """Are the strict-cone points of the pair Interior in D?

    Rejection-samples y with <xstar,y> > alpha*psi(y) from a centered box and
    classifies each against D; "HoldsOnSamples" or "Fails" with a witness.
    """
    t = _tol(tol)
    n = pair.xstar.size
    rng = np.random.default_rng(seed)
    sc = max(1.0, float(np.max(np.abs(pair.xstar))), pair.alpha)
    found = 0
    for _ in range(200 * samples):
        if found >= samples:
            break
        y = rng.uniform(-1.0, 1.0, size=n)
        y_sc = max(1.0, float(np.max(np.abs(y))))
        margin = float(pair.xstar @ y) - pair.alpha * eval_seminorm(pair.psi, y)
        if margin <= t.eps_strict * sc * y_sc:
            continue
        found += 1
        if cone_membership(D, y, t, need_interior=True) != "Interior":
            return ConditionReport("DilatingInclusion", "Fails", y, "Sampled")
    note = f"{found} strict-cone samples" if found else "strict cone empty on samples"
    return ConditionReport("DilatingInclusion", "HoldsOnSamples", None, "Sampled", note)
