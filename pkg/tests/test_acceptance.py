"""Eleven-point acceptance gate.

Each test is one numbered criterion and prints a single PASS line on
success (visible with ``pytest tests/test_acceptance.py -v -s``); a
failed assertion is the FAIL line.  The whole gate targets < 60 s.
"""

from __future__ import annotations

import json

import numpy as np
import pytest

from conescal.augdual import aug_dual_membership, find_circ_pair, find_sharp_pair
from conescal.cli_io import main as cli_main
from conescal.cone_core import (
    Tolerances,
    base_set,
    bishop_phelps,
    cone_membership,
    eval_seminorm,
    eval_seminorm_many,
    halfspace,
    is_member,
    l1,
    l2,
    linf,
    negate_cone,
    normlike_base,
    orthant,
    sample_cone_points,
)
from conescal.errors import HypothesisFailed
from conescal.scalarizers import (
    SeminormLinearSpec,
    eval_gerstewitz,
    induced_cone,
    scalarizing_pair,
)
from conescal.separation import (
    check_condition,
    check_condition_9,
    dilating_inclusion_check,
    find_separating_pair,
    verify_certificate,
)
from conescal.vopt import (
    eff_set,
    peff_A_set,
    peff_henig_check,
    run_theorem_pipeline,
    solve_P_phi_a,
    solve_P_phi_ak,
    vo_problem,
    weff_set,
)
from conftest import norm_catalog, pointed_generated_cone, seminorm_catalog


def _ok(num: int, desc: str) -> None:
    print(f"[acceptance] criterion {num:02d}: PASS — {desc}")


# ---------------------------------------------------------------------------
# shared helpers


def _lambda_by_bisection(K, a, k, y, *, n_iter: int = 80) -> float:
    """Smallest t with a + t*k - y in K, located purely by membership
    bisection (independent of the closed-form evaluator)."""
    tol = Tolerances(eps_mem=1e-12, eps_root=1e-13)
    a, k, y = np.asarray(a, float), np.asarray(k, float), np.asarray(y, float)

    def feasible(t: float) -> bool:
        return is_member(cone_membership(K, a + t * k - y, tol))

    hi = 1.0
    while not feasible(hi):
        hi *= 2.0
        assert hi < 1e9, "no feasible shift found"
    lo = -1.0
    while feasible(lo):
        lo *= 2.0
        assert lo > -1e9, "shift unbounded below"
    for _ in range(n_iter):
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return hi


def _random_halfspace_cone(rng: np.random.Generator, n: int):
    """A halfspace-intersection cone whose normals cluster around a unit
    axis u, so every row has a safely positive pairing with u."""
    u = rng.standard_normal(n)
    u /= np.linalg.norm(u)
    rows = []
    for _ in range(int(rng.integers(2, 5))):
        d = rng.standard_normal(n)
        d /= max(np.linalg.norm(d), 1e-12)
        rows.append(u + 0.35 * d)
    return halfspace(np.array(rows)), u


def _random_problem(rng: np.random.Generator, n: int, K, psi, m_lo: int,
                    m_hi: int):
    m = int(rng.integers(m_lo, m_hi + 1))
    images = np.round(rng.uniform(-5.0, 5.0, size=(m, n)), 6)
    labels = tuple(f"x{i}" for i in range(m))
    return vo_problem(labels, images, K, psi=psi)


def _is_efficient_direct(p, label: str) -> bool:
    """Brute-force efficiency of one label: no other image reaches it
    through the ordering cone minus the origin."""
    i = p.labels.index(label)
    yi = p.images[i]
    for j in range(p.images.shape[0]):
        if j == i:
            continue
        d = yi - p.images[j]
        if float(np.max(np.abs(d))) <= 1e-12:
            continue
        if is_member(cone_membership(p.K, d, p.tol)):
            return False
    return True


def _assert_eff_inclusion(p, pair) -> None:
    """Efficient points under the pair's induced cone are efficient under
    the problem's own ordering cone."""
    pC = vo_problem(p.labels, p.images, induced_cone(pair), psi=p.psi)
    assert set(eff_set(pC).members) <= set(eff_set(p).members)


def _run_pipeline_resolving(p, which: str, lab: str, seed: int = 0):
    """Run a theorem pipeline; when the pair search comes up empty at the
    default weight floor, retry once at a finer floor (the certificate's
    weight is not pinned by the theorem, only its positivity)."""
    rep = run_theorem_pipeline(p, which, lab, seed=seed)
    if not rep.passed and rep.conclusions.get("pair_found") == "Fails":
        rep = run_theorem_pipeline(p, which, lab, alpha_min=1e-3, seed=seed)
    return rep


# ---------------------------------------------------------------------------
# criteria


def test_criterion_01_unit_pair_cone_equals_orthant():
    tol = Tolerances(eps_mem=1e-12, eps_root=1e-13)
    C = bishop_phelps((1.0, 1.0), 1.0, l1())
    R2 = orthant(2)
    grid = np.linspace(-2.0, 2.0, 101)
    mismatches = 0
    interior_hits = 0
    for y1 in grid:
        for y2 in grid:
            y = np.array([y1, y2])
            if is_member(cone_membership(C, y, tol)) != is_member(
                    cone_membership(R2, y, tol)):
                mismatches += 1
            if cone_membership(C, y, tol, need_interior=True) == "Interior":
                interior_hits += 1
    assert mismatches == 0, f"{mismatches} grid points disagree with the orthant"
    assert interior_hits == 0, "the strict cone at this pair must be empty"
    _ok(1, "C_l1((1,1),1) matches the orthant on a 101x101 grid; "
           "no point is strictly inside")


def test_criterion_02_one_dimensional_base_slice_counterexample():
    pair = scalarizing_pair((1.0,), 0.5, l1())
    C = induced_cone(pair)
    # the cone is [0, inf): its seminorm-one slice is exactly {+1} ...
    assert is_member(cone_membership(C, [1.0]))
    assert cone_membership(C, [-1.0]) == "Outside"
    base = normlike_base(C, l1())
    assert np.allclose(base.points, 1.0, atol=1e-9)
    # ... while the linear slice of the unit ball is the wider [0.5, 1]:
    for t in (0.5, 0.75, 1.0):
        assert t * 1.0 >= pair.alpha and eval_seminorm(l1(), [t]) <= 1.0
        assert is_member(cone_membership(C, [t]))
    assert eval_seminorm(l1(), [0.75]) < 1.0  # in the slice, not in the base
    rep = check_condition_9(negate_cone(orthant(1)), l1(), pair, seed=0)
    assert rep.verdict == "Fails"
    w = float(np.asarray(rep.witness).ravel()[0])
    assert 0.5 < w < 1.0, f"witness {w} not strictly between 0.5 and 1"
    _ok(2, "1-d base is {1}, not the ball slice [0.5,1]; the identity check "
           f"fails with witness {w:.6f}")


def test_criterion_03_gerstewitz_closed_form_vs_bisection():
    rng = np.random.default_rng(303)
    max_diff = 0.0
    max_tr = 0.0
    for trial in range(1000):
        n = 2 + (trial % 2)
        if trial % 2 == 0:
            K = orthant(n)
            k = rng.uniform(0.2, 2.0, n)
        else:
            K, u = _random_halfspace_cone(rng, n)
            k = u * rng.uniform(0.5, 2.0)
        a = rng.uniform(-5.0, 5.0, n)
        y = rng.uniform(-5.0, 5.0, n)
        closed = eval_gerstewitz(K, a, k, y)
        bis = _lambda_by_bisection(K, a, k, y)
        max_diff = max(max_diff, abs(closed - bis))
        s = float(rng.uniform(-3.0, 3.0))
        shifted = eval_gerstewitz(K, a, k, y + s * k)
        max_tr = max(max_tr, abs(shifted - (closed + s)))
    assert max_diff <= 1e-7, f"closed form vs bisection drift {max_diff:.3e}"
    assert max_tr <= 1e-8, f"translation identity drift {max_tr:.3e}"
    _ok(3, f"1000 random triples: closed form vs bisection within "
           f"{max_diff:.2e}, translation identity within {max_tr:.2e}")


def test_criterion_04_direction_problem_equivalence():
    rng = np.random.default_rng(404)
    max_opt_diff = 0.0
    for i in range(100):
        n = 2 + (i % 2)
        if i % 3 == 0:
            K, u = _random_halfspace_cone(rng, n)
            k = u * rng.uniform(0.5, 2.0)
        else:
            K = orthant(n)
            k = rng.uniform(0.2, 2.0, n)
        p = _random_problem(rng, n, K, l2(), 5, 30)
        a = rng.uniform(-2.0, 2.0, n)
        res = solve_P_phi_ak(p, p.K, a, k)
        lam = np.array([_lambda_by_bisection(K, a, k, img)
                        for img in p.images])
        opt = float(lam.min())
        mins = tuple(lab for lab, lv in zip(p.labels, lam)
                     if lv <= opt + p.tol.eps_opt)
        assert mins == res.minimizers, f"instance {i}: minimizer sets differ"
        max_opt_diff = max(max_opt_diff, abs(opt - res.optimum))
    assert max_opt_diff <= 1e-9, f"optimum drift {max_opt_diff:.3e}"
    _ok(4, f"100 problems: direction-problem minimizer sets identical, "
           f"optimum drift {max_opt_diff:.2e}")


def test_criterion_05_scalar_argmin_inside_efficient_sets():
    rng = np.random.default_rng(505)
    n_sharp = n_circ = 0
    cross_checked = 0
    for i in range(200):
        n = 2 + (i % 2)
        if i % 2 == 0:
            K, axis = orthant(n), None
            m_lo, m_hi = 5, 50
        else:
            K, axis = pointed_generated_cone(rng, n)
            m_lo, m_hi = 5, 15
        cat = seminorm_catalog(n, axis)
        psi = cat[i % len(cat)]
        p = _random_problem(rng, n, K, psi, m_lo, m_hi)
        a = rng.uniform(-3.0, 3.0, n)

        sharp = find_sharp_pair(K, psi, seed=1000 + i)
        if sharp is not None:
            n_sharp += 1
            res = solve_P_phi_a(p, SeminormLinearSpec(sharp), a)
            if K.kind == "Orthant":
                assert set(res.minimizers) <= set(eff_set(p).members), \
                    f"instance {i}: sharp-pair argmin left the efficient set"
            else:
                for lab in res.minimizers:
                    assert _is_efficient_direct(p, lab), \
                        f"instance {i}: minimizer {lab} is dominated"
        if K.kind == "Orthant":
            # prove the direct check mirrors the library on a few instances
            if cross_checked < 10 and p.images.shape[0] <= 12:
                direct = {lab for lab in p.labels
                          if _is_efficient_direct(p, lab)}
                assert direct == set(eff_set(p).members)
                cross_checked += 1
            circ = find_circ_pair(K, psi, seed=2000 + i)
            if circ is not None:
                n_circ += 1
                resc = solve_P_phi_a(p, SeminormLinearSpec(circ), a)
                assert set(resc.minimizers) <= set(weff_set(p).members), \
                    f"instance {i}: circ-pair argmin left the weak set"
    assert n_sharp >= 140, f"only {n_sharp} sharp pairs found"
    assert n_circ >= 60, f"only {n_circ} circ pairs found"
    assert cross_checked == 10
    _ok(5, f"200 instances: {n_sharp} sharp pairs all landed in Eff, "
           f"{n_circ} circ pairs all landed in WEff")


def test_criterion_06_solution_set_equivalences():
    rng = np.random.default_rng(606)

    # first equivalence: efficiency under the pair's cone <=> the scalar
    # problem anchored at the point recovers exactly the same-image labels
    for i in range(100):
        n = 2 + (i % 2)
        p = _random_problem(rng, n, orthant(n), l2(), 4, 12)
        cat = norm_catalog(n)
        pair = scalarizing_pair(rng.standard_normal(n),
                                float(rng.uniform(0.0, 1.5)),
                                cat[i % len(cat)])
        pC = vo_problem(p.labels, p.images, induced_cone(pair), psi=p.psi)
        effC = set(eff_set(pC).members)
        phi = SeminormLinearSpec(pair)
        for idx, lab in enumerate(p.labels):
            same = {lb for lb, img in zip(p.labels, p.images)
                    if np.array_equal(img, p.images[idx])}
            res = solve_P_phi_a(p, phi, p.images[idx])
            lhs = lab in effC
            rhs = set(res.minimizers) == same
            assert lhs == rhs, (
                f"instance {i}, label {lab}: efficiency {lhs} but "
                f"minimizers {set(res.minimizers)} vs same-image {same}")

    # second equivalence: weak efficiency <=> the direction problem anchored
    # at the point has optimum 0 attained there, for 5 interior directions
    for i in range(100):
        n = 2 + (i % 2)
        p = _random_problem(rng, n, orthant(n), l2(), 4, 12)
        weff = set(weff_set(p).members)
        ks = rng.uniform(0.2, 2.0, size=(5, n))
        for idx, lab in enumerate(p.labels):
            anchored_all = True
            for k in ks:
                res = solve_P_phi_ak(p, p.K, p.images[idx], k)
                if not (abs(res.optimum) <= 1e-9 and lab in res.minimizers):
                    anchored_all = False
                    break
            assert (lab in weff) == anchored_all, (
                f"instance {i}, label {lab}: weak efficiency "
                f"{lab in weff} vs anchored optimality {anchored_all}")
    _ok(6, "100+100 instances: both solution-set equivalences exact "
           "on every label")


def test_criterion_07_dual_class_monotonicity_bridges():
    rng = np.random.default_rng(707)
    total = 0

    def bridge(cone, psi, n_pairs, tag):
        nonlocal total
        n = cone.dim
        base = normlike_base(cone, psi)
        assert base.exactness == "ExactVertices"
        U = rng.uniform(-2.0, 2.0, (6, n))
        D_raw = sample_cone_points(cone, psi, 16, seed=7)
        psis = eval_seminorm_many(psi, D_raw)
        D = D_raw[psis > 0.3] / psis[psis > 0.3][:, None]
        D = np.vstack([D, base.points])  # every direction has unit seminorm
        P1 = np.empty((U.shape[0], D.shape[0]))
        for ui, u in enumerate(U):
            P1[ui] = eval_seminorm_many(psi, u[None, :] + D) - \
                eval_seminorm(psi, u)
        done = 0
        while done < n_pairs:
            c = min(5000, n_pairs - done)
            X = rng.standard_normal((c, n))
            alphas = rng.uniform(0.0, 2.0, c)
            # worst sampled increment of the scalarizer along cone directions
            diffs = (X @ D.T)[:, None, :] + alphas[:, None, None] * P1[None]
            dmin = diffs.min(axis=(1, 2))
            for j in range(c):
                pr = scalarizing_pair(X[j], float(alphas[j]), psi)
                vplus = aug_dual_membership(pr, cone, "APlus",
                                            base=base).verdict
                vsharp = aug_dual_membership(pr, cone, "ASharp",
                                             base=base).verdict
                fj = float(dmin[j])
                if vplus == "Holds":
                    assert fj >= -1e-6, (tag, j, "plus holds, falsifier", fj)
                if fj <= -1e-5:
                    assert vplus == "Fails", (tag, j, "falsifier missed", fj)
                if vsharp == "Holds":
                    assert fj > 1e-8, (tag, j, "sharp holds, flat step", fj)
                if fj <= -1e-9:
                    assert vsharp == "Fails", (tag, j, "sharp missed", fj)
            done += c
            total += c

    bridge(orthant(3), l1(), 50_000, "orthant")
    gen_cone, _ = pointed_generated_cone(rng, 3)
    bridge(gen_cone, linf(), 50_000, "generated")
    assert total == 100_000
    _ok(7, "100000 pairs: exact dual-class verdicts never contradicted "
           "sampled monotonicity falsifiers")


def test_criterion_08_generator_verdicts_match_dense_sampling():
    rng = np.random.default_rng(808)
    comparisons = 0
    borderline = 0
    for i in range(100):
        n = 2 + (i % 2)
        cone, axis = pointed_generated_cone(rng, n)
        for psi in seminorm_catalog(n, axis):
            base = normlike_base(cone, psi)
            assert base.exactness == "ExactVertices"
            pts = sample_cone_points(cone, psi, 10_000, seed=10 + i)
            vals = eval_seminorm_many(psi, pts)
            pts = pts[vals > 1e-6] / vals[vals > 1e-6][:, None]
            dense = base_set(np.vstack([pts, base.points]), "Sampled", psi,
                             dim=n)
            pairs = [scalarizing_pair(rng.standard_normal(n),
                                      float(rng.uniform(0.0, 1.5)), psi)
                     for _ in range(2)]
            sharp = find_sharp_pair(cone, psi, base=base, seed=30 + i)
            if sharp is not None:
                pairs.append(sharp)
            for pr in pairs:
                for cls in ("APlus", "ASharp"):
                    rv = aug_dual_membership(pr, cone, cls, base=base)
                    rd = aug_dual_membership(pr, cone, cls, base=dense)
                    comparisons += 1
                    if abs(rv.margin) < 1e-6:
                        borderline += 1
                        continue
                    mv = rv.verdict in ("Holds", "HoldsOnSamples")
                    md = rd.verdict in ("Holds", "HoldsOnSamples")
                    assert mv == md, (i, psi.kind, cls, rv.margin, rd.margin)
                    if rv.margin > 0:
                        assert abs(rv.margin - rd.margin) <= \
                            1e-9 * (1.0 + abs(rv.margin))
                    else:
                        assert rd.margin <= rv.margin + \
                            1e-9 * (1.0 + abs(rv.margin))
    assert comparisons >= 2000
    assert borderline <= comparisons // 20, (borderline, comparisons)
    _ok(8, f"{comparisons} verdicts on 100 generated cones x full seminorm "
           f"catalog: generator vertices match 10^4-point dense sampling")


def test_criterion_09_separation_soundness():
    rng = np.random.default_rng(909)
    kept = found = attempts = 0
    while kept < 100:
        attempts += 1
        assert attempts <= 1500, f"only {kept} filtered instances"
        n = 2 + (attempts % 2)
        K, _ = pointed_generated_cone(rng, n, spread=0.5)
        A, _ = pointed_generated_cone(rng, n, spread=0.5)
        psi = (l2(), linf())[attempts % 2]
        c5 = check_condition("Cond5", A, K, psi, seed=attempts)
        c6 = check_condition("Cond6", A, K, psi, seed=attempts)
        if c5.verdict == "Fails" or c6.verdict == "Fails":
            continue
        kept += 1
        c4 = check_condition("Cond4", A, K, psi, seed=attempts)
        assert c4.verdict != "Fails", \
            f"attempt {attempts}: disjointness broke, witness {c4.witness}"
        cert = find_separating_pair(A, K, psi, strict=True, seed=attempts)
        if cert is None:
            continue
        found += 1
        rec = verify_certificate(cert, A, K, seed=attempts + 1)
        assert rec.passed, (attempts, rec.conclusions)
        C = induced_cone(cert.pair)
        for g in K.generators:
            assert cone_membership(C, g, need_interior=True) == "Interior", \
                f"attempt {attempts}: a generator is not strictly inside"
        negC = negate_cone(C)
        for b in normlike_base(A, psi).points:
            assert cone_membership(negC, b) == "Outside", \
                f"attempt {attempts}: a base point touches the negative cone"
    assert found >= 60, f"only {found} strict certificates produced"
    _ok(9, f"100 filtered instances: disjointness held on all, "
           f"{found} strict certificates all re-verified")


def test_criterion_10_theorem_pipelines_end_to_end():
    # standard fixture: four points in the plane, one dominated
    p_fix = vo_problem(("a", "b", "c", "d"),
                       [[1.0, 3.0], [2.0, 2.0], [3.0, 1.0], [3.0, 3.0]],
                       orthant(2), psi=l1())
    peff = peff_A_set(p_fix)
    assert "b" in peff.members
    for lab in peff.members:
        rep = _run_pipeline_resolving(p_fix, "PEff_Th", lab)
        assert rep.passed, (lab, rep.conclusions)
        assert all(v != "Fails" for v in rep.conclusions.values())
        if rep.pair is not None:
            _assert_eff_inclusion(p_fix, rep.pair)
    with pytest.raises(HypothesisFailed) as err:
        run_theorem_pipeline(p_fix, "PEff_Th", "d")
    assert err.value.witness is not None
    for which in ("Henig_Th1", "Henig_Th2"):
        rep = _run_pipeline_resolving(p_fix, which, "b")
        assert rep.passed, (which, rep.conclusions)
        assert rep.conclusions["strict_cone_inside_dilating_cone"] != "Fails"
        D = induced_cone(rep.details["dilating_pair"])
        dil = dilating_inclusion_check(rep.pair, D, seed=3)
        assert dil.verdict != "Fails"
        _assert_eff_inclusion(p_fix, rep.pair)

    # random instances
    rng = np.random.default_rng(1010)
    pipeline_passes = henig_runs = hyp_failures = 0
    for i in range(50):
        n = 2 + (i % 2)
        p = _random_problem(rng, n, orthant(n), l2(), 4, 14)
        for lab in peff_A_set(p).members[:3]:
            try:
                rep = _run_pipeline_resolving(p, "PEff_Th", lab, seed=i)
            except HypothesisFailed as e:
                hyp_failures += 1
                assert e.witness is not None, \
                    f"instance {i}: {e.condition} raised without a witness"
                continue
            pipeline_passes += 1
            assert rep.passed, (i, lab, rep.conclusions)
            assert all(v != "Fails" for v in rep.conclusions.values())
            if rep.pair is not None:
                _assert_eff_inclusion(p, rep.pair)
        for lab in eff_set(p).members[:4]:
            if peff_henig_check(p, lab, seed=i) is None:
                continue
            which = ("Henig_Th1", "Henig_Th2")[i % 2]
            try:
                rep = _run_pipeline_resolving(p, which, lab, seed=i)
            except HypothesisFailed:
                break
            henig_runs += 1
            assert rep.passed, (i, lab, which, rep.conclusions)
            assert rep.conclusions["strict_cone_inside_dilating_cone"] != \
                "Fails"
            if rep.pair is not None:
                _assert_eff_inclusion(p, rep.pair)
            break
    assert pipeline_passes >= 25, (pipeline_passes, hyp_failures)
    assert henig_runs >= 15, henig_runs
    _ok(10, f"fixture + 50 instances: {pipeline_passes} certified pipeline "
            f"runs, {hyp_failures} witnessed hypothesis failures, "
            f"{henig_runs} dilating-cone checks")


def test_criterion_11_cli_byte_identical_reports(tmp_path):
    prob = {
        "dim": 2,
        "cone": {"kind": "Orthant"},
        "seminorm": {"kind": "L2"},
        "labels": ["a", "b", "c", "d"],
        "source": {"images": [[2, 0], [1, 1], [0, 2], [2, 2]]},
    }
    path = tmp_path / "prob.json"
    path.write_text(json.dumps(prob))
    forms = [
        ["solve-scalar", "--phi", "seminorm-linear", "--xstar", "2,2",
         "--alpha", "1", "--a", "0,0"],
        ["solve-scalar", "--phi", "gerstewitz", "--a", "0,0", "--k", "1,1",
         "--format", "csv"],
        ["solve-vector", "--concept", "eff"],
        ["solve-vector", "--concept", "peff-henig"],
        ["check-cone", "--xstar", "2,2", "--alpha", "1"],
        ["separate", "--xbar", "b"],
        ["verify-theorems", "--theorem", "peff", "--xbar", "b"],
        ["report", "--format", "csv"],
    ]
    for j, form in enumerate(forms):
        blobs = []
        for run in range(2):
            out = tmp_path / f"out_{j}_{run}"
            code = cli_main(form + ["--problem", str(path), "--seed", "7",
                                    "--out", str(out)])
            assert code == 0, form
            blobs.append(out.read_bytes())
        assert len(blobs[0]) > 0
        assert blobs[0] == blobs[1], f"form {form} is not reproducible"
    _ok(11, f"{len(forms)} command forms, two runs each: byte-identical "
            f"outputs")
