"""Problem files, run reports, and the command line interface.

A problem file is JSON (schema shipped in docs/schema/problem.schema.json):
a dimension, a cone description, a seminorm, and either an explicit image
list or a box+grid+objectives block that is sampled row-major and evaluated
through the expression language.  Reports are emitted as JSON (CSV for the
flat per-label table) and are byte-identical across runs with the same
inputs and seed; timing goes to stderr only.

Exit codes: 0 success, 1 usage/IO/schema errors, 2 a theorem hypothesis
failed, 3 a verification-type failure (no certificate found, or a found
certificate failed re-verification).
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
import time
from dataclasses import dataclass, field
from itertools import product as _iproduct
from typing import Optional

import numpy as np

from .augdual import AUG_DUAL_CLASSES, aug_dual_membership
from .cone_core import (
    CONE_KINDS,
    SEMINORM_KINDS,
    ConeRep,
    SeminormSpec,
    Tolerances,
    bishop_phelps,
    generated,
    halfspace,
    orthant,
    ray_union,
)
from .errors import ConescalError, ExprError, HypothesisFailed, SchemaError
from .expr import eval_expr, parse
from .scalarizers import (
    ScalarizingPair,
    SeminormLinearSpec,
    eval_seminorm_linear_many,
    scalarizing_pair,
    strict_margin,
)
from .separation import check_condition, find_separating_pair, verify_certificate
from .vopt import (
    THEOREMS,
    VOProblem,
    amap_cone,
    eff_set,
    peff_A_set,
    peff_henig_check,
    run_theorem_pipeline,
    solve_P_phi_a,
    solve_P_phi_ak,
    vo_problem,
    weff_set,
)

__all__ = [
    "load_problem",
    "RunReport",
    "report_as_dict",
    "report_to_json",
    "load_report",
    "main",
]

_MAX_GRID_IMAGES = 1_000_000

_THEOREM_FLAGS = {
    "weff": "WEff_Th",
    "peff": "PEff_Th",
    "henig1": "Henig_Th1",
    "henig2": "Henig_Th2",
}


# ---------------------------------------------------------------------------
# schema helpers
# ---------------------------------------------------------------------------

def _need(obj: dict, key: str, ptr: str):
    if key not in obj:
        raise SchemaError(f"missing required key {key!r}", ptr)
    return obj[key]


def _as_obj(v, ptr: str) -> dict:
    if not isinstance(v, dict):
        raise SchemaError("expected an object", ptr)
    return v


def _as_int(v, ptr: str, lo: Optional[int] = None) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError("expected an integer", ptr)
    if lo is not None and v < lo:
        raise SchemaError(f"must be >= {lo}", ptr)
    return v


def _as_num(v, ptr: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SchemaError("expected a number", ptr)
    if not math.isfinite(v):
        raise SchemaError("must be finite", ptr)
    return float(v)


def _as_vec(v, ptr: str, dim: Optional[int] = None) -> np.ndarray:
    if not isinstance(v, list) or not v:
        raise SchemaError("expected a nonempty array of numbers", ptr)
    out = np.array([_as_num(x, f"{ptr}/{i}") for i, x in enumerate(v)])
    if dim is not None and out.size != dim:
        raise SchemaError(f"expected {dim} entries, got {out.size}", ptr)
    return out


def _as_matrix(v, ptr: str, width: Optional[int] = None,
               allow_empty: bool = False) -> np.ndarray:
    if not isinstance(v, list):
        raise SchemaError("expected an array of rows", ptr)
    if not v:
        if allow_empty and width is not None:
            return np.zeros((0, width))
        raise SchemaError("expected at least one row", ptr)
    rows = [_as_vec(r, f"{ptr}/{i}") for i, r in enumerate(v)]
    w = rows[0].size if width is None else width
    for i, r in enumerate(rows):
        if r.size != w:
            raise SchemaError(f"expected {w} entries, got {r.size}", f"{ptr}/{i}")
    return np.vstack(rows)


def _parse_seminorm(v, ptr: str, dim: int) -> SeminormSpec:
    obj = _as_obj(v, ptr)
    kind = _need(obj, "kind", f"{ptr}/kind")
    if kind not in SEMINORM_KINDS:
        raise SchemaError(f"unknown seminorm kind {kind!r}", f"{ptr}/kind")
    if kind in ("L1", "L2", "LInf"):
        return SeminormSpec(kind)
    mat = _as_matrix(_need(obj, "functionals", f"{ptr}/functionals"),
                     f"{ptr}/functionals", width=dim)
    return SeminormSpec(kind, mat)


def _parse_cone(v, ptr: str, dim: int, default_psi: SeminormSpec) -> ConeRep:
    obj = _as_obj(v, ptr)
    kind = _need(obj, "kind", f"{ptr}/kind")
    if kind not in CONE_KINDS:
        raise SchemaError(f"unknown cone kind {kind!r}", f"{ptr}/kind")
    if kind == "Orthant":
        return orthant(dim)
    if kind == "Halfspace":
        W = _as_matrix(_need(obj, "normals", f"{ptr}/normals"),
                       f"{ptr}/normals", width=dim)
        return halfspace(W)
    if kind == "Generated":
        G = _as_matrix(obj.get("generators", []), f"{ptr}/generators",
                       width=dim, allow_empty=True)
        return generated(G, dim=dim)
    if kind == "RayUnion":
        G = _as_matrix(obj.get("rays", []), f"{ptr}/rays",
                       width=dim, allow_empty=True)
        return ray_union(G, dim=dim)
    xstar = _as_vec(_need(obj, "xstar", f"{ptr}/xstar"), f"{ptr}/xstar", dim)
    alpha = _as_num(_need(obj, "alpha", f"{ptr}/alpha"), f"{ptr}/alpha")
    if alpha < 0:
        raise SchemaError("alpha must be >= 0", f"{ptr}/alpha")
    psi = default_psi
    if "seminorm" in obj:
        psi = _parse_seminorm(obj["seminorm"], f"{ptr}/seminorm", dim)
    return bishop_phelps(xstar, alpha, psi)


def _parse_tolerances(v, ptr: str) -> Tolerances:
    obj = _as_obj(v, ptr)
    base = Tolerances()
    kwargs = {}
    for key in ("eps_mem", "eps_strict", "eps_opt", "eps_root"):
        if key in obj:
            val = _as_num(obj[key], f"{ptr}/{key}")
            if val <= 0:
                raise SchemaError("must be > 0", f"{ptr}/{key}")
            kwargs[key] = val
    for key in obj:
        if key not in ("eps_mem", "eps_strict", "eps_opt", "eps_root"):
            raise SchemaError(f"unknown tolerance {key!r}", f"{ptr}/{key}")
    return Tolerances(**{**base.__dict__, **kwargs})


def _grid_images(src: dict, dim: int) -> tuple[list, np.ndarray]:
    box = _as_matrix(_need(src, "box", "/source/box"), "/source/box")
    if box.shape[1] != 2:
        raise SchemaError("each box entry must be [lo, hi]", "/source/box")
    if np.any(box[:, 0] > box[:, 1]):
        raise SchemaError("box entries need lo <= hi", "/source/box")
    n_vars = box.shape[0]
    grid = _need(src, "grid", "/source/grid")
    if isinstance(grid, list):
        counts = [_as_int(g, f"/source/grid/{i}", lo=1) for i, g in enumerate(grid)]
        if len(counts) != n_vars:
            raise SchemaError(f"expected {n_vars} per-axis counts", "/source/grid")
    else:
        counts = [_as_int(grid, "/source/grid", lo=1)] * n_vars
    total = 1
    for c in counts:
        total *= c
    if total > _MAX_GRID_IMAGES:
        raise SchemaError(
            f"grid produces {total} points, over the cap of {_MAX_GRID_IMAGES}",
            "/source/grid",
        )
    texts = _need(src, "objectives", "/source/objectives")
    if not isinstance(texts, list) or len(texts) != dim:
        raise SchemaError(f"expected {dim} objective expressions",
                          "/source/objectives")
    asts = []
    for i, text in enumerate(texts):
        ptr = f"/source/objectives/{i}"
        if not isinstance(text, str):
            raise SchemaError("expected an expression string", ptr)
        try:
            asts.append(parse(text, n_vars))
        except ExprError as exc:
            raise SchemaError(f"objective {i}: {exc}", ptr) from exc
    axes = [np.linspace(box[j, 0], box[j, 1], counts[j]) for j in range(n_vars)]
    labels = []
    images = np.zeros((total, dim))
    for row, xs in enumerate(_iproduct(*axes)):
        labels.append(f"g{row}")
        for i, ast in enumerate(asts):
            try:
                images[row, i] = eval_expr(ast, xs)
            except ExprError as exc:
                raise SchemaError(
                    f"objective {i} failed at x={list(xs)}: {exc}",
                    f"/source/objectives/{i}",
                ) from exc
    return labels, images


def load_problem(path: str) -> VOProblem:
    """Read and validate a problem file; schema errors carry JSON pointers."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}", "") from exc
    obj = _as_obj(doc, "")
    dim = _as_int(_need(obj, "dim", "/dim"), "/dim", lo=1)
    psi = SeminormSpec("L2")
    if "seminorm" in obj:
        psi = _parse_seminorm(obj["seminorm"], "/seminorm", dim)
    try:
        K = _parse_cone(_need(obj, "cone", "/cone"), "/cone", dim, psi)
    except ValueError as exc:
        raise SchemaError(str(exc), "/cone") from exc
    tol = None
    if "tolerances" in obj:
        tol = _parse_tolerances(obj["tolerances"], "/tolerances")
    src = _as_obj(_need(obj, "source", "/source"), "/source")
    if "images" in src:
        images = _as_matrix(src["images"], "/source/images", width=dim)
        labels = [f"p{i + 1}" for i in range(images.shape[0])]
    elif "box" in src:
        labels, images = _grid_images(src, dim)
    else:
        raise SchemaError("source needs either 'images' or 'box'+'grid'+'objectives'",
                          "/source")
    if "labels" in obj:
        given = obj["labels"]
        if (not isinstance(given, list)
                or len(given) != len(labels)
                or not all(isinstance(s, str) for s in given)):
            raise SchemaError(f"expected {len(labels)} label strings", "/labels")
        labels = list(given)
    try:
        return vo_problem(labels, images, K, psi=psi, tol=tol)
    except ValueError as exc:
        raise SchemaError(str(exc), "") from exc


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class RunReport:
    command: str
    seed: int
    results: dict
    timing_s: float = field(default=0.0, compare=False)  # stderr only


def _plain(v):
    """Recursively convert numpy/tuple structures to JSON-ready values."""
    if isinstance(v, np.ndarray):
        return [_plain(x) for x in v.tolist()]
    if isinstance(v, (np.floating,)):
        return float(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    return str(v)


def report_as_dict(report: RunReport) -> dict:
    return {
        "command": report.command,
        "seed": report.seed,
        "results": _plain(report.results),
    }


def report_to_json(report: RunReport) -> str:
    return json.dumps(report_as_dict(report), indent=2, sort_keys=True) + "\n"


def load_report(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _pair_dict(pair: ScalarizingPair) -> dict:
    d = {"xstar": pair.xstar, "alpha": pair.alpha, "seminorm": pair.psi.kind}
    if pair.psi.mat is not None:
        d["seminorm_functionals"] = pair.psi.mat
    return d


def _emit(report: RunReport, args, csv_text: Optional[str] = None) -> None:
    if getattr(args, "format", "json") == "csv":
        text = csv_text if csv_text is not None else ""
    else:
        text = report_to_json(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"elapsed_s={report.timing_s:.3f}", file=sys.stderr)


def _csv_table(header: list, rows: list) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join("" if v is None else str(v) for v in row) + "\n")
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _vec_flag(text: Optional[str], name: str, dim: int) -> np.ndarray:
    if text is None:
        raise _Usage(f"--{name} is required for this command")
    try:
        vals = [float(s) for s in text.split(",")]
    except ValueError:
        raise _Usage(f"--{name} must be a comma-separated list of numbers") from None
    if len(vals) != dim:
        raise _Usage(f"--{name} needs {dim} entries, got {len(vals)}")
    return np.array(vals)


def cmd_solve_scalar(args) -> tuple[int, RunReport, Optional[str]]:
    p = load_problem(args.problem)
    n = p.K.dim
    a = _vec_flag(args.a, "a", n) if args.a else np.zeros(n)
    if args.phi == "seminorm-linear":
        xstar = _vec_flag(args.xstar, "xstar", n)
        pair = scalarizing_pair(xstar, args.alpha, p.psi)
        res = solve_P_phi_a(p, SeminormLinearSpec(pair), a)
        phi_desc = {"form": "seminorm-linear", "pair": _pair_dict(pair), "a": a}
    else:
        k = _vec_flag(args.k, "k", n)
        res = solve_P_phi_ak(p, p.K, a, k)
        phi_desc = {"form": "gerstewitz", "a": a, "k": k}
    results = {
        "phi": phi_desc,
        "labels": list(p.labels),
        "per_label_values": list(res.per_label_values),
        "optimum": res.optimum,
        "minimizers": list(res.minimizers),
    }
    rows = [
        [lab] + [float(v) for v in p.images[i]] + [res.per_label_values[i]]
        for i, lab in enumerate(p.labels)
    ]
    header = ["label"] + [f"f{j + 1}" for j in range(n)] + ["value"]
    return 0, RunReport("solve-scalar", args.seed, results), _csv_table(header, rows)


def cmd_solve_vector(args) -> tuple[int, RunReport, Optional[str]]:
    p = load_problem(args.problem)
    if args.concept == "eff":
        sol = eff_set(p)
    elif args.concept == "weff":
        sol = weff_set(p)
    elif args.concept == "peff-a":
        sol = peff_A_set(p)
    else:  # peff-henig
        members = []
        certs = {}
        for lab in eff_set(p).members:
            pair = peff_henig_check(p, lab, seed=args.seed)
            if pair is not None:
                members.append(lab)
                certs[lab] = _pair_dict(pair)
        results = {"concept": "PEffHe", "members": members, "certificates": certs}
        return 0, RunReport("solve-vector", args.seed, results), None
    results = {"concept": sol.concept, "members": list(sol.members)}
    return 0, RunReport("solve-vector", args.seed, results), None


def cmd_check_cone(args) -> tuple[int, RunReport, Optional[str]]:
    p = load_problem(args.problem)
    xstar = _vec_flag(args.xstar, "xstar", p.K.dim)
    pair = scalarizing_pair(xstar, args.alpha, p.psi)
    classes = {}
    for cls in AUG_DUAL_CLASSES:
        rep = aug_dual_membership(pair, p.K, cls, p.tol, seed=args.seed)
        classes[cls] = {
            "verdict": rep.verdict,
            "margin": rep.margin,
            "witness": rep.witness,
            "exactness": rep.exactness,
            "note": rep.note,
        }
    results = {
        "pair": _pair_dict(pair),
        "classes": classes,
        "strict_margin": strict_margin(pair),
    }
    return 0, RunReport("check-cone", args.seed, results), None


def cmd_separate(args) -> tuple[int, RunReport, Optional[str]]:
    p = load_problem(args.problem)
    xbar = args.xbar if args.xbar is not None else p.labels[0]
    if xbar not in p.labels:
        raise _Usage(f"--xbar {xbar!r} is not a label of the problem")
    A = amap_cone(p, xbar, args.variant)
    conditions = {}
    for cond in ("Cond4", "Cond5", "Cond6"):
        rep = check_condition(cond, A, p.K, p.psi, p.tol, seed=args.seed)
        conditions[cond] = {"verdict": rep.verdict, "witness": rep.witness,
                            "exactness": rep.exactness, "note": rep.note}
    strict = not args.weak
    cert = find_separating_pair(A, p.K, p.psi, strict=strict,
                                alpha_min=args.alpha_min, tol=p.tol, seed=args.seed)
    results = {"xbar": xbar, "variant": args.variant, "strict": strict,
               "conditions": conditions}
    if cert is None:
        results["pair"] = None
        return 3, RunReport("separate", args.seed, results), None
    rec = verify_certificate(cert, A, p.K, tol=p.tol, seed=args.seed + 1)
    results["pair"] = _pair_dict(cert.pair)
    results["margin_K"] = cert.margin_K
    results["margin_A"] = cert.margin_A
    results["exactness"] = cert.exactness
    results["conclusions"] = cert.conclusions
    results["verification"] = {"passed": rec.passed, "conclusions": rec.conclusions,
                               "witness": rec.witness}
    return (0 if rec.passed else 3), RunReport("separate", args.seed, results), None


def cmd_verify_theorems(args) -> tuple[int, RunReport, Optional[str]]:
    p = load_problem(args.problem)
    which = _THEOREM_FLAGS[args.theorem]
    if args.xbar is not None:
        if args.xbar not in p.labels:
            raise _Usage(f"--xbar {args.xbar!r} is not a label of the problem")
        targets = [args.xbar]
    elif which in ("WEff_Th", "Henig_Th2"):
        targets = list(weff_set(p).members)
    else:
        targets = list(eff_set(p).members)
    per_label = {}
    any_hyp_failed = False
    any_not_passed = False
    for lab in targets:
        try:
            rep = run_theorem_pipeline(p, which, lab, seed=args.seed)
        except HypothesisFailed as exc:
            any_hyp_failed = True
            per_label[lab] = {"outcome": "hypothesis-failed",
                              "condition": exc.condition,
                              "witness": exc.witness}
            continue
        if not rep.passed:
            any_not_passed = True
        per_label[lab] = {
            "outcome": "passed" if rep.passed else "conclusions-failed",
            "hypothesis": rep.hypothesis,
            "conclusions": rep.conclusions,
            "pair": None if rep.pair is None else _pair_dict(rep.pair),
        }
    results = {"theorem": which, "targets": targets, "per_label": per_label}
    code = 2 if any_hyp_failed else (3 if any_not_passed else 0)
    return code, RunReport("verify-theorems", args.seed, results), None


def cmd_report(args) -> tuple[int, RunReport, Optional[str]]:
    p = load_problem(args.problem)
    n = p.K.dim
    a = _vec_flag(args.a, "a", n) if args.a else np.zeros(n)
    if args.xstar is not None:
        pair = scalarizing_pair(_vec_flag(args.xstar, "xstar", n), args.alpha, p.psi)
    else:
        pair = scalarizing_pair(np.zeros(n), 1.0, p.psi)
    values = eval_seminorm_linear_many(pair, p.images - a)
    in_eff = set(eff_set(p).members)
    try:
        in_weff = set(weff_set(p).members)
        weff_known = True
    except ConescalError:
        in_weff = set()
        weff_known = False
    in_peff = set(peff_A_set(p).members)
    table = []
    for i, lab in enumerate(p.labels):
        table.append({
            "label": lab,
            "f": p.images[i],
            "value": float(values[i]),
            "in_eff": lab in in_eff,
            "in_weff": (lab in in_weff) if weff_known else None,
            "in_peff": lab in in_peff,
        })
    results = {"pair": _pair_dict(pair), "a": a, "table": table}
    header = (["label"] + [f"f{j + 1}" for j in range(n)]
              + ["value", "in_eff", "in_weff", "in_peff"])
    rows = []
    for entry in table:
        rows.append([entry["label"]]
                    + [float(v) for v in entry["f"]]
                    + [entry["value"], int(entry["in_eff"]),
                       None if entry["in_weff"] is None else int(entry["in_weff"]),
                       int(entry["in_peff"])])
    return 0, RunReport("report", args.seed, results), _csv_table(header, rows)


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

class _Usage(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage problems, not argparse's 2
        raise _Usage(f"{self.prog}: {message}\n{self.format_usage()}")


def _build_parser() -> _ArgumentParser:
    top = _ArgumentParser(prog="conescal",
                          description="conic scalarization toolkit")
    sub = top.add_subparsers(dest="command", required=True)

    def common(sp, fmt: bool = False):
        sp.add_argument("--problem", required=True, help="problem file (JSON)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", default=None, help="write the report here")
        if fmt:
            sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("solve-scalar", help="enumerate a scalarized problem")
    common(sp, fmt=True)
    sp.add_argument("--phi", choices=("seminorm-linear", "gerstewitz"),
                    default="seminorm-linear")
    sp.add_argument("--xstar", default=None, help="comma-separated functional")
    sp.add_argument("--alpha", type=float, default=0.0)
    sp.add_argument("--a", default=None, help="anchor point (CSV)")
    sp.add_argument("--k", default=None, help="direction (CSV)")
    sp.set_defaults(run=cmd_solve_scalar)

    sp = sub.add_parser("solve-vector", help="brute-force efficiency sets")
    common(sp)
    sp.add_argument("--concept", choices=("eff", "weff", "peff-a", "peff-henig"),
                    default="eff")
    sp.set_defaults(run=cmd_solve_vector)

    sp = sub.add_parser("check-cone", help="augmented dual class membership")
    common(sp)
    sp.add_argument("--xstar", default=None, help="comma-separated functional")
    sp.add_argument("--alpha", type=float, default=0.0)
    sp.set_defaults(run=cmd_check_cone)

    sp = sub.add_parser("separate", help="cone separation conditions and pairs")
    common(sp)
    sp.add_argument("--xbar", default=None, help="anchor label (default: first)")
    sp.add_argument("--variant", choices=("RaysOfDifferences",
                                          "RaysOfDifferencesPlusK"),
                    default="RaysOfDifferences")
    sp.add_argument("--weak", action="store_true",
                    help="search a weak certificate instead of strict")
    sp.add_argument("--alpha-min", type=float, default=0.05, dest="alpha_min")
    sp.set_defaults(run=cmd_separate)

    sp = sub.add_parser("verify-theorems", help="run a scalarization pipeline")
    common(sp)
    sp.add_argument("--theorem", choices=tuple(_THEOREM_FLAGS), required=True)
    sp.add_argument("--xbar", default=None,
                    help="label to verify (default: every candidate)")
    sp.set_defaults(run=cmd_verify_theorems)

    sp = sub.add_parser("report", help="flat per-label table with memberships")
    common(sp, fmt=True)
    sp.add_argument("--xstar", default=None, help="comma-separated functional")
    sp.add_argument("--alpha", type=float, default=0.0)
    sp.add_argument("--a", default=None, help="anchor point (CSV)")
    sp.set_defaults(run=cmd_report)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _Usage as exc:
        print(exc, file=sys.stderr)
        return 1
    start = time.perf_counter()
    try:
        code, report, csv_text = args.run(args)
    except _Usage as exc:
        print(exc, file=sys.stderr)
        return 1
    except SchemaError as exc:
        print(f"problem file error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1
    except HypothesisFailed as exc:
        print(f"hypothesis failed: {exc}", file=sys.stderr)
        return 2
    except ConescalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report.timing_s = time.perf_counter() - start
    if getattr(args, "format", "json") == "csv" and csv_text is None:
        print("csv output is only available for flat per-label tables",
              file=sys.stderr)
        return 1
    _emit(report, args, csv_text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
