"""Command-line front end: one subcommand per pipeline stage.

Every command reads inline parameters or JSON files in the serialisation
formats of the library, prints a human summary or a canonical JSON
document (sorted keys, stable ordering), and exits 0 on success, 1 on a
mathematical failure (a check that did not pass), 2 on usage or budget
errors.  The point-scan budget can be overridden with --cap or the
GENFERMAT_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field

from . import autgroup, moduli, variety
from .arrangement import Arrangement, LambdaParams, membership_Xnd, normalize, pgl_equivalent
from .errors import GenFermatError
from .ff import make_field
from .multinomial import lucas_witness
from .variety import DEFAULT_POINT_CAP

BUDGET_ENV = "GENFERMAT_BUDGET"


@dataclass
class JobConfig:
    command: str
    params: dict = field(default_factory=dict)
    fmt: str = "human"
    cap: int | None = None
    seed: int = 0
    jobs: int = 1

    def budget(self) -> int:
        if self.cap is not None:
            return self.cap
        env = os.environ.get(BUDGET_ENV)
        if env:
            return int(env)
        return DEFAULT_POINT_CAP


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _model_from(params: dict) -> variety.FermatModel:
    return variety.FermatModel.from_dict(_load_json(params["model"]))


def _render(payload: dict, fmt: str, lines) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2)
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# command implementations: each returns (exit_code, text)
# ---------------------------------------------------------------------------

def _cmd_classify(cfg: JobConfig):
    p = cfg.params
    tv = variety.classify_type(p["d"], p["k"], p["n"], p["p"])
    payload = tv.to_dict()
    lines = [
        f"type ({tv.d}; {tv.k}, {tv.n}) over characteristic {tv.p}",
        f"  coprimality_ok:        {tv.coprimality_ok}",
        f"  k-1 not a p-power:     {tv.k_minus_1_not_p_power}",
        f"  exceptional_type:      {tv.exceptional_type}",
        f"  theorem_applies:       {tv.theorem_applies}",
        f"  canonical degree:      {tv.canonical_degree}",
    ]
    return 0, _render(payload, cfg.fmt, lines)


def _cmd_lucas(cfg: JobConfig):
    p = cfg.params
    u = lucas_witness(p["k"], p["p"])
    payload = {"k": p["k"], "p": p["p"], "witness": u,
               "k_minus_1_is_p_power": u is None}
    if u is None:
        lines = [f"no witness: {p['k'] - 1} is a power of {p['p']}"]
    else:
        lines = [f"witness u = {u}: C({p['k'] - 1}, {u}) is nonzero mod {p['p']}"]
    return 0, _render(payload, cfg.fmt, lines)


def _cmd_build(cfg: JobConfig):
    p = cfg.params
    d, k, n = p["d"], p["k"], p["n"]
    field_spec = make_field(p["p"], p.get("m") or 1)
    if p.get("lambda") is not None:
        rows = [[field_spec.element(x) for x in row]
                for row in json.loads(p["lambda"])]
        lam = LambdaParams(field_spec, d, n, rows)
    elif p.get("random_lambda"):
        rng = random.Random(cfg.seed)
        lam = _random_lambda(field_spec, d, n, rng)
    else:
        lam = LambdaParams(field_spec, d, n, [])
    mdl = variety.build_model(d, k, n, lam, field_spec)
    doc = mdl.to_dict()
    text = json.dumps(doc, sort_keys=True, indent=2)
    out = p.get("out")
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        return 0, f"model written to {out}"
    return 0, text


def _random_lambda(field_spec, d, n, rng, tries=10000):
    for _ in range(tries):
        rows = [[field_spec.random_element(rng) for _ in range(d)]
                for _ in range(n - d - 1)]
        lam = LambdaParams(field_spec, d, n, rows)
        if membership_Xnd(lam):
            return lam
    raise GenFermatError("no general-position parameter found; field too small?")


def _cmd_points(cfg: JobConfig):
    p = cfg.params
    mdl = _model_from(p)
    res = variety.enumerate_points(mdl, ext=p.get("ext") or 1, cap=cfg.budget(),
                                   collect=bool(p.get("list")))
    payload = {
        "count": res.count,
        "candidates": res.candidates,
        "ext": res.ext,
        "field": res.field.to_dict(),
    }
    lines = [f"{res.count} rational points over {res.field!r} "
             f"({res.candidates} candidates scanned)"]
    if res.points is not None:
        payload["points"] = [[c.to_coeffs() for c in pt.coords] for pt in res.points]
        lines += [f"  {pt!r}" for pt in res.points]
    return 0, _render(payload, cfg.fmt, lines)


def _cmd_smooth(cfg: JobConfig):
    p = cfg.params
    mdl = _model_from(p)
    exts = [int(x) for x in str(p.get("ext") or "1").split(",")]
    rep = variety.smoothness_report(mdl, exts, cap=cfg.budget())
    payload = {
        "passed": rep.passed,
        "note": rep.note,
        "entries": [
            {
                "ext": e.ext, "points": e.point_count,
                "min_rank": e.min_rank, "max_rank": e.max_rank,
                "expected_rank": e.expected_rank,
                "passed": e.passed, "vacuous": e.vacuous,
            }
            for e in rep.entries
        ],
    }
    lines = [f"smoothness at rational points: {'PASS' if rep.passed else 'FAIL'}"]
    for e in rep.entries:
        tag = "vacuous" if e.vacuous else f"ranks {e.min_rank}..{e.max_rank}"
        lines.append(f"  ext {e.ext}: {e.point_count} points, {tag}, "
                     f"expected {e.expected_rank}: {'ok' if e.passed else 'FAIL'}")
    lines.append(f"  note: {rep.note}")
    return (0 if rep.passed else 1), _render(payload, cfg.fmt, lines)


def _cmd_deck(cfg: JobConfig):
    mdl = _model_from(cfg.params)
    gens = variety.deck_generators(mdl)
    prod = gens[0]
    for g in gens[1:]:
        prod = prod * g
    closure = {autgroup.MonomialMatrix.identity(mdl.field, mdl.n + 1)}
    frontier = list(closure)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = a * g
                if c not in closure:
                    closure.add(c)
                    new.append(c)
        frontier = new
    payload = {
        "order": len(closure),
        "expected_order": mdl.k ** mdl.n,
        "product_of_generators_trivial": prod.is_identity(),
        "generators": [g.to_dict() for g in gens],
    }
    lines = [
        f"deck group order {len(closure)} (expected {mdl.k ** mdl.n})",
        f"product of the {mdl.n + 1} generators is the identity: {prod.is_identity()}",
    ]
    ok = len(closure) == mdl.k ** mdl.n and prod.is_identity()
    return (0 if ok else 1), _render(payload, cfg.fmt, lines)


def _cmd_lin(cfg: JobConfig):
    mdl = _model_from(cfg.params)
    lin = autgroup.compute_lin(mdl)
    payload = {
        "order": lin.order,
        "deck_order": lin.h0_order,
        "symmetry_order": lin.symmetry.order,
        "symmetry_perms": [list(p) for p in lin.symmetry.perms],
        "extension_degree": lin.extension_degree,
        "field": lin.field.to_dict(),
        "coset_representatives": {
            ",".join(map(str, perm)): rep.to_dict()
            for perm, rep in sorted(lin.coset_reps.items())
        },
    }
    lines = [
        f"monomial automorphism group order {lin.order} "
        f"= {mdl.k}^{mdl.n} * {lin.symmetry.order}",
        f"computed over {lin.field!r} (extension degree {lin.extension_degree})",
    ]
    return 0, _render(payload, cfg.fmt, lines)


def _cmd_unique(cfg: JobConfig):
    p = cfg.params
    mdl = _model_from(p)
    rep = autgroup.verify_unique_fermat_group(
        mdl, oracle_budget=p.get("oracle_budget") or 5000)
    payload = rep.to_dict()
    ev = rep.evidence
    lines = [
        f"verdict: {rep.verdict}",
        f"  |Lin| = {ev.lin_order}, |H0| = {ev.h0_order}, "
        f"symmetries {ev.symmetry_order}, extension {ev.extension_degree}",
        f"  H0 normal in Lin: {ev.h0_normal_in_lin}",
        f"  quasi-reflections: {ev.census_size} ({ev.census_in_h0} in H0)",
        f"  standard-tuple subgroup count: {ev.subgroup_count}",
        f"  within-Lin uniqueness evidence: "
        f"{'ok' if rep.within_lin_unique else 'FAILED'}",
    ]
    lines += [f"  note: {note}" for note in rep.notes]
    return (0 if rep.within_lin_unique else 1), _render(payload, cfg.fmt, lines)


def _cmd_normalize(cfg: JobConfig):
    arr = Arrangement.from_dict(_load_json(cfg.params["arrangement"]))
    tmap, lam = normalize(arr)
    payload = {"map": tmap.to_coeffs(), "lambda": lam.to_dict()}
    lines = [
        f"normalized arrangement of {arr.n + 1} hyperplanes in P^{arr.d}",
        f"lambda rows: {[[repr(x) for x in r] for r in lam.rows]}",
    ]
    return 0, _render(payload, cfg.fmt, lines)


def _cmd_equiv(cfg: JobConfig):
    p = cfg.params
    a = Arrangement.from_dict(_load_json(p["a"]))
    b = Arrangement.from_dict(_load_json(p["b"]))
    witness = pgl_equivalent(a, b, p.get("mode") or "labeled")
    if witness is None:
        payload = {"equivalent": False}
        return 1, _render(payload, cfg.fmt, ["not equivalent"])
    tmap, perm = witness
    payload = {"equivalent": True, "map": tmap.to_coeffs(),
               "permutation": list(perm)}
    return 0, _render(payload, cfg.fmt,
                      [f"equivalent via permutation {list(perm)}"])


def _cmd_moduli(cfg: JobConfig):
    p = cfg.params
    if p.get("model"):
        lam = variety.FermatModel.from_dict(_load_json(p["model"])).lam
    else:
        lam = LambdaParams.from_dict(_load_json(p["lambda_file"]))
    res = moduli.field_of_moduli(lam)
    payload = res.to_dict()
    payload["entry_field_degree"] = moduli.entry_field_degree(lam)
    lines = [
        f"field of moduli exponent e = {res.exponent} "
        f"(entries generate a degree-{payload['entry_field_degree']} subfield)",
        f"note: {res.note}",
    ]
    return 0, _render(payload, cfg.fmt, lines)


_COMMANDS = {
    "classify": _cmd_classify,
    "build": _cmd_build,
    "points": _cmd_points,
    "smooth": _cmd_smooth,
    "deck": _cmd_deck,
    "lin": _cmd_lin,
    "unique": _cmd_unique,
    "lucas": _cmd_lucas,
    "normalize": _cmd_normalize,
    "equiv": _cmd_equiv,
    "moduli": _cmd_moduli,
}


def run(cfg: JobConfig):
    """Dispatch a job; returns (exit_code, output text)."""
    return _COMMANDS[cfg.command](cfg)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["human", "json"], default="human")
    common.add_argument("--cap", type=int, default=None,
                        help="point-scan budget (env GENFERMAT_BUDGET)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized inputs")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker cap; current workloads run in-process")

    ap = argparse.ArgumentParser(prog="genfermat",
                                 description="generalized Fermat variety toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common])
    for flag in ("--d", "--k", "--n", "--p"):
        c.add_argument(flag, type=int, required=True)

    c = sub.add_parser("lucas", parents=[common])
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--p", type=int, required=True)

    c = sub.add_parser("build", parents=[common])
    for flag in ("--d", "--k", "--n", "--p"):
        c.add_argument(flag, type=int, required=True)
    c.add_argument("--m", type=int, default=1, help="field extension degree")
    c.add_argument("--lambda", dest="lam", default=None,
                   help="JSON rows of integer entries, e.g. [[2,3]]")
    c.add_argument("--random-lambda", action="store_true")
    c.add_argument("--out", default="-")

    for name in ("points", "smooth", "deck", "lin", "unique"):
        c = sub.add_parser(name, parents=[common])
        c.add_argument("--model", required=True)
        if name == "points":
            c.add_argument("--ext", type=int, default=1)
            c.add_argument("--list", action="store_true")
        if name == "smooth":
            c.add_argument("--ext", default="1",
                           help="comma-separated extension degrees")
        if name == "unique":
            c.add_argument("--oracle-budget", type=int, default=5000)

    c = sub.add_parser("normalize", parents=[common])
    c.add_argument("--arrangement", required=True)

    c = sub.add_parser("equiv", parents=[common])
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    c.add_argument("--mode", choices=["labeled", "unlabeled"], default="labeled")

    c = sub.add_parser("moduli", parents=[common])
    c.add_argument("--model", default=None)
    c.add_argument("--lambda-file", default=None)
    return ap


def _config_from_args(args: argparse.Namespace) -> JobConfig:
    params = {}
    skip = {"command", "format", "cap", "seed", "jobs"}
    for key, value in vars(args).items():
        if key in skip:
            continue
        params[key if key != "lam" else "lambda"] = value
    if args.command == "moduli" and not (params.get("model") or params.get("lambda_file")):
        raise GenFermatError("moduli needs --model or --lambda-file")
    return JobConfig(args.command, params, args.format, args.cap,
                     args.seed, args.jobs)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        code, text = run(cfg)
    except GenFermatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
