"""Command-line surface: cosets, check and search.

Reports are JSON documents with stable field names (newline-delimited when a
command emits several), so fixture runs can be diffed in CI.  Exit codes:
0 = success / all requested forms certified, 1 = certification failed,
2 = invalid input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .cyclic import (
    DEFAULT_BUDGET,
    DEFAULT_MC_SAMPLES,
    cyclotomic_cosets,
    coset_generator_poly,
)
from .errors import BudgetExceededError, NotSelfOrthogonalError, QCStabError
from .field import make_field, multiplicative_order
from .poly import Poly, xn1
from .qc import (
    QCCode,
    as_form,
    check_self_orth_condition,
    d_q_bound,
    d_qe_bound,
    exact_qc_distance,
    h_admissible,
    qc_build,
    trace_h,
    verify_orthogonality,
)
from .quantum import derive_params

EXACT_CHECK_CAP = 1 << 20


@dataclass
class RunConfig:
    n: int
    p: int
    r: int = 1
    f: str | None = None
    g: str | None = None
    h: str | None = None
    f_cosets: str | None = None
    g_cosets: str | None = None
    forms: list[str] = dc_field(default_factory=lambda: ["symplectic"])
    budget: int = DEFAULT_BUDGET
    mc_samples: int = DEFAULT_MC_SAMPLES
    seed: int = 0
    workers: int = 1
    nested: bool = True

    def echo(self) -> dict:
        return {
            "n": self.n, "p": self.p, "r": self.r, "f": self.f, "g": self.g,
            "h": self.h, "f_cosets": self.f_cosets, "g_cosets": self.g_cosets,
            "forms": list(self.forms), "budget": self.budget,
            "mc_samples": self.mc_samples, "seed": self.seed,
        }


def _parse_config_file(path: str) -> dict:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        key, value = line.split("=", 1)
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _reps(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(t) for t in text.split(",") if t.strip()]


def _cosets_for_reps(n: int, q: int, reps) -> list[list[int]]:
    table = {c[0]: c for c in cyclotomic_cosets(n, q)}
    rep_of = {}
    for c in table.values():
        for e in c:
            rep_of[e] = c[0]
    out = []
    seen = set()
    for rep in reps:
        key = rep_of[rep % n]
        if key in seen:
            continue
        seen.add(key)
        out.append(table[key])
    return out


def _resolve_generator(field, n: int, spec: str | None, cosets: str | None,
                       name: str) -> Poly:
    """Explicit polynomial ('poly:...' or bare grammar), 'cosets:...' selector
    or the --f-cosets/--g-cosets flag; defaults to 1."""
    if spec and cosets:
        raise ValueError(f"both --{name} and --{name}-cosets given")
    if spec:
        spec = spec.strip()
        if spec.startswith("cosets:"):
            cosets = spec[len("cosets:"):]
        else:
            if spec.startswith("poly:"):
                spec = spec[len("poly:"):]
            return Poly.parse(field, spec)
    if cosets is not None:
        sel = _cosets_for_reps(n, field.q, _reps(cosets))
        if not sel:
            return Poly.one(field)
        return coset_generator_poly(n, field, sel)
    return Poly.one(field)


def _resolve_h(field, n: int, spec: str | None) -> Poly:
    if spec is None or not spec.strip():
        return Poly.zero(field)
    spec = spec.strip()
    if spec == "linear":
        return Poly.parse(field, "x+1")
    if spec == "artin-schreier":
        return (Poly.monomial(field, field.p) - Poly.x(field)) % xn1(field, n)
    if spec.startswith("trace:"):
        s = int(spec[len("trace:"):])
        m = multiplicative_order(field.q, n)
        return trace_h(field.p, field.r, m, s, n)
    if spec.startswith("poly:"):
        spec = spec[len("poly:"):]
    return Poly.parse(field, spec)


def _evaluate_form(Q: QCCode, form_name: str, cfg: RunConfig) -> tuple[dict, bool]:
    form = as_form(form_name)
    t0 = time.perf_counter()
    cond = check_self_orth_condition(Q, form)
    oracle = verify_orthogonality(Q, form)
    t_cert = time.perf_counter() - t0
    admissible = h_admissible(Q.h, Q.n, Q.field)
    report = {
        "input": cfg.echo(),
        "n": Q.n,
        "q": Q.field.q,
        "form": str(form),
        "dim": Q.dimension,
        "k": None,
        "d_lower": None,
        "d_method": None,
        "condition_branch": cond.branch,
        "oracle": bool(oracle),
        "admissible_h": bool(admissible),
        "terms": None,
        "params": None,
    }
    t1 = time.perf_counter()
    bound = None
    if admissible:
        bound_fn = d_q_bound if form.value == "symplectic" else d_qe_bound
        bound, terms = bound_fn(Q, budget=cfg.budget, mc_samples=cfg.mc_samples,
                                seed=cfg.seed, workers=cfg.workers,
                                _with_terms=True)
        report["terms"] = [t.as_dict() for t in terms]
        report["d_lower"] = None if bound.lower == float("inf") else int(bound.lower)
        report["d_method"] = bound.method
    certified = False
    if cond.holds and oracle:
        try:
            params = derive_params(Q, form, budget=cfg.budget,
                                   mc_samples=cfg.mc_samples, seed=cfg.seed,
                                   workers=cfg.workers, bound=bound)
            report["k"] = params.k
            report["params"] = params.as_dict()
            certified = True
        except NotSelfOrthogonalError:  # pragma: no cover - guarded above
            certified = False
    if Q.field.q ** Q.dimension <= min(cfg.budget, EXACT_CHECK_CAP):
        try:
            ex = exact_qc_distance(Q, form, budget=cfg.budget,
                                   workers=cfg.workers)
            report["d_exact"] = (None if ex.lower == float("inf")
                                 else int(ex.lower))
        except BudgetExceededError:
            pass
    report["timings"] = {
        "certify_s": round(t_cert, 6),
        "distance_s": round(time.perf_counter() - t1, 6),
    }
    return report, certified


def _emit(reports, out: str | None, fixtures: str | None, tag: str):
    text = "\n".join(json.dumps(r, sort_keys=True) for r in reports)
    if out:
        Path(out).write_text(text + ("\n" if text else ""))
    elif text:
        print(text)
    if fixtures:
        fdir = Path(fixtures)
        fdir.mkdir(parents=True, exist_ok=True)
        for i, r in enumerate(reports):
            name = f"{tag}_n{r['n']}_q{r['q']}_{r['form']}_{i:04d}.json"
            (fdir / name).write_text(json.dumps(r, sort_keys=True, indent=2))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_cosets(args) -> int:
    q = args.p ** args.r
    cosets = cyclotomic_cosets(args.n, q)
    if args.json:
        print(json.dumps({"n": args.n, "q": q,
                          "cosets": cosets}, sort_keys=True))
        return 0
    print(f"# cyclotomic cosets mod n={args.n} w.r.t. q={q}")
    total = 0
    for c in cosets:
        total += len(c)
        print(f"rep={c[0]:>5}  size={len(c):>3}  {c}")
    print(f"# {len(cosets)} cosets, total {total} exponents")
    return 0


def _build_qc(cfg: RunConfig) -> QCCode:
    field = make_field(cfg.p, cfg.r)
    f = _resolve_generator(field, cfg.n, cfg.f, cfg.f_cosets, "f")
    g = _resolve_generator(field, cfg.n, cfg.g, cfg.g_cosets, "g")
    h = _resolve_h(field, cfg.n, cfg.h)
    return qc_build(cfg.n, field, f, g, h)


def cmd_check(cfg: RunConfig, out: str | None, fixtures: str | None) -> int:
    Q = _build_qc(cfg)
    reports = []
    all_ok = True
    for form_name in cfg.forms:
        report, certified = _evaluate_form(Q, form_name, cfg)
        report["certified"] = certified
        all_ok = all_ok and certified
        reports.append(report)
    _emit(reports, out, fixtures, "check")
    return 0 if all_ok else 1


def _subsets_lex(reps: list[int]):
    """All subsets of the representative list, in lexicographic order of the
    sorted representative tuples."""
    reps = sorted(reps)
    subsets = []
    for k in range(len(reps) + 1):
        subsets.extend(itertools.combinations(reps, k))
    return sorted(subsets)


def _search_candidate(payload):
    cfg_dict, f_reps, g_reps = payload
    cfg = RunConfig(**cfg_dict)
    field = make_field(cfg.p, cfg.r)
    try:
        f = (coset_generator_poly(cfg.n, field,
                                  _cosets_for_reps(cfg.n, field.q, f_reps))
             if f_reps else Poly.one(field))
        g = (coset_generator_poly(cfg.n, field,
                                  _cosets_for_reps(cfg.n, field.q, g_reps))
             if g_reps else Poly.one(field))
        h = _resolve_h(field, cfg.n, cfg.h)
        Q = qc_build(cfg.n, field, f, g, h)
    except QCStabError:
        return []
    out = []
    for form_name in cfg.forms:
        form = as_form(form_name)
        try:
            cond = check_self_orth_condition(Q, form)
        except QCStabError:
            continue
        if not cond.holds:
            continue
        report, certified = _evaluate_form(Q, form_name, cfg)
        if not certified:
            continue
        report["f_cosets_used"] = list(f_reps)
        report["g_cosets_used"] = list(g_reps)
        out.append(report)
    return out


def cmd_search(cfg: RunConfig, out: str | None, fixtures: str | None) -> int:
    field = make_field(cfg.p, cfg.r)
    if not cfg.nested:
        print("warning: searching f-cosets outside g-cosets; the nested "
              "chain condition cannot hold for those candidates",
              file=sys.stderr)
    pool_f = [c[0] for c in _cosets_for_reps(cfg.n, field.q,
                                             _reps(cfg.f_cosets or ""))]
    pool_g = [c[0] for c in _cosets_for_reps(cfg.n, field.q,
                                             _reps(cfg.g_cosets or ""))]
    candidates = []
    for g_sub in _subsets_lex(pool_g):
        f_pool = [r for r in pool_f if r in g_sub] if cfg.nested else pool_f
        for f_sub in _subsets_lex(f_pool):
            candidates.append((f_sub, g_sub))
    candidates.sort()
    cfg_dict = {k: getattr(cfg, k) for k in (
        "n", "p", "r", "f", "g", "h", "f_cosets", "g_cosets", "forms",
        "budget", "mc_samples", "seed", "workers", "nested")}
    cfg_dict["workers"] = 1  # candidate evaluation stays single-threaded
    payloads = [(cfg_dict, f_sub, g_sub) for f_sub, g_sub in candidates]
    if cfg.workers > 1 and payloads:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_search_candidate, payloads, chunksize=4))
    else:
        results = [_search_candidate(p) for p in payloads]
    reports = []
    seen = set()
    for result in results:
        for report in result:
            key = (report["n"], report["k"], report["d_lower"])
            if key in seen:
                continue
            seen.add(key)
            reports.append(report)
    _emit(reports, out, fixtures, "search")
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _add_run_args(sub):
    sub.add_argument("--config", help="flat key=value config file")
    sub.add_argument("--n", type=int, help="block length n (total length 2n)")
    sub.add_argument("--p", type=int, help="field characteristic")
    sub.add_argument("--r", type=int, help="extension degree (q = p^r)")
    sub.add_argument("--f", help="f: polynomial, poly:<...> or cosets:<reps>")
    sub.add_argument("--g", help="g: polynomial, poly:<...> or cosets:<reps>")
    sub.add_argument("--h", help="h: polynomial, linear, artin-schreier or trace:<s>")
    sub.add_argument("--f-cosets", dest="f_cosets",
                     help="comma-separated coset representatives for f")
    sub.add_argument("--g-cosets", dest="g_cosets",
                     help="comma-separated coset representatives for g")
    sub.add_argument("--form", action="append", dest="forms",
                     choices=["symplectic", "euclidean", "hermitian"],
                     help="duality form (repeatable)")
    sub.add_argument("--budget", type=int, help="enumeration budget (codewords)")
    sub.add_argument("--mc-samples", dest="mc_samples", type=int,
                     help="monte-carlo sample count")
    sub.add_argument("--seed", type=int, help="monte-carlo seed")
    sub.add_argument("--workers", type=int, help="worker count")
    sub.add_argument("--no-nested", dest="nested", action="store_false",
                     default=None, help="search: allow f-cosets outside g-cosets")
    sub.add_argument("--out", help="write report(s) to this path")
    sub.add_argument("--fixtures", help="also write one JSON file per report here")


def _config_from_args(args) -> RunConfig:
    base = {}
    if args.config:
        base = _parse_config_file(args.config)
    def pick(key, cast=None, default=None):
        v = getattr(args, key, None)
        if v is None:
            v = base.get(key)
            if v is not None and cast is not None:
                v = cast(v)
        return default if v is None else v

    forms = getattr(args, "forms", None)
    if forms is None and "form" in base:
        forms = [t.strip() for t in base["form"].split(",") if t.strip()]
    if forms is None and "forms" in base:
        forms = [t.strip() for t in base["forms"].split(",") if t.strip()]
    nested = pick("nested", lambda s: s.lower() not in ("false", "0", "no"))
    n = pick("n", int)
    p = pick("p", int)
    if n is None or p is None:
        raise ValueError("--n and --p are required (flag or config file)")
    return RunConfig(
        n=n, p=p, r=pick("r", int, 1),
        f=pick("f"), g=pick("g"), h=pick("h"),
        f_cosets=pick("f_cosets"), g_cosets=pick("g_cosets"),
        forms=forms or ["symplectic"],
        budget=pick("budget", int, DEFAULT_BUDGET),
        mc_samples=pick("mc_samples", int, DEFAULT_MC_SAMPLES),
        seed=pick("seed", int, 0),
        workers=pick("workers", int, 1),
        nested=True if nested is None else nested,
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qcstab",
        description="Index-2 quasi-cyclic codes and the stabilizer quantum "
                    "codes they induce.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    cosets = sub.add_parser("cosets", help="list cyclotomic cosets mod n")
    cosets.add_argument("--n", type=int, required=True)
    cosets.add_argument("--p", type=int, required=True)
    cosets.add_argument("--r", type=int, default=1)
    cosets.add_argument("--json", action="store_true")

    check = sub.add_parser("check", help="certify one construction end to end")
    _add_run_args(check)

    search = sub.add_parser("search", help="scan coset subsets for certified codes")
    _add_run_args(search)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "cosets":
            return cmd_cosets(args)
        cfg = _config_from_args(args)
        if args.command == "check":
            return cmd_check(cfg, args.out, args.fixtures)
        return cmd_search(cfg, args.out, args.fixtures)
    except (QCStabError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
