"""Command-line front end: ``admshell verify|export|enumerate|sigma``.

Exit codes: 0 pass, 2 failed check or theory violation, 1 budget
exhausted, 64 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .admissible import AdmPoset, default_caps, sigma_data, top_two
from .affine import AffineWeylGroup
from .config import CHECKS, SCOPES, RunConfig, parse_coweight, parse_weyl
from .errors import AdmShellError, BudgetError, ConfigError, TheoryViolation
from .figures import FIXTURES, compare_fixture, generate_fixture
from .rootdatum import CartanSpec, build_root_datum, dominant_conjugate
from .shellability import (
    VerificationReport,
    check_witness_agreement,
    negative_label_violations,
    search_root_labeling,
    verify_dual_EL,
    verify_NCM,
    verify_recursive_coatom_ordering,
)

EXIT_OK, EXIT_BUDGET, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("input")
    g.add_argument("--config", help="RunConfig JSON file; only --out, --jobs and --timing still apply")
    g.add_argument("--type", default="A", help="Cartan family, e.g. A, B, G")
    g.add_argument("--rank", type=int, default=1)
    g.add_argument("--lattice", default="sc", choices=["sc", "ad", "gl"])
    g.add_argument("--mu", help='coweight: X_* coordinates "1,1", or theta, rho, omega1+omega2')
    g.add_argument("--v", help="restrict to Adm(mu)_{<=v}; reduced word such as s1s2, or w0")
    g.add_argument("--fixture", choices=FIXTURES)
    g.add_argument("--dominate", action="store_true", help="replace mu by its dominant conjugate")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--jobs", type=int)
    g.add_argument("--timing", action="store_true", help="record wall_time_ms (breaks byte-identical output)")
    g.add_argument("--out", help="output file (default: stdout)")

    p = _Parser(prog="admshell", description="Shellability checks for admissible sets.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run checks and write a report")
    v.add_argument("--check", action="append", choices=CHECKS + ("all",),
                   help="repeatable; default dual_el")
    v.add_argument("--scope", default="all-intervals", choices=SCOPES)
    v.add_argument("--n", type=int, help="N for the ncm check (default <mu,2rho>)")
    v.add_argument("--json", action="store_true", help="print the report JSON instead of a summary")
    v.add_argument("--dump-config", action="store_true", help="print the RunConfig JSON and exit")

    e = sub.add_parser("export", parents=[common], help="write DOT/JSON artifacts")
    e.add_argument("what", choices=["qbg", "hasse", "labels", "wt-table"])
    e.add_argument("--format", default="dot", choices=["dot", "json"])

    sub.add_parser("enumerate", parents=[common], help="list Adm(mu) with lengths")

    s = sub.add_parser("sigma", parents=[common], help="Sigma_w, z_min and a_min for an element")
    s.add_argument("--w", required=True, help="element, e.g. t[1,0]*s1 or s1")
    for sp in sub.choices.values():
        sp.error = p.error  # route parse errors to exit 64
    return p


def config_from_args(args) -> RunConfig:
    if args.config:
        try:
            text = Path(args.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from exc
        cfg = RunConfig.loads(text)
        cfg.out = args.out or cfg.out
        cfg.jobs = args.jobs or cfg.jobs
        cfg.timing = args.timing or cfg.timing
        return cfg.validate()
    checks = getattr(args, "check", None) or ["dual_el"]
    if "all" in checks:
        checks = ["dual_el", "coatom", "ncm"]
    return RunConfig(
        datum={"type": args.type, "rank": args.rank, "lattice": args.lattice},
        mu=args.mu,
        v=args.v,
        checks=list(dict.fromkeys(checks)),
        scope=getattr(args, "scope", "all-intervals"),
        n=getattr(args, "n", None),
        fixture=args.fixture,
        dominate=args.dominate,
        seed=args.seed,
        jobs=args.jobs or 1,
        timing=args.timing,
        out=args.out,
    )


def _group(cfg: RunConfig) -> AffineWeylGroup:
    try:
        spec = CartanSpec.from_json(cfg.datum)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad root datum {cfg.datum}: {exc}") from exc
    return AffineWeylGroup(build_root_datum(spec))


def build_poset(cfg: RunConfig) -> AdmPoset:
    if cfg.mu is None:
        raise ConfigError("--mu is required")
    G = _group(cfg)
    mu = parse_coweight(G.rd, cfg.mu)
    if cfg.dominate:
        mu, _ = dominant_conjugate(G.rd, mu)
    v = parse_weyl(G.rd, cfg.v) if cfg.v is not None else None
    return AdmPoset(G, mu, v, caps=default_caps())


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- verify ----------------------------------------------------------------------------


def _verify_adm(cfg: RunConfig) -> tuple[str, list[tuple[VerificationReport, int]]]:
    p = build_poset(cfg)
    caps = default_caps()
    P, keys, text = p.augmented()
    reports: list[tuple[VerificationReport, int]] = []
    el = None
    for check in cfg.checks:
        if check == "dual_el":
            el = verify_dual_EL(P, keys, cfg.scope, text, jobs=cfg.jobs, timing=cfg.timing)
            reports.append((el, P.n))
        elif check == "coatom":
            reports.append((verify_recursive_coatom_ordering(P, keys=keys, budget=caps["search"], timing=cfg.timing), P.n))
        elif check == "ncm":
            N = cfg.n if cfg.n is not None else p.N
            reports.append((verify_NCM(p.poset(), N, hint=p.coatoms, budget=caps["search"], timing=cfg.timing), len(p)))
        elif check == "top_two":
            recs = top_two(p)  # raises on violation
            rep = VerificationReport(p.ident, "top_two", None, True, intervals_checked=len(recs))
            W = p.rd.weyl
            rep.witnesses = [
                {"w": p.G.format(r.w), "z1": W.word_str(r.presentation.x), "z2": W.word_str(W.inv[r.presentation.y]),
                 "edge": r.edge.kind, "cases": list(r.cases), "increasing_via": p.G.format(r.increasing_via)}
                for r in recs
            ]
            reports.append((rep, len(p)))
        elif check == "witness":
            if el is None or el.scope is None:
                el = verify_dual_EL(P, keys, "top-intervals", text)
            n = check_witness_agreement(p, el)  # raises WitnessMismatch
            reports.append((VerificationReport(p.ident, "witness", None, True, intervals_checked=n), P.n))
        elif check == "negative":
            bad = negative_label_violations(p)
            reports.append((VerificationReport(p.ident, "negative", None, not bad, violations=bad,
                                               intervals_checked=len(p)), P.n))
    return p.ident, reports


def _verify_fixture(cfg: RunConfig) -> tuple[str, list[tuple[VerificationReport, int]]]:
    cmp = compare_fixture(cfg.fixture)
    if not cmp.equal:
        raise TheoryViolation(f"generated poset differs from fixture {cfg.fixture}",
                              witness={"missing": cmp.missing, "extra": cmp.extra, "covers": cmp.cover_mismatches})
    cs, P = generate_fixture(cfg.fixture)
    G = cs.adm.G
    caps = default_caps()
    reports = []
    for check in cfg.checks:
        if check == "ncm":
            N = cfg.n if cfg.n is not None else max(P.rank)
            reports.append((verify_NCM(P, N, budget=caps["search"], timing=cfg.timing), P.n))
        elif check == "dual_el":
            elts = [G.parse_affine_word(w, cs.tau) for w in P.names]
            reports.append((search_root_labeling(G, P, elts, cfg.scope), P.n + 1))
        elif check == "coatom":
            reports.append((verify_recursive_coatom_ordering(P.with_top(), budget=caps["search"], timing=cfg.timing), P.n + 1))
        else:
            raise ConfigError(f"check {check!r} needs an admissible set, not a fixture")
    return P.ident, reports


def _summary(reports: Sequence[tuple[VerificationReport, int]]) -> str:
    lines = []
    for r, size in reports:
        status = "PASS" if r.passed else "FAIL"
        scope = f" [{r.scope}]" if r.scope else ""
        lines.append(f"{status} {r.check}{scope} on {r.poset_id}: {size}-element poset, "
                     f"{r.intervals_checked} checked")
        for w in r.witnesses:
            if "chain" in w:
                steps = " > ".join(w["chain"])
                lines.append(f"  [{w['bottom']}, 1^]: {steps}   labels {', '.join(w['labels'])}")
            else:
                lines.append(f"  witness: {json.dumps(w, ensure_ascii=False)}")
        for v in r.violations:
            lines.append(f"  violation: {json.dumps(v, ensure_ascii=False)}")
    return "\n".join(lines) + "\n"


def cmd_verify(cfg: RunConfig, as_json: bool = False) -> int:
    cfg.validate()
    ident, reports = _verify_fixture(cfg) if cfg.fixture else _verify_adm(cfg)
    # the output path is not part of the result
    settings = {k: v for k, v in cfg.to_json().items() if k != "out"}
    doc = {"config": settings, "poset_id": ident,
           "reports": [dict(r.to_json(), poset_size=size) for r, size in reports]}
    if cfg.out:
        _emit(_dumps(doc), cfg.out)
    sys.stdout.write(_dumps(doc) if as_json else _summary(reports))
    return EXIT_OK if all(r.passed for r, _ in reports) else EXIT_FAIL


# -- export / enumerate / sigma ----------------------------------------------------------------


def cmd_export(cfg: RunConfig, what: str, fmt: str) -> int:
    if what in ("qbg", "wt-table"):
        g = _group(cfg).qbg
        if what == "wt-table":
            text = _dumps(g.wt_table_json())
        else:
            text = g.to_dot() if fmt == "dot" else _dumps(g.to_json())
    elif cfg.fixture:
        if what != "hasse":
            raise ConfigError("fixtures only support export hasse")
        _, P = generate_fixture(cfg.fixture)
        text = P.to_dot() if fmt == "dot" else _dumps(P.to_json())
    else:
        p = build_poset(cfg)
        if what == "hasse":
            text = p.to_dot() if fmt == "dot" else _dumps(p.to_json())
        else:
            P, keys, names = p.augmented()
            text = _dumps([
                {"upper": P.names[x], "lower": P.names[y], "label": names[(x, y)]}
                for x, y in sorted(P.edges, key=lambda e: (P.rank[e[0]], e))
            ])
    _emit(text, cfg.out)
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    p = build_poset(cfg)
    lines = [f"# {p.ident}: {len(p)} elements, <mu,2rho> = {p.N}"]
    lines += [f"{p.length[i]}\t{p.names[i]}" for i in range(len(p))]
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


def cmd_sigma(cfg: RunConfig, w_text: str) -> int:
    p = build_poset(cfg)
    G, W = p.G, p.rd.weyl
    w = G.parse(w_text)
    lines = []
    for pres in G.acute_presentations(w):
        sd = sigma_data(p, w, pres)
        words = lambda xs: "{" + ", ".join(W.word_str(x) for x in xs) + "}"
        lines.append(f"presentation x={W.word_str(pres.x)} lambda={list(pres.lam)} y={W.word_str(pres.y)}")
        lines.append(f"  Sigma_w   = {words(sd.sigma)}")
        lines.append(f"  Sigma_w^J = {words(sd.sigma_J)}")
        lines.append(f"  z_min = {W.word_str(sd.z_min)}   a_min = {W.word_str(sd.a_min)}")
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "verify":
            if args.dump_config:
                sys.stdout.write(cfg.dumps())
                return EXIT_OK
            return cmd_verify(cfg, args.json)
        if args.command == "export":
            return cmd_export(cfg, args.what, args.format)
        if args.command == "enumerate":
            return cmd_enumerate(cfg)
        return cmd_sigma(cfg, args.w)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TheoryViolation as exc:
        print(f"THEORY VIOLATION: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(json.dumps(exc.witness, indent=2, default=str), file=sys.stderr)
        return EXIT_FAIL
    except (AdmShellError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
