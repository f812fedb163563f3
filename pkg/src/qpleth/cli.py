"""Command line entry point: ``qpleth <command> ...``; JSON to stdout."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import hall_littlewood as hl
from . import spin_mn
from .exact import as_trational
from .oracles import oracle_hl, oracle_q
from .verify import SUITES, SweepConfig, run_suite

SCHEMA = "qpleth/1"


class UsageError(Exception):
    pass


def parse_ints(text: str) -> tuple[int, ...]:
    """``"3,1"``, ``"3 1"``, ``"[3,1]"`` or ``""`` (empty)."""
    body = text.strip().strip("[]()").replace(",", " ")
    try:
        return tuple(int(x) for x in body.split())
    except ValueError:
        raise UsageError(f"not a list of integers: {text!r}") from None


def _terms(expansion: dict, key: str) -> list[dict]:
    ordered = sorted(expansion.items(), key=lambda kv: kv[0], reverse=True)
    return [{"lambda": list(lam), key: str(c)} for lam, c in ordered]


def cmd_expand_q(args) -> tuple[dict, int]:
    mu = parse_ints(args.mu)
    fn = {
        "comb": spin_mn.pleth_expand_comb,
        "pf": spin_mn.pleth_expand_pf,
        "oracle": oracle_q,
    }[args.method]
    exp = fn(args.s, args.k, mu)
    return {"s": args.s, "k": args.k, "mu": list(mu), "method": args.method, "terms": _terms(exp, "coeff")}, 0


def cmd_expand_hl(args) -> tuple[dict, int]:
    mu = parse_ints(args.mu)
    fn = hl.pleth_expand_hl if args.method == "rule" else oracle_hl
    exp = fn(args.s, args.k, mu)
    return {"s": args.s, "k": args.k, "mu": list(mu), "method": args.method, "terms": _terms(exp, "t_coeff")}, 0


def cmd_coeff(args) -> tuple[dict, int]:
    lam, mu = parse_ints(args.lam), parse_ints(args.mu)
    pf = spin_mn.coeff_pfaffian(lam, mu, args.s)
    k = (sum(lam) - sum(mu)) // args.s
    c = pf * Fraction(2) ** (len(mu) - len(lam))
    return {
        "lambda": list(lam),
        "mu": list(mu),
        "s": args.s,
        "k": k,
        "pfaffian": pf,
        "coeff": str(c),
        "is_strip": spin_mn.is_strip(lam, mu, args.s, k),
    }, 0


def cmd_strip_cert(args) -> tuple[dict, int]:
    lam, mu = parse_ints(args.lam), parse_ints(args.mu)
    diff = sum(lam) - sum(mu)
    if diff <= 0 or diff % args.s:
        raise UsageError("|λ| - |μ| must be a positive multiple of s")
    k = diff // args.s
    if not spin_mn.is_strip(lam, mu, args.s, k):
        return {"lambda": list(lam), "mu": list(mu), "s": args.s, "k": k, "is_strip": False}, 0
    cert = spin_mn.strip_certificate(lam, mu, args.s)
    return {"is_strip": True, **cert.to_json()}, 0


def cmd_straighten(args) -> tuple[dict, int]:
    word = parse_ints(args.word)
    terms = {lam: as_trational(c) for lam, c in hl.straighten(word).items()}
    out = {"word": list(word), "terms": _terms(terms, "t_coeff")}
    if args.tree:
        out["tree"] = hl.straightening_tree(word)
    return out, 0


def cmd_verify(args) -> tuple[dict, int]:
    cfg = SweepConfig.from_file(args.config) if args.config else SweepConfig()
    if args.parallel:
        cfg.parallel = True
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(n, cfg) for n in names]
    out = {"reports": [r.to_json() for r in reports], "ok": all(r.ok for r in reports)}
    if args.report:
        with open(args.report, "w") as fh:
            json.dump({"schema": SCHEMA, **out}, fh, indent=2)
    return out, 0 if out["ok"] else 1


def _pretty(cmd: str, data: dict) -> str:
    lines = []
    if "terms" in data:
        key = "t_coeff" if data["terms"] and "t_coeff" in data["terms"][0] else "coeff"
        head = {k: v for k, v in data.items() if k not in ("terms", "tree")}
        lines.append("  ".join(f"{k}={v}" for k, v in head.items()))
        width = max((len(str(t["lambda"])) for t in data["terms"]), default=6)
        for t in data["terms"]:
            lines.append(f"  {str(t['lambda']):<{width}}  {t[key]}")
        if not data["terms"]:
            lines.append("  (zero)")
    elif "reports" in data:
        lines.append(f"{'suite':<12}{'cases':>8}{'failed':>8}{'ms':>10}")
        for r in data["reports"]:
            lines.append(f"{r['suite']:<12}{r['cases_total']:>8}{r['cases_failed']:>8}{r['elapsed_ms']:>10}")
            for f in r["failures"][:3]:
                lines.append(f"    {f['input']}: expected {f['expected']}, got {f['actual']}")
    else:
        for k, v in data.items():
            lines.append(f"{k:<12}{v}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qpleth", description="Plethystic Murnaghan-Nakayama rules, exactly.")
    p.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("expand-q", help="(p_s ∘ q_k) Q_mu in the Schur Q basis (odd s)")
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--mu", default="", help="strict partition, e.g. 3,1 (empty for none)")
    q.add_argument("--method", choices=["comb", "pf", "oracle"], default="comb")
    q.set_defaults(func=cmd_expand_q)

    h = sub.add_parser("expand-hl", help="(p_s ⋄ q_k(t)) H_mu in the Hall-Littlewood basis")
    h.add_argument("--s", type=int, required=True)
    h.add_argument("--k", type=int, required=True)
    h.add_argument("--mu", default="")
    h.add_argument("--method", choices=["rule", "oracle"], default="rule")
    h.set_defaults(func=cmd_expand_hl)

    c = sub.add_parser("coeff", help="Pfaffian coefficient of Q_lambda for one pair")
    c.add_argument("--lambda", dest="lam", required=True)
    c.add_argument("--mu", default="")
    c.add_argument("--s", type=int, required=True)
    c.set_defaults(func=cmd_coeff)

    sc = sub.add_parser("strip-cert", help="strip membership with A, sigma and sign")
    sc.add_argument("--lambda", dest="lam", required=True)
    sc.add_argument("--mu", default="")
    sc.add_argument("--s", type=int, required=True)
    sc.set_defaults(func=cmd_strip_cert)

    st = sub.add_parser("straighten", help="H_word in the H_lambda basis (use --word=-1,2 for a leading minus)")
    st.add_argument("--word", required=True)
    st.add_argument("--tree", action="store_true", help="include the canonical path tree")
    st.set_defaults(func=cmd_straighten)

    v = sub.add_parser("verify", help="run property sweeps")
    v.add_argument("--suite", choices=["all", *SUITES], default="all")
    v.add_argument("--config", help="key=value file (s_values, k_max, degree_max, parallel, seed)")
    v.add_argument("--parallel", action="store_true")
    v.add_argument("--report", help="also write the JSON report to this path")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        data, code = args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"qpleth: error: {exc}", file=sys.stderr)
        return 2
    if args.pretty:
        print(_pretty(args.command, data))
    else:
        print(json.dumps({"schema": SCHEMA, **data}))
    return code


if __name__ == "__main__":
    sys.exit(main())
