"""Command-line front end: ``python -m veryeven {verify,orbit} ...``.

Every command produces one report ``{"schema": 1, "command", "parameters",
"verdict", "payload"}``.  Exit status is 0 on PASS, 1 on FAIL or PARTIAL (a
resource cap was hit; the payload lists the sub-checks that finished) and 2 on
usage errors.  JSON output carries no timing so that identical invocations are
byte-identical; the text rendering prints wall time.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .bmod import DEFAULT_CAP, ResourceCapExceeded, nilradical_weights
from .orbits import (LABELS, LabeledPartition, RichardsonNotStabilized, hasse_dot, is_very_even,
                     kp_reduction, minimal_degenerations, orbit_dimension, orbit_records,
                     richardson_orbit, sample_jordan_types, validate_partition)
from .prover import (audit_stages, build_scenario, check_demi1, check_demi2, stage_certificate,
                     verify_main_ses, verify_shift_identity, verify_step1_identity,
                     verify_step2_vanishing, verify_step3_pivot)
from .prover.identities import shift_a_range
from .prover.replay import koszul_cross_check, step1_setup, step2_setup, step3_setup
from .rootsys import ParabolicMarker, build_root_system

SCHEMA = 1
PASS, FAIL, PARTIAL = "PASS", "FAIL", "PARTIAL"


class UsageError(Exception):
    pass


def _ints(s: str) -> list:
    try:
        return [int(x) for x in s.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


class _Progress:
    """Collects finished sub-checks so a cap violation can still report them."""

    def __init__(self):
        self.done: list = []

    def add(self, item: dict) -> dict:
        self.done.append(item)
        return item


# ---- verify -------------------------------------------------------------

def _verify_lemma(args, prog):
    rs = build_root_system(args.family, args.rank)
    if len(args.weight) != rs.rank:
        raise UsageError(f"--weight needs {rs.rank} entries for {rs.name}")
    check = check_demi1 if args.cmd == "demi1" else check_demi2
    res = check(rs, tuple(args.weight), args.a, args.b, args.chain)
    return (PASS if res else FAIL), {"root_system": rs.name, "certificate": res.to_json()}


def _stage_common(setup, identity, n_max, prog, skip=()):
    cert = stage_certificate(setup)
    bad = koszul_cross_check(setup, n_max, skip=skip)
    checks = []
    for n in range(n_max + 1):
        rep = identity(n)
        checks.append(prog.add(rep.to_json()))
    ok = cert.accepted and not bad and all(c["holds"] for c in checks)
    payload = {
        "certificate": cert.to_json(),
        "koszul_cross_check_failures": [[j, n, chi.to_json()] for (j, n), chi in sorted(bad.items())],
        "identities": checks,
    }
    return ok, payload


def _verify_step(args, prog):
    l, n_max = args.l, args.n_max
    cache: dict = {}
    if args.cmd == "step1":
        setup = step1_setup(l, args.r)
        ok, payload = _stage_common(setup, lambda n: verify_step1_identity(l, args.r, n, cache),
                                    n_max, prog)
    elif args.cmd == "step2":
        setup = step2_setup(l, args.r, args.s)
        ok, payload = _stage_common(
            setup, lambda n: verify_step2_vanishing(l, args.r, args.s, n, cache), n_max, prog)
        q = setup.extra["quotient_certificate"]
        payload["quotient_certificate"] = q.to_json()
        ok = ok and bool(q) and all(c["quotient_vanishes"] for c in payload["identities"])
    else:
        setup = step3_setup(l, args.r, args.s)
        ok, payload = _stage_common(
            setup, lambda n: verify_step3_pivot(setup.rs, l, {"r": args.r, "s": args.s}, n, cache),
            n_max, prog, skip=(l,))
    payload["root_system"] = setup.rs.name
    return (PASS if ok else FAIL), payload


def _verify_shift(args, prog):
    cache: dict = {}
    cases = []
    if args.cmd == "shift-a":
        rs = build_root_system("A", args.l)
        ms = [args.m] if args.m is not None else range(1, args.l + 1)
        for m in ms:
            rs_range = shift_a_range(args.l, m) if args.r is None else [args.r]
            for r in rs_range:
                for n in range(args.n_max + 1):
                    rep = verify_shift_identity(rs, "A", {"m": m, "r": r}, n, cache, args.cap)
                    cases.append(prog.add(rep.to_json()))
    else:
        rs = build_root_system("D", 2 * args.l + 1)
        for r in ([args.r] if args.r is not None else range(-3, 1)):
            for n in range(args.n_max + 1):
                rep = verify_shift_identity(rs, "D", {"r": r}, n, cache, args.cap)
                cases.append(prog.add(rep.to_json()))
    ok = all(c["holds"] for c in cases)
    return (PASS if ok else FAIL), {"root_system": rs.name, "cases": cases}


def _verify_main(args, prog):
    sc = build_scenario(args.k, args.a, args.b)
    e = sc.composed_exponent if args.exponent == "composed" else sc.stated_exponent
    cache: dict = {}
    rows = []
    for n in range(args.n_max + 1):
        rep = verify_main_ses(sc, n, e, args.cap, cache)
        rows.append(prog.add(rep.to_json()))
    ok = all(r["holds"] and r["nonnegative"] for r in rows)
    payload = {"scenario": sc.to_json(), "exponent_used": args.exponent, "correction_drop": e,
               "checks": rows}
    if args.audit:
        links = audit_stages(sc, args.n_max, args.cap)
        payload["stage_audit"] = links
        payload["offsets_telescope_to_stated_exponent"] = sc.composed_exponent == sc.stated_exponent
        ok = ok and all(x["holds"] for x in links if x.get("candidate", "composed") == "composed")
    return (PASS if ok else FAIL), payload


# ---- orbit --------------------------------------------------------------

def _orbit_info(args, prog):
    n, parts = args.rank, tuple(args.partition)
    v = validate_partition(parts, n)
    if not v:
        return FAIL, {"partition": list(parts), "valid": False, "reason": v.reason}
    labels = ([args.label] if args.label else list(LABELS)) if is_very_even(parts) else [None]
    orbits = []
    for lab in labels:
        o = LabeledPartition(parts, lab)
        orbits.append({**o.to_json(), "dimension": orbit_dimension(o, n),
                       "covers": [c.to_json() for c in minimal_degenerations(o, n)]})
    payload = {"partition": list(parts), "valid": True, "very_even": v.very_even,
               "labels": [lab for lab in labels if lab], "orbits": orbits}
    if args.lower:
        payload["kp_reduction"] = kp_reduction(parts, args.lower).to_json()
    return PASS, payload


def _orbit_hasse(args, prog):
    if args.format == "dot":
        return PASS, {"dot": hasse_dot(args.rank)}
    return PASS, {"rank": args.rank, "orbits": orbit_records(args.rank)}


def _orbit_richardson(args, prog):
    rs = build_root_system("D", args.rank)
    P = ParabolicMarker(args.parabolic)
    P.validate(rs)
    samples = [str(s) for s in sample_jordan_types(rs, P, args.seed, args.trials)]
    try:
        o = richardson_orbit(rs, P, args.seed, args.trials)
    except RichardsonNotStabilized as e:
        return FAIL, {"parabolic": sorted(P.removed), "samples": samples, "error": str(e)}
    dim_u = len(nilradical_weights(rs, P))
    dim = orbit_dimension(o, args.rank)
    payload = {"parabolic": sorted(P.removed), "orbit": o.to_json(), "dimension": dim,
               "twice_dim_nilradical": 2 * dim_u, "samples": samples,
               "label_convention": "I iff dim(L(x) ∩ span(e_1..e_n)) ≡ n mod 2"}
    return (PASS if dim == 2 * dim_u else FAIL), payload


# ---- parser -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-max", type=int, default=None, help="largest degree checked")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=7)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="max distinct weights in any multiset")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")

    p = argparse.ArgumentParser(prog="veryeven", description=__doc__.splitlines()[0])
    top = p.add_subparsers(dest="group", required=True)

    ver = top.add_parser("verify", help="replay lemmas and check character identities")
    vs = ver.add_subparsers(dest="cmd", required=True)
    for name in ("demi1", "demi2"):
        q = vs.add_parser(name, parents=[common])
        q.add_argument("--family", choices=("A", "D"), default="A")
        q.add_argument("--rank", type=int, required=True)
        q.add_argument("--weight", type=_ints, required=True, help="fundamental coordinates")
        q.add_argument("--a", type=int, required=True)
        q.add_argument("--b", type=int, required=True)
        q.add_argument("--chain", type=_ints, default=None)
        q.set_defaults(func=_verify_lemma, n_default=0)
    for name, r0 in (("step1", 0), ("step2", -1), ("step3", -1)):
        q = vs.add_parser(name, parents=[common])
        q.add_argument("--l", type=int, default=2)
        q.add_argument("--r", type=int, default=r0)
        if name != "step1":
            q.add_argument("--s", type=int, default=0)
        q.set_defaults(func=_verify_step, n_default=3)
    q = vs.add_parser("shift-a", parents=[common])
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--m", type=int, default=None, help="default: every m")
    q.add_argument("--r", type=int, default=None, help="default: the full admissible range")
    q.set_defaults(func=_verify_shift, n_default=4)
    q = vs.add_parser("shift-d", parents=[common])
    q.add_argument("--l", type=int, default=2)
    q.add_argument("--r", type=int, default=None, help="default: -3..0")
    q.set_defaults(func=_verify_shift, n_default=4)
    q = vs.add_parser("main-ses", parents=[common])
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.add_argument("--exponent", choices=("stated", "composed"), default="stated",
                   help="correction drop: 2l+k(a-4)+1, or the value composed from the chain")
    q.add_argument("--audit", action="store_true", help="also check each stage of the chain")
    q.set_defaults(func=_verify_main, n_default=3)

    orb = top.add_parser("orbit", help="nilpotent orbits of so(2n)")
    os_ = orb.add_subparsers(dest="cmd", required=True)
    q = os_.add_parser("info", parents=[common])
    q.add_argument("--rank", type=int, required=True)
    q.add_argument("--partition", type=_ints, required=True)
    q.add_argument("--label", choices=LABELS, default=None)
    q.add_argument("--lower", type=_ints, default=None,
                   help="also reduce the pair (partition, lower) by row/column removal")
    q.set_defaults(func=_orbit_info, n_default=0)
    q = os_.add_parser("hasse", parents=[common])
    q.add_argument("--rank", type=int, required=True)
    q.set_defaults(func=_orbit_hasse, n_default=0)
    q = os_.add_parser("richardson", parents=[common])
    q.add_argument("--rank", type=int, required=True)
    q.add_argument("--parabolic", type=_ints, required=True, help="removed simple roots")
    q.set_defaults(func=_orbit_richardson, n_default=0)
    return p


def _params(args) -> dict:
    skip = {"func", "n_default", "out", "format", "group", "cmd"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _render_text(report: dict, elapsed: float) -> str:
    lines = [f"{report['command']}: {report['verdict']}  ({elapsed:.2f}s)"]
    for k, v in report["parameters"].items():
        lines.append(f"  {k} = {v}")
    pay = report["payload"]
    for key in ("checks", "cases", "identities"):
        for row in pay.get(key, []):
            flag = "ok " if row.get("holds") else "BAD"
            desc = row.get("params") or {"n": row.get("n")}
            lines.append(f"  [{flag}] {desc}")
    for row in pay.get("stage_audit", []):
        flag = "ok " if row["holds"] else "BAD"
        lines.append(f"  [{flag}] {row['link']} drop={row['drop']} {row.get('candidate', '')}".rstrip())
    if "certificate" in pay:
        c = pay["certificate"]
        if "accepted" in c:
            lines.append(f"  certificate: accepted={c['accepted']} uncovered={len(c['uncovered'])} "
                         f"pivots={len(c['pivots'])} mismatches={len(c['mismatches'])}")
        else:
            lines.append(f"  certificate: {c}")
    for key in ("orbit", "orbits", "dimension", "error", "reason", "kp_reduction"):
        if key in pay:
            lines.append(f"  {key}: {pay[key]}")
    if "partial" in pay:
        lines.append(f"  stopped early: {pay['partial']['error']}")
    return "\n".join(lines) + "\n"


_LIST_OPTS = ("--weight", "--chain", "--partition", "--lower", "--parabolic")


def _glue_lists(argv) -> list:
    # argparse takes "-2,0,0" for a flag; bind list values to their option explicitly
    out, it = [], iter(argv)
    for a in it:
        if a in _LIST_OPTS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def run_command(argv) -> tuple:
    """Parse ``argv`` and run it; return ``(exit_status, report, rendered_text, out_path)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_lists(argv))
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else 2), None, "", None
    if args.n_max is None:
        args.n_max = args.n_default
    if args.format == "dot" and args.func is not _orbit_hasse:
        parser.print_usage(sys.stderr)
        print("error: --format dot is only available for 'orbit hasse'", file=sys.stderr)
        return 2, None, "", None
    prog = _Progress()
    t0 = time.perf_counter()
    try:
        verdict, payload = args.func(args, prog)
    except ResourceCapExceeded as e:
        verdict, payload = PARTIAL, {"partial": {"error": str(e), "completed": prog.done}}
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2, None, "", None
    elapsed = time.perf_counter() - t0
    report = {"schema": SCHEMA, "command": f"{args.group} {args.cmd}", "parameters": _params(args),
              "verdict": verdict, "payload": payload}
    if args.format == "dot":
        text = payload["dot"]
    elif args.format == "text":
        text = _render_text(report, elapsed)
    else:
        text = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    return (0 if verdict == PASS else 1), report, text, args.out


def main(argv=None) -> int:
    status, _, text, out = run_command(sys.argv[1:] if argv is None else argv)
    if text:
        if out:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return status
