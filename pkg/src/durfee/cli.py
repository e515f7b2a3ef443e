"""Command-line entry point.

Exit codes: 0 every check passed, 1 mathematical mismatch (a witness is
printed), 2 usage error. JSON output uses sorted keys and decimal strings
for every computed number; wall time goes to stderr so JSON stays
byte-identical across runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bailey, bijection, classes, identities, ideal, render
from .dissection import (
    andrews_plan,
    bottom_dissect,
    bottom_plan,
    dissect,
    durfee_plan,
    parse_plan,
)
from .partitions import PartitionError, format_partition, parse_partition, partitions_of

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
WORKERS_ENV = "DURFEE_WORKERS"

DEFAULT_ORDER = {"identity": 60, "gen": 30, "bailey": 40}


class UsageError(Exception):
    pass


@dataclass
class Case:
    key: str
    ok: bool
    witness: dict | None = None
    data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"case": self.key, "status": "pass" if self.ok else "fail", "data": self.data}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class RunReport:
    command: str
    params: dict
    cases: list[Case] = field(default_factory=list)
    text: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.ok else EXIT_MISMATCH

    def to_json(self) -> str:
        body = {
            "command": self.command,
            "params": self.params,
            "cases": [c.to_dict() for c in sorted(self.cases, key=lambda c: c.key)],
            "status": "pass" if self.ok else "fail",
        }
        return json.dumps(body, sort_keys=True, indent=2)


# ------------------------------------------------------------------- parsing

def int_list(text: str) -> list[int]:
    """'3', '2,4', '2-5' or a mix like '2,4-6'."""
    out: list[int] = []
    try:
        for tok in text.split(","):
            tok = tok.strip()
            if "-" in tok[1:]:
                lo, hi = tok.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            elif tok:
                out.append(int(tok))
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc
    if not out:
        raise UsageError(f"empty integer list {text!r}")
    return out


def _i_values(text: str | None, admissible: list[int]) -> list[int]:
    if text is None or text == "all":
        return admissible
    vals = int_list(text)
    return vals


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError as exc:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from exc
    return max(1, n)


def _fan_out(fn, jobs):
    n = _workers()
    if n == 1 or len(jobs) < 2:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, jobs))


# -------------------------------------------------------------------- count

def _count_job(job):
    names, r, i, n_max = job
    rows = []
    for n in range(n_max + 1):
        vals = {}
        for name in names:
            vals[name] = classes.count(classes.ClassId(name, r, i), n)
        rows.append((n, vals))
    return (r, i, rows)


def cmd_count(args) -> RunReport:
    names = classes.CLASS_NAMES if args.cls == "all" else tuple(
        c.strip().upper() for c in args.cls.split(","))
    for c in names:
        if c not in classes.CLASS_NAMES:
            raise UsageError(f"unknown class {c!r}; choose from {', '.join(classes.CLASS_NAMES)}")
    rs = int_list(args.r)
    jobs = []
    for r in rs:
        for i in _i_values(args.i, list(range(1, r + 1))):
            for c in names:
                classes.ClassId(c, r, i)  # validates
            jobs.append((names, r, i, args.n))
    report = RunReport("count", {"classes": list(names), "r": rs, "i": args.i or "all",
                                 "n": args.n, "check": bool(args.check)})
    table = []
    for r, i, rows in _fan_out(_count_job, jobs):
        for n, vals in rows:
            table.append((r, i, n, vals))
        if args.check and len(names) > 1:
            bad = next(((n, v) for n, v in rows if len(set(v.values())) > 1), None)
            witness = None
            if bad is not None:
                n, v = bad
                witness = {"n": str(n), "counts": {k: str(x) for k, x in v.items()}}
            report.cases.append(Case(f"r={r},i={i}", bad is None, witness))
    report.params["rows"] = len(table)
    if args.csv or args.json:
        report.params["table"] = [
            {"r": r, "i": i, "n": str(n), **{k: str(x) for k, x in v.items()}}
            for r, i, n, v in table]
    header = ["r", "i", "n", *names]
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r, i, n, v in table:
            w.writerow([r, i, n, *(v[k] for k in names)])
        report.text.append(buf.getvalue().rstrip("\n"))
    else:
        report.text.append("  ".join(f"{h:>6}" for h in header))
        for r, i, n, v in table:
            report.text.append("  ".join(f"{x:>6}" for x in (r, i, n, *(v[k] for k in names))))
    for c in report.cases:
        report.text.append(_case_line(c))
    return report


def _case_line(c: Case) -> str:
    line = f"{'PASS' if c.ok else 'FAIL'} {c.key}"
    if c.witness:
        line += "  witness " + json.dumps(c.witness, sort_keys=True)
    return line


# ------------------------------------------------------------------- verify

def _verify_job(job):
    kwargs, order, show = job
    ident = identities.IdentityId(**kwargs)
    v = identities.verify(ident, order)
    witness = None
    if v.witness is not None:
        k, a, b = v.witness
        witness = {"power": str(k), "sum_side": str(a), "product_side": str(b)}
    data = {"order": str(order)}
    if show:
        data["sum_side"] = v.lhs.to_json()
        data["product_side"] = v.rhs.to_json()
    return Case(str(ident), v.ok, witness, data)


def cmd_verify(args) -> RunReport:
    name = args.identity.upper()
    if name not in identities.IDENTITY_NAMES:
        raise UsageError(f"unknown identity {args.identity!r}; choose from "
                         f"{', '.join(identities.IDENTITY_NAMES)}")
    order = args.order
    if order is None:
        order = DEFAULT_ORDER["gen" if name.startswith("GEN") else "identity"]
    if order < 0:
        raise UsageError("--order must be nonnegative")
    jobs = []
    if name in ("RR1", "RR2"):
        jobs.append(({"name": name}, order, args.series))
    elif name == "JTP":
        if args.z is None or args.step is None:
            raise UsageError("JTP needs --z and --step")
        jobs.append(({"name": name, "z": args.z, "step": args.step}, order, args.series))
    else:
        if args.r is None:
            raise UsageError(f"{name} needs --r")
        for r in int_list(args.r):
            for i in _i_values(args.i, identities.admissible(name, r)):
                kw = {"name": name, "r": r, "i": i, "form": args.form,
                      "uncorrected": args.uncorrected}
                identities.IdentityId(**kw)  # validates before any work starts
                jobs.append((kw, order, args.series))
    report = RunReport("verify", {"identity": name, "r": args.r, "i": args.i or "all",
                                  "order": order, "form": args.form,
                                  "uncorrected": bool(args.uncorrected)})
    report.cases = _fan_out(_verify_job, jobs)
    report.cases.sort(key=lambda c: c.key)
    for c in report.cases:
        report.text.append(_case_line(c))
        if args.series and "sum_side" in c.data:
            report.text.append("  sum:     " + _series_text(c.data["sum_side"]))
            report.text.append("  product: " + _series_text(c.data["product_side"]))
    return report


def _series_text(coeffs) -> str:
    from .qseries import TruncatedSeries
    return str(TruncatedSeries.from_json(coeffs))


# ------------------------------------------------------------------ dissect

def _dissection_for(lam, args):
    if args.plan:
        plan = parse_plan(args.plan)
        if not plan:
            raise UsageError("empty plan")
        top = {k.top_anchored for k in plan}
        if len(top) != 1:
            raise UsageError("a plan cannot mix top and bottom blocks")
        return (dissect if top.pop() else bottom_dissect)(lam, plan), args.plan
    if args.scheme is None or args.r is None or args.i is None:
        raise UsageError("give --plan, or --scheme with --r and --i")
    r, i = int(args.r), int(args.i)
    classes.check_params(r, i)
    if r - 1 < 1:
        raise UsageError("schemes need r >= 2")
    if args.scheme == "D":
        plan = durfee_plan(r, i)
        return dissect(lam, plan), "".join(k.value for k in plan)
    if args.scheme == "A":
        plan = andrews_plan(r, i)
        return dissect(lam, plan), "".join(k.value for k in plan)
    plan = bottom_plan(r, i)
    return bottom_dissect(lam, plan), "".join(k.value for k in plan)


def cmd_dissect(args) -> RunReport:
    lam = parse_partition(args.partition)
    d, plan_text = _dissection_for(lam, args)
    report = RunReport("dissect", {"partition": format_partition(lam), "plan": plan_text})
    blocks = []
    for b in d.blocks:
        blocks.append({
            "kind": b.kind.value, "major": str(b.major), "width": str(b.width),
            "height": str(b.height), "rows": str(b.rows), "empty": b.empty,
            "first_row": str(b.first_row), "side": format_partition(b.side),
            "bottom_height": str(b.bottom_height), "top_height": str(b.top_height)})
    data = {"blocks": blocks, "residual": format_partition(d.residual),
            "residual_rows": str(d.residual_rows)}
    report.cases.append(Case(format_partition(lam), True, None, data))
    report.text.extend(render.diagram(lam, d))
    for b in blocks:
        if b["empty"]:
            report.text.append(f"{b['kind']}: empty")
        else:
            report.text.append(f"{b['kind']}: {b['width']} cols x {b['height']} rows"
                               f" (covers {b['rows']}), side {b['side']}")
    report.text.append(f"residual rows: {d.residual_rows}")
    return report


# ---------------------------------------------------------------- bijection

def _bijection_maps(r, i):
    if i == r - 1 and r >= 2:
        return (lambda lam: bijection.T_map(lam, r), lambda mu: bijection.T_inv(mu, r),
                lambda lam: bijection.in_A_double_prime(lam, r),
                lambda mu: classes.in_A(mu, r, r - 1), "T")
    fwd = bijection.Direction.A_TO_D
    back = bijection.Direction.D_TO_A
    return (lambda lam: bijection.rotate_simple(lam, r, fwd, i),
            lambda mu: bijection.rotate_simple(mu, r, back, i),
            lambda lam: classes.in_A(lam, r, i),
            lambda mu: classes.in_D(mu, r, i), "rotation")


def cmd_bijection(args) -> RunReport:
    r = int(args.r)
    i = r - 1 if args.i is None else int(args.i)
    if r < 2 or i not in (1, r - 1, r):
        raise UsageError("bijections exist for r >= 2 and i in {1, r-1, r}")
    fwd, back, src, dst, label = _bijection_maps(r, i)
    report = RunReport("bijection", {"r": r, "i": i, "map": label})
    if args.partition is not None:
        lam = parse_partition(args.partition)
        if not src(lam):
            raise UsageError(f"{format_partition(lam)} is outside the source class")
        mu = fwd(lam)
        back_ok = back(mu) == lam
        data = {"input": format_partition(lam), "image": format_partition(mu)}
        if label == "T":
            data["branch"] = bijection.T_inv_branch(mu, r).value
        report.cases.append(Case(format_partition(lam), back_ok and dst(mu), None, data))
        report.text.extend(render.side_by_side(
            render.diagram(lam), render.diagram(mu),
            titles=(format_partition(lam), format_partition(mu))))
        return report
    if args.n is None:
        raise UsageError("give --partition or --n")
    for n in range(args.n + 1):
        witness = None
        srcs = [lam for lam in partitions_of(n) if src(lam)]
        dsts = {mu for mu in partitions_of(n) if dst(mu)}
        image = set()
        for lam in srcs:
            mu = fwd(lam)
            image.add(mu)
            if sum(mu) != n or mu not in dsts or back(mu) != lam:
                witness = {"partition": format_partition(lam), "image": format_partition(mu)}
                break
        if witness is None and image != dsts:
            missing = sorted(dsts - image)
            witness = {"not_hit": format_partition(missing[0]) if missing else "-"}
        data = {"size": str(len(srcs))}
        if label == "T" and args.check:
            dset = {lam for lam in partitions_of(n) if classes.in_D(lam, r, r - 1)}
            if witness is None and set(srcs) != dset:
                diff = sorted(set(srcs) ^ dset)
                witness = {"A''_vs_D": format_partition(diff[0])}
        report.cases.append(Case(f"n={n:03d}", witness is None, witness, data))
    for c in report.cases:
        report.text.append(_case_line(c) + f"  ({c.data['size']} partitions)")
    return report


# ------------------------------------------------------------------- blocks

def cmd_blocks(args) -> RunReport:
    lam = parse_partition(args.partition)
    r, i = int(args.r), int(args.i)
    classes.check_params(r, i)
    report = RunReport("blocks", {"partition": format_partition(lam), "r": r, "i": i})
    basis = ideal.in_basis(lam, r, i)
    c_mem, d_mem = classes.in_C(lam, r, i), classes.in_D(lam, r, i)
    data = {"in_basis": basis, "in_C": c_mem, "in_D": d_mem,
            "transition": classes.classify_transition(lam, r, i).value}
    ok = basis == c_mem == d_mem
    witness = None if ok else {"partition": format_partition(lam)}
    try:
        dec = ideal.block_decompose(lam, r, i)
    except ideal.NotTransitionError as exc:
        data["decomposition"] = None
        report.text.append(f"no block decomposition: {exc}")
    else:
        data["decomposition"] = dec.to_dict()
        star = ideal.star_holds(lam, dec)
        data["star"] = star
        ok = ok and star
        report.text.append("blocks: " + " | ".join(" ".join(f"x{v}" for v in b) for b in dec.blocks))
        report.text.append(f"f: {list(dec.f)}  ell: {dec.ell}  star: {star}")
    report.text.append(f"in_basis={basis} in_C={c_mem} in_D={d_mem}")
    report.cases.append(Case(format_partition(lam), ok, witness, data))
    return report


# ------------------------------------------------------------------- bailey

def cmd_bailey(args) -> RunReport:
    order = args.order if args.order is not None else DEFAULT_ORDER["bailey"]
    rs = int_list(args.r)
    report = RunReport("bailey", {"r": rs, "i": args.i or "all", "e": args.e, "order": order})
    for r in rs:
        if r < 1:
            raise UsageError("r must be positive")
        if args.derive:
            for i in _i_values(args.i, list(range(0, r))):
                if not 0 <= i <= r - 1:
                    raise UsageError("derive needs 0 <= i <= r-1")
                s = bailey.derive_Si(r, i, order)
                lhs = identities.sum_side(identities.IdentityId("BR33", r, i), order)
                rhs = identities.product_side(identities.IdentityId("BR33", r, i), order)
                w = s.first_mismatch(lhs) or s.first_mismatch(rhs)
                report.cases.append(Case(f"derive_Si[r={r},i={i}]", w is None, _w(w),
                                         {"order": str(order)}))
            continue
        for i in _i_values(args.i, list(range(0, r + 1))):
            if not 0 <= i <= r:
                raise UsageError("pipeline needs 0 <= i <= r")
            if i > 0 and args.e < 1:
                raise UsageError("the lattice step needs --e >= 1")
            res = bailey.pipeline(r, i, args.e, order)
            defects = [(k, bailey.relation_defect(p)) for k, p in enumerate(res.pairs)]
            bad = next(((k, d) for k, d in defects if d is not None), None)
            witness = None
            if bad is not None:
                k, (n, power, lhs_c, rhs_c) = bad
                witness = {"step": str(k), "n": str(n), "power": str(power),
                           "beta": str(lhs_c), "relation": str(rhs_c)}
            lhs = bailey.lattice_lhs(r, i, args.e, order)
            w = res.limit.first_mismatch(lhs)
            if witness is None and w is not None:
                witness = _w(w)
            data = {"M": str(res.M), "steps": list(res.final.history),
                    "final_e": str(res.final.e), "order": str(order)}
            report.cases.append(Case(f"pipeline[r={r},i={i},e={args.e}]",
                                     witness is None, witness, data))
    for c in report.cases:
        extra = f"  M={c.data['M']} steps={','.join(c.data['steps'])}" if "M" in c.data else ""
        report.text.append(_case_line(c) + extra)
    return report


def _w(w):
    if w is None:
        return None
    k, a, b = w
    return {"power": str(k), "left": str(a), "right": str(b)}


# --------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="durfee", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true", help="emit a JSON report")
        g.add_argument("--csv", action="store_true", help="emit CSV (count only)")

    sp = sub.add_parser("count", help="class sizes T/E/A/B/C/D for n = 0..N")
    sp.add_argument("--class", dest="cls", default="all",
                    help="comma list of T,E,A,B,C,D or 'all'")
    sp.add_argument("--r", required=True, help="r, a list '2,3' or a range '2-5'")
    sp.add_argument("--i", default=None, help="i values or 'all' (default)")
    sp.add_argument("--n", type=int, required=True, help="largest weight")
    sp.add_argument("--check", action="store_true", help="require all columns equal")
    common(sp)

    sp = sub.add_parser("verify", help="compare sum side and product side")
    sp.add_argument("--identity", required=True, help=", ".join(identities.IDENTITY_NAMES))
    sp.add_argument("--r")
    sp.add_argument("--i")
    sp.add_argument("--z", type=int)
    sp.add_argument("--step", type=int)
    sp.add_argument("--form", choices=("qserie", "qbinom"))
    sp.add_argument("--order", type=int)
    sp.add_argument("--uncorrected", action="store_true",
                    help="BR33 with product residues shifted by one")
    sp.add_argument("--series", action="store_true", help="include both series")
    common(sp)

    sp = sub.add_parser("dissect", help="draw a dissection")
    sp.add_argument("--partition", required=True, help="e.g. 6,5,5,4,3 or - for empty")
    sp.add_argument("--plan", help="block letters, e.g. HHS or bbB")
    sp.add_argument("--scheme", choices=("A", "B", "D"))
    sp.add_argument("--r")
    sp.add_argument("--i")
    common(sp)

    sp = sub.add_parser("bijection", help="T / rotation round trips")
    sp.add_argument("--r", required=True)
    sp.add_argument("--i", help="1, r-1 (default) or r")
    sp.add_argument("--n", type=int, help="check every weight up to n")
    sp.add_argument("--partition", help="map a single partition")
    sp.add_argument("--check", action="store_true", help="also compare A'' with D[r,r-1]")
    common(sp)

    sp = sub.add_parser("blocks", help="monomial block decomposition")
    sp.add_argument("--partition", required=True)
    sp.add_argument("--r", required=True)
    sp.add_argument("--i", required=True)
    common(sp)

    sp = sub.add_parser("bailey", help="Bailey pipeline or derive_Si")
    sp.add_argument("--r", required=True)
    sp.add_argument("--i", default=None)
    sp.add_argument("--e", type=int, default=1, help="a = q^e (default 1)")
    sp.add_argument("--order", type=int)
    sp.add_argument("--derive", action="store_true", help="check derive_Si instead")
    common(sp)
    return p


COMMANDS = {"count": cmd_count, "verify": cmd_verify, "dissect": cmd_dissect,
            "bijection": cmd_bijection, "blocks": cmd_blocks, "bailey": cmd_bailey}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "csv", False) and args.command != "count":
        print("error: --csv is only available for count", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except (UsageError, PartitionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.elapsed = time.perf_counter() - start
    if args.json:
        print(report.to_json())
    else:
        print("\n".join(report.text))
    print(f"[{args.command}] {report.elapsed:.2f}s", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
