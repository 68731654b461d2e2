"""Command line entry point: cone reports, determinantal tables, catalog, verify."""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .catalog import DiamondParseError
from .determinantal import (
    DeterminantalCase,
    c_range,
    codim_and_lcdef,
    describe_locus,
    grid_cases,
    lcdef_gen_pos,
    local_cohomology_poly,
    ncci_locus,
)
from .hodge import DiamondError, PureHodgeStructure
from .levels import ExtendedLevel
from .lyubeznik import classical_lyubeznik
from .report import ConeReport, build_cone_report
from .verify import SUITES, TAKES_EXTRA, corrupted_fixture, run_suites

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# -- json helpers ------------------------------------------------------------------------


def hodge_rows(hs: PureHodgeStructure) -> list[list[int]]:
    return [[p, q, v] for (p, q), v in sorted(hs.items())]


def to_jsonable(x):
    if isinstance(x, ExtendedLevel):
        return x.to_json()
    if isinstance(x, PureHodgeStructure):
        return {"weight": x.weight, "hodge": hodge_rows(x)}
    if isinstance(x, dict):
        rows = []
        for k, v in sorted(x.items()):
            key = list(k) if isinstance(k, tuple) else [k]
            rows.append(key + [to_jsonable(v)])
        return rows
    if isinstance(x, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in x]
    return x


def cone_report_json(rep: ConeReport) -> dict:
    s = rep.setup
    inv = rep.invariants
    prof = rep.profile
    return {
        "input": {
            "source": rep.source,
            "rank": rep.rank,
            "d": s.d,
            "delta": s.delta,
            "n": s.n,
            "embed_codim": s.embed_codim,
            "hrh_base": s.hrh_base.to_json(),
        },
        "profile": {
            "topweight_H0": to_jsonable(prof.topweight_H0),
            "topweight_untwisted": to_jsonable(prof.topweight_untwisted),
            "by_j": [
                {
                    "j": j,
                    "weight": prof.weight(j),
                    "summands": [
                        {"prim_degree": t.degree, "twist": t.twist, "hodge": hodge_rows(t.structure)}
                        for t in sorted(terms, key=lambda t: (t.degree, t.twist))
                    ],
                }
                for j, terms in sorted(prof.by_j.items())
            ],
        },
        "invariants": {
            "lcdef": inv.lcdef,
            "lcdef_gen_pos": inv.lcdef_gen_pos,
            "c": inv.c.to_json(),
            "c_saturated": inv.c.saturated,
            "c_note": inv.c_note,
            "hrh": inv.hrh.to_json(),
            "hrh_saturated": inv.hrh.saturated,
            "ncci_codim": inv.ncci_codim.to_json(),
            "inequality": inv.inequality_verdict,
        },
        "lyubeznik": {
            "lambda": to_jsonable(rep.table.entries),
            "intersection": to_jsonable(rep.table.intersection_entries),
            "classical": to_jsonable(classical_lyubeznik(rep.table)),
        },
        "intersection_cohomology": [
            {"j": j, "weight": hs.weight, "hodge": hodge_rows(hs)}
            for j, hs in sorted(rep.ih.items()) if not hs.is_zero()
        ],
        "generation_levels": [{"j": j, "level": v} for j, v in sorted(rep.generation.items())],
        "pushforward": {
            "summands": [
                {"shift": t.shift, "degree": t.degree, "twist": t.twist, "hodge": hodge_rows(t.structure)}
                for t in rep.pushforward.summands
            ],
            "identity_holds": rep.pushforward.identity_holds,
        },
        "cross_checks": [
            {"name": ch.name, "status": "agree" if ch.agree else "disagree",
             "left": to_jsonable(ch.left), "right": to_jsonable(ch.right)}
            for ch in rep.checks
        ],
    }


# -- text helpers ---------------------------------------------------------------------------


def fmt_hodge(hs: PureHodgeStructure) -> str:
    if hs.is_zero():
        return "0"
    return " ".join(f"h{p},{q}={v}" for (p, q), v in sorted(hs.items()))


def table(rows: list[list], header: list[str]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def cone_report_text(rep: ConeReport) -> str:
    s, inv = rep.setup, rep.invariants
    out = [
        f"source {rep.source}  rank {rep.rank if rep.rank is not None else '-'}  "
        f"d={s.d} delta={s.delta} n={s.n} q={s.embed_codim} hrh_base={s.hrh_base}",
        "",
        "invariants",
        table(
            [["lcdef", inv.lcdef], ["lcdef_gen>0", inv.lcdef_gen_pos],
             ["c", f"{inv.c}" + (f" ({inv.c_note})" if inv.c_note else "")],
             ["HRH", inv.hrh], ["codim nCCI", inv.ncci_codim], ["inequality", inv.inequality_verdict]],
            ["invariant", "value"],
        ),
        "",
        "local cohomology (graded pieces)",
    ]
    rows = [["0", rep.profile.topweight_H0.weight, "top", fmt_hodge(rep.profile.topweight_H0)]]
    for j, terms in sorted(rep.profile.by_j.items()):
        for t in terms:
            rows.append([j, rep.profile.weight(j), f"H^{t.degree}_prim({t.twist})", fmt_hodge(t.structure)])
    out += [table(rows, ["j", "weight", "summand", "types"]), "", "Hodge-Lyubeznik numbers"]
    rows = [[r, s_, p, q, v] for (r, s_, p, q), v in rep.table.entries.items()]
    out.append(table(rows, ["r", "s", "p", "q", "lambda"]))
    rows = [[r, p, q, v] for (r, p, q), v in rep.table.intersection_entries.items()]
    out += ["", table(rows, ["r", "p", "q", "I-lambda"]), "", "intersection cohomology"]
    rows = [[j, fmt_hodge(hs)] for j, hs in sorted(rep.ih.items()) if not hs.is_zero()]
    out += [table(rows, ["j", "IH^j"]), "", "generation levels"]
    out += [table([[j, v] for j, v in sorted(rep.generation.items())], ["j", "gl"]), "", "cross-checks"]
    out.append(table([[("agree" if ch.agree else "DISAGREE"), ch.name] for ch in rep.checks],
                     ["status", "check"]))
    for ch in rep.checks:
        if not ch.agree:
            out.append(f"  {ch.name}: {ch.left!r} != {ch.right!r}")
    return "\n".join(out)


def emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


# -- commands -------------------------------------------------------------------------------


def _entry_from_args(args) -> catalog.CatalogEntry:
    if args.file:
        return catalog.load_entry(args.file)
    return catalog.get(args.catalog)


def cmd_cone(args) -> int:
    entry = _entry_from_args(args)
    hrh = ExtendedLevel.parse(args.hrh_base) if args.hrh_base is not None else entry.hrh_bound
    rep = build_cone_report(entry.diamond, rank=args.rank, delta=args.delta,
                            embed_codim=args.embed_codim, hrh_base=hrh, source=entry.name)
    emit(args, cone_report_json(rep), cone_report_text(rep))
    return EXIT_OK if rep.ok else EXIT_CHECK


def _case_from_args(args) -> DeterminantalCase:
    dims = args.dims
    if args.family == "generic":
        if len(dims) != 3:
            raise InputError("generic takes: m n p")
        return DeterminantalCase.generic(*dims)
    if len(dims) != 2:
        raise InputError(f"{args.family} takes: n p")
    if args.family == "skew":
        return DeterminantalCase.skew(*dims)
    return DeterminantalCase.symmetric(*dims)


def determinantal_row(case: DeterminantalCase) -> dict:
    poly = local_cohomology_poly(case)
    codim, lcdef = codim_and_lcdef(case)
    row = {
        "case": case.label(),
        "family": case.family.value,
        "m": case.m,
        "n": case.n,
        "p": case.p,
        "H_p": [[s, [[e, v] for e, v in sorted(qp.coeffs().items())]] for s, qp in poly.terms().items()],
        "H_p_text": str(poly),
        "codim": codim,
        "lcdef": lcdef,
    }
    try:
        row.update({
            "lcdef_gen_pos": lcdef_gen_pos(case),
            "ncci_locus": describe_locus(ncci_locus(case)),
            "c_range": [x.to_json() for x in c_range(case)],
        })
    except ValueError as exc:
        row.update({"lcdef_gen_pos": None, "ncci_locus": None, "c_range": None, "note": str(exc)})
    row["c_range"] = _sorted_levels(row["c_range"])
    return row


def _sorted_levels(values):
    if values is None:
        return None
    return sorted(values, key=lambda v: (isinstance(v, str), v))


def cmd_determinantal(args) -> int:
    if args.sweep:
        size = args.max_size
        cases = list(grid_cases(args.family, size, size, size))
    else:
        if not args.family or not args.dims:
            raise InputError("give a family and its sizes, or --sweep")
        cases = [_case_from_args(args)]
    rows = [determinantal_row(c) for c in cases]
    text_rows = [[r["case"], r["H_p_text"], r["codim"], r["lcdef"],
                  "-" if r["lcdef_gen_pos"] is None else r["lcdef_gen_pos"],
                  r["ncci_locus"] or "-", "-" if r["c_range"] is None else "{" + ",".join(map(str, r["c_range"])) + "}"]
                 for r in rows]
    text = table(text_rows, ["case", "H_p(q)", "codim", "lcdef", "lcdef_gen>0", "nCCI", "c"])
    emit(args, rows if args.sweep else rows[0], text)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        rows = [[e.name, e.diamond.dim, " ".join(map(str, e.diamond.betti())), e.provenance]
                for e in catalog.entries()]
        payload = [{"name": r[0], "dim": r[1], "betti": catalog.get(r[0]).diamond.betti(), "provenance": r[3]}
                   for r in rows]
        emit(args, payload, table(rows, ["name", "dim", "betti", "builder"]))
        return EXIT_OK
    if not args.name:
        raise InputError(f"catalog {args.action} needs a name")
    entry = catalog.get(args.name)
    data = catalog.diamond_to_json(entry.diamond, entry.rhm, entry.hrh_bound, entry.name)
    if args.action == "export":
        text = json.dumps(data, indent=1)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return EXIT_OK
    rows = [[k, fmt_hodge(hs)] for k, hs in enumerate(entry.diamond.levels)]
    emit(args, data, f"{entry.name} (dim {entry.diamond.dim}, {entry.provenance})\n"
         + table(rows, ["k", "H^k"]))
    return EXIT_OK


def cmd_verify(args) -> int:
    extra = []
    for path in args.diamond or ():
        entry = catalog.load_entry(path)
        extra.append((entry.name, entry.diamond))
    if args.inject_corrupt:
        extra.append(("corrupted-p2", corrupted_fixture()))
    names = list(SUITES) if args.all or not args.suite else args.suite
    for name in names:
        if name not in SUITES:
            raise InputError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    results = run_suites(names, extra)
    payload = [{"suite": r.name, "checked": r.checked, "failed": len(r.failures),
                "counterexample": r.failures[0] if r.failures else None,
                "takes_extra_inputs": r.name in TAKES_EXTRA} for r in results]
    rows = [[r.name, r.checked, len(r.failures), "pass" if r.passed else "FAIL"] for r in results]
    text = table(rows, ["suite", "checked", "failed", "status"])
    for r in results:
        if r.failures:
            text += f"\n{r.name}: first counterexample: {r.failures[0]}"
    emit(args, payload, text)
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conehodge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("cone", help="invariants of the cone over a diamond")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", metavar="NAME")
    src.add_argument("--file", metavar="PATH")
    shape = p.add_mutually_exclusive_group(required=True)
    shape.add_argument("--rank", type=int, help="rank e of the ample bundle on the base")
    shape.add_argument("--delta", type=int, help="codimension of the exceptional locus minus one")
    p.add_argument("--embed-codim", type=int, default=1)
    p.add_argument("--hrh-base", default=None, help="assumed HRH bound of the base (integer or inf)")
    add_format(p)
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("determinantal", help="local cohomology of determinantal varieties")
    p.add_argument("family", nargs="?", choices=("generic", "skew", "symmetric"))
    p.add_argument("dims", nargs="*", type=int)
    p.add_argument("--sweep", action="store_true", help="tabulate the whole grid")
    p.add_argument("--max-size", type=int, default=6)
    add_format(p)
    p.set_defaults(func=cmd_determinantal)

    p = sub.add_parser("catalog", help="builtin diamonds")
    p.add_argument("action", choices=("list", "show", "export"))
    p.add_argument("name", nargs="?")
    p.add_argument("--output", "-o")
    add_format(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="run the self-check suites")
    p.add_argument("--all", action="store_true")
    p.add_argument("--suite", action="append", metavar="NAME")
    p.add_argument("--diamond", action="append", metavar="PATH", help="add a diamond file to the sweeps")
    p.add_argument("--inject-corrupt", action="store_true", help="add a Lefschetz-violating fixture")
    add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DiamondParseError, DiamondError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"conehodge: error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
