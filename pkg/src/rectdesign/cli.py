"""Command-line interface.

Exit codes: 0 clean, 1 verification failure, 2 input/parse error,
3 unsupported construction input.
"""

from __future__ import annotations

import argparse
import sys

from . import analyze, binmat, construct, design, search, tables

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3


def _read_design(path: str) -> design.Design:
    with open(path) as fh:
        return design.read_design(fh)


def cmd_construct(args) -> int:
    recipe = args.recipe
    if args.ds and "ds=" not in recipe:
        recipe += f" ds=@{args.ds}"
    if args.mols and "mols=" not in recipe:
        recipe += f" mols=@{args.mols}"
    d = construct.run_recipe(recipe)
    if args.out:
        with open(args.out, "w") as fh:
            design.write_design(d, fh)
    sys.stdout.write(analyze.design_report(d))
    return EXIT_OK


def cmd_verify(args) -> int:
    d = _read_design(args.file)
    bad = design.verify_design(d)
    cls = design.classify(d.params)
    sys.stdout.write(analyze.render_report([
        ("CLASS", cls.tag.value),
        ("NATURE", cls.nature),
        ("SELF_DUAL", "yes" if analyze.self_dual_check(d).ok else "no"),
        ("VERIFY", "ok" if not bad else "failed"),
    ]))
    for msg in bad[:10]:
        sys.stdout.write(f"DEVIATION\t{msg}\n")
    return EXIT_OK if not bad else EXIT_VERIFY


def cmd_classify(args) -> int:
    d = _read_design(args.file)
    p = d.params
    s = design.spectrum(p)
    cls = design.classify(p)
    sys.stdout.write(analyze.render_report([
        ("CLASS", cls.tag.value),
        ("NATURE", cls.nature),
        ("REDUCTION", cls.reduction.value),
        ("THETA1", s.theta1), ("THETA2", s.theta2), ("THETA3", s.theta3),
    ]))
    return EXIT_OK


def cmd_analyze(args) -> int:
    d = _read_design(args.file)
    sys.stdout.write(analyze.design_report(d))
    return EXIT_OK


def cmd_search(args) -> int:
    if args.v < 4:
        raise construct.RecipeError(f"need v >= 4, got {args.v}")
    cands = search.enumerate_candidates(args.v, range(args.k_min, args.k_max + 1))
    for c in cands:
        sys.stdout.write(search.candidate_line(c) + "\n")
    return EXIT_OK


def cmd_tables(args) -> int:
    results = tables.run_table(args.which)
    sys.stdout.write(tables.render_results(args.which.upper(), results))
    return EXIT_OK if all(r.status != "FAIL" for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rectdesign",
        description="Construct, verify, classify and analyze rectangular block designs.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a design from a recipe descriptor")
    p.add_argument("recipe", help='e.g. "thm6 t=1" or "cor12 ds=sylvester:3 t=5"')
    p.add_argument("--out", help="write the design file here")
    p.add_argument("--ds", help="difference-scheme file for the recipe")
    p.add_argument("--mols", help="orthogonal-squares file for the recipe")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a design file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="classify a design file by its spectrum")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("analyze", help="full analysis report for a design file")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", help="feasible symmetric parameter sets for a given v")
    p.add_argument("v", type=int)
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=10)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("tables", help="re-derive a bundled reference table row by row")
    p.add_argument("which", choices=["T4", "T5", "S6", "t4", "t5", "s6"])
    p.set_defaults(func=cmd_tables)

    for sp in sub.choices.values():
        sp.add_argument("--format", choices=["text"], default="text",
                        help="output format (text only)")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (binmat.MatrixParseError, design.DesignParseError,
            construct.RecipeError, OSError, ValueError) as exc:
        if isinstance(exc, construct.ConstructionError):
            sys.stderr.write(f"error: {exc}\n")
            return EXIT_UNSUPPORTED
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
