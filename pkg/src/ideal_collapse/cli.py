"""Command-line interface: ``ideal-collapse <command> ...``.

Exit codes: 0 success / Equivalent, 1 counterexample or failed assertion,
2 UnknownSampled, 3 usage or input error, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .collapse import collapse_chain
from .errors import FieldError, IdealCollapseError, InfiniteField, ParseError, ResourceLimitError
from .fields import make_field
from .locus import DEFAULT_SAMPLES, DEFAULT_SEED, Verdict, enumerate_zero_locus, verify_equivalence
from .parsing import parse_document, parse_unipoly
from .polys import MultiPoly
from .remark import monicize, specialize_and_solve
from .witness import WitnessPoly, find_rootfree

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3
EXIT_RESOURCE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _space(field, n) -> str:
    name = str(field)
    return f"({name})^{n}" if "^" in name else f"{name}^{n}"


def _fmt_point(field, pt) -> str:
    return "(" + ", ".join(field.format(c) for c in pt) + ")"


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_document(text).system


def _witness_for(system, args) -> WitnessPoly:
    if getattr(args, "witness", None):
        return WitnessPoly.from_user(parse_unipoly(args.witness, system.field))
    return find_rootfree(system.field, args.max_degree)


def cmd_witness(args) -> int:
    field = make_field(args.field)
    w = find_rootfree(field, args.max_degree)
    if args.json:
        _emit({
            "field": str(field),
            "witness": str(w),
            "degree": w.degree,
            "coefficients": [field.format(c) for c in w.coefficients[1:]],
            "certificate": w.certificate.value,
        })
    else:
        print(w)
    return EXIT_OK


def _reduce(args):
    system = _load(args.file)
    w = _witness_for(system, args)
    return system, w, collapse_chain(w, system)


def cmd_reduce(args) -> int:
    system, w, chain = _reduce(args)
    names = system.var_names
    fmt = lambda p: p.format(names)  # noqa: E731
    if args.json:
        _emit({
            "field": str(system.field),
            "vars": list(names),
            "witness": str(w),
            "collapsed": fmt(chain.collapsed),
            "generator_degrees": [g.degree() for g in system.generators],
            "degrees": [s.result.degree() for s in chain.steps],
            "steps": [
                {
                    "index": i + 1,
                    "f1": fmt(s.f1),
                    "f2": fmt(s.f2),
                    "result": fmt(s.result),
                    "cofactor_a": fmt(s.cofactor_a),
                    "cofactor_b": fmt(s.cofactor_b),
                    "degree": s.result.degree(),
                    "terms": len(s.result.terms),
                    "verified": s.verify(),
                }
                for i, s in enumerate(chain.steps)
            ],
            "warnings": list(chain.warnings),
        })
        return EXIT_OK
    print(fmt(chain.collapsed))
    if system.ngens >= 2:
        print(f"# witness: {w}")
        gnames = system.generator_names
        for i, s in enumerate(chain.steps):
            left = gnames[i + 1] if i else gnames[0]
            right = f"p{i}" if i else gnames[1]
            print(f"# p{i + 1} = P({left}, {right}): degree {s.result.degree()}, "
                  f"{len(s.result.terms)} terms, certificate "
                  f"{'verified' if s.verify() else 'FAILED'}")
            print(f"#   A = {fmt(s.cofactor_a)}")
            print(f"#   B = {fmt(s.cofactor_b)}")
    for note in chain.warnings:
        print(f"# warning: {note}")
    return EXIT_OK


def cmd_solve(args) -> int:
    system = _load(args.file)
    report = enumerate_zero_locus(list(system.generators), system.field, system.nvars)
    F = system.field
    if args.json:
        out = report.to_json(F)
        out["field"] = str(F)
        out["vars"] = list(system.var_names)
        _emit(out)
    else:
        if report.points:
            print(f"V(I) has {len(report.points)} point(s) in {_space(F, system.nvars)}:")
            for pt in report.points:
                print(_fmt_point(F, pt))
        else:
            print(f"V(I) is empty in {_space(F, system.nvars)}")
    if args.assert_nonempty and not report.points:
        return EXIT_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    system, w, chain = _reduce(args)
    res = verify_equivalence(system, chain.collapsed, seed=args.seed, samples=args.samples)
    F = system.field
    if args.json:
        _emit({
            "field": str(F),
            "vars": list(system.var_names),
            "witness": str(w),
            "collapsed": chain.collapsed.format(system.var_names),
            "verdict": res.verdict.value,
            "counterexample": None if res.point is None else [F.format(c) for c in res.point],
            "points_checked": res.points_checked,
            "seed": res.seed,
        })
    else:
        print(f"collapsed: {chain.collapsed.format(system.var_names)}")
        if res.verdict is Verdict.COUNTEREXAMPLE:
            print(f"CounterexamplePoint {_fmt_point(F, res.point)}")
        elif res.verdict is Verdict.EQUIVALENT:
            print(f"Equivalent (exhaustive over {res.points_checked} points)")
        else:
            print(f"UnknownSampled: no counterexample at {res.points_checked} sampled points "
                  f"(seed {res.seed})")
    return {Verdict.EQUIVALENT: EXIT_OK, Verdict.COUNTEREXAMPLE: EXIT_FAILED,
            Verdict.UNKNOWN_SAMPLED: EXIT_UNKNOWN}[res.verdict]


def cmd_monicize(args) -> int:
    system = _load(args.file)
    try:
        f = system.generator(args.target)
    except KeyError:
        raise UsageError(f"no generator named {args.target!r}") from None
    m = monicize(f)
    names = system.var_names
    F = system.field
    subs = []
    for j, row in enumerate(m.transform.matrix):
        form = sum(
            (MultiPoly.variable(F, f.nvars, i).scale(c) for i, c in enumerate(row)),
            MultiPoly.zero(F, f.nvars),
        )
        subs.append(f"{names[j]} -> {form.format(names)}")
    try:
        roots = [_fmt_point(F, pt) for pt in specialize_and_solve(m)]
    except InfiniteField:
        roots = None
    if args.json:
        _emit({
            "target": args.target,
            "transform": subs,
            "scaling": F.format(m.scaling.value),
            "monic_form": m.transformed.format(names),
            "monic_degree": m.monic_degree,
            "points": roots,
        })
        return EXIT_OK
    print("transform: " + ", ".join(subs))
    print(f"scaling: {F.format(m.scaling.value)}")
    print(f"monic form: {m.transformed.format(names)}")
    print(f"monic degree in {names[-1]}: {m.monic_degree}")
    if roots is None:
        print("points: not searched (specialized roots need a finite field)")
    elif roots:
        print("points: " + " ".join(roots))
    else:
        print("points: none (specialized polynomial has no roots)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ideal-collapse", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("witness", help="print a root-free monic polynomial")
    p.add_argument("--field", required=True)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    def witness_opts(p):
        p.add_argument("--witness", help='root-free monic polynomial, e.g. "T^2 + 1"')
        p.add_argument("--max-degree", type=int, default=4)

    p = sub.add_parser("reduce", help="collapse the generators into one polynomial")
    p.add_argument("file")
    witness_opts(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="list V(I) over a finite field")
    p.add_argument("file")
    p.add_argument("--assert-nonempty", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="reduce, then check Z(collapsed) = V(I)")
    p.add_argument("file")
    witness_opts(p)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("monicize", help="shear a generator monic in the last variable")
    p.add_argument("file")
    p.add_argument("--target", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_monicize)
    return ap


def run_command(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IdealCollapseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
