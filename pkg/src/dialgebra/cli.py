"""Command line entry point.

Exit codes: 0 success or property holds, 1 property fails, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .composition import COMPLETE, check_gsb, complete
from .constructions import (bar_extension, check_dialgebra_axioms, check_leibniz, clifford,
                            free_product, leibniz_enveloping, suggest_i0)
from .oracle import COLUMN_LIMIT, column_count, cross_check, degree_dims
from .rewrite import irr_enumerate, normal_form

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _presentation(path):
    return formats.presentation_from_json(formats.load(path))


def _emit(args, payload, text):
    out = formats.dumps(payload) if args.json else text.rstrip("\n") + "\n"
    sys.stdout.write(out)


def _write_presentation(args, S):
    doc = formats.dumps(formats.presentation_to_json(S))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
        if not args.json:
            sys.stdout.write(f"wrote {len(S)} relations over {len(S.alphabet)} generators to {args.output}\n")
        else:
            sys.stdout.write(formats.dumps({"output": args.output, "relations": len(S)}))
    else:
        sys.stdout.write(doc)
    return OK


def _guard(args, S):
    n = column_count(len(S.alphabet), args.max_deg)
    if n > COLUMN_LIMIT and not args.force:
        raise UsageError(f"oracle would use {n} columns (limit {COLUMN_LIMIT}); pass --force")


# -- commands ------------------------------------------------------------------

def cmd_check_axioms(args):
    rep = check_dialgebra_axioms(formats.table_from_json(formats.load(args.file)))
    _emit(args, rep.to_json(), "valid" if rep.valid else "invalid: " + "; ".join(rep.problems))
    return OK if rep.valid else FAIL


def cmd_check_leibniz(args):
    rep = check_leibniz(formats.leibniz_from_json(formats.load(args.file)))
    _emit(args, rep.to_json(), "valid" if rep.valid else "invalid: " + "; ".join(rep.problems))
    return OK if rep.valid else FAIL


def cmd_suggest_i0(args):
    res = suggest_i0(formats.leibniz_from_json(formats.load(args.file)))
    if res["i0"] is not None:
        text = "i0: " + (" ".join(res["i0"]) or "(none, L0 is zero)")
    else:
        text = "L0 is not a coordinate subspace; echelon basis: " + json.dumps(res["basis"])
    _emit(args, res, text)
    return OK


def cmd_check_gsb(args):
    S = _presentation(args.file)
    rep = check_gsb(S, args.jobs)
    lines = [f"{'PASS' if rep.passed else 'FAIL'}: {len(rep.results)} compositions, "
             f"{len(rep.failures())} not reduced to zero"]
    for r in rep.failures():
        lines.append(f"  {r.item.describe(S)}: {r.status}: {S.format(r.remainder)}")
    if args.timings:
        lines.append(f"  seconds: {rep.seconds:.3f}")
    _emit(args, rep.to_json(S, args.timings), "\n".join(lines))
    return OK if rep.passed else FAIL


def cmd_complete(args):
    S = _presentation(args.file)
    T, status = complete(S, args.max_deg, args.max_rounds, args.jobs)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(formats.dumps(formats.presentation_to_json(T)))
    payload = {"status": status, "relations": len(T)}
    if not args.output:
        payload["presentation"] = formats.presentation_to_json(T)
    text = [f"status: {status}", f"relations: {len(T)}"]
    if not args.output:
        text += ["  " + T.format(r) for r in T.relations]
    _emit(args, payload, "\n".join(text))
    return OK if status == COMPLETE else FAIL


def cmd_reduce(args):
    S = _presentation(args.file)
    try:
        f = S.parse(args.poly)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rem, trace = normal_form(f, S)
    _emit(args, {"input": S.format(f), "normal_form": S.format(rem), "steps": len(trace.steps)},
          S.format(rem))
    return OK


def cmd_irr(args):
    S = _presentation(args.file)
    words = irr_enumerate(S, args.max_deg)
    if args.count:
        per = {k: 0 for k in range(1, args.max_deg + 1)}
        for u in words:
            per[len(u)] += 1
        text = "\n".join(f"degree {k}: {v}" for k, v in per.items()) + f"\ntotal: {len(words)}"
        _emit(args, {"per_degree": {str(k): v for k, v in per.items()}, "total": len(words)}, text)
    else:
        names = [S.alphabet.format_diword(u) for u in words]
        _emit(args, {"irr": names, "total": len(words)}, "\n".join(names))
    return OK


def cmd_dim(args):
    S = _presentation(args.file)
    _guard(args, S)
    dims = degree_dims(S, args.max_deg, args.jobs)
    text = "\n".join(f"degree {k}: {v}" for k, v in dims.items()) + f"\ntotal: {sum(dims.values())}"
    _emit(args, {"per_degree": {str(k): v for k, v in dims.items()}, "total": sum(dims.values())}, text)
    return OK


def cmd_cross_check(args):
    S = _presentation(args.file)
    _guard(args, S)
    res = cross_check(S, args.max_deg, args.jobs)
    lines = [f"degree {k}: irr {res.irr[k]} oracle {res.oracle[k]} "
             f"{'agree' if res.irr[k] == res.oracle[k] else 'DISAGREE'}" for k in sorted(res.oracle)]
    lines.append("agree" if res.agree else "disagree")
    _emit(args, res.to_json(), "\n".join(lines))
    return OK if res.agree else FAIL


def cmd_leibniz_env(args):
    L = formats.leibniz_from_json(formats.load(args.file))
    return _write_presentation(args, leibniz_enveloping(L, args.reduced))


def cmd_clifford(args):
    form, names = formats.form_from_json(formats.load(args.file))
    return _write_presentation(args, clifford(form, names))


def cmd_bar_extend(args):
    T = formats.table_from_json(formats.load(args.file))
    return _write_presentation(args, bar_extension(T))


def cmd_free_product(args):
    T1 = formats.table_from_json(formats.load(args.first))
    T2 = formats.table_from_json(formats.load(args.second))
    S, _ = free_product(T1, T2)
    return _write_presentation(args, S)


# -- parser ----------------------------------------------------------------------

def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    common.add_argument("--output", help="write the resulting presentation here")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings")

    p = argparse.ArgumentParser(prog="dialgebra",
                                description="Groebner-Shirshov bases for dialgebras")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, *positional):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        for arg in positional:
            sp.add_argument(arg)
        sp.set_defaults(func=fn)
        return sp

    add("check-axioms", cmd_check_axioms, "verify the dialgebra axioms of a table", "file")
    add("check-leibniz", cmd_check_leibniz, "verify a Leibniz algebra and its i0 markers", "file")
    add("suggest-i0", cmd_suggest_i0, "propose i0 markers for a Leibniz algebra", "file")
    add("check-gsb", cmd_check_gsb, "check every composition for triviality", "file")
    sp = add("complete", cmd_complete, "run capped completion", "file")
    sp.add_argument("--max-deg", type=_positive, required=True)
    sp.add_argument("--max-rounds", type=_positive, default=20)
    add("reduce", cmd_reduce, "normal form of a dipolynomial", "file", "poly")
    sp = add("irr", cmd_irr, "list irreducible diwords", "file")
    sp.add_argument("--max-deg", type=_positive, required=True)
    sp.add_argument("--count", action="store_true", help="print counts per degree only")
    for name, fn, h in (("dim", cmd_dim, "quotient dimensions by exact rank"),
                        ("cross-check", cmd_cross_check, "compare Irr counts with the rank oracle")):
        sp = add(name, fn, h, "file")
        sp.add_argument("--max-deg", type=_positive, default=5)
        sp.add_argument("--force", action="store_true", help="lift the oracle size limit")
    sp = add("leibniz-env", cmd_leibniz_env, "enveloping dialgebra of a Leibniz algebra", "file")
    sp.add_argument("--reduced", action="store_true", help="emit the reduced basis")
    add("clifford", cmd_clifford, "Clifford dialgebra of a symmetric form", "file")
    add("bar-extend", cmd_bar_extend, "bar unit extension of a table", "file")
    add("free-product", cmd_free_product, "free product of two tables", "first", "second")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError, KeyError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
