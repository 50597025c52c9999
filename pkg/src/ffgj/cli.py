"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure (singular input, zero pivot,
failed self-check), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from functools import reduce
from operator import mul

from . import __version__
from .bareiss import STRICT, SWAP, ff_eliminate
from .corpus import theorem_corpus
from .cramer import clear_row_denominators, inverse, solve_many
from .errors import FFGJError, MathError, StructurallySingular, UsageError, ZeroPivot
from .gauss_jordan import closed_form_ratio, gj_reduce, rref, verify_construction
from .io import parse_matrix, parse_matrix_json, render_matrix, render_matrix_json
from .matrix import COFACTOR_MAX_N, Matrix, det_bareiss, det_cofactor
from .scalar import as_exact, render_scalar


def _read(path: str, as_json: bool) -> Matrix:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_matrix_json(text) if as_json else parse_matrix(text)


def _emit_matrix(M: Matrix, as_json: bool) -> str:
    return render_matrix_json(M) + "\n" if as_json else render_matrix(M)


def cmd_rref(args) -> str:
    A = _read(args.file, args.json)
    A_int, _ = clear_row_denominators(A)
    try:
        R = gj_reduce(A_int, args.pivoting, keep_levels=False).final
    except StructurallySingular:
        if args.pivoting != SWAP:
            raise
        # rank-deficient input: outside the explicit construction
        R, _ = rref(A)
    return _emit_matrix(R, args.json)


def cmd_det(args) -> str:
    A = _read(args.file, args.json)
    if not A.is_square():
        raise UsageError(f"det needs a square matrix, got {A.n}x{A.m}")
    A_int, factors = clear_row_denominators(A)
    try:
        levels, perm = ff_eliminate(A_int, args.pivoting, keep_levels=False)
        d = perm.sign * levels[-1].pivot_prev
    except ZeroPivot as exc:
        if exc.k != A.n:
            raise
        d = 0
    except StructurallySingular:
        d = 0
    d = as_exact(Fraction(d, reduce(mul, factors, 1)))
    if args.json:
        return json.dumps({"det": render_scalar(d)}) + "\n"
    return render_scalar(d) + "\n"


def cmd_solve(args) -> str:
    A = _read(args.file, args.json)
    B = _read(args.rhs, args.json)
    X, _ = solve_many(A, B, args.pivoting)
    if args.json:
        return render_matrix_json(X) + "\n"
    return "".join(" ".join(render_scalar(x) for x in r) + "\n" for r in X.rows)


def cmd_inverse(args) -> str:
    A = _read(args.file, args.json)
    return _emit_matrix(inverse(A, args.pivoting), args.json)


def cmd_trace(args) -> str:
    A = _read(args.file, args.json)
    if not A.is_integer():
        raise UsageError("trace needs an integer matrix")
    trace = gj_reduce(A, args.pivoting)
    P = trace.permutation.apply(A)
    verify = args.trace_verify
    failures = 0
    out_steps = []
    for step in trace.steps:
        k = step.k
        entries = []
        for i in range(1, A.n + 1):
            for j in range(k + 1, A.m + 1):
                rf = trace.ratio(i, j, k)
                entry = {
                    "i": i, "j": j, "case": rf.case, "sign": rf.sign,
                    "numerator": rf.numerator, "denominator": rf.denominator,
                    "value": render_scalar(rf.value),
                }
                if verify:
                    det = det_cofactor if k < COFACTOR_MAX_N else det_bareiss
                    ref = closed_form_ratio(P, i, j, k, det)
                    good = (ref.sign, ref.numerator, ref.denominator) == (rf.sign, rf.numerator, rf.denominator)
                    failures += not good
                    entry["verified"] = good
                entries.append(entry)
        out_steps.append((k, step.matrix, entries))

    if args.json:
        doc = {
            "permutation": list(trace.permutation.mapping),
            "steps": [
                {"k": k, "rows": [[render_scalar(x) for x in r] for r in M.rows],
                 "entries": [{**e, "numerator": str(e["numerator"]), "denominator": str(e["denominator"])}
                             for e in entries]}
                for k, M, entries in out_steps
            ],
        }
        text = json.dumps(doc) + "\n"
    else:
        lines = []
        if not trace.permutation.is_identity():
            lines.append("# row permutation " + " ".join(map(str, trace.permutation.mapping)))
        for k, M, entries in out_steps:
            lines.append(f"# A^{k}")
            lines.append(render_matrix(M).rstrip("\n"))
            for e in entries:
                line = (f"a^{k}[{e['i']},{e['j']}] = {e['sign']:+d} * {e['numerator']} / "
                        f"{e['denominator']} = {e['value']} ({e['case']})")
                if verify:
                    line += " [verified]" if e["verified"] else " [MISMATCH]"
                lines.append(line)
        text = "\n".join(lines) + "\n"
    if failures:
        sys.stdout.write(text)
        raise MathError(f"{failures} entries disagree with their explicit determinant ratio")
    return text


def cmd_selfcheck(args) -> str:
    if args.file is not None:
        named = [(args.file, _read(args.file, args.json))]
    else:
        corpus = theorem_corpus(args.random, seed=args.seed)
        named = [(f"random[{idx}]", A) for idx, A in enumerate(corpus)]
    lines = []
    passed = 0
    for name, A in named:
        if not A.is_integer():
            raise UsageError("selfcheck needs an integer matrix")
        minor_det = det_cofactor if min(A.n, A.m) < COFACTOR_MAX_N else None
        rep = verify_construction(A, minor_det=minor_det)
        passed += rep.ok
        lines.append(f"{name}: {rep.summary()}")
        lines.extend(f"  {d}" for d in rep.discrepancies)
    verdict = "PASS" if passed == len(named) else "FAIL"
    lines.append(f"{verdict}: {passed}/{len(named)} matrices verified")
    text = "\n".join(lines) + "\n"
    if args.json:
        text = json.dumps({"ok": passed == len(named), "report": lines[:-1]}) + "\n"
    if passed != len(named):
        sys.stdout.write(text)
        raise MathError(f"self-check failed on {len(named) - passed} matrices")
    return text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pivoting", choices=[STRICT, SWAP], default=STRICT,
                        help="strict: require nonzero leading principal minors; swap: row exchanges")
    common.add_argument("--json", action="store_true", help='read and write {"rows": [[...]]} documents')

    parser = argparse.ArgumentParser(prog="ffgj", description="Exact fraction-free Gauss-Jordan elimination.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rref", parents=[common], help="reduced row echelon form")
    p.add_argument("file")
    p.set_defaults(func=cmd_rref)

    p = sub.add_parser("det", parents=[common], help="exact determinant")
    p.add_argument("file")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("solve", parents=[common], help="solve A X = B")
    p.add_argument("file", help="matrix A")
    p.add_argument("rhs", help="right-hand side B (n x 1, or n x p for several systems)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("inverse", parents=[common], help="exact inverse")
    p.add_argument("file")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("trace", parents=[common], help="every A^k with determinant-ratio decompositions")
    p.add_argument("file")
    p.add_argument("--trace-verify", action="store_true",
                   help="recompute each ratio from explicit minors of the input")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("selfcheck", parents=[common], help="three-way verification of the construction")
    p.add_argument("file", nargs="?")
    p.add_argument("--random", type=int, default=20, metavar="N", help="corpus size when no file is given")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except MathError as exc:
        print(f"ffgj {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except FFGJError as exc:
        print(f"ffgj {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
