"""Command line entry point.

One executable, ``mzv``, with subcommands for the word products, relation
tables, dimension counts, high-precision evaluation, integer-relation
detection and graph periods.  Every run in ``--json`` mode wraps its result
with a manifest recording the command, parameters, precision, seed, tool
version and wall time; identical invocations give byte-identical output up
to the wall-time field.

Exit codes: 0 on success, 1 on domain errors (divergent word where a
convergent one is required, precision too low, insufficient relations),
2 on usage errors (unknown flags, malformed literals).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from mpmath import mp, mpf

from . import __version__
from .algebra import shuffle, stuffle
from .detect import detect
from .dims import count_f_monomials, count_hoffman_words, dimension
from .feynman import (Graph, is_primitive_log_divergent, kirchhoff_polynomial,
                      match_period, period_monte_carlo)
from .numerics import DEFAULT_SEED, GUARD, BigReal, mzv_eval, zeta_euler_maclaurin
from .relations import (build_relation_matrix, decompose_in_hoffman_basis,
                        dimension_upper_bound, matrix_rank)
from .words import parse_binary_word, parse_composition, parse_generic_word


def _parse_word_literal(text):
    s = text.strip()
    if s.startswith("("):
        return parse_composition(s)
    if all(ch in "01" for ch in s) and s:
        return parse_binary_word(s)
    return parse_generic_word(s)


def _mzv_expression(text, digits):
    """A product of factors separated by '*': rational literals and
    composition literals standing for their zeta values."""
    total = mpf(1)
    with mp.workdps(digits + GUARD):
        for tok in text.split("*"):
            tok = tok.strip()
            if not tok:
                raise ValueError("empty factor in %r" % (text,))
            if tok.startswith("("):
                total = total * mzv_eval(parse_composition(tok), digits).value
            else:
                q = Fraction(tok)
                total = total * mpf(q.numerator) / q.denominator
    return BigReal(total, digits)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="mzv",
        description="exact and numeric toolkit for multiple zeta values")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON with a run manifest")
        return p

    p = add("shuffle", "shuffle product of two words")
    p.add_argument("words", nargs=2, help='two binary words like "10", or dotted letter words like "f3.f5"')

    p = add("stuffle", "stuffle product of two compositions")
    p.add_argument("words", nargs=2, help='two composition literals like "(2)" "(3)"')

    p = add("relations", "emit the double-shuffle relation rows at a weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--no-hoffman", action="store_true",
                   help="omit the rows that mix in the divergent word (1)")
    p.add_argument("--max-weight", type=int, default=12)

    p = add("dims", "dimension table: counting (--table) or exact rank bounds (--max)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--table", type=int, metavar="N",
                       help="print n, d_n, 2^(n-2), Hoffman count, f-monomial count")
    group.add_argument("--max", type=int, metavar="N",
                       help="compute exact rank bounds for weights 2..N")

    p = add("hoffman-decompose", "rewrite a convergent word over the Hoffman words")
    p.add_argument("word", help='composition literal like "(1,3)"')
    p.add_argument("--max-weight", type=int, default=12)

    p = add("eval", "evaluate a convergent multiple zeta value")
    p.add_argument("word", help='composition literal like "(2,3)"')
    p.add_argument("--digits", type=int, default=40)

    p = add("eval-zeta", "evaluate zeta(s) by the Euler-Maclaurin partial sum")
    p.add_argument("s", type=int)
    p.add_argument("--digits", type=int, default=40)

    p = add("detect", "search for an integer relation among MZV expressions")
    p.add_argument("exprs", nargs="+",
                   help='factors joined by *, e.g. "28*(3,9)" or "(12)"')
    p.add_argument("--digits", type=int, default=60)
    p.add_argument("--height-bound", type=int, default=10 ** 6)

    p = add("feynman", "graph polynomial, divergence check, or period estimate")
    p.add_argument("action", choices=("psi", "check", "period"))
    p.add_argument("graph", help="path to a graph file, or a literal graph string")
    p.add_argument("--samples", default="1e6",
                   help="sample count for period, e.g. 1e7")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--match-weight", type=int, default=None,
                   help="also rank known constants of this weight against the estimate")
    return parser


def _load_graph(arg):
    text = arg
    try:
        with open(arg) as handle:
            text = handle.read()
    except OSError:
        pass  # treat the argument as a literal graph string
    return Graph.parse(text)


def _dispatch(args):
    """Returns (result_obj, text_lines, precision, seed)."""
    cmd = args.command

    if cmd == "shuffle":
        u, v = (_parse_word_literal(w) for w in args.words)
        combo = shuffle(u, v)
        return combo.to_json_obj(), [str(combo)], None, None

    if cmd == "stuffle":
        a, b = (parse_composition(w) for w in args.words)
        combo = stuffle(a, b)
        return combo.to_json_obj(), [str(combo)], None, None

    if cmd == "relations":
        matrix = build_relation_matrix(args.weight, not args.no_hoffman,
                                       args.max_weight)
        obj = {"weight": matrix.weight,
               "basis": [str(w) for w in matrix.basis],
               "relations": [r.to_json_obj() for r in matrix.relations]}
        lines = [str(r) for r in matrix.relations]
        lines.append("%d relations over %d convergent words"
                     % (matrix.n_rows, matrix.n_columns))
        return obj, lines, None, None

    if cmd == "dims":
        if args.table is not None:
            rows = []
            for n in range(args.table + 1):
                rows.append({"weight": n, "d": dimension(n),
                             "words": 2 ** (n - 2) if n >= 2 else (1 if n == 0 else 0),
                             "hoffman": count_hoffman_words(n),
                             "f_monomials": count_f_monomials(n)})
            lines = ["weight  d_n  2^(n-2)  hoffman  f-monomials"]
            for r in rows:
                lines.append("%6d %4d %8d %8d %12d"
                             % (r["weight"], r["d"], r["words"], r["hoffman"],
                                r["f_monomials"]))
            return {"table": rows}, lines, None, None
        rows = []
        lines = ["weight  2^(n-2)  rank  bound  d_n"]
        for n in range(2, args.max + 1):
            matrix = build_relation_matrix(n, True, max(12, args.max))
            rank = matrix_rank(matrix)
            bound = 2 ** (n - 2) - rank
            rows.append({"weight": n, "words": 2 ** (n - 2), "rank": rank,
                         "bound": bound, "d": dimension(n)})
            lines.append("%6d %8d %5d %6d %4d"
                         % (n, 2 ** (n - 2), rank, bound, dimension(n)))
        return {"bounds": rows}, lines, None, None

    if cmd == "hoffman-decompose":
        word = parse_composition(args.word)
        combo = decompose_in_hoffman_basis(word, args.max_weight)
        return ({"word": str(word), "decomposition": combo.to_json_obj()},
                ["%s = %s" % (word, combo)], None, None)

    if cmd == "eval":
        word = parse_composition(args.word)
        value = mzv_eval(word, args.digits)
        obj = {"word": str(word), "algorithm": "path-split-polylog",
               **value.to_json_obj()}
        return obj, ["zeta%s = %s" % (word, value)], args.digits, None

    if cmd == "eval-zeta":
        value = zeta_euler_maclaurin(args.s, args.digits)
        obj = {"s": args.s, "algorithm": "euler-maclaurin", **value.to_json_obj()}
        return obj, ["zeta(%d) = %s" % (args.s, value)], args.digits, None

    if cmd == "detect":
        if len(args.exprs) < 2:
            raise ValueError("detect needs at least two expressions")
        values = [_mzv_expression(e, args.digits) for e in args.exprs]
        result = detect(values, args.digits, args.height_bound)
        lines = [str(result)]
        if result.found:
            lines.append("  i.e.  " + " + ".join(
                "%d*[%s]" % (c, e) for c, e in zip(result.coefficients, args.exprs)
                if c) + " = 0")
        return result.to_json_obj(), lines, args.digits, None

    if cmd == "feynman":
        graph = _load_graph(args.graph)
        if args.action == "psi":
            psi = kirchhoff_polynomial(graph)
            obj = {"graph": str(graph), "monomials": psi.sorted_monomials(),
                   "count": len(psi), "degree": psi.degree}
            return obj, ["psi = %s" % psi,
                         "%d monomials of degree %d" % (len(psi), psi.degree)], None, None
        if args.action == "check":
            flag = is_primitive_log_divergent(graph)
            return ({"graph": str(graph), "primitive_log_divergent": flag},
                    ["%s: %s" % (graph, "primitive log-divergent" if flag
                                 else "not primitive log-divergent")], None, None)
        samples = int(float(args.samples))
        est = period_monte_carlo(graph, samples, args.seed)
        obj = {"graph": str(graph), "estimate": est.value, "stderr": est.stderr,
               "samples": est.samples, "seed": est.seed}
        lines = ["period estimate %.8f +- %.8f  (%d samples, seed %d)"
                 % (est.value, est.stderr, est.samples, est.seed)]
        if args.match_weight:
            matches = match_period(est.value, est.stderr, args.match_weight)
            obj["matches"] = [m.to_json_obj() for m in matches]
            lines.extend("  candidate: %s" % m for m in matches)
        return obj, lines, None, args.seed

    raise AssertionError("unhandled command %r" % (cmd,))


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        result, lines, precision, seed = _dispatch(args)
    except (ValueError, TypeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    wall = time.perf_counter() - start
    if getattr(args, "json", False):
        parameters = {k: v for k, v in sorted(vars(args).items())
                      if k not in ("command", "json") and v is not None}
        manifest = {"command": args.command, "parameters": parameters,
                    "precision": precision, "seed": seed,
                    "version": __version__, "wall_time_s": round(wall, 6)}
        print(json.dumps({"manifest": manifest, "result": result},
                         sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
