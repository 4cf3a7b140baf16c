"""Command-line front end.

Usage::

    seqconv fib --L 10
    seqconv variance --family self --L 100
    seqconv sweep --family sym --from 20 --to 120 --format json
    seqconv sweep --family self --from 20 --to 120 --figure fig3.png --out fig3.csv
    seqconv argmax-scan --from 4 --to 400
    seqconv theorem-check --L 50
    seqconv constants --L 200 --digits 12
    seqconv viswanath --n 1000000 --seed 1

Exit status: 0 on success, 1 on usage or precondition errors, 2 when a
checked property (theorem-check, argmax-scan) fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections.abc import Sequence
from fractions import Fraction

from . import analysis, dist, exactnum, seqgen
from .convolve import conv_fast
from .svgplot import render_plot

EXIT_OK, EXIT_USAGE, EXIT_CONTRACT = 0, 1, 2

FAMILIES = [f.value for f in analysis.Family]
SERIES_COMMANDS = {"fib", "conv", "pmf", "sweep", "argmax-scan"}
SVG_COMMANDS = {"sweep", "argmax-scan"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2
        raise UsageError(f"{self.prog}: error: {message}")


def default_digits() -> int:
    env = os.environ.get("SEQCONV_DIGITS")
    if env:
        try:
            d = int(env)
        except ValueError:
            raise UsageError(f"SEQCONV_DIGITS must be an integer, got {env!r}") from None
        if d < 1:
            raise UsageError("SEQCONV_DIGITS must be >= 1")
        return d
    return exactnum.DEFAULT_DIGITS


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="seqconv", description="Exact Fibonacci convolution distributions.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")
    sub.required = True

    def add(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--digits", type=int, default=None)
        sp.add_argument("--format", choices=["csv", "json", "svg"], default=None)
        sp.add_argument("--out", default=None, help="output path (default: stdout)")
        return sp

    sp = add("fib", "Fibonacci sequence f[1..L], or a single term with --n")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--L", type=int)
    g.add_argument("--n", type=int)

    sp = add("conv", "sequence behind a family (the convolution output)")
    sp.add_argument("--family", choices=FAMILIES, default="self")
    sp.add_argument("--L", type=int, required=True)
    sp.add_argument("--fast", action="store_true", help="use the Karatsuba kernel")

    sp = add("pmf", "exact pmf induced by a family")
    sp.add_argument("--family", choices=FAMILIES, default="self")
    sp.add_argument("--L", type=int, required=True)

    sp = add("variance", "mean/variance/std report for one family and L")
    sp.add_argument("--family", choices=FAMILIES, default="self")
    sp.add_argument("--L", type=int, required=True)

    sp = add("sweep", "variance against L with a convergence summary")
    sp.add_argument("--family", choices=FAMILIES, default="self")
    sp.add_argument("--from", dest="L_from", type=int, required=True)
    sp.add_argument("--to", dest="L_to", type=int, required=True)
    sp.add_argument("--step", type=int, default=1)
    sp.add_argument("--epsilon", default="1e-9")
    sp.add_argument("--window", type=int, default=8)
    sp.add_argument("--no-exact", action="store_true", help="drop variance_num/variance_den columns")
    sp.add_argument("--figure", default=None, help="also write a matplotlib figure to this path")

    sp = add("argmax-scan", "index of the maximum of f*f for each L")
    sp.add_argument("--from", dest="L_from", type=int, required=True)
    sp.add_argument("--to", dest="L_to", type=int, required=True)
    sp.add_argument("--figure", default=None, help="also write a matplotlib figure to this path")

    sp = add("theorem-check", "the two strict inequalities around index 2L-2")
    sp.add_argument("--L", type=int, required=True)

    sp = add("constants", "observation constants vs printed and closed-form values")
    sp.add_argument("--L", type=int, default=200)

    sp = add("viswanath", "random Fibonacci growth-rate estimate")
    sp.add_argument("--n", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=1)

    sp = add("gauss-mse", "MSE against a moment-matched sampled normal")
    sp.add_argument("--family", choices=FAMILIES, default="sym")
    sp.add_argument("--L", type=int, required=True)

    sp = add("ratio", "f[n]/f[n-1]")
    sp.add_argument("--n", type=int, required=True)
    return p


def _csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dec(q: Fraction | int, digits: int) -> str:
    return exactnum.render(exactnum.to_decimal(q, digits))


def _json(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _validate(args: argparse.Namespace) -> None:
    fmt = args.format
    if fmt == "svg" and args.command not in SVG_COMMANDS:
        raise UsageError(f"--format svg is only available for {', '.join(sorted(SVG_COMMANDS))}")
    if getattr(args, "figure", None) and fmt == "svg":
        raise UsageError("--figure cannot be combined with --format svg")
    if args.digits is not None and args.digits < 1:
        raise UsageError("--digits must be >= 1")


def _run(args: argparse.Namespace) -> tuple[str, int]:
    digits = args.digits if args.digits is not None else default_digits()
    cmd = args.command
    series = cmd in SERIES_COMMANDS and not (cmd == "fib" and args.n is not None)
    fmt = args.format or ("csv" if series else "json")

    if cmd == "fib":
        if args.n is not None:
            term = seqgen.fib_term(args.n)
            binet = seqgen.binet_term(args.n)
            rec = {"n": args.n, "fib": str(term), "binet": str(binet), "agree": term == binet}
            if fmt == "csv":
                return _csv(["n", "fib", "binet", "agree"], [list(rec.values())]), EXIT_OK
            return _json(rec), EXIT_OK
        s = seqgen.fib_seq(args.L)
        return (s.to_csv() if fmt == "csv" else s.to_json() + "\n"), EXIT_OK

    if cmd == "conv":
        w = analysis.family_weights(args.family, args.L)
        if args.fast and args.family != "single":
            a, b = _operands(args.family, args.L)
            w = conv_fast(a, b)
        s = w.seq if hasattr(w, "seq") else w
        if fmt == "csv":
            return s.to_csv(), EXIT_OK
        payload = w.to_dict() if hasattr(w, "to_dict") else json.loads(s.to_json())
        return _json(payload), EXIT_OK

    if cmd == "pmf":
        p = dist.pmf_from_seq(analysis.family_weights(args.family, args.L))
        rows = [[n, q.numerator, q.denominator, _dec(q, digits)] for n, q in zip(p.support, p.probs)]
        if fmt == "csv":
            return _csv(["n", "prob_num", "prob_den", "prob_decimal"], rows), EXIT_OK
        return _json({"family": args.family, "L": args.L,
                      "probs": [{"n": r[0], "num": str(r[1]), "den": str(r[2]), "decimal": r[3]}
                                for r in rows]}), EXIT_OK

    if cmd == "variance":
        rep = dist.moment_report(analysis.family_weights(args.family, args.L), digits)
        d = {"family": args.family, "L": args.L, **rep.to_dict()}
        if fmt == "csv":
            return _csv(list(d), [list(d.values())]), EXIT_OK
        return _json(d), EXIT_OK

    if cmd == "sweep":
        series = analysis.variance_sweep(args.family, args.L_from, args.L_to, args.step)
        if args.figure:
            from .figures import variance_figure

            variance_figure([series], args.figure)
        if fmt == "svg":
            return render_plot(series, title=f"variance vs L ({args.family})", y_label="variance"), EXIT_OK
        if fmt == "csv":
            return series.to_csv(digits, exact=not args.no_exact), EXIT_OK
        report = None
        if len(series) >= args.window + 1:
            report = analysis.detect_convergence(series, args.epsilon, args.window, digits=digits).to_dict()
        return _json({
            "family": args.family,
            "points": [{"L": p.L, "variance_decimal": _dec(p.variance, digits),
                        "variance_num": str(p.variance.numerator),
                        "variance_den": str(p.variance.denominator)} for p in series.points],
            "convergence": report,
        }), EXIT_OK

    if cmd == "argmax-scan":
        scan = analysis.argmax_scan(args.L_from, args.L_to)
        ok = all(i == 2 * L - 2 for L, i in scan)
        if args.figure:
            from .figures import argmax_figure

            argmax_figure(scan, args.figure)
        if fmt == "svg":
            text = render_plot(scan, title="index of maximum", y_label="argmax")
        elif fmt == "csv":
            text = _csv(["L", "argmax_index", "expected"], [[L, i, 2 * L - 2] for L, i in scan])
        else:
            text = _json({"all_match": ok, "scan": [{"L": L, "argmax_index": i} for L, i in scan]})
        return text, EXIT_OK if ok else EXIT_CONTRACT

    if cmd == "theorem-check":
        chk = dist.theorem_check(args.L)
        d = chk.to_dict()
        text = _csv(list(d), [list(d.values())]) if fmt == "csv" else _json(d)
        return text, EXIT_OK if chk.ok else EXIT_CONTRACT

    if cmd == "constants":
        rep = analysis.constants_suite(args.L, digits).to_dict()
        if fmt == "csv":
            rows = [[k, v.get("computed"), v.get("paper_target"), v.get("abs_error"),
                     v.get("closed_form_target"), v.get("closed_form_error")]
                    for k, v in rep.items() if k not in ("meta", "obs6")]
            return _csv(["observation", "computed", "paper_target", "abs_error",
                         "closed_form_target", "closed_form_error"], rows), EXIT_OK
        return _json(rep), EXIT_OK

    if cmd == "viswanath":
        est = analysis.viswanath_estimate(args.n, args.seed).to_dict()
        if fmt == "csv":
            return _csv(list(est), [list(est.values())]), EXIT_OK
        return _json(est), EXIT_OK

    if cmd == "gauss-mse":
        p = dist.pmf_from_seq(analysis.family_weights(args.family, args.L))
        mse = dist.gaussian_mse(p)
        d = {"family": args.family, "L": args.L, "support_size": len(p),
             "mse": format(mse, "e"), "precision": dist.MSE_PRECISION}
        if fmt == "csv":
            return _csv(list(d), [list(d.values())]), EXIT_OK
        return _json(d), EXIT_OK

    if cmd == "ratio":
        r = analysis.ratio_convergence(args.n, digits)
        d = {"n": args.n, "ratio": exactnum.render(r), "golden_ratio": exactnum.render(exactnum.golden_ratio(digits))}
        if fmt == "csv":
            return _csv(list(d), [list(d.values())]), EXIT_OK
        return _json(d), EXIT_OK

    raise UsageError(f"unknown command {cmd!r}")


def _operands(family: str, L: int):
    s = seqgen.fib_seq(L)
    if family == "self":
        return s, s
    if family == "rev":
        return s, seqgen.reverse(s)
    if family == "triple":
        r = seqgen.reverse(s)
        return analysis.conv(s, r).seq, s
    w = analysis.sym_weights(L)
    return w, w


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _validate(args)
        text, code = _run(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"seqconv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
