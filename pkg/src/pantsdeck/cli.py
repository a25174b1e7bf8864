"""Deterministic command-line front end.

Subcommands: make-surface, deform, lengths, gamma-table, classify, dls,
prop1, wolpert.  Inputs are the JSON schemas of the surface and classifier
modules; outputs are JSON or CSV, byte-identical across runs for identical
inputs.  When a report is written to a file, a PNG figure is rendered next
to it (suppress with --no-plot).

Exit codes: 0 success, 1 validation/input failure, 2 computation failure
(a geometric quantity degenerated, e.g. the wrap search hit its edge).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import plots
from .classify import classify, pair_from_dict, verdicts_to_dict
from .errors import BadParameter, ComputationError, InputError
from .seqexpr import parse_sequence
from .spectra import (
    curve_length,
    default_word_family,
    dls_lower_bound,
    prop1_report,
    prop1_rows_to_csv,
    shortest_crossing_curve,
    wolpert_check,
    word_label,
)
from .surface import (
    Crossing,
    MarkedSurface,
    PantsCurve,
    flute_family,
    scale_lengths,
    shift_twists,
    surface_from_json,
    surface_to_json,
    validate,
)

__all__ = ["main", "run"]


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- surface sourcing ---------------------------------------------------------

def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["flute", "handle"], help="built-in family")
    p.add_argument("--N", type=int, help="pants count (flute) or handle units")
    p.add_argument("--lengths", help="length sequence expression, e.g. exp:-1")
    p.add_argument("--twists", help="twist sequence expression (default const:0)")
    p.add_argument("--boundary-length", type=float, default=1.0)
    p.add_argument("--punctures", action="store_true", help="puncture the free cuffs")
    p.add_argument("--upper-bound", type=float, default=None)


def _family_from_args(args) -> MarkedSurface:
    if args.family is None or args.N is None or args.lengths is None:
        raise BadParameter("family construction needs --family, --N and --lengths")
    lengths = parse_sequence(args.lengths)
    twists = parse_sequence(args.twists) if args.twists else None
    return flute_family(
        args.N,
        lengths,
        twists,
        handles=args.family == "handle",
        punctures=args.punctures,
        boundary_length=args.boundary_length,
        upper_bound=args.upper_bound,
    )


def _load_surface(path: str) -> MarkedSurface:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise BadParameter(f"cannot read {path}: {exc}") from exc
    s = surface_from_json(text)
    problems = validate(s)
    if problems:
        raise BadParameter(f"invalid surface {path}: " + "; ".join(problems))
    return s


def _surface_x(args) -> MarkedSurface:
    if getattr(args, "surface_x", None):
        return _load_surface(args.surface_x)
    return _family_from_args(args)


def _parse_deform(spec: str):
    op, sep, arg = spec.partition(":")
    if not sep:
        raise BadParameter(f"deformation {spec!r} needs a ':' argument")
    try:
        value = float(arg)
    except ValueError as exc:
        raise BadParameter(f"bad numeric argument in deformation {spec!r}") from exc
    if op == "scale":
        return lambda s: scale_lengths(s, value)
    if op == "tshift":
        return lambda s: shift_twists(s, value)
    raise BadParameter(f"unknown deformation {op!r} (use scale:c or tshift:c)")


def _surface_y(args, x: MarkedSurface) -> MarkedSurface:
    if getattr(args, "surface_y", None):
        return _load_surface(args.surface_y)
    y = x
    for spec in args.deform or []:
        y = _parse_deform(spec)(y)
    return y


def _parse_word(spec: str, surface: MarkedSurface, k_range: int):
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind == "alpha" and len(parts) == 2:
            return PantsCurve(int(parts[1]))
        if kind == "cross" and 2 <= len(parts) <= 4:
            n = int(parts[1])
            arc = int(parts[2]) if len(parts) >= 3 else 0
            wrap = int(parts[3]) if len(parts) == 4 else 0
            return Crossing(n, arc, wrap)
        if kind == "gamma" and len(parts) == 2:
            word, _ = shortest_crossing_curve(surface, int(parts[1]), k_range)
            return word
    except ValueError as exc:
        raise BadParameter(f"bad curve spec {spec!r}") from exc
    raise BadParameter(
        f"bad curve spec {spec!r} (use alpha:N, cross:N[:ARC[:K]] or gamma:N)"
    )


# -- output handling ----------------------------------------------------------

def _emit(text: str, args, figure=None) -> None:
    """Write the report; render the figure next to file outputs."""
    out = getattr(args, "output", None)
    if out:
        Path(out).write_text(text)
        if figure is not None and not getattr(args, "no_plot", False):
            figure(str(Path(out).with_suffix(".png")))
    else:
        sys.stdout.write(text)


def _add_output_args(p: argparse.ArgumentParser, formats=("json", "csv")) -> None:
    if formats:
        p.add_argument("--format", choices=list(formats), default=formats[0])
    p.add_argument("--output", help="write here instead of stdout")
    p.add_argument("--no-plot", action="store_true", help="skip the report figure")


def _parse_range(spec: str | None, available: list[int]) -> list[int]:
    if spec is None:
        return available
    lo, sep, hi = spec.partition(":")
    try:
        a, b = int(lo), int(hi) if sep else int(lo)
    except ValueError as exc:
        raise BadParameter(f"bad range {spec!r} (use a:b)") from exc
    return [n for n in available if a <= n <= b]


# -- subcommand handlers ------------------------------------------------------

def _cmd_make_surface(args) -> int:
    s = _family_from_args(args)
    problems = validate(s)
    if problems:
        raise BadParameter("constructed surface invalid: " + "; ".join(problems))
    _emit(surface_to_json(s) + "\n", args)
    return 0


def _cmd_deform(args) -> int:
    x = _load_surface(args.surface)
    y = _surface_y(args, x)
    _emit(surface_to_json(y) + "\n", args)
    return 0


def _cmd_lengths(args) -> int:
    s = _load_surface(args.surface) if args.surface else _family_from_args(args)
    words = [_parse_word(spec, s, args.k_range) for spec in args.curve]
    results = [(word_label(w), curve_length(s, w)) for w in words]
    if args.format == "csv":
        lines = ["curve,length"] + [f"{label},{_fmt(v)}" for label, v in results]
        _emit("\n".join(lines) + "\n", args)
    else:
        _emit(_dump_json([{"curve": l, "length": v} for l, v in results]), args)
    return 0


def _cmd_gamma_table(args) -> int:
    s = _load_surface(args.surface) if args.surface else _family_from_args(args)
    indices = _parse_range(args.range, sorted(s.graph.interior_curves))
    rows = []
    for n in indices:
        word, length = shortest_crossing_curve(s, n, args.k_range)
        rows.append(
            {
                "n": n,
                "l_alpha": s.length(n),
                "l_gamma": length,
                "word": word_label(word),
            }
        )
    if args.format == "csv":
        lines = ["n,l_alpha,l_gamma,word"]
        for r in rows:
            lines.append(
                f"{r['n']},{_fmt(r['l_alpha'])},{_fmt(r['l_gamma'])},{r['word']}"
            )
        text = "\n".join(lines) + "\n"
    else:
        text = _dump_json(rows)
    _emit(text, args, figure=lambda p: plots.render_gamma_figure(rows, p))
    return 0


def _cmd_classify(args) -> int:
    try:
        data = json.loads(Path(args.input).read_text())
    except OSError as exc:
        raise BadParameter(f"cannot read {args.input}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise BadParameter(f"{args.input} is not valid JSON: {exc}") from exc
    pair, M, eps = pair_from_dict(data)
    if args.M is not None:
        M = args.M
    if args.eps is not None:
        eps = args.eps
    if args.tail_start is not None:
        pair = type(pair)(
            pair.base_log_lengths,
            pair.base_twists,
            pair.log_lengths,
            pair.twists,
            args.tail_start,
        )
    verdicts = classify(pair, M, eps)
    _emit(
        _dump_json(verdicts_to_dict(verdicts)),
        args,
        figure=lambda p: plots.render_classify_figure(pair, verdicts, p),
    )
    return 0


def _cmd_dls(args) -> int:
    x = _surface_x(args)
    y = _surface_y(args, x)
    if args.curve:
        words = [_parse_word(spec, x, args.k_range) for spec in args.curve]
    else:
        words = default_word_family(x, args.k_range)
    value = dls_lower_bound(x, y, words)
    _emit(
        _dump_json(
            {
                "dls_lower_bound": value,
                "family_size": len(words),
                "note": "family-restricted lower bound, not the full length-spectrum distance",
            }
        ),
        args,
    )
    return 0


def _cmd_prop1(args) -> int:
    x = _surface_x(args)
    y = _surface_y(args, x)
    indices = _parse_range(args.range, sorted(x.graph.interior_curves))
    rows, summary = prop1_report(x, y, indices, args.k_range)
    if args.format == "csv":
        text = prop1_rows_to_csv(rows)
    else:
        text = _dump_json(
            {
                "rows": [vars(r) for r in rows],
                "summary": {
                    "sup_abs_diff": summary.sup_abs_diff,
                    "deviation_min": summary.deviation_min,
                    "deviation_max": summary.deviation_max,
                },
            }
        )
    _emit(text, args, figure=lambda p: plots.render_prop1_figure(rows, p))
    return 0


def _cmd_wolpert(args) -> int:
    x = _surface_x(args)
    y = _surface_y(args, x)
    if args.curve:
        words = [_parse_word(spec, x, args.k_range) for spec in args.curve]
    else:
        words = default_word_family(x, args.k_range)
    report = wolpert_check(x, y, words, args.K)
    if args.format == "csv":
        lines = ["curve,l_X,l_Y,ratio,violation"]
        for r in report.rows:
            lines.append(
                f"{r.label},{_fmt(r.l_X)},{_fmt(r.l_Y)},{_fmt(r.ratio)},"
                f"{1 if r.violation else 0}"
            )
        text = "\n".join(lines) + "\n"
    else:
        text = _dump_json(
            {
                "K": report.K,
                "max_ratio_deviation": report.max_ratio_deviation,
                "violation_count": len(report.violations),
                "rows": [
                    {
                        "curve": r.label,
                        "l_X": r.l_X,
                        "l_Y": r.l_Y,
                        "ratio": r.ratio,
                        "violation": r.violation,
                    }
                    for r in report.rows
                ],
            }
        )
    _emit(text, args, figure=lambda p: plots.render_wolpert_figure(report, p))
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pantsdeck", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "make-surface", help="build a family surface and write its JSON"
    )
    _add_family_args(p)
    p.add_argument("--output", help="write here instead of stdout")
    p.set_defaults(handler=_cmd_make_surface)

    p = sub.add_parser("deform", help="apply deformations to a surface file")
    p.add_argument("--surface", required=True)
    p.add_argument("--deform", action="append", default=[], help="scale:c or tshift:c")
    p.add_argument("--surface-y", help=argparse.SUPPRESS)
    p.add_argument("--output", help="write here instead of stdout")
    p.set_defaults(handler=_cmd_deform)

    p = sub.add_parser("lengths", help="geodesic lengths of named curve words")
    p.add_argument("--surface")
    _add_family_args(p)
    p.add_argument(
        "--curve",
        action="append",
        required=True,
        help="alpha:N, cross:N[:ARC[:K]] or gamma:N (repeatable)",
    )
    p.add_argument("--k-range", type=int, default=3)
    _add_output_args(p)
    p.set_defaults(handler=_cmd_lengths, no_plot=True)

    p = sub.add_parser(
        "gamma-table", help="shortest crossing curve per interior pants curve"
    )
    p.add_argument("--surface")
    _add_family_args(p)
    p.add_argument("--range", help="curve index range a:b")
    p.add_argument("--k-range", type=int, default=3)
    _add_output_args(p, formats=("csv", "json"))
    p.set_defaults(handler=_cmd_gamma_table)

    p = sub.add_parser(
        "classify", help="five-space verdicts for a base/candidate pair"
    )
    p.add_argument("--input", required=True, help="pair JSON file")
    p.add_argument("--M", type=float, default=None, help="override bound M")
    p.add_argument("--eps", type=float, default=None, help="override tolerance eps")
    p.add_argument("--tail-start", type=int, default=None, help="override tail start")
    _add_output_args(p, formats=())
    p.set_defaults(handler=_cmd_classify)

    for name, handler, extra in (
        ("dls", _cmd_dls, "family-restricted length-spectrum distance lower bound"),
        ("prop1", _cmd_prop1, "crossing-length comparison report for X vs Y"),
        ("wolpert", _cmd_wolpert, "multiplicative length-bound check for X vs Y"),
    ):
        p = sub.add_parser(name, help=extra)
        p.add_argument("--surface-x", help="surface JSON for X")
        p.add_argument("--surface-y", help="surface JSON for Y")
        _add_family_args(p)
        p.add_argument(
            "--deform",
            action="append",
            default=[],
            help="build Y from X: scale:c or tshift:c (repeatable)",
        )
        p.add_argument("--k-range", type=int, default=3)
        if name == "prop1":
            p.add_argument("--range", help="curve index range a:b")
            _add_output_args(p, formats=("csv", "json"))
        elif name == "wolpert":
            p.add_argument("--K", type=float, default=2.0)
            p.add_argument("--curve", action="append", help="restrict the family")
            _add_output_args(p, formats=("csv", "json"))
        else:
            p.add_argument("--curve", action="append", help="restrict the family")
            _add_output_args(p, formats=())
            p.set_defaults(no_plot=True)
        p.set_defaults(handler=handler)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"pantsdeck: {exc}", file=sys.stderr)
        return 1
    except ComputationError as exc:
        print(f"pantsdeck: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
