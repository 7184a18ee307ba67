"""Command-line front end.

Machine-readable output (JSON, CSV) goes to stdout and diagnostics to
stderr.  Exit codes: 0 success, 2 bad input, 3 an operation's
precondition failed (e.g. a non-alternating diagram where one is
required), 4 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections.abc import Sequence
from pathlib import Path

from crossgeo import __version__
from crossgeo.catalog import (
    KnotRecord,
    batch_report,
    bundled_catalog,
    load_catalog,
    load_catalog_with_errors,
)
from crossgeo.diagram import (
    KnotDiagram,
    crossing_counts,
    is_alternating,
    is_reduced,
    parse_pd,
    pretzel_diagram,
    writhe,
)
from crossgeo.edgepath import candidate_table, table_csv, table_json
from crossgeo.errors import CapExceeded, CrossgeoError, InputError, PreconditionError
from crossgeo.geography import (
    gamma,
    geography_report,
    oss_gamma4_bound,
    oss_sg_bounds,
    state_geography,
    turaev_from_gamma,
    turaev_genus_diagram,
)
from crossgeo.signature import goeritz_signature
from crossgeo.states import enumerate_states, state_report, state_surface
from crossgeo.svg import render_geography
from crossgeo.torus import pinch_report

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_CAP = 4

# "-3,3,5" looks like an option to argparse; see _protect_lists
_INT_LIST = re.compile(r"^-\d+(,\s*-?\d+)+$")


class _UnknownName(InputError):
    """Missing or unknown input selector."""


def _emit(obj: object) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _catalog(args: argparse.Namespace) -> list[KnotRecord]:
    return load_catalog(args.catalog) if args.catalog else bundled_catalog()


def _record(args: argparse.Namespace) -> KnotRecord | None:
    if args.name is None:
        return None
    for rec in _catalog(args):
        if rec.name == args.name:
            return rec
    raise _UnknownName(f"no catalog entry named {args.name!r}")


def _diagram(args: argparse.Namespace) -> tuple[KnotDiagram, KnotRecord | None]:
    rec = _record(args)
    if rec is not None:
        return rec.diagram, rec
    if args.pd is None:
        raise _UnknownName("give --pd or --name")
    return parse_pd(args.pd), None


# subcommands -------------------------------------------------------------------------------


def cmd_info(args: argparse.Namespace) -> int:
    d, rec = _diagram(args)
    pos, neg = crossing_counts(d)
    _emit(
        {
            "name": rec.name if rec else d.label,
            "crossings": d.c,
            "writhe": writhe(d),
            "positive": pos,
            "negative": neg,
            "alternating": is_alternating(d),
            "reduced": is_reduced(d),
            "sigma": goeritz_signature(d),
        }
    )
    return EXIT_OK


def cmd_states(args: argparse.Namespace) -> int:
    d, _ = _diagram(args)
    states = enumerate_states(d, basic_only=args.basic)
    sys.stdout.write(state_report(states) + "\n")
    return EXIT_OK


def cmd_geography(args: argparse.Namespace) -> int:
    d, rec = _diagram(args)
    sigma = goeritz_signature(d)
    geo = state_geography(d)
    _emit(geography_report(geo.region, geo.gamma_hat(sigma), geo.bound_kind))
    if args.svg:
        notable = [
            state_surface(s).point.pair
            for s in enumerate_states(d, basic_only=True)
            if state_surface(s).orientable
        ]
        title = (rec.name if rec else d.label) or "diagram"
        Path(args.svg).write_text(
            render_geography(geo.region, sigma, notable, title), encoding="utf-8"
        )
        print(f"wrote {args.svg}", file=sys.stderr)
    return EXIT_OK


def cmd_gamma(args: argparse.Namespace) -> int:
    d, rec = _diagram(args)
    sigma = goeritz_signature(d)
    geo = state_geography(d)
    rows = []
    for s in enumerate_states(d, basic_only=True):
        p = state_surface(s).point
        g = gamma(p, sigma)
        rows.append(
            {
                "choices": s.choices,
                "e": p.e,
                "b1": p.b1,
                "gamma_plus": int(g.gamma_plus),
                "gamma_minus": int(g.gamma_minus),
            }
        )
    hat = geo.gamma_hat(sigma)
    out: dict = {
        "sigma": sigma,
        "surfaces": rows,
        "gamma_hat_plus": int(hat.gamma_plus),
        "gamma_hat_minus": int(hat.gamma_minus),
        "bound_kind": geo.bound_kind,
    }
    upsilon = args.upsilon if args.upsilon is not None else (rec.upsilon if rec else None)
    if upsilon is not None:
        lo_p, lo_m = oss_sg_bounds(sigma, upsilon)
        bound4 = oss_gamma4_bound(sigma, upsilon)
        out["upsilon"] = upsilon
        out["gamma4_hat_lower"] = {"plus": lo_p, "minus": lo_m}
        out["gamma4_lower"] = str(bound4) if bound4.denominator != 1 else int(bound4)
    _emit(out)
    return EXIT_OK


def cmd_turaev(args: argparse.Namespace) -> int:
    d, _ = _diagram(args)
    sigma = goeritz_signature(d)
    via_gamma = turaev_from_gamma(d, sigma)
    _emit(
        {
            "turaev_genus_diagram": turaev_genus_diagram(d),
            "from_gamma": int(via_gamma) if via_gamma.denominator == 1 else str(via_gamma),
            "sigma": sigma,
        }
    )
    return EXIT_OK


def cmd_pinch(args: argparse.Namespace) -> int:
    sys.stdout.write(pinch_report(args.p, args.q) + "\n")
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise _UnknownName(f"bad parameter list {text.strip()!r}") from exc


def cmd_edgepaths(args: argparse.Namespace) -> int:
    params = _int_list(args.params)
    try:
        sigma = goeritz_signature(pretzel_diagram(params))
    except CrossgeoError:
        sigma = 0
    rows = candidate_table(params, sigma)
    if args.table:
        sys.stdout.write(table_csv(rows))
    else:
        sys.stdout.write(table_json(rows) + "\n")
    return EXIT_OK


def cmd_batch(args: argparse.Namespace) -> int:
    records, errors = load_catalog_with_errors(args.catalog_file)
    for err in errors:
        print(f"{args.catalog_file}: {err}", file=sys.stderr)
    _emit(batch_report(records))
    return EXIT_OK


# parser ------------------------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pd", help="PD code, e.g. 'X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)'")
    g.add_argument("--name", help="name of a catalog entry")
    p.add_argument("--catalog", help="catalog file for --name (default: bundled)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crossgeo", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"crossgeo {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="writhe, crossing counts, flags and signature")
    _add_input(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("states", help="Kauffman states and their surfaces")
    _add_input(p)
    p.add_argument("--basic", action="store_true", help="only basic states")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("geography", help="geography region of the basic state surfaces")
    _add_input(p)
    p.add_argument("--svg", metavar="FILE", help="also write an SVG picture")
    p.set_defaults(func=cmd_geography)

    p = sub.add_parser("gamma", help="Euler-normalized Betti numbers and bounds")
    _add_input(p)
    p.add_argument("--upsilon", type=int, help="externally known upsilon")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("turaev", help="Turaev genus of the diagram")
    _add_input(p)
    p.set_defaults(func=cmd_turaev)

    p = sub.add_parser("pinch", help="pinch sequence and pinch surfaces of T(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_pinch)

    p = sub.add_parser("edgepaths", help="edgepath candidate table of an odd pretzel knot")
    p.add_argument("params", help="comma-separated parameters, e.g. -3,3,5")
    p.add_argument("--table", action="store_true", help="CSV instead of JSON")
    p.set_defaults(func=cmd_edgepaths)

    p = sub.add_parser("batch", help="reports for every record of a catalog file")
    p.add_argument("catalog_file")
    p.set_defaults(func=cmd_batch)
    return parser


def _protect_lists(argv: Sequence[str]) -> list[str]:
    """Keep ``-3,3,5`` from being read as an option.

    argparse only treats strings starting with ``-`` as positionals when
    they look like a single negative number; a leading space is ignored by
    the list parser and hides the dash.
    """
    return [" " + a if _INT_LIST.match(a) else a for a in argv]


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_protect_lists(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
