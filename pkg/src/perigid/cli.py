"""Command-line front-end.

Every command reads one JSON input document, prints a JSON verdict on stdout
and exits 0 when the analysis ran (even when the verdict is negative), or 2
on invalid input with diagnostics on stderr.  Identical invocations with the
same seed produce byte-identical stdout.  The PERIGID_THREADS environment
variable caps internal parallelism; the current implementation runs serially,
which satisfies any cap.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .body_bar import (
    DEFAULT_EDGE_CAP,
    build_body_bar_gain_graph,
    count_rank,
    decide_body_bar_global,
)
from .document import (
    DocumentError,
    body_bar_build_to_document,
    covering_to_dot,
    covering_to_json,
    parse_document,
    parse_lattice_matrix,
)
from .framework import Framework, Lattice
from .gain_graph import (
    BAR_JOINT,
    BODY_BAR,
    InvalidGainGraphError,
    covering_window,
    require_valid,
)
from .motion import build_flex_path, sample_path, verify_path
from .rigidity import decide_global_rigidity, is_rigid, is_vertex_redundantly_rigid

EXIT_OK = 0
EXIT_INVALID = 2


class CliError(Exception):
    pass


def thread_cap() -> int | None:
    raw = os.environ.get("PERIGID_THREADS")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        return None
    return cap if cap >= 1 else None


def _load_document(path: str):
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: not valid JSON: {exc}") from exc
    try:
        doc = parse_document(raw)
        require_valid(doc.graph)
    except (DocumentError, InvalidGainGraphError, ValueError) as exc:
        raise CliError(f"{path}: {exc}") from exc
    return doc


def _resolve_lattice(doc, args) -> Lattice | None:
    if getattr(args, "lattice_file", None):
        try:
            with open(args.lattice_file) as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot read lattice file: {exc}") from exc
        try:
            return parse_lattice_matrix(raw, doc.d, doc.k)
        except DocumentError as exc:
            raise CliError(str(exc)) from exc
    return doc.lattice


def _require_mode(doc, mode: str):
    if doc.mode != mode:
        raise CliError(f"expected a {mode} document, got {doc.mode}")


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def cmd_rigid(args) -> int:
    doc = _load_document(args.file)
    _require_mode(doc, BAR_JOINT)
    lattice = _resolve_lattice(doc, args)
    verdict = is_rigid(doc.graph, doc.d, doc.k, lattice, args.trials, args.seed)
    _emit(verdict.to_json())
    return EXIT_OK


def cmd_vrr(args) -> int:
    doc = _load_document(args.file)
    _require_mode(doc, BAR_JOINT)
    lattice = _resolve_lattice(doc, args)
    ok, details = is_vertex_redundantly_rigid(
        doc.graph, doc.d, doc.k, lattice, args.trials, args.seed
    )
    _emit(
        {
            "vertex_redundantly_rigid": ok,
            "vertices": details,
            "trials": args.trials,
            "seed": args.seed,
        }
    )
    return EXIT_OK


def cmd_global(args) -> int:
    doc = _load_document(args.file)
    _require_mode(doc, BAR_JOINT)
    lattice = _resolve_lattice(doc, args)
    verdict = decide_global_rigidity(doc.graph, doc.d, doc.k, lattice, args.trials, args.seed)
    _emit(verdict.to_json())
    return EXIT_OK


def cmd_bodybar(args) -> int:
    doc = _load_document(args.file)
    _require_mode(doc, BODY_BAR)
    lattice = _resolve_lattice(doc, args)
    if args.action == "build":
        built = build_body_bar_gain_graph(doc.graph, doc.d)
        _emit(body_bar_build_to_document(built, doc.d))
    elif args.action == "counts":
        try:
            report = count_rank(doc.graph, doc.d, doc.k, args.edge_cap)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        _emit(report.to_json())
    else:  # global
        verdict = decide_body_bar_global(
            doc.graph, doc.d, doc.k, lattice, args.trials, args.seed
        )
        _emit(verdict.to_json())
    return EXIT_OK


def cmd_flexpath(args) -> int:
    doc = _load_document(args.file)
    _require_mode(doc, BAR_JOINT)
    lattice = _resolve_lattice(doc, args)
    if lattice is None:
        raise CliError("flexpath requires an explicit lattice")
    if doc.placement is None or doc.q is None:
        raise CliError("flexpath requires both 'placement' and 'q'")
    framework = Framework(doc.graph, lattice, doc.placement)
    path = build_flex_path(framework, doc.q)
    certificate = verify_path(path, framework, doc.q)
    if args.out:
        rows = sample_path(path, args.samples, args.window)
        with open(args.out, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                ["t", "vertex", "shift"] + [f"x{i + 1}" for i in range(2 * doc.d)]
            )
            for row in rows:
                writer.writerow(
                    [repr(row["t"]), row["vertex"], ";".join(str(s) for s in row["shift"])]
                    + [repr(c) for c in row["coords"]]
                )
    payload = certificate.to_json()
    payload["csv"] = args.out
    _emit(payload)
    return EXIT_OK


def cmd_covering(args) -> int:
    doc = _load_document(args.file)
    window = covering_window(doc.graph, args.window)
    if args.format == "dot":
        sys.stdout.write(covering_to_dot(window))
    else:
        _emit(covering_to_json(window))
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, seeded: bool = True) -> None:
    parser.add_argument("file", help="input document (JSON)")
    parser.add_argument("--lattice-file", help="JSON file with a d x k lattice matrix")
    if seeded:
        parser.add_argument("--trials", type=int, default=3)
        parser.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perigid",
        description="Rigidity analysis of fixed-lattice periodic frameworks from quotient gain graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rigid", help="periodic rigidity verdict")
    _add_common(p)
    p.set_defaults(func=cmd_rigid)

    p = sub.add_parser("vrr", help="vertex-redundant rigidity verdict")
    _add_common(p)
    p.set_defaults(func=cmd_vrr)

    p = sub.add_parser("global", help="global rigidity decision")
    _add_common(p)
    p.set_defaults(func=cmd_global)

    p = sub.add_parser("bodybar", help="body-bar pipeline")
    p.add_argument("action", choices=["global", "counts", "build"])
    _add_common(p)
    p.add_argument("--edge-cap", type=int, default=DEFAULT_EDGE_CAP)
    p.set_defaults(func=cmd_bodybar)

    p = sub.add_parser("flexpath", help="build and certify the flex between p and q")
    _add_common(p, seeded=False)
    p.add_argument("--samples", type=int, default=11)
    p.add_argument("--window", type=int, default=1)
    p.add_argument("--out", help="write the sampled trajectory as CSV")
    p.set_defaults(func=cmd_flexpath)

    p = sub.add_parser("covering", help="export a finite covering window")
    _add_common(p, seeded=False)
    p.add_argument("--window", type=int, default=1)
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.set_defaults(func=cmd_covering)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags, which matches the invalid-input code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DocumentError, InvalidGainGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
