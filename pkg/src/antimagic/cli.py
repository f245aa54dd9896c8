"""Command-line front end.

Exit codes: 0 success / antimagic, 1 not antimagic or failed check,
2 input error, 3 inconclusive oracle search.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from .families import FamilyError, FamilySpec, parse_h_spec
from .graph import EdgeLabeling, Graph, GraphError, LabelingError, to_dot, vertex_weights
from .labelers import LabelingCertificate, VerificationError, label_spec
from .oracle import brute_force_antimagic
from .sweep import SweepConfig, SweepConfigError, rows_to_csv, run_sweep

EXIT_OK, EXIT_NOT_ANTIMAGIC, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _family_spec(args: argparse.Namespace) -> FamilySpec:
    if args.spec:
        return FamilySpec.from_json(_read_json(args.spec))
    if not args.family:
        raise InputError("give --family or --spec")
    params = {k: getattr(args, k) for k in ("n", "m", "x") if getattr(args, k) is not None}
    h = parse_h_spec(args.h) if args.h else None
    return FamilySpec(args.family, params, h)


def _load_labeling(data: Any) -> EdgeLabeling:
    # accepts {"labels": [...]} or a certificate with a "labeling" list
    if isinstance(data, dict) and isinstance(data.get("labeling"), list):
        return EdgeLabeling(tuple(data["labeling"]))
    return EdgeLabeling.from_json(data)


def certificate_csv(cert: LabelingCertificate) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["vertex", "weight", "group"])
    for gi, group in enumerate(cert.ordering_chain):
        name = cert.group_names[gi] if gi < len(cert.group_names) else str(gi)
        for v in group:
            writer.writerow([cert.graph.name(v), cert.report.weights[v], name])
    return buf.getvalue()


def cmd_generate(args: argparse.Namespace) -> int:
    print(_dump(_family_spec(args).build().to_json()))
    return EXIT_OK


def cmd_label(args: argparse.Namespace) -> int:
    cert = label_spec(_family_spec(args))
    if args.format == "json":
        print(_dump(cert.to_json()))
    elif args.format == "dot":
        sys.stdout.write(to_dot(cert.graph, cert.labeling))
    else:
        sys.stdout.write(certificate_csv(cert))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = Graph.from_json(_read_json(args.graph))
    labeling = _load_labeling(_read_json(args.labeling))
    report = vertex_weights(g, labeling)
    out = report.to_json()
    out["antimagic"] = report.distinct
    print(_dump(out))
    return EXIT_OK if report.distinct else EXIT_NOT_ANTIMAGIC


def cmd_oracle(args: argparse.Namespace) -> int:
    g = Graph.from_json(_read_json(args.graph))
    result = brute_force_antimagic(g, args.budget)
    print(_dump(result.to_json()))
    if result.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if result.exists else EXIT_NOT_ANTIMAGIC


def cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig.load(args.config)
    rows = run_sweep(config, jobs=args.jobs)
    text = rows_to_csv(rows)
    output = args.output or config.output
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)
    failed = [r for r in rows if not (r.verified and r.chain)]
    print(f"{len(rows)} instances, {len(failed)} failed", file=sys.stderr)
    return EXIT_NOT_ANTIMAGIC if failed else EXIT_OK


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="barbell, bistar-corona, cycle-corona, cycle, complete, star, bistar")
    p.add_argument("--spec", help="FamilySpec JSON file instead of --family flags")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--h", help="H graph: cycle:n, complete:n or file:<path>")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antimagic", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="print a family instance as Graph JSON")
    _add_family_args(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("label", help="run a constructive labeler")
    _add_family_args(p)
    p.add_argument("--format", choices=("json", "dot", "csv"), default="json")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling for antimagicness")
    p.add_argument("graph")
    p.add_argument("labeling", help="labeling JSON or certificate JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive antimagic search on a small graph")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=None, help="max label placements")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="label and check a parameter range, CSV out")
    p.add_argument("config", help="SweepConfig JSON file")
    p.add_argument("--output", help="CSV path (defaults to config output or stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_ANTIMAGIC
    except (InputError, FamilyError, GraphError, LabelingError, SweepConfigError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
