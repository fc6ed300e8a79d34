"""Command-line interface.

Exit codes: 0 success, 1 parse/usage/verification error, 2 I/O error.
Nothing is written to stdout unless the command succeeds.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .analysis import (
    DEFAULT_PERSON_PATTERN,
    AttributePartition,
    concept_of_attributes,
    linked_events,
    network_group,
    subsumption_report,
)
from .context import ContextError, FormalContext, derive_attributes, derive_objects
from .export import LABELINGS, DiagramOptions, to_dot, to_json
from .implications import holds, stem_base
from .io import read_context
from .lattice import FormalConcept, build_lattice, enumerate_concepts

EMPTY = "∅"

FORMATS = {
    "concepts": ("text", "json"),
    "lattice": ("dot", "json"),
    "implications": ("text", "json"),
    "query": ("text", "json"),
}
DEFAULT_FORMAT = {"concepts": "text", "lattice": "dot", "implications": "text", "query": "text"}
CONFIG_KEYS = {"input_format", "format", "labeling", "person_pattern", "verify"}


class UsageError(Exception):
    pass


class CommandFailed(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _names_arg(value: str | None) -> list[str]:
    if not value:
        return []
    return [n.strip() for n in value.split(",") if n.strip()]


def _join(names) -> str:
    return " ".join(names) or EMPTY


def load_config(path: str) -> dict:
    """Read ``key = value`` flag defaults; ``#`` starts a comment line."""
    defaults = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"config {path}: expected key=value at line {lineno}")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in CONFIG_KEYS:
                raise UsageError(f"config {path}: unknown key {key!r} at line {lineno}")
            if key == "verify":
                value = value.lower() in ("1", "true", "yes", "on")
            defaults[key] = value
    return defaults


def _late_options(p: argparse.ArgumentParser) -> None:
    # Query flags may also follow the subquery; SUPPRESS keeps unset ones from
    # clobbering values parsed before it.
    sup = argparse.SUPPRESS
    p.add_argument("--input-format", choices=("cxt", "csv"), default=sup, help=sup)
    p.add_argument("--format", dest="format", default=sup, help=sup)
    p.add_argument("--verify", action="store_true", default=sup, help=sup)
    p.add_argument("--person-pattern", default=sup, help=sup)


def build_parser() -> tuple[argparse.ArgumentParser, list[argparse.ArgumentParser]]:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="context file (.cxt or .csv)")
    common.add_argument("--input-format", choices=("cxt", "csv"),
                        help="input format (default: from the file extension)")
    common.add_argument("--format", dest="format", help="output format")
    common.add_argument("--verify", action="store_true",
                        help="re-check every printed concept/implication before exiting")
    common.add_argument("--config", help="key=value file with flag defaults")

    parser = _Parser(prog="fcakit", description="Formal concept analysis toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    leaves = []

    p = sub.add_parser("concepts", parents=[common], help="list all formal concepts")
    leaves.append(p)

    p = sub.add_parser("lattice", parents=[common], help="export the concept lattice")
    p.add_argument("--labeling", default="full", help=f"node labels: {' or '.join(LABELINGS)}")
    leaves.append(p)

    p = sub.add_parser("implications", parents=[common], help="print the canonical implication basis")
    leaves.append(p)

    q = sub.add_parser("query", parents=[common], help="investigation queries")
    q.add_argument("--person-pattern", default=DEFAULT_PERSON_PATTERN,
                   help="regex selecting person attributes (default: P followed by digits)")
    qsub = q.add_subparsers(dest="query", required=True, parser_class=_Parser)

    d = qsub.add_parser("derive", help="derivation of an object or attribute set")
    grp = d.add_mutually_exclusive_group(required=True)
    grp.add_argument("--objects", nargs="?", const="", help="comma-separated object names")
    grp.add_argument("--attributes", nargs="?", const="", help="comma-separated attribute names")
    _late_options(d)

    for name, helptext in (
        ("concept", "concept generated by an attribute set"),
        ("linked", "events having all given attributes"),
        ("subsumed", "proper subconcepts of the concept generated by an attribute set"),
    ):
        s = qsub.add_parser(name, help=helptext)
        s.add_argument("--attributes", nargs="?", const="", required=True,
                       help="comma-separated attribute names")
        _late_options(s)

    s = qsub.add_parser("network-group", help="persons recorded at an event")
    s.add_argument("--event", required=True, help="event (object) name")
    _late_options(s)
    leaves.append(q)
    return parser, leaves


def _concept_row(ctx: FormalContext, i: int, c: FormalConcept) -> str:
    ext, intent = c.labels(ctx)
    return f"{i}\t{_join(ext)}\t{_join(intent)}"


def _concept_dict(ctx: FormalContext, i: int | None, c: FormalConcept) -> dict:
    ext, intent = c.labels(ctx)
    d = {"extent": ext, "intent": intent}
    return d if i is None else {"index": i, **d}


def _verify_concepts(ctx: FormalContext, concepts) -> None:
    for c in concepts:
        if not c.is_concept_of(ctx):
            raise CommandFailed(f"verification failed: {c!r} is not a formal concept")


def cmd_concepts(args, ctx: FormalContext) -> str:
    concepts = enumerate_concepts(ctx)
    if args.verify:
        _verify_concepts(ctx, concepts)
    if args.format == "json":
        return json.dumps([_concept_dict(ctx, i, c) for i, c in enumerate(concepts)],
                          indent=2, ensure_ascii=False) + "\n"
    return "".join(_concept_row(ctx, i, c) + "\n" for i, c in enumerate(concepts))


def cmd_lattice(args, ctx: FormalContext) -> str:
    if args.labeling not in LABELINGS:
        raise UsageError(f"unknown labeling {args.labeling!r}; expected one of {', '.join(LABELINGS)}")
    lattice = build_lattice(ctx)
    if args.verify:
        _verify_concepts(ctx, lattice.concepts)
    if args.format == "json":
        return to_json(lattice, ctx)
    return to_dot(lattice, ctx, DiagramOptions(labeling=args.labeling))


def cmd_implications(args, ctx: FormalContext) -> str:
    basis = stem_base(ctx)
    if args.verify:
        for imp in basis:
            if not holds(ctx, imp):
                raise CommandFailed(f"verification failed: {imp.format(ctx)} does not hold")
    if args.format == "json":
        return json.dumps([imp.to_dict(ctx) for imp in basis], indent=2, ensure_ascii=False) + "\n"
    return "".join(imp.format(ctx) + "\n" for imp in basis)


def cmd_query(args, ctx: FormalContext) -> str:
    as_json = args.format == "json"

    def names_out(names) -> str:
        if as_json:
            return json.dumps(list(names), ensure_ascii=False) + "\n"
        return _join(names) + "\n"

    if args.query == "derive":
        if args.objects is not None:
            objs = ctx.objects(_names_arg(args.objects))
            return names_out(ctx.attribute_labels(derive_objects(ctx, objs)))
        atts = ctx.attributes(_names_arg(args.attributes))
        return names_out(ctx.object_labels(derive_attributes(ctx, atts)))

    if args.query == "network-group":
        partition = AttributePartition.from_pattern(ctx, args.person_pattern)
        event = ctx.object_index(args.event)
        return names_out(ctx.attribute_labels(network_group(ctx, partition, event)))

    atts = ctx.attributes(_names_arg(args.attributes))
    if args.query == "linked":
        return names_out(ctx.object_labels(linked_events(ctx, atts)))
    concept = concept_of_attributes(ctx, atts)
    if args.verify:
        _verify_concepts(ctx, [concept])
    if args.query == "concept":
        if as_json:
            return json.dumps(_concept_dict(ctx, None, concept), ensure_ascii=False) + "\n"
        ext, intent = concept.labels(ctx)
        return f"extent: {_join(ext)}\nintent: {_join(intent)}\n"
    # subsumed
    lattice = build_lattice(ctx)
    below = subsumption_report(lattice, concept)
    rows = [(lattice.index(c), c) for c in below]
    if args.verify:
        _verify_concepts(ctx, below)
    if as_json:
        return json.dumps([_concept_dict(ctx, i, c) for i, c in rows],
                          indent=2, ensure_ascii=False) + "\n"
    return "".join(_concept_row(ctx, i, c) + "\n" for i, c in rows)


COMMANDS = {
    "concepts": cmd_concepts,
    "lattice": cmd_lattice,
    "implications": cmd_implications,
    "query": cmd_query,
}


def _apply_config(argv: list[str], leaves) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    defaults = load_config(known.config)
    for p in leaves:
        p.set_defaults(**defaults)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, leaves = build_parser()
    try:
        _apply_config(argv, leaves)
    except UsageError as exc:
        print(f"fcakit: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"fcakit: error: cannot read config: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    args.format = args.format or DEFAULT_FORMAT[args.command]
    if args.format not in FORMATS[args.command]:
        print(f"fcakit: error: unknown format {args.format!r} for {args.command}; "
              f"expected one of {', '.join(FORMATS[args.command])}", file=sys.stderr)
        return 1
    try:
        ctx = read_context(args.input, args.input_format)
        output = COMMANDS[args.command](args, ctx)
    except OSError as exc:
        print(f"fcakit: error: {exc}", file=sys.stderr)
        return 2
    except (ContextError, UsageError, CommandFailed, UnicodeDecodeError) as exc:
        print(f"fcakit: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
