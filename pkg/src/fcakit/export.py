"""Serialization of concept lattices: Graphviz DOT and JSON."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .context import FormalContext
from .lattice import ConceptLattice, attribute_concept, object_concept

LABELINGS = ("full", "reduced")


@dataclass(frozen=True)
class DiagramOptions:
    """``full`` prints extent and intent on every node; ``reduced`` prints each
    object at its object concept and each attribute at its attribute concept."""

    labeling: str = "full"
    rank_direction: str = "BT"

    def __post_init__(self):
        if self.labeling not in LABELINGS:
            raise ValueError(f"labeling must be one of {LABELINGS}, got {self.labeling!r}")
        if self.rank_direction != "BT":
            raise ValueError("rank_direction is fixed to 'BT'")


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def _names(names) -> str:
    return " ".join(names)


def reduced_labels(lattice: ConceptLattice, ctx: FormalContext):
    """Map concept index -> (attribute names, object names) for reduced labeling."""
    objs = {i: [] for i in range(len(lattice))}
    atts = {i: [] for i in range(len(lattice))}
    for g, name in enumerate(ctx.object_names):
        objs[lattice.index(object_concept(ctx, g))].append(name)
    for m, name in enumerate(ctx.attribute_names):
        atts[lattice.index(attribute_concept(ctx, m))].append(name)
    return {i: (atts[i], objs[i]) for i in range(len(lattice))}


def to_dot(lattice: ConceptLattice, ctx: FormalContext, opts: DiagramOptions | None = None) -> str:
    """Hasse diagram as a DOT digraph; edges run from subconcept to superconcept."""
    opts = opts or DiagramOptions()
    lines = [
        "digraph lattice {",
        f"  rankdir={opts.rank_direction};",
        "  node [shape=box];",
    ]
    if opts.labeling == "reduced":
        labels = reduced_labels(lattice, ctx)
        for i in range(len(lattice)):
            atts, objs = labels[i]
            text = "\n".join(part for part in (_names(atts), _names(objs)) if part)
            lines.append(f"  {i} [label={_quote(text)}];")
    else:
        for i, c in enumerate(lattice.concepts):
            ext, intent = c.labels(ctx)
            text = f"{_names(ext) or '∅'}\n{_names(intent) or '∅'}"
            lines.append(f"  {i} [label={_quote(text)}];")
    for child, parent in lattice.edges():
        lines.append(f"  {child} -> {parent};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_dict(lattice: ConceptLattice, ctx: FormalContext) -> dict:
    return {
        "objects": list(ctx.object_names),
        "attributes": list(ctx.attribute_names),
        "concepts": [
            {"extent": ctx.object_labels(c.extent), "intent": ctx.attribute_labels(c.intent)}
            for c in lattice.concepts
        ],
        "covers": [[child, parent] for child, parent in lattice.edges()],
    }


def to_json(lattice: ConceptLattice, ctx: FormalContext) -> str:
    return json.dumps(lattice_to_dict(lattice, ctx), indent=2, ensure_ascii=False) + "\n"
