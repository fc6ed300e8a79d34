"""Investigation queries: who acted together, which events are linked."""
from __future__ import annotations

import re
from dataclasses import dataclass

from .context import (
    AttributeSet,
    ContextError,
    FormalContext,
    ObjectSet,
    close_attributes,
    derive_attributes,
    derive_objects,
)
from .lattice import ConceptLattice, FormalConcept

DEFAULT_PERSON_PATTERN = r"P\d+"


@dataclass(frozen=True)
class AttributePartition:
    """Split of the attributes into locations and persons."""

    location_attributes: AttributeSet
    person_attributes: AttributeSet

    def __post_init__(self):
        loc, per = self.location_attributes, self.person_attributes
        if loc.size != per.size:
            raise ContextError("partition halves belong to different attribute universes")
        if loc & per:
            raise ContextError("location and person attributes overlap")
        if (loc | per) != AttributeSet.full(loc.size):
            raise ContextError("partition does not cover every attribute")

    @classmethod
    def from_pattern(cls, ctx: FormalContext, pattern: str = DEFAULT_PERSON_PATTERN):
        """Attributes whose full name matches ``pattern`` are persons, the rest locations."""
        rx = re.compile(pattern)
        persons = AttributeSet.from_indices(
            (m for m, n in enumerate(ctx.attribute_names) if rx.fullmatch(n)),
            ctx.n_attributes,
        )
        return cls(persons.complement(), persons)


def concept_of_attributes(ctx: FormalContext, attributes: AttributeSet) -> FormalConcept:
    """The largest concept whose intent contains ``attributes``."""
    return FormalConcept(derive_attributes(ctx, attributes), close_attributes(ctx, attributes))


def network_group(ctx: FormalContext, partition: AttributePartition, event: int) -> AttributeSet:
    """Persons recorded at ``event``."""
    return ctx.row(event) & partition.person_attributes


def event_locations(ctx: FormalContext, partition: AttributePartition, event: int) -> AttributeSet:
    return ctx.row(event) & partition.location_attributes


def linked_events(ctx: FormalContext, attributes: AttributeSet) -> ObjectSet:
    """Events exhibiting every attribute in ``attributes``."""
    return derive_attributes(ctx, attributes)


def subsumption_report(lattice: ConceptLattice, target: FormalConcept) -> list[FormalConcept]:
    """All proper subconcepts of ``target`` in canonical order.

    Raises ContextError when ``target`` is not a concept of ``lattice``.
    """
    i = lattice.index(target)
    return [lattice.concepts[k] for k in lattice.descendants(i)]


def shared_events(ctx: FormalContext, p: int, q: int) -> ObjectSet:
    """Events at which attributes ``p`` and ``q`` both occur."""
    return ctx.column(p) & ctx.column(q)


def event_attributes(ctx: FormalContext, event: int) -> AttributeSet:
    return derive_objects(ctx, ObjectSet.empty(ctx.n_objects).add(event))
