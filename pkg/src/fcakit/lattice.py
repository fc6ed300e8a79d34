"""Concept enumeration and the concept lattice."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .context import (
    AttributeSet,
    ContextError,
    FormalContext,
    ObjectSet,
    _derive_attribute_bits,
    _derive_object_bits,
    close_attributes,
    close_objects,
    derive_attributes,
    derive_objects,
)


@dataclass(frozen=True)
class FormalConcept:
    extent: ObjectSet
    intent: AttributeSet

    def is_concept_of(self, ctx: FormalContext) -> bool:
        """True when extent and intent are each other's derivation in ``ctx``."""
        return (
            derive_objects(ctx, self.extent) == self.intent
            and derive_attributes(ctx, self.intent) == self.extent
        )

    def labels(self, ctx: FormalContext) -> tuple[list[str], list[str]]:
        return ctx.object_labels(self.extent), ctx.attribute_labels(self.intent)


def lectic_key(bits: int, size: int) -> int:
    """Integer whose natural order is the lectic order of subsets of ``range(size)``.

    Lower indices weigh more: of two sets, the one containing the smallest
    element of their symmetric difference is the larger.
    """
    if size == 0:
        return 0
    return int(format(bits, f"0{size}b")[::-1], 2)


def next_closure(current: int, size: int, close: Callable[[int], int]) -> int | None:
    """The lectically next closed set after ``current``, or None when exhausted."""
    a = current
    for i in range(size - 1, -1, -1):
        bit = 1 << i
        if a & bit:
            a ^= bit
            continue
        b = close(a | bit)
        # canonicity test: no new element below i
        if (b & ~a) & (bit - 1) == 0:
            return b
    return None


def iter_closures(size: int, close: Callable[[int], int]) -> Iterator[int]:
    """All closed subsets of ``range(size)`` in lectic order (iterative, no recursion)."""
    a = close(0)
    while a is not None:
        yield a
        a = next_closure(a, size, close)


def enumerate_concepts(ctx: FormalContext) -> list[FormalConcept]:
    """Every formal concept of ``ctx``, sorted by the lectic order of intents.

    Closures are enumerated on whichever side (attributes or objects) is
    smaller; the other side is derived afterwards.
    """
    n_obj, n_att = ctx.shape
    if n_att <= n_obj:
        def close(bits: int) -> int:
            return _derive_object_bits(ctx, _derive_attribute_bits(ctx, bits))

        pairs = [(_derive_attribute_bits(ctx, b), b) for b in iter_closures(n_att, close)]
    else:
        def close(bits: int) -> int:
            return _derive_attribute_bits(ctx, _derive_object_bits(ctx, bits))

        pairs = [(a, _derive_object_bits(ctx, a)) for a in iter_closures(n_obj, close)]
        pairs.sort(key=lambda p: lectic_key(p[1], n_att))
    return [FormalConcept(ObjectSet(a, n_obj), AttributeSet(b, n_att)) for a, b in pairs]


def leq(c1: FormalConcept, c2: FormalConcept) -> bool:
    """Concept order: ``c1`` is a subconcept of ``c2``."""
    return c1.extent <= c2.extent


def meet(ctx: FormalContext, c1: FormalConcept, c2: FormalConcept) -> FormalConcept:
    """Greatest common subconcept."""
    extent = c1.extent & c2.extent
    intent = derive_objects(ctx, extent)
    return FormalConcept(derive_attributes(ctx, intent), intent)


def join(ctx: FormalContext, c1: FormalConcept, c2: FormalConcept) -> FormalConcept:
    """Least common superconcept."""
    intent = c1.intent & c2.intent
    extent = derive_attributes(ctx, intent)
    return FormalConcept(extent, derive_objects(ctx, extent))


def meet_all(ctx: FormalContext, concepts: Iterable[FormalConcept]) -> FormalConcept:
    """Infimum of any collection of concepts; the top concept for an empty one."""
    extent = ctx.all_objects()
    for c in concepts:
        extent = extent & c.extent
    intent = derive_objects(ctx, extent)
    return FormalConcept(derive_attributes(ctx, intent), intent)


def join_all(ctx: FormalContext, concepts: Iterable[FormalConcept]) -> FormalConcept:
    """Supremum of any collection of concepts; the bottom concept for an empty one."""
    intent = ctx.all_attributes()
    for c in concepts:
        intent = intent & c.intent
    extent = derive_attributes(ctx, intent)
    return FormalConcept(extent, derive_objects(ctx, extent))


def object_concept(ctx: FormalContext, g: int) -> FormalConcept:
    """The smallest concept whose extent contains object ``g``."""
    single = ObjectSet.empty(ctx.n_objects).add(g)
    return FormalConcept(close_objects(ctx, single), derive_objects(ctx, single))


def attribute_concept(ctx: FormalContext, m: int) -> FormalConcept:
    """The largest concept whose intent contains attribute ``m``."""
    single = AttributeSet.empty(ctx.n_attributes).add(m)
    return FormalConcept(derive_attributes(ctx, single), close_attributes(ctx, single))


@dataclass(frozen=True)
class ConceptLattice:
    """All concepts of a context in canonical order, with the covering relation.

    ``upper_covers[i]`` lists the indices of the immediate superconcepts of
    ``concepts[i]``; ``lower_covers`` is its inverse.
    """

    context: FormalContext
    concepts: tuple[FormalConcept, ...]
    upper_covers: tuple[tuple[int, ...], ...]
    lower_covers: tuple[tuple[int, ...], ...]
    top_index: int
    bottom_index: int
    _by_intent: dict = field(repr=False, compare=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[FormalConcept]:
        return iter(self.concepts)

    def __getitem__(self, i: int) -> FormalConcept:
        return self.concepts[i]

    @property
    def top(self) -> FormalConcept:
        return self.concepts[self.top_index]

    @property
    def bottom(self) -> FormalConcept:
        return self.concepts[self.bottom_index]

    def index(self, concept: FormalConcept) -> int:
        try:
            i = self._by_intent[concept.intent.bits]
        except (KeyError, AttributeError):
            raise ContextError(f"{concept!r} is not a concept of this lattice") from None
        if self.concepts[i] != concept:
            raise ContextError(f"{concept!r} is not a concept of this lattice")
        return i

    def __contains__(self, concept) -> bool:
        try:
            self.index(concept)
        except ContextError:
            return False
        return True

    def edges(self) -> list[tuple[int, int]]:
        """Covering pairs ``(child, parent)`` sorted by child then parent."""
        return [(i, j) for i, ups in enumerate(self.upper_covers) for j in ups]

    def leq_index(self, i: int, j: int) -> bool:
        return leq(self.concepts[i], self.concepts[j])

    def descendants(self, i: int) -> list[int]:
        """Indices of all proper subconcepts of ``concepts[i]``, ascending."""
        ext = self.concepts[i].extent
        return [k for k, c in enumerate(self.concepts) if k != i and c.extent <= ext]

    def ancestors(self, i: int) -> list[int]:
        ext = self.concepts[i].extent
        return [k for k, c in enumerate(self.concepts) if k != i and ext <= c.extent]


def _upper_cover_extents(ctx: FormalContext, extent: int) -> list[int]:
    # Upper neighbours are the minimal closures of extent + one new object.
    candidates = set()
    for g in range(ctx.n_objects):
        bit = 1 << g
        if extent & bit:
            continue
        grown = extent | bit
        candidates.add(_derive_attribute_bits(ctx, _derive_object_bits(ctx, grown)))
    return [
        c for c in candidates
        if not any(o != c and o & ~c == 0 for o in candidates)
    ]


def build_lattice(ctx: FormalContext, concepts: Sequence[FormalConcept] | None = None) -> ConceptLattice:
    """Enumerate the concepts of ``ctx`` and compute the covering relation."""
    concepts = tuple(enumerate_concepts(ctx) if concepts is None else concepts)
    by_extent = {c.extent.bits: i for i, c in enumerate(concepts)}
    by_intent = {c.intent.bits: i for i, c in enumerate(concepts)}
    upper = []
    lower: list[list[int]] = [[] for _ in concepts]
    for i, c in enumerate(concepts):
        ups = sorted(by_extent[e] for e in _upper_cover_extents(ctx, c.extent.bits))
        upper.append(tuple(ups))
        for j in ups:
            lower[j].append(i)
    top = by_extent[(1 << ctx.n_objects) - 1]
    bottom = by_intent[(1 << ctx.n_attributes) - 1]
    return ConceptLattice(
        context=ctx,
        concepts=concepts,
        upper_covers=tuple(upper),
        lower_covers=tuple(tuple(l) for l in lower),
        top_index=top,
        bottom_index=bottom,
        _by_intent=by_intent,
    )
