"""Attribute implications and the canonical (Duquenne-Guigues) basis."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .context import (
    AttributeSet,
    FormalContext,
    _derive_attribute_bits,
    _derive_object_bits,
    derive_attributes,
)
from .lattice import next_closure

EMPTY_SET_SYMBOL = "∅"
ARROW = "→"


@dataclass(frozen=True)
class Implication:
    premise: AttributeSet
    conclusion: AttributeSet

    def reduced(self) -> "Implication":
        """Same implication with the premise removed from the conclusion."""
        return Implication(self.premise, self.conclusion - self.premise)

    def format(self, ctx: FormalContext) -> str:
        def names(s: AttributeSet) -> str:
            return " ".join(ctx.attribute_labels(s)) or EMPTY_SET_SYMBOL

        r = self.reduced()
        return f"{names(r.premise)} {ARROW} {names(r.conclusion)}"

    def to_dict(self, ctx: FormalContext) -> dict:
        r = self.reduced()
        return {
            "premise": ctx.attribute_labels(r.premise),
            "conclusion": ctx.attribute_labels(r.conclusion),
        }


def holds(ctx: FormalContext, imp: Implication) -> bool:
    """Every object having all premise attributes also has all conclusion attributes."""
    return derive_attributes(ctx, imp.premise) <= derive_attributes(ctx, imp.conclusion)


def _saturate(rules: Sequence[tuple[int, int]], bits: int, proper: bool = False) -> int:
    # Forward chaining; with proper=True a rule fires only on a strict superset
    # of its premise (the pseudo-closure used when building the basis).
    changed = True
    while changed:
        changed = False
        for p, c in rules:
            if p & ~bits == 0 and c & ~bits and not (proper and p == bits):
                bits |= c
                changed = True
    return bits


def implication_closure(imps: Iterable[Implication], attributes: AttributeSet) -> AttributeSet:
    """Smallest superset of ``attributes`` respecting every implication in ``imps``."""
    rules = [(i.premise.bits, i.conclusion.bits) for i in imps]
    return AttributeSet(_saturate(rules, attributes.bits), attributes.size)


def stem_base(ctx: FormalContext) -> list[Implication]:
    """Canonical implication basis of ``ctx``, premises in lectic order.

    Walks the pseudo-closed and closed attribute sets lectically; each
    pseudo-closed set P contributes ``P -> P'' \\ P``.  Cost grows with the
    number of such sets, which can be exponential in the attribute count.
    """
    n = ctx.n_attributes
    rules: list[tuple[int, int]] = []

    def pseudo_close(bits: int) -> int:
        return _saturate(rules, bits, proper=True)

    def close(bits: int) -> int:
        return _derive_object_bits(ctx, _derive_attribute_bits(ctx, bits))

    a = pseudo_close(0)
    while a is not None:
        closed = close(a)
        if closed != a:
            rules.append((a, closed & ~a))
        a = next_closure(a, n, pseudo_close)
    return [Implication(AttributeSet(p, n), AttributeSet(c, n)) for p, c in rules]


def independent(ctx: FormalContext, attributes: AttributeSet) -> bool:
    """No attribute of the set is implied by the remaining ones."""
    for m in attributes:
        rest = attributes.discard(m)
        single = AttributeSet.empty(ctx.n_attributes).add(m)
        if holds(ctx, Implication(rest, single)):
            return False
    return True
