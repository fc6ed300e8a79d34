"""Formal contexts, index sets and the derivation operators.

Object and attribute sets are stored as Python integers used as bit-vectors:
bit ``i`` is set when the element with index ``i`` is a member.  Every set
operation is therefore a single bitwise instruction on arbitrary-width ints.
"""
from __future__ import annotations

import difflib
from typing import Iterable, Iterator, Sequence

import numpy as np


class ContextError(ValueError):
    """Raised for invalid contexts, out-of-range indices and unknown names."""


class UnknownNameError(ContextError, KeyError):
    def __init__(self, name: str, kind: str, candidates: Sequence[str]):
        self.name = name
        self.kind = kind
        self.suggestions = difflib.get_close_matches(name, list(candidates), n=3)
        msg = f"unknown {kind} name {name!r}"
        if self.suggestions:
            msg += f" (did you mean: {', '.join(self.suggestions)})"
        super().__init__(msg)

    def __str__(self) -> str:
        return self.args[0]


class _IndexSet:
    """A subset of ``range(size)`` backed by an int bit-vector."""

    __slots__ = ("bits", "size")

    def __init__(self, bits: int = 0, size: int = 0):
        if bits < 0 or bits >> size:
            raise ContextError(f"bits {bits:#x} out of range for a universe of size {size}")
        self.bits = bits
        self.size = size

    @classmethod
    def from_indices(cls, indices: Iterable[int], size: int):
        bits = 0
        for i in indices:
            i = int(i)
            if not 0 <= i < size:
                raise ContextError(f"index {i} out of range 0..{size - 1}")
            bits |= 1 << i
        return cls(bits, size)

    @classmethod
    def empty(cls, size: int):
        return cls(0, size)

    @classmethod
    def full(cls, size: int):
        return cls((1 << size) - 1, size)

    def _coerce(self, other) -> int:
        if type(other) is not type(self):
            return NotImplemented
        if other.size != self.size:
            raise ContextError("sets belong to universes of different size")
        return other.bits

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.size and bool(self.bits >> i & 1)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.bits == other.bits and self.size == other.size

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.bits, self.size))

    def __and__(self, other):
        b = self._coerce(other)
        return b if b is NotImplemented else type(self)(self.bits & b, self.size)

    def __or__(self, other):
        b = self._coerce(other)
        return b if b is NotImplemented else type(self)(self.bits | b, self.size)

    def __sub__(self, other):
        b = self._coerce(other)
        return b if b is NotImplemented else type(self)(self.bits & ~b, self.size)

    def __le__(self, other) -> bool:
        b = self._coerce(other)
        return b if b is NotImplemented else self.bits & ~b == 0

    def __lt__(self, other) -> bool:
        b = self._coerce(other)
        return b if b is NotImplemented else (self.bits != b and self.bits & ~b == 0)

    def __ge__(self, other) -> bool:
        return other.__le__(self)

    def __gt__(self, other) -> bool:
        return other.__lt__(self)

    def complement(self):
        return type(self)(~self.bits & ((1 << self.size) - 1), self.size)

    def add(self, i: int):
        if not 0 <= i < self.size:
            raise ContextError(f"index {i} out of range 0..{self.size - 1}")
        return type(self)(self.bits | 1 << i, self.size)

    def discard(self, i: int):
        return type(self)(self.bits & ~(1 << i), self.size)

    def indices(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.indices()}, size={self.size})"


class ObjectSet(_IndexSet):
    """Subset of the objects of a context."""

    __slots__ = ()


class AttributeSet(_IndexSet):
    """Subset of the attributes of a context."""

    __slots__ = ()


def _check_names(names: Sequence[str], kind: str) -> tuple[str, ...]:
    names = tuple(names)
    seen = set()
    for n in names:
        if not isinstance(n, str) or not n:
            raise ContextError(f"{kind} names must be non-empty strings, got {n!r}")
        if n in seen:
            raise ContextError(f"duplicate {kind} name {n!r}")
        seen.add(n)
    return names


class FormalContext:
    """An immutable object x attribute incidence table.

    Parameters
    ----------
    object_names, attribute_names : sequence of str
        Unique, non-empty names.  Their order fixes the index of every object
        and attribute for the lifetime of the context.
    incidence : array-like of bool, shape (n_objects, n_attributes)
        ``incidence[g, m]`` is true when object ``g`` has attribute ``m``.
    name : str, optional
        Free-form label, kept for ``.cxt`` round-trips.
    """

    def __init__(self, object_names, attribute_names, incidence, name: str = ""):
        self.object_names = _check_names(object_names, "object")
        self.attribute_names = _check_names(attribute_names, "attribute")
        n_obj, n_att = len(self.object_names), len(self.attribute_names)
        inc = np.asarray(incidence, dtype=bool)
        if inc.size == 0:
            inc = inc.reshape(n_obj, n_att)
        if inc.shape != (n_obj, n_att):
            raise ContextError(
                f"incidence has shape {inc.shape}, expected ({n_obj}, {n_att})"
            )
        inc = inc.copy()
        inc.flags.writeable = False
        self.incidence = inc
        self.name = name
        self._rows = tuple(_pack(inc[g]) for g in range(n_obj))
        self._cols = tuple(_pack(inc[:, m]) for m in range(n_att))
        self._object_index = {n: i for i, n in enumerate(self.object_names)}
        self._attribute_index = {n: i for i, n in enumerate(self.attribute_names)}

    @classmethod
    def from_rows(cls, object_names, attribute_names, rows, name: str = ""):
        """Build a context from ``{object: iterable of attribute names}``-style rows.

        ``rows`` is a sequence aligned with ``object_names`` whose items are
        collections of attribute names.
        """
        attribute_names = tuple(attribute_names)
        index = {n: i for i, n in enumerate(attribute_names)}
        inc = np.zeros((len(object_names), len(attribute_names)), dtype=bool)
        for g, row in enumerate(rows):
            for a in row:
                if a not in index:
                    raise UnknownNameError(a, "attribute", attribute_names)
                inc[g, index[a]] = True
        return cls(object_names, attribute_names, inc, name=name)

    @property
    def n_objects(self) -> int:
        return len(self.object_names)

    @property
    def n_attributes(self) -> int:
        return len(self.attribute_names)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_objects, self.n_attributes

    @property
    def n_incidences(self) -> int:
        return int(self.incidence.sum())

    def row(self, g: int) -> AttributeSet:
        """Attributes of object ``g``."""
        self._check_object(g)
        return AttributeSet(self._rows[g], self.n_attributes)

    def column(self, m: int) -> ObjectSet:
        """Objects having attribute ``m``."""
        self._check_attribute(m)
        return ObjectSet(self._cols[m], self.n_objects)

    def _check_object(self, g: int) -> None:
        if not 0 <= g < self.n_objects:
            raise ContextError(f"object index {g} out of range 0..{self.n_objects - 1}")

    def _check_attribute(self, m: int) -> None:
        if not 0 <= m < self.n_attributes:
            raise ContextError(
                f"attribute index {m} out of range 0..{self.n_attributes - 1}"
            )

    def object_index(self, name: str) -> int:
        try:
            return self._object_index[name]
        except KeyError:
            raise UnknownNameError(name, "object", self.object_names) from None

    def attribute_index(self, name: str) -> int:
        try:
            return self._attribute_index[name]
        except KeyError:
            raise UnknownNameError(name, "attribute", self.attribute_names) from None

    def objects(self, names: Iterable[str] = ()) -> ObjectSet:
        """ObjectSet for the given object names."""
        return ObjectSet.from_indices(
            (self.object_index(n) for n in names), self.n_objects
        )

    def attributes(self, names: Iterable[str] = ()) -> AttributeSet:
        """AttributeSet for the given attribute names."""
        return AttributeSet.from_indices(
            (self.attribute_index(n) for n in names), self.n_attributes
        )

    def all_objects(self) -> ObjectSet:
        return ObjectSet.full(self.n_objects)

    def all_attributes(self) -> AttributeSet:
        return AttributeSet.full(self.n_attributes)

    def object_labels(self, objects: ObjectSet) -> list[str]:
        return [self.object_names[g] for g in objects]

    def attribute_labels(self, attributes: AttributeSet) -> list[str]:
        return [self.attribute_names[m] for m in attributes]

    def reindex(self, object_names=None, attribute_names=None) -> "FormalContext":
        """Return the same relation with objects/attributes listed in a new order."""
        object_names = self.object_names if object_names is None else tuple(object_names)
        attribute_names = (
            self.attribute_names if attribute_names is None else tuple(attribute_names)
        )
        if sorted(object_names) != sorted(self.object_names):
            raise ContextError("reindex must permute the existing object names")
        if sorted(attribute_names) != sorted(self.attribute_names):
            raise ContextError("reindex must permute the existing attribute names")
        rows = [self._object_index[n] for n in object_names]
        cols = [self._attribute_index[n] for n in attribute_names]
        inc = self.incidence[np.ix_(rows, cols)]
        return FormalContext(object_names, attribute_names, inc, name=self.name)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (
            self.object_names == other.object_names
            and self.attribute_names == other.attribute_names
            and np.array_equal(self.incidence, other.incidence)
        )

    def __hash__(self) -> int:
        return hash((self.object_names, self.attribute_names, self._rows))

    def __repr__(self) -> str:
        return (
            f"FormalContext(n_objects={self.n_objects}, "
            f"n_attributes={self.n_attributes}, n_incidences={self.n_incidences})"
        )


def _pack(flags) -> int:
    bits = 0
    for i in np.flatnonzero(flags):
        bits |= 1 << int(i)
    return bits


def _check_set(ctx: FormalContext, s, cls, size: int):
    if not isinstance(s, cls):
        raise TypeError(f"expected {cls.__name__}, got {type(s).__name__}")
    if s.size != size:
        raise ContextError(f"{cls.__name__} of size {s.size} does not fit context size {size}")


# Bit-level kernels, shared with the enumeration code.

def _derive_object_bits(ctx: FormalContext, objects: int) -> int:
    common = (1 << ctx.n_attributes) - 1
    rows = ctx._rows
    while objects and common:
        low = objects & -objects
        common &= rows[low.bit_length() - 1]
        objects ^= low
    return common


def _derive_attribute_bits(ctx: FormalContext, attributes: int) -> int:
    common = (1 << ctx.n_objects) - 1
    cols = ctx._cols
    while attributes and common:
        low = attributes & -attributes
        common &= cols[low.bit_length() - 1]
        attributes ^= low
    return common


def derive_objects(ctx: FormalContext, objects: ObjectSet) -> AttributeSet:
    """Attributes shared by every object in ``objects`` (all attributes for the empty set)."""
    _check_set(ctx, objects, ObjectSet, ctx.n_objects)
    return AttributeSet(_derive_object_bits(ctx, objects.bits), ctx.n_attributes)


def derive_attributes(ctx: FormalContext, attributes: AttributeSet) -> ObjectSet:
    """Objects having every attribute in ``attributes`` (all objects for the empty set)."""
    _check_set(ctx, attributes, AttributeSet, ctx.n_attributes)
    return ObjectSet(_derive_attribute_bits(ctx, attributes.bits), ctx.n_objects)


def close_attributes(ctx: FormalContext, attributes: AttributeSet) -> AttributeSet:
    _check_set(ctx, attributes, AttributeSet, ctx.n_attributes)
    bits = _derive_object_bits(ctx, _derive_attribute_bits(ctx, attributes.bits))
    return AttributeSet(bits, ctx.n_attributes)


def close_objects(ctx: FormalContext, objects: ObjectSet) -> ObjectSet:
    _check_set(ctx, objects, ObjectSet, ctx.n_objects)
    bits = _derive_attribute_bits(ctx, _derive_object_bits(ctx, objects.bits))
    return ObjectSet(bits, ctx.n_objects)
