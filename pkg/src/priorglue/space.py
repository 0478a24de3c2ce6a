"""Finite state spaces and the lattice of their subsets.

A :class:`StateSpace` is an ordered list of distinct atom labels; an
:class:`EventSet` is a subset of one space's atoms.  Atom order is fixed
at construction and used everywhere for deterministic output.  Events
from different spaces never interoperate: combining them is a hard
:class:`SpaceMismatch`, not a coercion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import DuplicateLabel, SpaceMismatch, UnknownAtom


@dataclass(frozen=True)
class StateSpace:
    """The ambient finite set of states, each carrying a textual label."""

    atoms: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        seen = set()
        for label in self.atoms:
            if not isinstance(label, str):
                raise TypeError(f"atom labels must be strings, got {label!r}")
            if label in seen:
                raise DuplicateLabel(f"duplicate atom label {label!r}")
            seen.add(label)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.atoms)}

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownAtom(label, self) from None

    def event(self, labels: Iterable[str]) -> EventSet:
        return EventSet(self, frozenset(labels))

    def full(self) -> EventSet:
        return EventSet(self, frozenset(self.atoms))

    def empty(self) -> EventSet:
        return EventSet(self, frozenset())

    def __len__(self) -> int:
        return len(self.atoms)

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def __repr__(self) -> str:
        return f"StateSpace({{{', '.join(self.atoms)}}})"


@dataclass(frozen=True)
class EventSet:
    """A subset of one state space's atoms; the carrier of evidence."""

    space: StateSpace
    members: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for label in self.members:
            if label not in self.space:
                raise UnknownAtom(label, self.space)

    @property
    def labels(self) -> tuple[str, ...]:
        """Members in canonical space order."""
        return tuple(a for a in self.space.atoms if a in self.members)

    def _check_space(self, other: EventSet) -> None:
        if self.space != other.space:
            raise SpaceMismatch(
                f"events live on different spaces: {self.space!r} vs {other.space!r}"
            )

    def union(self, other: EventSet) -> EventSet:
        self._check_space(other)
        return EventSet(self.space, self.members | other.members)

    def intersect(self, other: EventSet) -> EventSet:
        self._check_space(other)
        return EventSet(self.space, self.members & other.members)

    def difference(self, other: EventSet) -> EventSet:
        self._check_space(other)
        return EventSet(self.space, self.members - other.members)

    def is_subset(self, other: EventSet) -> bool:
        self._check_space(other)
        return self.members <= other.members

    __or__ = union
    __and__ = intersect
    __sub__ = difference
    __le__ = is_subset

    def __contains__(self, label: str) -> bool:
        return label in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __bool__(self) -> bool:
        return bool(self.members)

    def __repr__(self) -> str:
        return "{" + ", ".join(self.labels) + "}"


def make_space(labels: Iterable[str]) -> StateSpace:
    """Build a state space from labels, preserving their order."""
    return StateSpace(tuple(labels))


def event(space: StateSpace, labels: Iterable[str]) -> EventSet:
    """Build the event of exactly these atoms; duplicate labels collapse."""
    return space.event(labels)


def is_cover(parts: Iterable[EventSet], whole: EventSet) -> bool:
    """True iff the union of ``parts`` equals ``whole``.

    The empty family covers exactly the empty event.
    """
    union: frozenset[str] = frozenset()
    for part in parts:
        whole._check_space(part)
        union |= part.members
    return union == whole.members
