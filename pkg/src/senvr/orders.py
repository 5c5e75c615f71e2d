"""Weak-order preferences and their position-set representations.

A weak order (complete, reflexive, transitive) over ``m`` alternatives is
stored as an ordered partition into indifference classes, best class first.
Two positional encodings are derived from it:

* a preference map: for every alternative, the set of ranking positions it
  may occupy, which is the consecutive run of positions spanned by its
  indifference class.  With ``p`` the number of strictly better alternatives
  and ``s`` the size of the alternative's class, the row is
  ``{p + 1, ..., p + s}``;
* a membership matrix: the m-by-m 0/1 incidence matrix of alternatives
  against positions.

Alternatives are 0-based integer ids into the name table of a
:class:`Profile`; ranking positions are 1-based throughout.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

AlternativeId = int


class PartitionError(ValueError):
    """The given classes do not form an ordered partition of the universe."""


class UnknownAlternative(LookupError):
    """An alternative name is not declared in the profile."""


@dataclass(frozen=True)
class WeakOrder:
    """Ordered partition of ``{0, ..., m-1}``, most preferred class first."""

    classes: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if not self.classes:
            raise PartitionError("a weak order needs at least one class")
        seen: set[int] = set()
        total = 0
        for cls in self.classes:
            if not cls:
                raise PartitionError("indifference classes must be nonempty")
            if cls & seen:
                dup = sorted(cls & seen)
                raise PartitionError(f"alternatives {dup} appear in more than one class")
            seen |= cls
            total += len(cls)
        if seen != set(range(total)):
            raise PartitionError(
                f"classes must partition 0..{total - 1}, got ids {sorted(seen)}"
            )
        rank = [0] * total
        for idx, cls in enumerate(self.classes):
            for alt in cls:
                rank[alt] = idx
        object.__setattr__(self, "_ranks", tuple(rank))

    @classmethod
    def from_classes(
        cls, classes: Iterable[Iterable[int]], universe_size: int
    ) -> WeakOrder:
        """Build a weak order, checking the classes against an explicit universe.

        Raises
        ------
        PartitionError
            If the classes overlap, contain out-of-range ids, miss ids,
            or contain an empty class.
        """
        order = cls(tuple(frozenset(c) for c in classes))
        if order.num_alternatives != universe_size:
            raise PartitionError(
                f"classes cover {order.num_alternatives} alternatives, "
                f"expected {universe_size}"
            )
        return order

    @property
    def ranks(self) -> tuple[int, ...]:
        """Class index of every alternative (0 = most preferred class)."""
        return self._ranks  # type: ignore[attr-defined]

    @property
    def num_alternatives(self) -> int:
        return len(self.ranks)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def rank_of(self, alt: AlternativeId) -> int:
        return self.ranks[alt]

    def prefers(self, a: AlternativeId, b: AlternativeId) -> bool:
        """True iff ``a`` is strictly preferred to ``b``."""
        return self.ranks[a] < self.ranks[b]

    def at_least_as_good(self, a: AlternativeId, b: AlternativeId) -> bool:
        return self.ranks[a] <= self.ranks[b]


def predominance_set(order: WeakOrder, alt: AlternativeId) -> frozenset[int]:
    """Alternatives strictly preferred to ``alt`` in ``order``."""
    r = order.rank_of(alt)
    if r == 0:
        return frozenset()
    return frozenset().union(*order.classes[:r])


def indifference_set(order: WeakOrder, alt: AlternativeId) -> frozenset[int]:
    """The entire indifference class of ``alt``, itself included."""
    return order.classes[order.rank_of(alt)]


@dataclass(frozen=True)
class PreferenceMap:
    """Per-alternative sets of admissible 1-based ranking positions."""

    rows: tuple[frozenset[int], ...]


@lru_cache(maxsize=8192)
def preference_map(order: WeakOrder) -> PreferenceMap:
    """Positions spanned by each alternative's indifference class.

    Row ``i`` is ``{p+1, ..., p+s}`` where ``p`` counts the alternatives
    strictly preferred to ``i`` and ``s`` is the size of ``i``'s class.
    """
    rows: list[frozenset[int]] = [frozenset()] * order.num_alternatives
    offset = 0
    for cls in order.classes:
        span = frozenset(range(offset + 1, offset + len(cls) + 1))
        for alt in cls:
            rows[alt] = span
        offset += len(cls)
    return PreferenceMap(tuple(rows))


@dataclass(frozen=True, eq=False)
class MembershipMatrix:
    """0/1 incidence matrix: ``entries[i, j-1] = 1`` iff position ``j`` is
    admissible for alternative ``i``."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.entries, dtype=int)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MembershipMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def row_positions(self, alt: AlternativeId) -> frozenset[int]:
        """Read one alternative's admissible positions back off the matrix."""
        return frozenset(int(j) + 1 for j in np.flatnonzero(self.entries[alt]))


@lru_cache(maxsize=8192)
def membership_map(pm: PreferenceMap) -> MembershipMatrix:
    """The 0/1 matrix equivalent of a preference map."""
    m = len(pm.rows)
    entries = np.zeros((m, m), dtype=int)
    for i, row in enumerate(pm.rows):
        for j in row:
            entries[i, j - 1] = 1
    return MembershipMatrix(entries)


@dataclass(frozen=True)
class Triple:
    """Canonical unordered triple of alternatives, stored ascending."""

    members: tuple[int, int, int]

    def __post_init__(self) -> None:
        a, b, c = self.members
        if not a < b < c:
            raise ValueError(f"triple members must be strictly ascending, got {self.members}")

    @classmethod
    def of(cls, a: int, b: int, c: int) -> Triple:
        x, y, z = sorted((a, b, c))
        return cls((x, y, z))

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def local_index(self, alt: AlternativeId) -> int:
        """Position of ``alt`` within the triple (0, 1 or 2)."""
        return self.members.index(alt)


def triples(m: int) -> Iterator[Triple]:
    """All canonical triples over ``m`` alternatives, ascending."""
    for combo in itertools.combinations(range(m), 3):
        yield Triple(combo)


@lru_cache(maxsize=65536)
def restrict(order: WeakOrder, subset: Triple) -> WeakOrder:
    """Induced weak order on a triple, re-indexed to local ids 0..2.

    Non-members are dropped, emptied classes deleted, and the class
    ordering kept; local id ``i`` is the i-th triple member.
    """
    ranks = [order.rank_of(alt) for alt in subset.members]
    kept = sorted(set(ranks))
    classes = tuple(
        frozenset(local for local, r in enumerate(ranks) if r == keep)
        for keep in kept
    )
    return WeakOrder(classes)


def is_unconcerned(order: WeakOrder, subset: Triple) -> bool:
    """True iff the voter is indifferent between all three members."""
    r0 = order.rank_of(subset.members[0])
    return all(order.rank_of(alt) == r0 for alt in subset.members[1:])


@dataclass(frozen=True)
class Profile:
    """A named alternative set plus one weak order per voter."""

    alternative_names: tuple[str, ...]
    voters: tuple[WeakOrder, ...]

    def __post_init__(self) -> None:
        m = len(self.alternative_names)
        if m < 2:
            raise ValueError("a profile needs at least two alternatives")
        if len(set(self.alternative_names)) != m:
            raise ValueError("alternative names must be distinct")
        if not self.voters:
            raise ValueError("a profile needs at least one voter")
        for i, voter in enumerate(self.voters):
            if voter.num_alternatives != m:
                raise ValueError(
                    f"voter {i + 1} ranks {voter.num_alternatives} alternatives, "
                    f"expected {m}"
                )

    @property
    def num_alternatives(self) -> int:
        return len(self.alternative_names)

    @property
    def num_voters(self) -> int:
        return len(self.voters)

    def index_of(self, name: str) -> int:
        try:
            return self.alternative_names.index(name)
        except ValueError:
            raise UnknownAlternative(f"unknown alternative {name!r}") from None

    def name_of(self, alt: AlternativeId) -> str:
        return self.alternative_names[alt]

    def names_of(self, alts: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.alternative_names[a] for a in alts)

    def triple_of_names(self, names: Sequence[str]) -> Triple:
        if len(names) != 3:
            raise ValueError(f"expected exactly 3 names, got {len(names)}")
        return Triple.of(*(self.index_of(n) for n in names))
