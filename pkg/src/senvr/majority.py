"""Majority decision: pairwise tallies, the social relation, transitivity.

The rule is Sen's method of majority decision: society weakly prefers
``a`` to ``b`` iff at least as many voters strictly prefer ``a`` to
``b`` as prefer ``b`` to ``a``.  Tally ties therefore yield social
indifference (both weak directions hold), never incomparability, so
the social relation is always complete and reflexive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from senvr.orders import Profile, WeakOrder

__all__ = [
    "CycleReport",
    "PairwiseTally",
    "SocialRelation",
    "is_transitive",
    "majority_relation",
    "pairwise_tallies",
    "social_ordering",
]


@dataclass(frozen=True, eq=False)
class PairwiseTally:
    """Strict-preference counts: ``prefer[a, b]`` voters rank a above b.

    The diagonal is zero and ``prefer[a, b] + prefer[b, a]`` never
    exceeds the number of voters (with equality exactly when no voter
    ties the pair).
    """

    prefer: np.ndarray

    def __post_init__(self) -> None:
        prefer = np.asarray(self.prefer, dtype=int)
        if prefer.ndim != 2 or prefer.shape[0] != prefer.shape[1]:
            raise ValueError(f"tally matrix must be square, got shape {prefer.shape}")
        if (prefer < 0).any():
            raise ValueError("tally counts cannot be negative")
        if np.diagonal(prefer).any():
            raise ValueError("no voter strictly prefers an alternative to itself")
        prefer.setflags(write=False)
        object.__setattr__(self, "prefer", prefer)

    @property
    def num_alternatives(self) -> int:
        return self.prefer.shape[0]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairwiseTally):
            return NotImplemented
        return np.array_equal(self.prefer, other.prefer)

    def __hash__(self) -> int:
        return hash(self.prefer.tobytes())


@dataclass(frozen=True, eq=False)
class SocialRelation:
    """Complete reflexive social relation: ``weak[a, b]`` iff a R b."""

    weak: np.ndarray

    def __post_init__(self) -> None:
        weak = np.asarray(self.weak, dtype=bool)
        if weak.ndim != 2 or weak.shape[0] != weak.shape[1]:
            raise ValueError(f"relation matrix must be square, got shape {weak.shape}")
        if not (weak | weak.T).all():
            raise ValueError("majority relation must be complete")
        if not np.diagonal(weak).all():
            raise ValueError("majority relation must be reflexive")
        weak.setflags(write=False)
        object.__setattr__(self, "weak", weak)

    @property
    def num_alternatives(self) -> int:
        return self.weak.shape[0]

    def strictly_prefers(self, a: int, b: int) -> bool:
        """True iff society ranks ``a`` above ``b`` (a R b but not b R a)."""
        return bool(self.weak[a, b] and not self.weak[b, a])

    def indifferent(self, a: int, b: int) -> bool:
        """True iff ``a`` and ``b`` are socially tied (a R b and b R a)."""
        return bool(self.weak[a, b] and self.weak[b, a])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SocialRelation):
            return NotImplemented
        return np.array_equal(self.weak, other.weak)

    def __hash__(self) -> int:
        return hash(self.weak.tobytes())


@dataclass(frozen=True)
class CycleReport:
    """Witness that the social relation is not transitive.

    ``witness`` is the first triple (a, b, c) in lexicographic order
    with a R b and b R c but not a R c.
    """

    witness: tuple[int, int, int]


def pairwise_tallies(profile: Profile) -> PairwiseTally:
    """Count, for every ordered pair, the voters ranking the first strictly higher."""
    m = profile.num_alternatives
    prefer = np.zeros((m, m), dtype=int)
    for voter in profile.voters:
        ranks = np.fromiter((voter.rank_of(a) for a in range(m)), dtype=int, count=m)
        prefer += ranks[:, None] < ranks[None, :]
    return PairwiseTally(prefer)


def majority_relation(tally: PairwiseTally) -> SocialRelation:
    """Society weakly prefers a to b iff prefer[a, b] >= prefer[b, a]."""
    return SocialRelation(tally.prefer >= tally.prefer.T)


def is_transitive(rel: SocialRelation) -> tuple[bool, tuple[int, int, int] | None]:
    """Check a R b and b R c imply a R c; report the first failure.

    Returns ``(True, None)`` or ``(False, (a, b, c))`` with the
    lexicographically first violating triple.  Completeness makes
    transitivity of the weak relation imply transitivity of strict
    preference and of indifference, so this single check suffices.
    """
    weak = rel.weak
    reachable = (weak.astype(int) @ weak.astype(int)) > 0
    if not (reachable & ~weak).any():
        return True, None
    m = rel.num_alternatives
    for a in range(m):
        for b in range(m):
            if not weak[a, b]:
                continue
            for c in range(m):
                if weak[b, c] and not weak[a, c]:
                    return False, (a, b, c)
    raise AssertionError("violation mask nonempty but no triple found")


def social_ordering(rel: SocialRelation) -> WeakOrder | CycleReport:
    """Extract the social weak ordering, or the cycle that prevents one.

    For a transitive relation the indifference classes are the groups
    of mutually weakly preferred alternatives, ordered by strict social
    preference; within such a relation an alternative's number of
    strict wins is constant on each class and strictly decreasing down
    the classes, so grouping by win count realizes that order.
    """
    ok, witness = is_transitive(rel)
    if not ok:
        assert witness is not None
        return CycleReport(witness)
    strict = rel.weak & ~rel.weak.T
    wins = strict.sum(axis=1)
    classes = tuple(
        frozenset(int(a) for a in np.flatnonzero(wins == count))
        for count in sorted(set(wins.tolist()), reverse=True)
    )
    return WeakOrder(classes)
