"""Exhaustive and randomized sweeps over whole preference-profile spaces.

The harness feeds every profile (or a reproducible random stream of
profiles) through the condition checkers and the majority rule, counts
the joint outcomes, and collects any profile that satisfies the
condition yet yields an intransitive social relation.  An empty
violation list over a sweep is the empirical sufficiency evidence.
"""

from __future__ import annotations

import itertools
import math
import random
from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from functools import cache

from senvr.condition import sen_condition
from senvr.majority import is_transitive, majority_relation, pairwise_tallies
from senvr.orders import Profile, WeakOrder

__all__ = [
    "ENUMERATION_BUDGET",
    "HarnessConfig",
    "HarnessMode",
    "HarnessReport",
    "RangeError",
    "count_weak_orders",
    "default_alternative_names",
    "enumerate_profiles",
    "enumerate_weak_orders",
    "random_profile",
    "run_harness",
]

# desk-scale guards: sweeps stay comfortably under a minute
ENUMERATION_BUDGET = 10**7
MAX_ENUMERATED_ALTERNATIVES = 5
MAX_SAMPLED_ALTERNATIVES = 8
VIOLATION_CAP = 10


class RangeError(ValueError):
    """A sweep request exceeds the desk-scale size guards."""


class HarnessMode(Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


def default_alternative_names(m: int) -> tuple[str, ...]:
    """Synthetic names x1..xm for generated profiles."""
    return tuple(f"x{i + 1}" for i in range(m))


@cache
def _stirling2(m: int, k: int) -> int:
    """Partitions of an m-set into k unlabeled nonempty blocks."""
    if m == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * _stirling2(m - 1, k) + _stirling2(m - 1, k - 1)


def count_weak_orders(m: int) -> int:
    """Number of weak orders on m alternatives.

    A weak order is an ordered partition, so the count is the sum over
    k of k! times the number of partitions into k blocks.
    """
    if m < 0:
        raise ValueError("alternative count cannot be negative")
    return sum(math.factorial(k) * _stirling2(m, k) for k in range(m + 1))


def _ordered_partitions(
    universe: frozenset[int],
) -> Iterator[tuple[frozenset[int], ...]]:
    # pick every nonempty subset as the top class, recurse on the rest
    if not universe:
        yield ()
        return
    items = sorted(universe)
    for mask in range(1, 1 << len(items)):
        block = frozenset(items[i] for i in range(len(items)) if mask >> i & 1)
        for rest in _ordered_partitions(universe - block):
            yield (block, *rest)


@cache
def enumerate_weak_orders(m: int) -> tuple[WeakOrder, ...]:
    """All weak orders on m alternatives, each exactly once.

    Deterministic order: by number of indifference classes, then by
    rank vector.  Guarded to m <= 5 (541 orders); beyond that the
    downstream profile sweeps are out of desk range anyway.
    """
    if not 1 <= m <= MAX_ENUMERATED_ALTERNATIVES:
        raise RangeError(
            f"can enumerate weak orders for 1 <= m <= "
            f"{MAX_ENUMERATED_ALTERNATIVES}, got m={m}"
        )
    orders = [WeakOrder(classes) for classes in _ordered_partitions(frozenset(range(m)))]
    orders.sort(key=lambda order: (order.num_classes, order.ranks))
    return tuple(orders)


def enumerate_profiles(m: int, n: int) -> Iterator[Profile]:
    """All n-voter profiles on m alternatives, lexicographic.

    Voters run through ``enumerate_weak_orders(m)`` like digits, the
    last voter fastest.  Raises RangeError before yielding anything if
    the sweep would exceed the enumeration budget.
    """
    if n < 1:
        raise ValueError("a profile needs at least one voter")
    total = count_weak_orders(m) ** n
    if total > ENUMERATION_BUDGET:
        raise RangeError(
            f"{count_weak_orders(m)}^{n} = {total} profiles exceed "
            f"the budget of {ENUMERATION_BUDGET}"
        )
    orders = enumerate_weak_orders(m)
    names = default_alternative_names(m)

    def stream() -> Iterator[Profile]:
        for voters in itertools.product(orders, repeat=n):
            yield Profile(names, voters)

    return stream()


@cache
def _class_count_weights(m: int) -> tuple[int, ...]:
    # weight of k classes = number of weak orders with exactly k classes
    return tuple(math.factorial(k) * _stirling2(m, k) for k in range(1, m + 1))


@cache
def _rgs_completions(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    """ways[i][b]: restricted growth strings for positions i..m-1 that
    end with exactly k blocks, given b blocks already open."""
    ways = [[0] * (k + 2) for _ in range(m + 1)]
    ways[m][k] = 1
    for i in range(m - 1, -1, -1):
        for b in range(k, -1, -1):
            ways[i][b] = b * ways[i + 1][b] + ways[i + 1][b + 1]
    return tuple(tuple(row) for row in ways)


def _sample_weak_order(m: int, rng: random.Random) -> WeakOrder:
    """Draw one weak order uniformly at random.

    Three exact steps: class count k with probability proportional to
    the number of orders having k classes; a uniform restricted growth
    string with exactly k blocks (blocks numbered by first appearance);
    a uniform permutation assigning those blocks to class positions.
    Each weak order arises from exactly one such triple.
    """
    k = rng.choices(range(1, m + 1), weights=_class_count_weights(m))[0]
    ways = _rgs_completions(m, k)
    labels = []
    opened = 0
    for i in range(m):
        reuse = opened * ways[i + 1][opened]
        pick = rng.randrange(reuse + ways[i + 1][opened + 1])
        if pick < reuse:
            labels.append(pick // ways[i + 1][opened])
        else:
            labels.append(opened)
            opened += 1
    placement = list(range(k))
    rng.shuffle(placement)
    classes = [set() for _ in range(k)]
    for alternative, block in enumerate(labels):
        classes[placement[block]].add(alternative)
    return WeakOrder(tuple(frozenset(c) for c in classes))


def random_profile(m: int, n: int, seed: int, trial: int) -> Profile:
    """Profile of n voters drawn uniformly over weak orders on m alternatives.

    A pure function of (seed, trial): each trial gets its own generator
    stream, so runs reproduce regardless of scheduling or trial order.
    """
    if not 1 <= m <= MAX_SAMPLED_ALTERNATIVES:
        raise RangeError(
            f"can sample weak orders for 1 <= m <= {MAX_SAMPLED_ALTERNATIVES}, got m={m}"
        )
    if n < 1:
        raise ValueError("a profile needs at least one voter")
    rng = random.Random(seed * 2**64 + trial)
    return Profile(
        default_alternative_names(m),
        tuple(_sample_weak_order(m, rng) for _ in range(n)),
    )


@dataclass(frozen=True)
class HarnessConfig:
    """One sweep request.

    ``trials`` and ``seed`` matter only in random mode; the seed must
    fit in 64 unsigned bits.
    """

    m: int
    n: int
    mode: HarnessMode
    trials: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        if self.m < 3:
            raise ValueError("the condition is about triples: need m >= 3")
        if self.n < 1:
            raise ValueError("a profile needs at least one voter")
        if self.mode is HarnessMode.RANDOM:
            if self.trials < 1:
                raise ValueError("random mode needs at least one trial")
            if not 0 <= self.seed < 2**64:
                raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class HarnessReport:
    """Joint outcome counts of one sweep.

    ``violations`` holds profiles where the condition held yet the
    majority relation was intransitive (capped at 10 stored instances);
    it must come back empty if the sufficiency theorem is right.
    """

    profiles_tested: int
    condition_held_count: int
    condition_held_and_transitive_count: int
    condition_failed_count: int
    condition_failed_but_transitive_count: int
    violations: tuple[Profile, ...]


def run_harness(config: HarnessConfig) -> HarnessReport:
    """Sweep profiles, cross-checking the condition against transitivity.

    Every profile passes through the full condition decision (whose
    three checkers cross-assert on each triple) and the majority rule.
    Raises InternalDisagreement if the checkers ever split.
    """
    if config.mode is HarnessMode.EXHAUSTIVE:
        stream = enumerate_profiles(config.m, config.n)
    else:
        stream = (
            random_profile(config.m, config.n, config.seed, trial)
            for trial in range(config.trials)
        )
    tested = held = held_transitive = failed = failed_transitive = 0
    violations: list[Profile] = []
    for profile in stream:
        verdict = sen_condition(profile)
        transitive, _ = is_transitive(majority_relation(pairwise_tallies(profile)))
        tested += 1
        if verdict.condition_holds:
            held += 1
            if transitive:
                held_transitive += 1
            elif len(violations) < VIOLATION_CAP:
                violations.append(profile)
        else:
            failed += 1
            if transitive:
                failed_transitive += 1
    return HarnessReport(
        profiles_tested=tested,
        condition_held_count=held,
        condition_held_and_transitive_count=held_transitive,
        condition_failed_count=failed,
        condition_failed_but_transitive_count=failed_transitive,
        violations=tuple(violations),
    )
