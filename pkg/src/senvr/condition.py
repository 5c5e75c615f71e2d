"""Value-restriction checks over alternative triples.

A triple of alternatives is value-restricted when some alternative never
takes some value (best, medium or worst) in any concerned voter's
preference over the triple.  Voters indifferent between all three members
are unconcerned and excluded.  The verdict is decided three independent
ways, which must agree:

* union check: some triple row's admissible positions, united over the
  concerned voters, cover fewer than 3 positions;
* membership check: the entrywise sum of the concerned voters' 3x3
  membership matrices has a zero entry;
* qualitative check: some (alternative, value) pair is taken by no
  concerned voter, with values read straight off the class structure.

The aggregate condition additionally requires an odd number of concerned
voters on every triple.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from senvr.orders import (
    AlternativeId,
    Profile,
    Triple,
    WeakOrder,
    is_unconcerned,
    membership_map,
    preference_map,
    restrict,
    triples,
)


class InternalDisagreement(RuntimeError):
    """The three equivalent checkers returned different verdicts (a bug)."""


class ValueLabel(enum.Enum):
    """Characteristic of an alternative within a triple; the enum value is
    the corresponding 1-based ranking position."""

    BEST = 1
    MEDIUM = 2
    WORST = 3


def concerned_set(profile: Profile, triple: Triple) -> frozenset[int]:
    """Indices of the voters not indifferent between all triple members."""
    return frozenset(
        k
        for k, voter in enumerate(profile.voters)
        if not is_unconcerned(voter, triple)
    )


def row_position_unions(
    profile: Profile, triple: Triple
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Union of each triple row's admissible positions over concerned voters."""
    unions = [frozenset(), frozenset(), frozenset()]
    for k in sorted(concerned_set(profile, triple)):
        rows = preference_map(restrict(profile.voters[k], triple)).rows
        unions = [u | row for u, row in zip(unions, rows)]
    return tuple(unions)


def check_union_inequality(
    profile: Profile, triple: Triple
) -> tuple[bool, AlternativeId | None]:
    """Union check: is some row's position union smaller than 3?

    Returns the verdict and the first qualifying alternative in triple
    order (``None`` when the triple is not value-restricted).  An empty
    concerned set qualifies vacuously via its first row.
    """
    for local, union in enumerate(row_position_unions(profile, triple)):
        if len(union) < 3:
            return True, triple.members[local]
    return False, None


def check_membership_equation(
    profile: Profile, triple: Triple
) -> tuple[bool, tuple[int, int] | None, np.ndarray]:
    """Membership check: does the summed 3x3 membership matrix hit zero?

    Returns the verdict, the first zero cell in row-major order as 0-based
    ``(row, column)`` (``None`` if there is no zero), and the sum matrix.
    """
    sums = np.zeros((3, 3), dtype=int)
    for k in sorted(concerned_set(profile, triple)):
        restricted = restrict(profile.voters[k], triple)
        sums += membership_map(preference_map(restricted)).entries
    for i in range(3):
        for j in range(3):
            if sums[i, j] == 0:
                sums.setflags(write=False)
                return True, (i, j), sums
    sums.setflags(write=False)
    return False, None, sums


@lru_cache(maxsize=None)
def value_set(order: WeakOrder, alt: AlternativeId) -> frozenset[ValueLabel]:
    """Values an alternative takes in a three-element order, ties included.

    Best means at least as good as both others, worst means both others
    are at least as good, and medium means the alternative fits between
    the other two under some assignment.
    """
    if order.num_alternatives != 3:
        raise ValueError("value_set needs an order over exactly 3 alternatives")
    first, second = (b for b in range(3) if b != alt)
    geq = order.at_least_as_good
    labels = set()
    if geq(alt, first) and geq(alt, second):
        labels.add(ValueLabel.BEST)
    if (geq(first, alt) and geq(alt, second)) or (geq(second, alt) and geq(alt, first)):
        labels.add(ValueLabel.MEDIUM)
    if geq(first, alt) and geq(second, alt):
        labels.add(ValueLabel.WORST)
    return frozenset(labels)


def check_value_restriction_oracle(
    profile: Profile, triple: Triple
) -> tuple[bool, tuple[AlternativeId, ValueLabel] | None]:
    """Qualitative check: some (alternative, value) pair that no concerned
    voter realizes.

    The witness is the first such pair, alternatives in triple order and
    values best before medium before worst.
    """
    taken: list[set[ValueLabel]] = [set(), set(), set()]
    for k in sorted(concerned_set(profile, triple)):
        restricted = restrict(profile.voters[k], triple)
        for local in range(3):
            taken[local] |= value_set(restricted, local)
    for local in range(3):
        for label in ValueLabel:
            if label not in taken[local]:
                return True, (triple.members[local], label)
    return False, None


@dataclass(frozen=True, eq=False)
class TripleReport:
    """Everything the three checkers decided about one triple."""

    triple: Triple
    concerned: tuple[int, ...]
    parity_ok: bool
    vr_ineq: bool
    ineq_witness: AlternativeId | None
    row_unions: tuple[frozenset[int], frozenset[int], frozenset[int]]
    vr_eq: bool
    eq_witness: tuple[int, int] | None
    sum_matrix: np.ndarray
    vr_oracle: bool
    oracle_witness: tuple[AlternativeId, ValueLabel] | None

    @property
    def concerned_count(self) -> int:
        return len(self.concerned)

    @property
    def value_restricted(self) -> bool:
        return self.vr_ineq


@dataclass(frozen=True, eq=False)
class SenVerdict:
    """Per-triple reports plus the aggregate verdict."""

    per_triple: tuple[TripleReport, ...]
    condition_holds: bool


def sen_condition(profile: Profile) -> SenVerdict:
    """Check value restriction and concerned-count parity on every triple.

    All three checkers run on each triple and must agree; a disagreement
    raises :class:`InternalDisagreement` since it can only mean a bug.
    The condition holds iff every triple is value-restricted and has an
    odd number of concerned voters.
    """
    if profile.num_alternatives < 3:
        raise ValueError("the condition is defined for at least 3 alternatives")
    reports = []
    for triple in triples(profile.num_alternatives):
        vr_ineq, ineq_witness = check_union_inequality(profile, triple)
        vr_eq, eq_witness, sums = check_membership_equation(profile, triple)
        vr_oracle, oracle_witness = check_value_restriction_oracle(profile, triple)
        if not vr_ineq == vr_eq == vr_oracle:
            raise InternalDisagreement(
                f"checkers disagree on triple {triple.members}: "
                f"union={vr_ineq} membership={vr_eq} qualitative={vr_oracle}"
            )
        concerned = tuple(sorted(concerned_set(profile, triple)))
        reports.append(
            TripleReport(
                triple=triple,
                concerned=concerned,
                parity_ok=len(concerned) % 2 == 1,
                vr_ineq=vr_ineq,
                ineq_witness=ineq_witness,
                row_unions=row_position_unions(profile, triple),
                vr_eq=vr_eq,
                eq_witness=eq_witness,
                sum_matrix=sums,
                vr_oracle=vr_oracle,
                oracle_witness=oracle_witness,
            )
        )
    condition_holds = all(r.value_restricted and r.parity_ok for r in reports)
    return SenVerdict(tuple(reports), condition_holds)
