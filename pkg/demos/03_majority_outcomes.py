"""Aggregate ballots by majority rule and test the outcome's coherence.

Society weakly prefers a to b when at least as many voters put a
strictly above b as the reverse.  The resulting relation is always
complete; the interesting question is transitivity.  One profile below
aggregates into a clean social ordering, the other collapses into the
classic majority cycle.
"""

from pathlib import Path

from senvr import (
    CycleReport,
    is_transitive,
    majority_relation,
    pairwise_tallies,
    parse_profile,
    social_ordering,
)

PROFILES = Path(__file__).resolve().parent.parent / "profiles"


def show(path: Path) -> None:
    profile = parse_profile(path.read_text(encoding="utf-8"))
    names = profile.alternative_names
    tally = pairwise_tallies(profile)
    relation = majority_relation(tally)
    transitive, witness = is_transitive(relation)

    print(f"{path.name}: {profile.num_voters} voters over {', '.join(names)}")
    print("  tallies (row a, column b: voters ranking a above b):")
    for alt, row in enumerate(tally.prefer.tolist()):
        print(f"    {names[alt]}: {row}")
    outcome = social_ordering(relation)
    if transitive:
        ordering = " > ".join(
            " ~ ".join(names[a] for a in sorted(cls)) for cls in outcome.classes
        )
        print(f"  transitive; social ordering: {ordering}")
    else:
        assert isinstance(outcome, CycleReport)
        a, b, c = (names[alt] for alt in witness)
        print(f"  intransitive; witness: {a} >= {b}, {b} >= {c}, but not {a} >= {c}")
    print()


def main() -> None:
    show(PROFILES / "example2.profile")
    show(PROFILES / "condorcet.profile")


if __name__ == "__main__":
    main()
