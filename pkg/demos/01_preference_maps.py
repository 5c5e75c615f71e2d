"""Walk through preference maps and membership matrices.

A ballot is an ordered partition: groups of tied alternatives listed
from best to worst.  The preference map records, for each alternative,
the ranking positions its group spans; the membership matrix carries
the same data as a 0/1 grid with one row per alternative and one
column per position.
"""

from pathlib import Path

from senvr import membership_map, parse_profile, preference_map

PROFILE = Path(__file__).resolve().parent.parent / "profiles" / "example1.profile"


def main() -> None:
    profile = parse_profile(PROFILE.read_text(encoding="utf-8"))
    names = profile.alternative_names
    print(f"alternatives: {', '.join(names)}; {profile.num_voters} voters")
    for i, voter in enumerate(profile.voters, start=1):
        pm = preference_map(voter)
        mpm = membership_map(pm)
        ballot = " > ".join(
            " ~ ".join(names[a] for a in sorted(cls)) for cls in voter.classes
        )
        print(f"\nvoter {i}: {ballot}")
        for alt, row in enumerate(pm.rows):
            positions = ", ".join(str(p) for p in sorted(row))
            print(f"  {names[alt]} may occupy positions {{{positions}}}")
        print("  the same as a 0/1 grid:")
        for row in mpm.entries.tolist():
            print("    " + " ".join(str(v) for v in row))
    print(
        "\nA strict ballot pins every alternative to one position; each tie"
        "\nwidens the admissible span for everything in the tied group."
    )


if __name__ == "__main__":
    main()
