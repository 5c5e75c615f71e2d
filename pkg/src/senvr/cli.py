"""Command-line front-end.

Three subcommands: ``check`` decides the value-restriction condition
and the majority outcome for a profile file, ``pm`` displays preference
maps and membership matrices, ``verify`` sweeps generated profiles to
cross-check the condition against majority transitivity.

Exit codes: 0 success; 2 unreadable input, parse error, or out-of-range
request; 3 condition asserted but not satisfied; 4 harness violation or
checker disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from senvr import __version__
from senvr.condition import InternalDisagreement, SenVerdict, TripleReport, sen_condition
from senvr.harness import HarnessConfig, HarnessMode, HarnessReport, run_harness
from senvr.majority import (
    CycleReport,
    PairwiseTally,
    is_transitive,
    majority_relation,
    pairwise_tallies,
    social_ordering,
)
from senvr.orders import (
    Profile,
    Triple,
    WeakOrder,
    membership_map,
    preference_map,
    restrict,
)
from senvr.profile_io import parse_profile, serialize_profile

__all__ = ["main"]


def _format_set(positions: frozenset[int]) -> str:
    return "{" + ", ".join(str(p) for p in sorted(positions)) + "}"


def _format_classes(names: Sequence[str], order: WeakOrder) -> str:
    return " > ".join(
        " ~ ".join(names[alt] for alt in sorted(cls)) for cls in order.classes
    )


def _read_profile(path: str) -> Profile:
    return parse_profile(Path(path).read_text(encoding="utf-8"))


# --- check -----------------------------------------------------------------


def _triple_payload(profile: Profile, report: TripleReport) -> dict:
    members = profile.names_of(report.triple)
    if report.oracle_witness is None:
        oracle = None
    else:
        alt, label = report.oracle_witness
        oracle = {"alternative": profile.name_of(alt), "value": label.name.lower()}
    return {
        "members": list(members),
        "concerned": [v + 1 for v in report.concerned],
        "parity_ok": report.parity_ok,
        "value_restricted": report.value_restricted,
        "ineq_witness": (
            None if report.ineq_witness is None else profile.name_of(report.ineq_witness)
        ),
        "union_sets": {
            name: sorted(union) for name, union in zip(members, report.row_unions)
        },
        "sum_matrix": report.sum_matrix.tolist(),
        "eq_witness": (
            None if report.eq_witness is None else [c + 1 for c in report.eq_witness]
        ),
        "oracle_witness": oracle,
    }


def _social_payload(
    profile: Profile, transitive: bool, outcome: WeakOrder | CycleReport
) -> dict:
    if transitive:
        assert isinstance(outcome, WeakOrder)
        ordering = [
            [profile.name_of(alt) for alt in sorted(cls)] for cls in outcome.classes
        ]
        return {"transitive": True, "ordering": ordering, "cycle": None}
    assert isinstance(outcome, CycleReport)
    return {
        "transitive": False,
        "ordering": None,
        "cycle": [profile.name_of(alt) for alt in outcome.witness],
    }


def _render_triple(profile: Profile, report: TripleReport) -> list[str]:
    members = profile.names_of(report.triple)
    verdict = "value-restricted" if report.value_restricted else "not value-restricted"
    parity = "odd" if report.concerned_count % 2 else "even"
    lines = [
        f"triple ({', '.join(members)}): {verdict}; "
        f"{report.concerned_count} concerned voters ({parity})",
        "  position unions: "
        + "; ".join(
            f"{name} {_format_set(union)}"
            for name, union in zip(members, report.row_unions)
        ),
    ]
    if report.ineq_witness is not None:
        union = report.row_unions[report.triple.local_index(report.ineq_witness)]
        lines.append(
            f"  union witness: row {profile.name_of(report.ineq_witness)} "
            f"has {len(union)} < 3 admissible positions"
        )
    if report.eq_witness is None:
        cell = "no zero cell"
    else:
        cell = f"zero at cell ({report.eq_witness[0] + 1}, {report.eq_witness[1] + 1})"
    lines.append(f"  sum matrix: {report.sum_matrix.tolist()}; {cell}")
    if report.oracle_witness is not None:
        alt, label = report.oracle_witness
        lines.append(
            f"  never assigned: {profile.name_of(alt)} never takes "
            f"value {label.name.lower()}"
        )
    elif not report.value_restricted:
        lines.append("  every (alternative, value) pair occurs among concerned voters")
    return lines


def _render_check(
    profile: Profile,
    verdict: SenVerdict,
    tally: PairwiseTally,
    transitive: bool,
    witness: tuple[int, int, int] | None,
    outcome: WeakOrder | CycleReport,
) -> str:
    names = profile.alternative_names
    lines = [
        f"profile: {profile.num_alternatives} alternatives "
        f"({', '.join(names)}), {profile.num_voters} voters",
        "",
    ]
    for report in verdict.per_triple:
        lines.extend(_render_triple(profile, report))
    lines.append("")
    if verdict.condition_holds:
        lines.append(
            "condition holds (every triple value-restricted, "
            "every concerned count odd)"
        )
    else:
        lines.append("condition does not hold")
    lines.append("tallies (row a, column b: voters ranking a above b):")
    for alt, row in enumerate(tally.prefer.tolist()):
        lines.append(f"  {names[alt]}: {row}")
    if transitive:
        assert isinstance(outcome, WeakOrder)
        lines.append("majority relation is transitive")
        lines.append(f"social ordering: {_format_classes(names, outcome)}")
    else:
        assert witness is not None
        a, b, c = (names[alt] for alt in witness)
        lines.append("majority relation is not transitive")
        lines.append(f"cycle witness: {a} >= {b}, {b} >= {c}, but not {a} >= {c}")
    return "\n".join(lines)


def cmd_check(args: argparse.Namespace) -> int:
    profile = _read_profile(args.path)
    verdict = sen_condition(profile)
    tally = pairwise_tallies(profile)
    relation = majority_relation(tally)
    transitive, witness = is_transitive(relation)
    outcome = social_ordering(relation)
    if args.json:
        payload = {
            "alternatives": list(profile.alternative_names),
            "triples": [_triple_payload(profile, r) for r in verdict.per_triple],
            "condition_holds": verdict.condition_holds,
            "tallies": tally.prefer.tolist(),
            "social": _social_payload(profile, transitive, outcome),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(_render_check(profile, verdict, tally, transitive, witness, outcome))
    if args.assert_sen and not verdict.condition_holds:
        return 3
    return 0


# --- pm --------------------------------------------------------------------


def cmd_pm(args: argparse.Namespace) -> int:
    profile = _read_profile(args.path)
    triple: Triple | None = None
    if args.triple is not None:
        triple = profile.triple_of_names([t.strip() for t in args.triple.split(",")])
    if triple is None:
        local_names = list(profile.alternative_names)
    else:
        local_names = [profile.name_of(alt) for alt in triple]

    voters = []
    for i, voter in enumerate(profile.voters):
        order = voter if triple is None else restrict(voter, triple)
        pm = preference_map(order)
        mpm = membership_map(pm)
        voters.append((i + 1, order, pm, mpm))

    if args.json:
        payload = {
            "alternatives": list(profile.alternative_names),
            "triple": None if triple is None else local_names,
            "voters": [
                {
                    "voter": index,
                    "ordering": [
                        [local_names[alt] for alt in sorted(cls)]
                        for cls in order.classes
                    ],
                    "preference_map": {
                        local_names[alt]: sorted(row)
                        for alt, row in enumerate(pm.rows)
                    },
                    "membership_matrix": mpm.entries.tolist(),
                }
                for index, order, pm, mpm in voters
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0

    lines = [f"alternatives: {' '.join(profile.alternative_names)}"]
    if triple is not None:
        lines.append(f"triple: ({', '.join(local_names)})")
    for index, order, pm, mpm in voters:
        lines.append("")
        lines.append(f"voter {index}: {_format_classes(local_names, order)}")
        lines.append("  preference map:")
        for alt, row in enumerate(pm.rows):
            lines.append(f"    {local_names[alt]}: {_format_set(row)}")
        lines.append("  membership matrix:")
        for row in mpm.entries.tolist():
            lines.append("    " + " ".join(str(v) for v in row))
    print("\n".join(lines))
    return 0


# --- verify ----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    mode = HarnessMode.EXHAUSTIVE if args.exhaustive else HarnessMode.RANDOM
    config = HarnessConfig(
        m=args.m,
        n=args.n,
        mode=mode,
        trials=args.trials if mode is HarnessMode.RANDOM else 1,
        seed=args.seed if mode is HarnessMode.RANDOM else 0,
    )
    report = run_harness(config)
    if args.json:
        payload = {
            "mode": mode.value,
            "m": config.m,
            "n": config.n,
            "trials": config.trials if mode is HarnessMode.RANDOM else None,
            "seed": config.seed if mode is HarnessMode.RANDOM else None,
            "profiles_tested": report.profiles_tested,
            "condition_held_count": report.condition_held_count,
            "condition_held_and_transitive_count": (
                report.condition_held_and_transitive_count
            ),
            "condition_failed_count": report.condition_failed_count,
            "condition_failed_but_transitive_count": (
                report.condition_failed_but_transitive_count
            ),
            "violations": [serialize_profile(p) for p in report.violations],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(_render_verify(config, report))
    return 0 if not report.violations else 4


def _render_verify(config: HarnessConfig, report: HarnessReport) -> str:
    if config.mode is HarnessMode.EXHAUSTIVE:
        header = f"mode: exhaustive (m={config.m}, n={config.n})"
    else:
        header = (
            f"mode: random (m={config.m}, n={config.n}, "
            f"trials={config.trials}, seed={config.seed})"
        )
    lines = [
        header,
        f"profiles tested: {report.profiles_tested}",
        f"condition held: {report.condition_held_count} "
        f"(transitive: {report.condition_held_and_transitive_count})",
        f"condition failed: {report.condition_failed_count} "
        f"(transitive anyway: {report.condition_failed_but_transitive_count})",
        f"violations: {len(report.violations)}",
    ]
    for i, profile in enumerate(report.violations, start=1):
        lines.append(f"violation {i} (condition holds, majority relation intransitive):")
        lines.extend("    " + line for line in serialize_profile(profile).splitlines())
    return "\n".join(lines)


# --- entry point -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="senvr",
        description=(
            "Decide the value-restriction condition for ranked-ballot "
            "profiles and test majority-rule transitivity."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser(
        "check",
        help="analyze a profile file: condition verdict, tallies, social ordering",
    )
    check.add_argument("path", help="profile file to analyze")
    check.add_argument("--json", action="store_true", help="emit a JSON report")
    check.add_argument(
        "--assert-sen",
        action="store_true",
        dest="assert_sen",
        help="exit with status 3 when the condition does not hold",
    )
    check.set_defaults(func=cmd_check)

    pm = sub.add_parser(
        "pm", help="show each voter's preference map and membership matrix"
    )
    pm.add_argument("path", help="profile file to display")
    pm.add_argument(
        "--triple",
        metavar="A,B,C",
        help="restrict every ballot to these three alternatives first",
    )
    pm.add_argument("--json", action="store_true", help="emit a JSON report")
    pm.set_defaults(func=cmd_pm)

    verify = sub.add_parser(
        "verify",
        help="sweep generated profiles: condition versus majority transitivity",
    )
    verify.add_argument("--m", type=int, required=True, help="alternatives per profile")
    verify.add_argument("--n", type=int, required=True, help="voters per profile")
    mode = verify.add_mutually_exclusive_group(required=True)
    mode.add_argument(
        "--exhaustive", action="store_true", help="every profile of the given size"
    )
    mode.add_argument(
        "--random", action="store_true", help="seeded uniform random profiles"
    )
    verify.add_argument(
        "--trials", type=int, default=1000, help="random profiles to draw"
    )
    verify.add_argument("--seed", type=int, default=0, help="random stream seed")
    verify.add_argument("--json", action="store_true", help="emit a JSON report")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalDisagreement as exc:
        print(f"internal checker disagreement: {exc}", file=sys.stderr)
        return 4
    except (ValueError, LookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
