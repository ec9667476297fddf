"""Command-line entry points.

Exit status: 0 on success (or every requested check passing), 1 when a
check or audit reports FAIL, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import axioms
from .aggregate import utilitarian
from .ballots import (
    ParseError,
    budget_allocation,
    format_fraction,
    format_percent,
    fraction_pair,
    parse_ballots,
    parse_matrices,
    parse_proposals,
    render_matrix,
)
from .model import Universe
from .solver import maximal_lottery, maximal_set
from .ssb import cycle_witness, evaluate

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssbchoice",
        description="Exact social choice: pairwise aggregation, maximal "
        "lotteries, budget mapping, and axiom audits.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, default=1, metavar="K",
                        help="parallel workers for long enumerations")
    common.add_argument("--seed", type=int, default=0, metavar="S",
                        help="seed for sampled checks (recorded in reports)")
    common.add_argument("--max-enum", type=int, default=8, metavar="M",
                        help="alternative-count bound for maximal-set enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("aggregate", parents=[common],
                       help="print the collective matrix of a ballot file")
    p.add_argument("ballots")

    p = sub.add_parser("maximal-lottery", parents=[common],
                       help="solve for a collectively maximal lottery")
    p.add_argument("ballots")

    p = sub.add_parser("budget", parents=[common],
                       help="maximal lottery mapped through a proposal matrix")
    p.add_argument("ballots")
    p.add_argument("proposals")

    p = sub.add_parser("check-axioms", parents=[common],
                       help="run axiom checks against an aggregation rule")
    p.add_argument("--swf", default="pairwise-utilitarian",
                   choices=["pairwise-utilitarian", "approval",
                            "relative-utilitarian", "dictatorial", "constant"])
    p.add_argument("--alternatives", type=int, default=3, metavar="M")
    p.add_argument("--agents", type=int, default=2, metavar="N")
    p.add_argument("--samples", type=int, default=200, metavar="K")

    p = sub.add_parser("audit-domain", parents=[common],
                       help="audit richness conditions of a preference domain")
    p.add_argument("--domain", default="pc",
                   choices=["pc", "pc-transitive", "dichotomous"])
    p.add_argument("--alternatives", type=int, default=4, metavar="M")
    p.add_argument("--file", help="matrix file defining the domain members")
    p.add_argument("--conditions",
                   help="comma-separated subset of R1,R2,R3,R4,R5")
    p.add_argument("--member-limit", type=int, default=2000,
                   help="exhaustive below this domain size, sampled above")

    p = sub.add_parser("cycle-witness", parents=[common],
                       help="search grid lotteries for a collective preference cycle")
    p.add_argument("ballots")
    p.add_argument("--max-denominator", type=int, default=5)

    return parser


def _load_profile(path: str):
    return parse_ballots(Path(path).read_text(encoding="utf-8"))


def _lottery_json(lottery):
    return {
        name: fraction_pair(prob)
        for name, prob in zip(lottery.universe.names, lottery.probs)
    }


def _print_lottery(lottery, indent="  "):
    for name, prob in zip(lottery.universe.names, lottery.probs):
        print(f"{indent}{name}: {format_fraction(prob)} ({format_percent(prob)}%)")


def _cmd_aggregate(args) -> int:
    profile = _load_profile(args.ballots)
    matrix = utilitarian(profile)
    if args.json:
        print(json.dumps({
            "alternatives": list(matrix.universe.names),
            "matrix": [[fraction_pair(x) for x in row] for row in matrix.entries],
            "agents": profile.n,
        }))
    else:
        print(f"Collective matrix ({profile.n} agents, sum of normalized "
              "agent matrices):")
        print(render_matrix(matrix), end="")
    return EXIT_OK


def _solve(args, profile):
    matrix = utilitarian(profile)
    certificate = maximal_lottery(matrix)
    unique = None
    face = None
    if len(matrix.universe) <= args.max_enum:
        face, unique = maximal_set(matrix, max_enum=args.max_enum)
    return matrix, certificate, face, unique


def _report_solution(args, profile, matrix, certificate, face, unique):
    arena = matrix.universe.names
    if args.json:
        payload = {
            "lottery": _lottery_json(certificate.lottery),
            "slacks": {n: fraction_pair(s) for n, s in zip(arena, certificate.slack)},
            "unique": unique,
        }
        if face is not None:
            payload["maximal_set"] = [_lottery_json(v) for v in face]
        return payload
    print("Maximal lottery:")
    _print_lottery(certificate.lottery)
    print("Slacks against pure outcomes (all exact, all >= 0):")
    for name, slack in zip(arena, certificate.slack):
        print(f"  vs {name}: {format_fraction(slack)}")
    if unique is None:
        print(f"Uniqueness not determined (more than {args.max_enum} alternatives).")
    elif unique:
        print("This is the unique maximal lottery.")
    else:
        print(f"Not unique: the maximal set has {len(face)} vertices; "
              "reported lottery is the solver's deterministic pick.")
    return None


def _cmd_maximal_lottery(args) -> int:
    profile = _load_profile(args.ballots)
    matrix, certificate, face, unique = _solve(args, profile)
    payload = _report_solution(args, profile, matrix, certificate, face, unique)
    if payload is not None:
        print(json.dumps(payload))
    return EXIT_OK


def _cmd_budget(args) -> int:
    profile = _load_profile(args.ballots)
    proposals = parse_proposals(Path(args.proposals).read_text(encoding="utf-8"))
    matrix, certificate, face, unique = _solve(args, profile)
    allocation = budget_allocation(proposals, certificate.lottery)
    payload = _report_solution(args, profile, matrix, certificate, face, unique)
    if payload is not None:
        payload["allocation"] = {
            dept: fraction_pair(x) for dept, x in zip(proposals.departments, allocation)
        }
        payload["allocation_percent"] = {
            dept: format_percent(x)
            for dept, x in zip(proposals.departments, allocation)
        }
        print(json.dumps(payload))
    else:
        print("Budget allocation:")
        for dept, share in zip(proposals.departments, allocation):
            print(f"  {dept}: {format_fraction(share)} ({format_percent(share)}%)")
    return EXIT_OK


def _profile_pool(universe: Universe, n: int, rng: random.Random, seed: int,
                  limit: int = 400):
    """All n-agent weak-order profiles when few enough, else a seeded sample."""
    orders = axioms.weak_orders(universe)
    if len(orders) ** n <= limit:
        return axioms.profiles_over(orders, n, universe), "exhaustive"
    from .model import Profile

    profiles = [
        Profile(universe, tuple(rng.choice(orders) for _ in range(n)))
        for _ in range(limit)
    ]
    return profiles, f"sampled({limit}, seed={seed})"


def _cmd_check_axioms(args) -> int:
    universe = Universe(tuple(chr(ord("a") + i) for i in range(args.alternatives)))
    rng = random.Random(args.seed)
    checks = []  # (label, passed, detail)

    if args.swf == "relative-utilitarian":
        handle = axioms.relative_utilitarian_swf()
        before, after, pair = axioms.intensity_flip_fixture()
        verdict = axioms.check_iia(handle, before, after, pair)
        checks.append((
            f"IIA on the intensity-flip fixture, restriction {pair}",
            verdict.passed,
            "hypothesis held and collective preferences changed"
            if not verdict.passed else "no violation",
        ))
    elif args.swf == "approval":
        handle = axioms.approval_swf()
        relations = axioms.dichotomous_relations(universe)
        profiles = axioms.profiles_over(relations, args.agents, universe)
        report = axioms.exhaustive_iia(handle, profiles, jobs=args.jobs)
        checks.append((
            f"IIA exhaustive over {len(profiles)}^2 dichotomous profile pairs",
            report.passed,
            f"{report.checked} checks, {report.vacuous} vacuous, "
            f"{len(report.violations)} violations",
        ))
        for profile in profiles[: args.samples]:
            pareto = axioms.check_pareto(handle, profile, samples=20, seed=args.seed)
            if not pareto.passed:
                checks.append(("Pareto optimality", False, "counterexample found"))
                break
        else:
            checks.append(("Pareto optimality (sampled profiles)", True, "no violation"))
    else:
        if args.swf == "pairwise-utilitarian":
            handle = axioms.pairwise_utilitarian_swf()
        elif args.swf == "dictatorial":
            handle = axioms.dictatorial_swf()
        else:
            handle = axioms.constant_swf()
        profiles, mode = _profile_pool(universe, args.agents, rng, args.seed)
        report = axioms.exhaustive_iia(handle, profiles, jobs=args.jobs)
        detail = (f"{report.checked} checks, {report.vacuous} vacuous, "
                  f"{len(report.violations)} violations")
        if report.violations:
            i, j, x = report.violations[0]
            detail += f"; first witness: profiles #{i}/#{j} restricted to {x}"
        checks.append((
            f"IIA over {len(profiles)}^2 weak-order profile pairs ({mode})",
            report.passed,
            detail,
        ))
        anon_fail = None
        for _ in range(args.samples):
            profile = axioms.random_pc_profile(rng, universe, max(2, args.agents))
            verdict = axioms.check_anonymity(handle, profile)
            if not verdict.passed:
                anon_fail = verdict
                break
        checks.append((
            f"anonymity over {args.samples} sampled profiles (seed {args.seed})",
            anon_fail is None,
            "no violation" if anon_fail is None
            else f"witness permutation {anon_fail.witness}",
        ))
        pareto_fail = None
        for _ in range(args.samples):
            strict = rng.random() < 0.5
            profile, p, q = axioms.unanimity_case(
                rng, universe, max(2, args.agents), strict
            )
            verdict = axioms.check_pareto(handle, profile, pairs=[(p, q)])
            if not verdict.passed:
                pareto_fail = verdict
                break
        checks.append((
            f"Pareto optimality over {args.samples} unanimity cases (seed {args.seed})",
            pareto_fail is None,
            "no violation" if pareto_fail is None else "counterexample found",
        ))

    failed = [c for c in checks if not c[1]]
    if args.json:
        print(json.dumps({
            "swf": args.swf,
            "seed": args.seed,
            "checks": [
                {"name": name, "passed": passed, "detail": detail}
                for name, passed, detail in checks
            ],
        }))
    else:
        print(f"Axiom checks for {args.swf} (seed {args.seed}):")
        for name, passed, detail in checks:
            print(f"  {'PASS' if passed else 'FAIL'} {name}: {detail}")
    return EXIT_FAIL if failed else EXIT_OK


def _cmd_audit_domain(args) -> int:
    if args.file:
        members = parse_matrices(Path(args.file).read_text(encoding="utf-8"))
        if not members:
            raise ParseError("matrix file defines no matrices", 1)
        domain = axioms.DomainDescription.of(
            members[0].universe, members, name=args.file
        )
    else:
        universe = Universe(tuple(chr(ord("a") + i) for i in range(args.alternatives)))
        builder = {
            "pc": axioms.pc_domain,
            "pc-transitive": axioms.pc_transitive_domain,
            "dichotomous": axioms.dichotomous_domain,
        }[args.domain]
        domain = builder(universe)
    if args.conditions:
        conditions = tuple(
            axioms.RichnessCondition.parse(tok)
            for tok in args.conditions.split(",") if tok.strip()
        )
    elif args.domain == "dichotomous" and not args.file:
        # two-tier relations cannot put a strict pair above a fresh
        # alternative, so the bottom-extension condition is replaced by
        # the all-two-tier-patterns condition in the dichotomous setting
        conditions = (
            axioms.RichnessCondition.NEUTRALITY,
            axioms.RichnessCondition.FULL_INDIFFERENCE,
            axioms.RichnessCondition.INVERSION,
            axioms.RichnessCondition.DICHOTOMOUS_PATTERNS,
        )
    else:
        conditions = axioms.DEFAULT_CONDITIONS
    report = axioms.audit_richness(
        domain, conditions, member_limit=args.member_limit, seed=args.seed
    )
    inclusion = axioms.pc_inclusion_check(domain)
    if args.json:
        print(json.dumps({
            "domain": domain.name,
            "members": len(domain.matrices),
            "seed": args.seed,
            "conditions": [
                {
                    "condition": r.condition.value,
                    "name": r.condition.name.lower(),
                    "passed": r.passed,
                    "mode": r.mode,
                    "witness": r.witness,
                }
                for r in report.results
            ],
            "pc_inclusion": {"all_pc": inclusion.all_pc, "message": inclusion.message},
        }))
    else:
        print(f"Richness audit of domain '{domain.name}' "
              f"({len(domain.matrices)} members):")
        for r in report.results:
            line = (f"  {'PASS' if r.passed else 'FAIL'} {r.condition.value} "
                    f"({r.condition.name.lower()}) [{r.mode}]")
            if r.witness:
                line += f": {r.witness}"
            print(line)
        print(f"  {'PASS' if inclusion.all_pc else 'NOTE'} pairwise-comparison "
              f"inclusion: {inclusion.message}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_cycle_witness(args) -> int:
    profile = _load_profile(args.ballots)
    matrix = utilitarian(profile)
    witness = cycle_witness(matrix, max_denominator=args.max_denominator)
    if args.json:
        if witness is None:
            print(json.dumps({"found": False}))
        else:
            p, q, r = witness
            print(json.dumps({
                "found": True,
                "cycle": [_lottery_json(x) for x in witness],
                "values": [
                    fraction_pair(evaluate(matrix, p, q)),
                    fraction_pair(evaluate(matrix, q, r)),
                    fraction_pair(evaluate(matrix, r, p)),
                ],
            }))
        return EXIT_OK
    if witness is None:
        print(f"none found on grid (two-support lotteries, denominators "
              f"<= {args.max_denominator})")
    else:
        p, q, r = witness
        print("Cycle found: p beats q beats r beats p")
        for label, lottery in zip("pqr", witness):
            print(f" {label}:")
            _print_lottery(lottery, indent="   ")
        print(f" values: {format_fraction(evaluate(matrix, p, q))}, "
              f"{format_fraction(evaluate(matrix, q, r))}, "
              f"{format_fraction(evaluate(matrix, r, p))}")
    return EXIT_OK


_COMMANDS = {
    "aggregate": _cmd_aggregate,
    "maximal-lottery": _cmd_maximal_lottery,
    "budget": _cmd_budget,
    "check-axioms": _cmd_check_axioms,
    "audit-domain": _cmd_audit_domain,
    "cycle-witness": _cmd_cycle_witness,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
