"""
Audit of approximately groups: uniqueness of identities and inverses, the
inverse laws, and the three subgroup criteria (inverse closure, matching set
descriptions, intersections of subgroups).
"""
from __future__ import annotations

import logging
from itertools import combinations, combinations_with_replacement, product

from proxalg.algebra import BinaryOp, classify, inverse_candidates, is_subgroup
from proxalg.audit.claims import (
    ClaimContext,
    description_match_holds,
    intersection_conclusion,
    intersection_hypothesis,
    inverse_closure_holds,
)
from proxalg.audit.sampling import PRNG_NAME, make_rng, random_region, random_subregion
from proxalg.core.config import Settings
from proxalg.core.space import DescribedSpace, Region
from proxalg.exceptions import AuditError
from proxalg.models.audit import AuditCheck, AuditReport, Verdict
from proxalg.models.structures import StructureLevel, StructureReport

logger = logging.getLogger(__name__)


def _verdict(claim: str, instance: str, counterexample: dict | None, detail: str = "", tested: bool = True) -> AuditCheck:
    if counterexample is not None:
        return AuditCheck(
            claim=claim, instance=instance, verdict=Verdict.FAILS, counterexample=counterexample, detail=detail
        )
    return AuditCheck(
        claim=claim, instance=instance, verdict=Verdict.HOLDS if tested else Verdict.SKIPPED, detail=detail
    )


def check_proposition(
    space: DescribedSpace, op: BinaryOp, group: Region, report: StructureReport | None = None
) -> AuditReport:
    """Identity and inverse uniqueness, (x⁻¹)⁻¹ = x, and (x·y)⁻¹ = y⁻¹·x⁻¹ where x·y lies in G."""
    report = report or classify(space, op, group)
    if report.level != StructureLevel.GROUP:
        raise AuditError(f"{group} classifies as {report.level.title}, not a group")
    instance = f"group {group} under {op.name}"
    g = list(group)
    checks = []

    counterexample = None
    if len(report.identities) > 1:
        counterexample = {"G": g, "e": report.identities}
    checks.append(_verdict(
        "group.unique_identity", instance, counterexample, f"{len(report.identities)} identities in the upper approximation"
    ))

    candidates = inverse_candidates(space, op, group, report.group_identity)
    counterexample = next(
        ({"G": g, "x": [x], "y": ys} for x, ys in candidates.items() if len(ys) > 1), None
    )
    checks.append(_verdict("group.unique_inverse", instance, counterexample))

    inverses = report.inverses()
    counterexample = next(({"G": g, "x": [x]} for x in g if inverses[inverses[x]] != x), None)
    checks.append(_verdict("group.inverse_involution", instance, counterexample))

    tested = untestable = 0
    counterexample = None
    for x, y in product(g, repeat=2):
        xy = op.apply(space, x, y)
        if xy not in group:
            untestable += 1
            continue
        tested += 1
        if counterexample is None and inverses[xy] != op.apply(space, inverses[y], inverses[x]):
            counterexample = {"G": g, "x": [x], "y": [y]}
    if untestable:
        logger.warning(f"{untestable} products in {group} leave the group; their inverses are undefined.")
    checks.append(_verdict(
        "group.product_inverse", instance, counterexample,
        f"{tested} pairs tested, {untestable} untestable (product outside G)", tested=tested > 0,
    ))
    return AuditReport(checks=checks, instance_count=1)


def _candidate_subsets(group: Region, trials: int, rng, limit: int) -> list[Region]:
    members = list(group)
    if len(members) <= limit:
        return [
            Region.of(group.space, subset)
            for size in range(1, len(members) + 1)
            for subset in combinations(members, size)
        ]
    drawn = {random_subregion(group, rng) for _ in range(trials)}
    return sorted(drawn, key=lambda region: list(region))


def audit_group(
    space: DescribedSpace,
    op: BinaryOp,
    group: Region,
    trials: int = 100,
    seed: int = 0,
    settings: Settings | None = None,
) -> AuditReport:
    """
    Audits the subgroup criteria on one approximately group G: exhaustively
    over every nonempty H ⊆ G (and every pair of subgroups) when |G| is within
    settings.group_subset_limit, otherwise over `trials` sampled subsets.
    """
    settings = settings or Settings()
    ctx = ClaimContext(space, op)
    group_report = ctx.group_report(group)
    if group_report.level != StructureLevel.GROUP:
        raise AuditError(f"{group} classifies as {group_report.level.title}, not a group")

    rng = make_rng(seed)
    subsets = _candidate_subsets(group, trials, rng, settings.group_subset_limit)
    instance = f"group {group} under {op.name}, {len(subsets)} subsets"
    g = list(group)

    subgroup_reports = {}
    inverse_failure = description_failure = None
    hypothesis_count = 0
    for candidate in subsets:
        _, sub = is_subgroup(space, op, group, candidate, group_report)
        subgroup_reports[candidate] = sub
        if sub.upper_closed:
            hypothesis_count += 1
        if inverse_failure is None and not inverse_closure_holds(sub):
            inverse_failure = {"G": g, "H": list(candidate)}
        if description_failure is None and not description_match_holds(sub, candidate, group):
            description_failure = {"G": g, "H": list(candidate)}

    checks = [
        _verdict(
            "subgroup.inverse_closure", instance, inverse_failure,
            f"{hypothesis_count} subsets with a closed upper approximation", tested=hypothesis_count > 0,
        ),
        _verdict("subgroup.description_match", instance, description_failure),
    ]

    subgroups = [(h, r) for h, r in subgroup_reports.items() if r.is_subgroup and r.upper_closed]
    pairs = list(combinations_with_replacement(range(len(subgroups)), 2))
    if len(pairs) > settings.exhaustive_subset_limit:
        chosen = sorted(set(rng.choice(len(pairs), size=trials).tolist()))
        pairs = [pairs[i] for i in chosen]
    intersection_failure = None
    hypothesis_count = 0
    for i, j in pairs:
        first, second = subgroups[i], subgroups[j]
        if not intersection_hypothesis(ctx, group, first, second):
            continue
        hypothesis_count += 1
        if not intersection_conclusion(ctx, group, first[0] & second[0]):
            intersection_failure = {"G": g, "H1": list(first[0]), "H2": list(second[0])}
            break
    checks.append(_verdict(
        "subgroup.intersection", f"group {group} under {op.name}, {len(pairs)} subgroup pairs",
        intersection_failure, f"{hypothesis_count} pairs satisfy the hypothesis", tested=hypothesis_count > 0,
    ))

    report = check_proposition(space, op, group, group_report)
    report.checks = checks + report.checks
    report.instance_count = len(subsets) + len(pairs)
    return report


def check_group_theorems(
    space: DescribedSpace,
    op: BinaryOp,
    trials: int,
    seed: int,
    groups: list[Region] | None = None,
    settings: Settings | None = None,
) -> AuditReport:
    """
    Audits the group claims on the given groups, or on approximately groups
    found among the space's singletons and `trials` random regions.
    """
    if trials < 1:
        raise AuditError(f"trials must be at least 1, got {trials}")
    settings = settings or Settings()
    report = AuditReport(seed=seed, prng=PRNG_NAME)

    if groups is None:
        rng = make_rng(seed)
        candidates = [Region.of(space, [p]) for p in space.points()]
        candidates += [random_region(space, rng) for _ in range(trials)]
        groups = []
        for candidate in dict.fromkeys(candidates):
            if classify(space, op, candidate).level == StructureLevel.GROUP:
                groups.append(candidate)
        logger.info(f"Found {len(groups)} approximately groups among {len(candidates)} candidates.")
        if not groups:
            report.notices.append(f"No descriptive approximately group found under {op.name}; group claims not audited.")
            return report

    for index, group in enumerate(groups):
        report = report.merge(audit_group(space, op, group, trials, seed + index, settings))
    return report
