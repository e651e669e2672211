"""
Registry of audited claims, each evaluated through the public approx and
algebra operations. A predicate returns True when the claim holds on the
given named regions; replaying a counterexample means re-running it.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from typing import Callable

from proxalg.algebra import (
    BinaryOp,
    classify,
    find_identities,
    inverse_candidates,
    is_subgroup,
    same_description,
)
from proxalg.approx import (
    descriptive_closure,
    lower_approximation,
    nearness_collection_contains,
    set_description,
    upper_approximation,
)
from proxalg.audit.proximity import ProximityRelationSample
from proxalg.core.space import DescribedSpace, Region
from proxalg.exceptions import AuditError
from proxalg.models.audit import AuditCheck, Verdict
from proxalg.models.structures import StructureLevel

logger = logging.getLogger(__name__)


@dataclass
class ClaimContext:
    space: DescribedSpace
    op: BinaryOp | None = None
    relation: ProximityRelationSample | None = None
    _reports: dict = field(default_factory=dict, repr=False)

    def group_report(self, group: Region):
        key = group.members
        if key not in self._reports:
            self._reports[key] = classify(self.space, self.op, group)
        return self._reports[key]


ClaimPredicate = Callable[[ClaimContext, dict[str, Region]], bool]
CLAIMS: dict[str, ClaimPredicate] = {}


def claim(name: str):
    def register(predicate: ClaimPredicate) -> ClaimPredicate:
        CLAIMS[name] = predicate
        return predicate
    return register


# ============================================================================
# Approximations and set descriptions
# ============================================================================

@claim("lower.within_region")
def _lower_within_region(ctx, r):
    return lower_approximation(r["A"]) <= r["A"]


@claim("upper.contains_region")
def _upper_contains_region(ctx, r):
    return r["A"] <= upper_approximation(r["A"])


@claim("upper.idempotent")
def _upper_idempotent(ctx, r):
    upper = upper_approximation(r["A"])
    return upper_approximation(upper) == upper


@claim("upper.closure_union")
def _upper_closure_union(ctx, r):
    closures = [descriptive_closure(ctx.space, p) for p in r["A"]]
    return upper_approximation(r["A"]) == reduce(Region.union, closures, Region.empty(ctx.space))


@claim("nearness.self_member")
def _self_member(ctx, r):
    return not r["A"] or nearness_collection_contains(r["A"], r["A"])


@claim("upper.union")
def _upper_union(ctx, r):
    a, b = r["A"], r["B"]
    return upper_approximation(a | b) == upper_approximation(a) | upper_approximation(b)


@claim("lower.intersection")
def _lower_intersection(ctx, r):
    a, b = r["A"], r["B"]
    return lower_approximation(a & b) == lower_approximation(a) & lower_approximation(b)


@claim("lower.monotone")
def _lower_monotone(ctx, r):
    a, b = r["A"], r["B"]
    return not a <= b or lower_approximation(a) <= lower_approximation(b)


@claim("upper.monotone")
def _upper_monotone(ctx, r):
    a, b = r["A"], r["B"]
    return not a <= b or upper_approximation(a) <= upper_approximation(b)


@claim("lower.union_inclusion")
def _lower_union_inclusion(ctx, r):
    a, b = r["A"], r["B"]
    return lower_approximation(a) | lower_approximation(b) <= lower_approximation(a | b)


@claim("upper.intersection_inclusion")
def _upper_intersection_inclusion(ctx, r):
    a, b = r["A"], r["B"]
    return upper_approximation(a & b) <= upper_approximation(a) & upper_approximation(b)


@claim("description.union")
def _description_union(ctx, r):
    a, b = r["A"], r["B"]
    return set_description(a | b).as_set() == set_description(a).as_set() | set_description(b).as_set()


@claim("description.intersection_inclusion")
def _description_intersection_inclusion(ctx, r):
    a, b = r["A"], r["B"]
    return set_description(a & b).as_set() <= set_description(a).as_set() & set_description(b).as_set()


@claim("description.intersection_equality")
def _description_intersection_equality(ctx, r):
    a, b = r["A"], r["B"]
    return set_description(a & b).as_set() == set_description(a).as_set() & set_description(b).as_set()


REGION_CLAIMS = (
    "lower.within_region",
    "upper.contains_region",
    "upper.idempotent",
    "upper.closure_union",
    "nearness.self_member",
)

PAIR_CLAIMS = (
    "upper.union",
    "lower.intersection",
    "lower.monotone",
    "upper.monotone",
    "lower.union_inclusion",
    "upper.intersection_inclusion",
    "description.union",
    "description.intersection_inclusion",
    "description.intersection_equality",
)


# ============================================================================
# Proximity axioms
# ============================================================================

def _near(ctx, a, b):
    return ctx.relation.near(a, b)


def _far(ctx, a, b):
    return ctx.relation.far(a, b)


@claim("proximity.symmetry")
def _symmetry(ctx, r):
    return _near(ctx, r["A"], r["B"]) == _near(ctx, r["B"], r["A"])


@claim("proximity.nonempty")
def _nonempty(ctx, r):
    return not _near(ctx, r["A"], r["B"]) or bool(r["A"] and r["B"])


@claim("proximity.overlap")
def _overlap(ctx, r):
    return not (r["A"] & r["B"]) or _near(ctx, r["A"], r["B"])


@claim("proximity.union")
def _union(ctx, r):
    a, b, c = r["A"], r["B"], r["C"]
    return _near(ctx, a, b | c) == (_near(ctx, a, b) or _near(ctx, a, c))


@claim("proximity.singleton_identity")
def _singleton_identity(ctx, r):
    return _near(ctx, r["A"], r["B"]) == (r["A"] == r["B"])


@claim("proximity.separation")
def _separation(ctx, r):
    a, b = r["A"], r["B"]
    if not _far(ctx, a, b):
        return True
    whole = Region.whole(ctx.space)
    for mask in range(ctx.relation.subset_count):
        e = ctx.relation.region(mask)
        if _far(ctx, a, e) and _far(ctx, whole - e, b):
            return True
    return False


@claim("proximity.lodato")
def _lodato(ctx, r):
    a, b, c = r["A"], r["B"], r["C"]
    if not _near(ctx, a, b):
        return True
    if not all(_near(ctx, Region.of(ctx.space, [p]), c) for p in b):
        return True
    return _near(ctx, a, c)


# ============================================================================
# Approximately groups and subgroups
# ============================================================================

def inverse_closure_holds(report) -> bool:
    """Under the closed-upper hypothesis: subgroup iff the group inverses of H stay in H."""
    return not report.upper_closed or report.is_subgroup == report.inverses_in_subset


def description_match_holds(report, candidate: Region, group: Region) -> bool:
    return report.is_subgroup == same_description(candidate, group)


def intersection_hypothesis(ctx: ClaimContext, group: Region, first, second) -> bool:
    """Both subgroups with closed upper approximations, and Φ*H1 ∩ Φ*H2 = Φ*(H1 ∩ H2)."""
    (h1, r1), (h2, r2) = first, second
    if not (r1.is_subgroup and r2.is_subgroup and r1.upper_closed and r2.upper_closed):
        return False
    meet = h1 & h2
    return upper_approximation(h1) & upper_approximation(h2) == upper_approximation(meet)


def intersection_conclusion(ctx: ClaimContext, group: Region, meet: Region) -> bool:
    if not meet:
        return False
    return is_subgroup(ctx.space, ctx.op, group, meet, ctx.group_report(group))[0]


def _subgroup_report(ctx, group, candidate):
    return is_subgroup(ctx.space, ctx.op, group, candidate, ctx.group_report(group))[1]


@claim("subgroup.inverse_closure")
def _inverse_closure(ctx, r):
    return inverse_closure_holds(_subgroup_report(ctx, r["G"], r["H"]))


@claim("subgroup.description_match")
def _description_match(ctx, r):
    return description_match_holds(_subgroup_report(ctx, r["G"], r["H"]), r["H"], r["G"])


@claim("subgroup.intersection")
def _intersection(ctx, r):
    g, h1, h2 = r["G"], r["H1"], r["H2"]
    first = (h1, _subgroup_report(ctx, g, h1))
    second = (h2, _subgroup_report(ctx, g, h2))
    if not intersection_hypothesis(ctx, g, first, second):
        return True
    return intersection_conclusion(ctx, g, h1 & h2)


def _group_inverses(ctx, group):
    report = ctx.group_report(group)
    if report.level != StructureLevel.GROUP:
        raise AuditError(f"{group} is not a descriptive approximately group")
    return report


@claim("group.unique_identity")
def _unique_identity(ctx, r):
    return len(find_identities(ctx.space, ctx.op, r["G"])) == 1


@claim("group.unique_inverse")
def _unique_inverse(ctx, r):
    report = _group_inverses(ctx, r["G"])
    candidates = inverse_candidates(ctx.space, ctx.op, r["G"], report.group_identity)
    return all(len(candidates[x]) <= 1 for x in r["x"])


@claim("group.inverse_involution")
def _inverse_involution(ctx, r):
    inverses = _group_inverses(ctx, r["G"]).inverses()
    return all(inverses[inverses[x]] == x for x in r["x"])


@claim("group.product_inverse")
def _product_inverse(ctx, r):
    group = r["G"]
    inverses = _group_inverses(ctx, group).inverses()
    for x, y in product(r["x"], r["y"]):
        xy = ctx.op.apply(ctx.space, x, y)
        if xy in group and inverses[xy] != ctx.op.apply(ctx.space, inverses[y], inverses[x]):
            return False
    return True


# ============================================================================
# Replay
# ============================================================================

def evaluate(claim_name: str, ctx: ClaimContext, regions: dict[str, Region]) -> bool:
    try:
        predicate = CLAIMS[claim_name]
    except KeyError:
        raise AuditError(f"Unknown claim '{claim_name}'") from None
    return predicate(ctx, regions)


def replay(check: AuditCheck, ctx: ClaimContext) -> bool:
    """True when the check's counterexample still violates its claim."""
    if check.verdict != Verdict.FAILS:
        return False
    regions = {name: Region.of(ctx.space, points) for name, points in check.counterexample.items()}
    reproduced = not evaluate(check.claim, ctx, regions)
    logger.info(f"Replayed {check.claim}: {'reproduced' if reproduced else 'did not reproduce'}.")
    return reproduced
