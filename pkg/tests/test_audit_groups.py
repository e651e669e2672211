"""
Tests for the group and subgroup audits on approximately groups.
"""
import pytest

from proxalg.algebra import CayleyTable, MinIndex, ModAdd
from proxalg.audit import ClaimContext, audit_group, check_group_theorems, check_proposition, evaluate, replay
from proxalg.audit.claims import intersection_conclusion
from proxalg.core.space import Region
from proxalg.exceptions import AuditError
from proxalg.models.audit import Verdict
from tests.helpers import grid, x


@pytest.fixture
def wider_group(table2):
    """{x00, x23, x32}: a group under addition modulo 5 with the same upper approximation as B."""
    return Region.of(table2, [x(0, 0), x(2, 3), x(3, 2)])


# ============================================================================
# Subgroup criteria on B
# ============================================================================

class TestGroupB:
    """Every nonempty H, H1, H2 within B is audited."""

    def test_subgroup_criteria_hold(self, table2, region_b):
        report = audit_group(table2, ModAdd(5), region_b)
        assert report.verdict_of("subgroup.inverse_closure") == Verdict.HOLDS
        assert report.verdict_of("subgroup.description_match") == Verdict.HOLDS
        assert report.verdict_of("subgroup.intersection") == Verdict.HOLDS
        assert report.all_hold

    def test_every_subset_is_enumerated(self, table2, region_b):
        report = audit_group(table2, ModAdd(5), region_b)
        inverse_closure = next(c for c in report.checks if c.claim == "subgroup.inverse_closure")
        assert "3 subsets" in inverse_closure.instance

    def test_proposition_on_b(self, table2, region_b):
        report = check_proposition(table2, ModAdd(5), region_b)
        assert report.verdict_of("group.unique_identity") == Verdict.HOLDS
        assert report.verdict_of("group.unique_inverse") == Verdict.HOLDS
        assert report.verdict_of("group.inverse_involution") == Verdict.HOLDS
        # Every product of two members of B leaves B.
        assert report.verdict_of("group.product_inverse") == Verdict.SKIPPED

    def test_proposition_needs_a_group(self, table1, region_a):
        with pytest.raises(AuditError):
            check_proposition(table1, MinIndex(), region_a)


# ============================================================================
# Counterexamples
# ============================================================================

class TestCounterexamples:
    """Claims that fail in the approximate setting are reported, never assumed."""

    def test_description_match_fails_on_wider_group(self, table2, wider_group):
        report = audit_group(table2, ModAdd(5), wider_group)
        assert report.verdict_of("subgroup.description_match") == Verdict.FAILS
        failure = next(c for c in report.failures() if c.claim == "subgroup.description_match")
        assert failure.counterexample == {"G": list(wider_group), "H": [x(0, 0)]}
        assert replay(failure, ClaimContext(table2, ModAdd(5)))
        assert report.verdict_of("subgroup.inverse_closure") == Verdict.HOLDS
        assert report.verdict_of("subgroup.intersection") == Verdict.HOLDS

    def test_singleton_with_many_identities(self, table1):
        group = Region.of(table1, [x(1, 1)])
        report = check_proposition(table1, MinIndex(), group)
        assert report.verdict_of("group.unique_identity") == Verdict.FAILS
        failure = report.failures()[0]
        assert len(failure.counterexample["e"]) == 9
        assert replay(failure, ClaimContext(table1, MinIndex()))

    def test_empty_intersection_is_not_a_subgroup(self, table2, region_b):
        ctx = ClaimContext(table2, ModAdd(5))
        assert not intersection_conclusion(ctx, region_b, Region.empty(table2))
        assert intersection_conclusion(ctx, region_b, region_b)

    def test_named_claims_evaluate(self, table2, region_b):
        ctx = ClaimContext(table2, ModAdd(5))
        regions = {"G": region_b, "x": list(region_b), "y": list(region_b)}
        assert evaluate("group.inverse_involution", ctx, regions)
        assert evaluate("group.product_inverse", ctx, regions)
        with pytest.raises(AuditError):
            evaluate("no.such.claim", ctx, regions)


# ============================================================================
# Searching for groups
# ============================================================================

class TestGroupSearch:
    """check_group_theorems with and without explicit groups."""

    def test_explicit_group(self, table2, region_b):
        report = check_group_theorems(table2, ModAdd(5), trials=10, seed=0, groups=[region_b])
        assert report.seed == 0
        assert report.verdict_of("subgroup.intersection") == Verdict.HOLDS

    def test_no_group_found(self):
        space = grid(1, 3, [0, 1, 2])
        a, b, c = x(0, 0), x(0, 1), x(0, 2)
        successor = {a: b, b: c, c: a}
        op = CayleyTable({(p, q): successor[p] for p in (a, b, c) for q in (a, b, c)})
        report = check_group_theorems(space, op, trials=5, seed=0)
        assert report.checks == []
        assert len(report.notices) == 1
        assert "No descriptive approximately group" in report.notices[0]

    def test_search_finds_singleton_groups(self, table1):
        report = check_group_theorems(table1, MinIndex(), trials=3, seed=0)
        assert report.checks
        assert report.verdict_of("group.unique_identity") == Verdict.FAILS

    def test_trials_must_be_positive(self, table2):
        with pytest.raises(AuditError):
            check_group_theorems(table2, ModAdd(5), trials=0, seed=0)
