"""
Tests for the exhaustive proximity axiom checks.
"""
import numpy as np
import pytest

from proxalg.approx import descriptively_far
from proxalg.audit import (
    ClaimContext,
    ProximityRelationSample,
    check_ef_axioms,
    check_lodato_axiom,
    evaluate,
    replay,
)
from proxalg.core.space import Region
from proxalg.exceptions import AuditError, SpaceTooLarge
from proxalg.models.audit import Verdict
from tests.helpers import grid, x


@pytest.fixture
def twin_space():
    """Two points sharing one description."""
    return grid(1, 2, [7, 7])


@pytest.fixture
def distinct_space():
    return grid(2, 2, [0, 1, 2, 3])


# ============================================================================
# Descriptive proximity
# ============================================================================

class TestDescriptiveProximity:
    """The descriptive relation satisfies every axiom except singleton identity."""

    def test_all_axioms_hold_with_distinct_descriptions(self, distinct_space):
        sample = ProximityRelationSample.descriptive(distinct_space)
        report = check_ef_axioms(sample).merge(check_lodato_axiom(sample))
        assert report.all_hold
        assert [c.claim for c in report.checks] == [
            "proximity.symmetry",
            "proximity.nonempty",
            "proximity.overlap",
            "proximity.union",
            "proximity.singleton_identity",
            "proximity.separation",
            "proximity.lodato",
        ]

    def test_shared_description_breaks_singleton_identity(self, twin_space):
        sample = ProximityRelationSample.descriptive(twin_space)
        report = check_ef_axioms(sample)
        failures = report.failures()
        assert [c.claim for c in failures] == ["proximity.singleton_identity"]
        assert failures[0].counterexample == {"A": [x(0, 0)], "B": [x(0, 1)]}

    def test_counterexample_replays(self, twin_space):
        sample = ProximityRelationSample.descriptive(twin_space)
        failure = check_ef_axioms(sample).failures()[0]
        assert replay(failure, ClaimContext(twin_space, relation=sample))

    def test_lodato_holds_with_shared_descriptions(self, twin_space):
        sample = ProximityRelationSample.descriptive(twin_space)
        assert check_lodato_axiom(sample).verdict_of("proximity.lodato") == Verdict.HOLDS

    def test_far_is_descriptive_farness(self, distinct_space):
        sample = ProximityRelationSample.descriptive(distinct_space)
        for a_mask in range(sample.subset_count):
            for b_mask in range(sample.subset_count):
                a, b = sample.region(a_mask), sample.region(b_mask)
                assert sample.far(a, b) == descriptively_far(a, b)
                assert sample.far(a, b) != sample.near(a, b)

    def test_separation_uses_a_separating_region(self, distinct_space):
        sample = ProximityRelationSample.descriptive(distinct_space)
        regions = {"A": Region.of(distinct_space, [x(0, 0)]), "B": Region.of(distinct_space, [x(0, 1)])}
        assert sample.far(regions["A"], regions["B"])
        assert evaluate("proximity.separation", ClaimContext(distinct_space, relation=sample), regions)


# ============================================================================
# Other relations
# ============================================================================

class TestOtherRelations:
    """Relations supplied as matrices."""

    def test_never_near_fails_overlap(self, distinct_space):
        sample = ProximityRelationSample.never(distinct_space)
        report = check_ef_axioms(sample)
        assert report.verdict_of("proximity.symmetry") == Verdict.HOLDS
        assert report.verdict_of("proximity.nonempty") == Verdict.HOLDS
        assert report.verdict_of("proximity.separation") == Verdict.HOLDS
        assert report.verdict_of("proximity.overlap") == Verdict.FAILS
        overlap = next(c for c in report.checks if c.claim == "proximity.overlap")
        assert overlap.counterexample == {"A": [x(0, 0)], "B": [x(0, 0)]}
        assert replay(overlap, ClaimContext(distinct_space, relation=sample))

    def test_asymmetric_matrix(self, twin_space):
        matrix = np.zeros((4, 4), dtype=bool)
        matrix[1, 2] = True
        sample = ProximityRelationSample.from_matrix(twin_space, matrix)
        symmetry = check_ef_axioms(sample).checks[0]
        assert symmetry.verdict == Verdict.FAILS
        assert symmetry.counterexample == {"A": [x(0, 0)], "B": [x(0, 1)]}
        first, second = Region.of(twin_space, [x(0, 0)]), Region.of(twin_space, [x(0, 1)])
        assert not sample.far(first, second)
        assert sample.far(second, first)

    def test_matrix_shape_is_checked(self, twin_space):
        with pytest.raises(AuditError):
            ProximityRelationSample.from_matrix(twin_space, np.zeros((3, 3), dtype=bool))

    def test_space_too_large(self):
        with pytest.raises(SpaceTooLarge):
            ProximityRelationSample.descriptive(grid(3, 3, [0] * 9))
        with pytest.raises(SpaceTooLarge):
            ProximityRelationSample.descriptive(grid(2, 2, [0] * 4), max_points=3)
