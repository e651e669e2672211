"""
Unit tests for described spaces and regions.
"""
import pytest
from pydantic import ValidationError

from proxalg.approx import descriptive_closure
from proxalg.core.space import (
    DescribedSpace,
    FeatureVector,
    PointId,
    Region,
    describe,
    description_classes,
    make_space,
)
from proxalg.exceptions import (
    DuplicatePoint,
    InvalidDescription,
    LengthMismatch,
    MissingPoint,
    PointOutOfRange,
    SpaceError,
    SpaceMismatch,
)
from tests.helpers import grid, x


# ============================================================================
# make_space
# ============================================================================

class TestMakeSpace:
    """Tests for building spaces from (point, vector) entries."""

    def test_builds_row_major_space(self):
        space = grid(2, 2, [1, 2, 3, 4])
        assert space.size == 4
        assert space.points() == (x(0, 0), x(0, 1), x(1, 0), x(1, 1))
        assert describe(space, x(1, 0)) == FeatureVector.of(3)

    def test_missing_point(self):
        with pytest.raises(MissingPoint, match="x01"):
            make_space(1, 2, 1, [(x(0, 0), (1,))])

    def test_duplicate_point(self):
        with pytest.raises(DuplicatePoint):
            make_space(1, 2, 1, [(x(0, 0), (1,)), (x(0, 0), (2,)), (x(0, 1), (3,))])

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            make_space(1, 2, 2, [(x(0, 0), (1, 2)), (x(0, 1), (3,))])

    def test_entry_outside_grid(self):
        with pytest.raises(PointOutOfRange):
            make_space(1, 1, 1, [(x(0, 1), (1,))])

    def test_one_based_grid_rejects_zero_index(self):
        with pytest.raises(PointOutOfRange):
            make_space(1, 1, 1, [(x(0, 0), (1,))], index_base=1)

    def test_negative_point_index(self):
        with pytest.raises(PointOutOfRange):
            PointId(-1, 0)


# ============================================================================
# DescribedSpace
# ============================================================================

class TestDescribedSpace:
    """Tests for indexing and description lookup."""

    def test_one_based_indexing(self, table1):
        assert table1.index_base == 1
        assert table1.index_of(x(1, 1)) == 0
        assert table1.index_of(x(5, 5)) == 24
        assert table1.point_at(5) == x(2, 1)

    def test_describe_reads_the_table(self, table1, table2):
        assert describe(table1, x(2, 1)) == FeatureVector.of(0, 102, 153)
        assert describe(table2, x(0, 0)) == FeatureVector.of(174, 117, 255)

    def test_describe_out_of_range(self, table1):
        with pytest.raises(PointOutOfRange):
            describe(table1, x(0, 0))
        with pytest.raises(PointOutOfRange):
            describe(table1, x(6, 1))

    def test_labels(self):
        assert DescribedSpace.label(x(2, 1)) == "x21"
        assert DescribedSpace.label(x(10, 11)) == "x10,11"

    def test_feature_vector_text(self):
        assert str(FeatureVector.of(0, 102, 153)) == "(0,102,153)"

    def test_description_classes(self, table1):
        classes = description_classes(table1)
        assert len(classes) == 7
        assert classes[0].labels() == ["x11", "x14", "x25", "x31", "x34", "x42", "x44", "x45", "x53"]
        assert sum(len(c) for c in classes) == table1.size


# ============================================================================
# Region
# ============================================================================

class TestRegion:
    """Tests for region construction and set algebra."""

    def test_iterates_row_major(self, table1):
        region = Region.of(table1, [x(3, 3), x(2, 1), x(2, 2)])
        assert list(region) == [x(2, 1), x(2, 2), x(3, 3)]
        assert str(region) == "{x21, x22, x33}"

    def test_rejects_points_off_the_grid(self, table1):
        with pytest.raises(PointOutOfRange):
            Region.of(table1, [x(0, 0)])

    def test_set_algebra(self):
        space = grid(2, 2, [1, 2, 3, 4])
        a = Region.of(space, [x(0, 0), x(0, 1)])
        b = Region.of(space, [x(0, 1), x(1, 1)])
        assert list(a | b) == [x(0, 0), x(0, 1), x(1, 1)]
        assert list(a & b) == [x(0, 1)]
        assert list(a - b) == [x(0, 0)]
        assert (a & b) <= a
        assert not a <= b
        assert Region.whole(space) - Region.whole(space) == Region.empty(space)

    def test_regions_from_different_spaces(self):
        first = grid(1, 2, [1, 2])
        second = grid(1, 2, [1, 3])
        with pytest.raises(SpaceMismatch):
            Region.whole(first) | Region.whole(second)


# ============================================================================
# Value validation
# ============================================================================

class TestValueValidation:
    """Malformed values fail as space errors before they reach any lookup."""

    @pytest.mark.parametrize("row, col", [(0.5, 0), (0, 1.5), ("one", 0), (None, 0)])
    def test_point_indices_must_be_whole_numbers(self, row, col):
        with pytest.raises(PointOutOfRange):
            PointId(row, col)

    def test_fractional_point_never_reaches_describe(self):
        space = grid(2, 2, [0, 1, 2, 3])
        with pytest.raises(PointOutOfRange):
            describe(space, PointId(0.5, 0))
        with pytest.raises(PointOutOfRange):
            descriptive_closure(space, PointId(0.5, 0))

    def test_feature_values_must_be_integers(self):
        with pytest.raises(InvalidDescription):
            FeatureVector(("red",))
        with pytest.raises(InvalidDescription):
            FeatureVector((1, 2.5))

    def test_empty_feature_vector(self):
        with pytest.raises(LengthMismatch):
            FeatureVector(())

    def test_make_space_rejects_non_numeric_descriptions(self):
        with pytest.raises(InvalidDescription):
            make_space(1, 1, 1, [(x(0, 0), ("red",))])

    def test_index_base_must_be_zero_or_one(self):
        with pytest.raises(SpaceError):
            make_space(1, 1, 1, [(x(2, 2), (1,))], index_base=2)

    def test_region_members_must_be_points(self, table1):
        with pytest.raises(SpaceError):
            Region.of(table1, [(2, 1)])

    def test_points_are_immutable_and_ordered(self):
        point = x(2, 1)
        with pytest.raises(ValidationError):
            point.row = 3
        assert x(1, 5) < x(2, 1) < x(2, 2)
        assert x(2, 2) >= x(2, 1)
        assert hash(x(2, 1)) == hash(PointId(2, 1))
