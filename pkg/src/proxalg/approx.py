"""
Descriptive approximations over a described space.

Every function here is pure. Regions come back in row-major order because
Region iterates that way; nothing is cached between calls.
"""
from __future__ import annotations

import logging

from pydantic import BaseModel, ConfigDict, Field

from proxalg.core.space import DescribedSpace, FeatureVector, PointId, Region
from proxalg.exceptions import SpaceMismatch

logger = logging.getLogger(__name__)


class DescriptionSet(BaseModel):
    """Q(A): the deduplicated descriptions of a region's members, in row-major first-seen order."""
    model_config = ConfigDict(frozen=True)

    vectors: tuple[FeatureVector, ...] = Field(default=(), description="Distinct member descriptions.")

    def __init__(self, vectors: tuple[FeatureVector, ...] = ()):
        super().__init__(vectors=vectors)

    def __contains__(self, vector: object) -> bool:
        return vector in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def as_set(self) -> frozenset[FeatureVector]:
        return frozenset(self.vectors)

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self.vectors) + "}"


class ApproximationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    lower: Region = Field(..., description="Members whose whole closure class lies in the region.")
    upper: Region = Field(..., description="Every point whose description occurs in the region.")

    @property
    def boundary(self) -> Region:
        return self.upper.difference(self.lower)


def _same_space(a: Region, b: Region):
    if a.space is not b.space and a.space != b.space:
        raise SpaceMismatch("Regions belong to different spaces")


def set_description(region: Region) -> DescriptionSet:
    seen: dict[FeatureVector, None] = {}
    for point in region:
        seen.setdefault(region.space.describe(point), None)
    return DescriptionSet(tuple(seen))


def descriptive_closure(space: DescribedSpace, point: PointId) -> Region:
    """cl_Φ(point): every point sharing the point's description, the point included."""
    class_id = space.class_of(space.index_of(point))
    return Region.from_indices(space, space.class_members(class_id))


def descriptively_near(space: DescribedSpace, point: PointId, region: Region) -> bool:
    """x δ_Φ A, i.e. Φ(x) ∈ Q(A)."""
    if region.space is not space and region.space != space:
        raise SpaceMismatch("Point and region belong to different spaces")
    return space.describe(point) in set_description(region)


def nearness_collection_contains(region_a: Region, region_b: Region) -> bool:
    """B ∈ ξ_Φ(A), i.e. Q(A) ∩ Q(B) ≠ ∅."""
    _same_space(region_a, region_b)
    return not set_description(region_a).as_set().isdisjoint(set_description(region_b).as_set())


def descriptively_far(region_a: Region, region_b: Region) -> bool:
    return not nearness_collection_contains(region_a, region_b)


def descriptive_intersection(region_a: Region, region_b: Region) -> Region:
    """Members of A ∪ B whose description lies in both Q(A) and Q(B). May exceed A ∩ B."""
    _same_space(region_a, region_b)
    shared = set_description(region_a).as_set() & set_description(region_b).as_set()
    space = region_a.space
    return Region.of(space, (p for p in region_a.union(region_b) if space.describe(p) in shared))


def upper_approximation(region: Region) -> Region:
    """Φ*A: all points descriptively near A."""
    space = region.space
    classes = {space.class_of(i) for i in region.indices()}
    return Region.from_indices(space, (i for c in classes for i in space.class_members(c)))


def lower_approximation(region: Region) -> Region:
    """Φ_*A: members of A whose whole descriptive closure stays inside A."""
    space = region.space
    inside = region.indices()
    kept = [
        i for i in inside
        if all(j in inside for j in space.class_members(space.class_of(i)))
    ]
    return Region.from_indices(space, kept)


def boundary_region(region: Region) -> Region:
    return upper_approximation(region).difference(lower_approximation(region))


def approximate(region: Region) -> ApproximationResult:
    return ApproximationResult(lower=lower_approximation(region), upper=upper_approximation(region))


def accuracy(region: Region) -> float:
    """|Φ_*A| / |Φ*A|, or 0.0 when the upper approximation is empty."""
    result = approximate(region)
    if not result.upper:
        return 0.0
    return len(result.lower) / len(result.upper)
