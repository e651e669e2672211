"""
Exhaustive checks of the proximity axioms on small spaces.

A relation is materialised as a boolean matrix indexed by subset bitmasks:
relation[a, b] is True when the subset with bitmask a is near the subset
with bitmask b. Bit i of a mask is the i-th point in row-major order.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from proxalg.approx import descriptively_far, nearness_collection_contains
from proxalg.core.config import Settings
from proxalg.core.space import DescribedSpace, Region
from proxalg.exceptions import AuditError, SpaceTooLarge
from proxalg.models.audit import AuditCheck, AuditReport, Verdict
from proxalg.audit.sampling import mask_of, region_from_mask

logger = logging.getLogger(__name__)


def subset_descriptions(space: DescribedSpace) -> np.ndarray:
    """Q(A) for every subset A, encoded as a bitmask over closure classes."""
    masks = np.arange(1 << space.size, dtype=np.int64)
    q = np.zeros_like(masks)
    for i in range(space.size):
        q |= ((masks >> i) & 1) << space.class_of(i)
    return q


@dataclass(frozen=True, eq=False)
class ProximityRelationSample:
    space: DescribedSpace
    relation: np.ndarray
    name: str = "descriptive"

    def __post_init__(self):
        expected = (1 << self.space.size, 1 << self.space.size)
        if self.relation.shape != expected:
            raise AuditError(f"Relation matrix has shape {self.relation.shape}, expected {expected}")

    @staticmethod
    def _check_size(space: DescribedSpace, max_points: int | None):
        limit = max_points if max_points is not None else Settings().max_points
        if space.size > limit:
            raise SpaceTooLarge(f"{space.size} points exceed the exhaustive limit of {limit}")

    @classmethod
    def descriptive(cls, space: DescribedSpace, max_points: int | None = None) -> ProximityRelationSample:
        """δ_Φ: A is near B iff Q(A) ∩ Q(B) ≠ ∅."""
        cls._check_size(space, max_points)
        q = subset_descriptions(space)
        return cls(space, (q[:, None] & q[None, :]) != 0, "descriptive")

    @classmethod
    def from_matrix(
        cls, space: DescribedSpace, matrix, name: str = "custom", max_points: int | None = None
    ) -> ProximityRelationSample:
        cls._check_size(space, max_points)
        return cls(space, np.asarray(matrix, dtype=bool), name)

    @classmethod
    def never(cls, space: DescribedSpace, max_points: int | None = None) -> ProximityRelationSample:
        cls._check_size(space, max_points)
        size = 1 << space.size
        return cls(space, np.zeros((size, size), dtype=bool), "never")

    @property
    def subset_count(self) -> int:
        return 1 << self.space.size

    def near(self, region_a: Region, region_b: Region) -> bool:
        if self.name == "descriptive":
            return nearness_collection_contains(region_a, region_b)
        return bool(self.relation[mask_of(region_a), mask_of(region_b)])

    def far(self, region_a: Region, region_b: Region) -> bool:
        if self.name == "descriptive":
            return descriptively_far(region_a, region_b)
        return not self.near(region_a, region_b)

    def region(self, mask) -> Region:
        return region_from_mask(self.space, int(mask))


def _first(bad: np.ndarray):
    hits = np.argwhere(bad)
    return None if hits.size == 0 else tuple(int(v) for v in hits[0])


def _check(sample: ProximityRelationSample, claim: str, hit, names: tuple[str, ...], detail: str = "") -> AuditCheck:
    instance = f"{sample.name} proximity on {sample.space.rows}x{sample.space.cols} space, {sample.subset_count} subsets"
    if hit is None:
        return AuditCheck(claim=claim, instance=instance, verdict=Verdict.HOLDS, detail=detail)
    counterexample = {name: list(sample.region(mask)) for name, mask in zip(names, hit)}
    return AuditCheck(
        claim=claim, instance=instance, verdict=Verdict.FAILS, counterexample=counterexample, detail=detail
    )


def check_ef_axioms(sample: ProximityRelationSample) -> AuditReport:
    """Symmetry, nonemptiness, overlap, union, singleton identity and the separation axiom, each exhaustively."""
    relation = sample.relation
    size = sample.subset_count
    masks = np.arange(size, dtype=np.int64)
    unions = masks[:, None] | masks[None, :]
    checks = []

    checks.append(_check(sample, "proximity.symmetry", _first(relation != relation.T), ("A", "B")))

    empty_involved = np.zeros_like(relation)
    empty_involved[0, :] = True
    empty_involved[:, 0] = True
    checks.append(_check(sample, "proximity.nonempty", _first(relation & empty_involved), ("A", "B")))

    overlapping = (masks[:, None] & masks[None, :]) != 0
    checks.append(_check(sample, "proximity.overlap", _first(overlapping & ~relation), ("A", "B")))

    # relation[A, B|C] against relation[A, B] or relation[A, C], for every triple.
    lhs = relation[:, unions]
    rhs = relation[:, :, None] | relation[:, None, :]
    checks.append(_check(sample, "proximity.union", _first(lhs != rhs), ("A", "B", "C")))

    singletons = np.array([1 << i for i in range(sample.space.size)], dtype=np.int64)
    singleton_near = relation[np.ix_(singletons, singletons)]
    bad = singleton_near != np.eye(len(singletons), dtype=bool)
    hit = _first(bad)
    if hit is not None:
        hit = (int(singletons[hit[0]]), int(singletons[hit[1]]))
    checks.append(_check(sample, "proximity.singleton_identity", hit, ("A", "B")))

    # far[A, E] and far[E^c, B] for some E, whenever A is far from B.
    far = ~relation
    complements = (size - 1) ^ masks
    separated = (far.astype(np.int32) @ far[complements, :].astype(np.int32)) > 0
    checks.append(_check(sample, "proximity.separation", _first(far & ~separated), ("A", "B")))

    failing = [c.claim for c in checks if c.verdict == Verdict.FAILS]
    logger.info(f"Proximity axioms on {sample.name}: {len(checks) - len(failing)} hold, failing: {failing}")
    return AuditReport(checks=checks, instance_count=1)


def check_lodato_axiom(sample: ProximityRelationSample) -> AuditReport:
    """A near B and every {b} near C (b in B) implies A near C, over all subset triples."""
    relation = sample.relation
    size = sample.subset_count
    masks = np.arange(size, dtype=np.int64)

    # all_points_near[B, C]: every singleton of B is near C (vacuously true for B = ∅).
    all_points_near = np.ones_like(relation)
    for i in range(sample.space.size):
        contains_i = ((masks >> i) & 1).astype(bool)
        all_points_near[contains_i] &= relation[1 << i][None, :]

    reachable = (relation.astype(np.int32) @ all_points_near.astype(np.int32)) > 0
    hit = _first(reachable & ~relation)
    if hit is not None:
        a, c = hit
        b = int(np.argmax(relation[a] & all_points_near[:, c]))
        hit = (a, b, c)
    return AuditReport(checks=[_check(sample, "proximity.lodato", hit, ("A", "B", "C"))], instance_count=1)
