"""
Binary operations on described spaces and the descriptive approximately
hierarchy: groupoid, semigroup, monoid, group.

A region G climbs the hierarchy when its products land in Φ*G rather than
in G itself. Operations are total on the whole space, so products of points
of Φ*G \\ G are always defined.
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Mapping

from proxalg.approx import set_description, upper_approximation
from proxalg.core.space import DescribedSpace, PointId, Region
from proxalg.exceptions import GNotGroup, NotSubset, OpDomainError, OperationError, PointOutOfRange
from proxalg.models.structures import (
    Axiom,
    InverseCandidates,
    InversePair,
    StructureLevel,
    StructureReport,
    SubgroupReport,
    Witness,
)

logger = logging.getLogger(__name__)


class BinaryOp(ABC):
    """A total binary operation on the points of a space."""

    @property
    @abstractmethod
    def name(self) -> str:
        ...

    @abstractmethod
    def _compute(self, space: DescribedSpace, x: PointId, y: PointId) -> PointId:
        ...

    def apply(self, space: DescribedSpace, x: PointId, y: PointId) -> PointId:
        result = self._compute(space, x, y)
        if not space.contains(result):
            raise OpDomainError(
                f"{self.name}: {space.label(x)}·{space.label(y)} = {space.label(result)} is not a point of the space",
                pair=(x, y),
            )
        return result

    def validate(self, space: DescribedSpace):
        """Raises OpDomainError unless the operation is total on the space."""
        points = space.points()
        for x, y in product(points, repeat=2):
            self.apply(space, x, y)


@dataclass(frozen=True)
class MinIndex(BinaryOp):
    """(x_ij, x_kl) ↦ x_pr with p = min(i,k), r = min(j,l)."""

    @property
    def name(self) -> str:
        return "min"

    def _compute(self, space, x, y):
        return PointId(min(x.row, y.row), min(x.col, y.col))

    def validate(self, space):
        # Component-wise minimum of grid points is always a grid point.
        return None


@dataclass(frozen=True)
class ModAdd(BinaryOp):
    """(x_ij, x_kl) ↦ x_pr with p = (i+k) mod n, r = (j+l) mod n."""
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise OperationError(f"modadd modulus must be positive, got {self.n}")

    @property
    def name(self) -> str:
        return f"modadd:{self.n}"

    def _compute(self, space, x, y):
        return PointId((x.row + y.row) % self.n, (x.col + y.col) % self.n)

    def validate(self, space):
        if self.n > space.rows or self.n > space.cols:
            raise OpDomainError(f"{self.name} needs at least {self.n} rows and columns, space is {space.rows}x{space.cols}")
        if space.index_base != 0:
            raise OpDomainError(f"{self.name} produces index 0, which a 1-based space does not contain")


@dataclass(frozen=True)
class CayleyTable(BinaryOp):
    """An explicit operation given by its table of products."""
    products: Mapping[tuple[PointId, PointId], PointId] = field(hash=False)
    source: str = "inline"

    @property
    def name(self) -> str:
        return f"table:{self.source}"

    def _compute(self, space, x, y):
        try:
            return self.products[(x, y)]
        except KeyError:
            raise OpDomainError(
                f"{self.name}: no entry for {space.label(x)}·{space.label(y)}", pair=(x, y)
            ) from None


def apply(op: BinaryOp, space: DescribedSpace, x: PointId, y: PointId) -> PointId:
    for point in (x, y):
        if not space.contains(point):
            raise PointOutOfRange(f"Operand {space.label(point)} is not a point of the space")
    return op.apply(space, x, y)


class _WitnessCollector:
    def __init__(self, limit: int | None):
        self.limit = limit or None
        self.items: list[Witness] = []
        self.failed = False

    def add(self, witness: Witness):
        self.failed = True
        if self.limit is None or len(self.items) < self.limit:
            self.items.append(witness)

    @property
    def full(self) -> bool:
        return self.limit is not None and len(self.items) >= self.limit


def _require_nonempty(region: Region):
    if not region:
        raise OperationError("The region must be nonempty")


def check_ag1_closure(
    space: DescribedSpace, op: BinaryOp, region: Region, max_witnesses: int | None = None
) -> tuple[bool, list[Witness]]:
    """For all x, y in G: x·y ∈ Φ*G."""
    _require_nonempty(region)
    upper = upper_approximation(region)
    collector = _WitnessCollector(max_witnesses)
    for x, y in product(region, repeat=2):
        xy = op.apply(space, x, y)
        if xy not in upper:
            collector.add(Witness(axiom=Axiom.CLOSURE, inputs=[x, y], outputs=[xy]))
            if collector.full:
                break
    return not collector.failed, collector.items


def check_ag2_associativity(
    space: DescribedSpace, op: BinaryOp, region: Region, max_witnesses: int | None = None
) -> tuple[bool, list[Witness]]:
    """For all x, y, z in G: (x·y)·z = x·(y·z)."""
    _require_nonempty(region)
    members = list(region)
    table = {(x, y): op.apply(space, x, y) for x, y in product(members, repeat=2)}
    collector = _WitnessCollector(max_witnesses)
    for x, y, z in product(members, repeat=3):
        left = op.apply(space, table[(x, y)], z)
        right = op.apply(space, x, table[(y, z)])
        if left != right:
            collector.add(Witness(axiom=Axiom.ASSOCIATIVITY, inputs=[x, y, z], outputs=[left, right]))
            if collector.full:
                break
    return not collector.failed, collector.items


def find_identities(space: DescribedSpace, op: BinaryOp, region: Region) -> list[PointId]:
    """Every e ∈ Φ*G with x·e = e·x = x for all x ∈ G, row-major."""
    _require_nonempty(region)
    return [
        e for e in upper_approximation(region)
        if all(op.apply(space, x, e) == x and op.apply(space, e, x) == x for x in region)
    ]


def inverse_candidates(
    space: DescribedSpace, op: BinaryOp, region: Region, identity: PointId
) -> dict[PointId, list[PointId]]:
    """For each x ∈ G, every y ∈ G with x·y = y·x = identity."""
    if identity not in upper_approximation(region):
        raise OperationError(f"{space.label(identity)} is not in the upper approximation of the region")
    return {
        x: [y for y in region if op.apply(space, x, y) == identity and op.apply(space, y, x) == identity]
        for x in region
    }


def find_inverses(
    space: DescribedSpace, op: BinaryOp, region: Region, identity: PointId
) -> dict[PointId, PointId]:
    """First inverse in row-major order for each member that has one; members without one are absent."""
    return {
        x: candidates[0]
        for x, candidates in inverse_candidates(space, op, region, identity).items()
        if candidates
    }


def check_commutative(
    space: DescribedSpace, op: BinaryOp, region: Region, max_witnesses: int | None = None
) -> tuple[bool, list[Witness]]:
    _require_nonempty(region)
    collector = _WitnessCollector(max_witnesses)
    for x, y in combinations(region, 2):
        xy, yx = op.apply(space, x, y), op.apply(space, y, x)
        if xy != yx:
            collector.add(Witness(axiom=Axiom.COMMUTATIVITY, inputs=[x, y], outputs=[xy, yx]))
            if collector.full:
                break
    return not collector.failed, collector.items


def is_closed(space: DescribedSpace, op: BinaryOp, region: Region) -> bool:
    """Ordinary closure: x·y ∈ region for all x, y in the region."""
    return all(op.apply(space, x, y) in region for x, y in product(region, repeat=2))


def cayley_table(space: DescribedSpace, op: BinaryOp, region: Region) -> list[list[PointId]]:
    members = list(region)
    return [[op.apply(space, x, y) for y in members] for x in members]


def classify(
    space: DescribedSpace, op: BinaryOp, region: Region, max_witnesses: int | None = None
) -> StructureReport:
    """
    Climbs the hierarchy one axiom at a time and stops at the first failure.

    Args:
        space: The described space.
        op: A binary operation total on the space.
        region: The nonempty region G.
        max_witnesses: Cap on witnesses per axiom; None or 0 keeps every witness.

    Returns:
        A StructureReport. When several identities exist, inverses are sought
        against each in row-major order until one yields a total inverse map.
    """
    _require_nonempty(region)
    commutative, witnesses = check_commutative(space, op, region, max_witnesses)
    level = StructureLevel.NOT_GROUPOID
    failed_axiom = None
    identities: list[PointId] = []
    group_identity = None
    inverse_map: dict[PointId, PointId] = {}
    candidates_by_element: dict[PointId, list[PointId]] = {}

    closed, closure_witnesses = check_ag1_closure(space, op, region, max_witnesses)
    witnesses = closure_witnesses + witnesses
    if not closed:
        failed_axiom = Axiom.CLOSURE
    else:
        level = StructureLevel.GROUPOID
        associative, assoc_witnesses = check_ag2_associativity(space, op, region, max_witnesses)
        witnesses += assoc_witnesses
        if not associative:
            failed_axiom = Axiom.ASSOCIATIVITY
        else:
            level = StructureLevel.SEMIGROUP
            identities = find_identities(space, op, region)
            if not identities:
                failed_axiom = Axiom.IDENTITY
            else:
                level = StructureLevel.MONOID
                for identity in identities:
                    candidates = inverse_candidates(space, op, region, identity)
                    found = {x: ys[0] for x, ys in candidates.items() if ys}
                    if identity == identities[0]:
                        inverse_map, candidates_by_element = found, candidates
                    if len(found) == len(region):
                        level = StructureLevel.GROUP
                        group_identity = identity
                        inverse_map, candidates_by_element = found, candidates
                        break
                if level != StructureLevel.GROUP:
                    failed_axiom = Axiom.INVERSE
                    collector = _WitnessCollector(max_witnesses)
                    members = list(region)
                    for identity in identities:
                        for x in members:
                            products = [op.apply(space, x, y) for y in members]
                            if not any(
                                xy == identity and op.apply(space, y, x) == identity
                                for y, xy in zip(members, products)
                            ):
                                collector.add(Witness(axiom=Axiom.INVERSE, inputs=[x, identity], outputs=products))
                    witnesses += collector.items

    if len(identities) > 1:
        logger.info(f"Region {region} has {len(identities)} approximately identity elements.")

    return StructureReport(
        level=level,
        commutative=commutative,
        identities=identities,
        multiple_identities=len(identities) > 1,
        group_identity=group_identity,
        inverse_map=[InversePair(element=x, inverse=y) for x, y in sorted(inverse_map.items())],
        inverse_candidates=[
            InverseCandidates(element=x, candidates=ys) for x, ys in sorted(candidates_by_element.items())
        ],
        failed_axiom=failed_axiom,
        witnesses=witnesses,
    )


def is_subgroup(
    space: DescribedSpace,
    op: BinaryOp,
    group: Region,
    candidate: Region,
    group_report: StructureReport | None = None,
) -> tuple[bool, SubgroupReport]:
    """
    H is a subgroup of G when H is itself a descriptive approximately group
    under the same operation. The report also carries the closure and inverse
    conditions of the inverse-closure criterion, evaluated but never used as a shortcut.

    Raises:
        NotSubset: H is empty or not contained in G.
        GNotGroup: G does not classify as a group.
    """
    if not candidate or not candidate.issubset(group):
        raise NotSubset(f"{candidate} is not a nonempty subset of {group}")
    group_report = group_report or classify(space, op, group)
    if group_report.level != StructureLevel.GROUP:
        raise GNotGroup(f"{group} classifies as {group_report.level.title}, not a group")

    report = classify(space, op, candidate)
    group_inverses = group_report.inverses()
    result = SubgroupReport(
        is_subgroup=report.level == StructureLevel.GROUP,
        report=report,
        upper_closed=is_closed(space, op, upper_approximation(candidate)),
        inverses_in_subset=all(group_inverses[x] in candidate for x in candidate),
    )
    return result.is_subgroup, result


def same_description(region_a: Region, region_b: Region) -> bool:
    """Q(H) = Q(G) as sets of descriptions."""
    return set_description(region_a).as_set() == set_description(region_b).as_set()
