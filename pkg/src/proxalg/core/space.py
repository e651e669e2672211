"""
Immutable described spaces: a rectangular grid of non-abstract points, each
carrying an integer feature vector, plus regions (finite point sets) over them.

The value types are frozen pydantic models. Type errors surface as members of
the SpaceError family rather than as pydantic's ValidationError.
"""
from __future__ import annotations

import logging
from typing import Iterable, Iterator, Literal, Sequence

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, PrivateAttr, ValidationError

from proxalg.exceptions import (
    DuplicatePoint,
    InvalidDescription,
    LengthMismatch,
    MissingPoint,
    PointOutOfRange,
    SpaceError,
    SpaceMismatch,
)

logger = logging.getLogger(__name__)


def _reasons(error: ValidationError) -> str:
    return "; ".join(f"{'.'.join(str(part) for part in e['loc'])}: {e['msg']}" for e in error.errors())


class PointId(BaseModel):
    """A grid coordinate naming one pixel. Ordering is row-major."""
    model_config = ConfigDict(frozen=True)

    row: NonNegativeInt = Field(..., description="Row index, in the space's own index base.")
    col: NonNegativeInt = Field(..., description="Column index, in the space's own index base.")

    def __init__(self, row: int, col: int):
        try:
            super().__init__(row=row, col=col)
        except ValidationError as e:
            raise PointOutOfRange(f"Invalid point ({row!r},{col!r}): {_reasons(e)}") from e

    def _key(self) -> tuple[int, int]:
        return self.row, self.col

    def __lt__(self, other: PointId) -> bool:
        return self._key() < other._key()

    def __le__(self, other: PointId) -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: PointId) -> bool:
        return self._key() > other._key()

    def __ge__(self, other: PointId) -> bool:
        return self._key() >= other._key()


class FeatureVector(BaseModel):
    """The description Φ(x) of a point: one integer per probe function."""
    model_config = ConfigDict(frozen=True)

    components: tuple[int, ...] = Field(..., min_length=1, description="Probe values, in probe order.")

    def __init__(self, components: Iterable[int]):
        components = tuple(components)
        try:
            super().__init__(components=components)
        except ValidationError as e:
            if any(err["type"] == "too_short" for err in e.errors()):
                raise LengthMismatch("A feature vector needs at least one component") from e
            raise InvalidDescription(f"Invalid feature vector {components!r}: {_reasons(e)}") from e

    @classmethod
    def of(cls, *values: int) -> FeatureVector:
        return cls(values)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __str__(self) -> str:
        return "(" + ",".join(str(value) for value in self.components) + ")"


class DescribedSpace(BaseModel):
    """
    A finite grid of points with a total description map (the pair (X, Φ)).

    Vectors are stored row-major. Indices are kept verbatim from the input:
    with index_base=1 the top-left point is (1,1).
    """
    model_config = ConfigDict(frozen=True)

    rows: PositiveInt
    cols: PositiveInt
    probe_count: PositiveInt = Field(..., description="Number of probe functions, i.e. components per vector.")
    vectors: tuple[FeatureVector, ...] = Field(..., description="One description per point, row-major.")
    index_base: Literal[0, 1] = 0

    _class_of: tuple[int, ...] = PrivateAttr()
    _classes: tuple[tuple[int, ...], ...] = PrivateAttr()

    def __init__(self, **data):
        try:
            super().__init__(**data)
        except ValidationError as e:
            raise SpaceError(f"Invalid space: {_reasons(e)}") from e

    def model_post_init(self, __context) -> None:
        if len(self.vectors) != self.rows * self.cols:
            raise MissingPoint(f"Expected {self.rows * self.cols} descriptions, got {len(self.vectors)}")

        # Closure classes, numbered in order of first appearance.
        lookup: dict[FeatureVector, int] = {}
        class_of = []
        members: list[list[int]] = []
        for index, vector in enumerate(self.vectors):
            if len(vector) != self.probe_count:
                raise LengthMismatch(
                    f"Point {self.label(self.point_at(index))} has {len(vector)} components, expected {self.probe_count}"
                )
            if vector not in lookup:
                lookup[vector] = len(members)
                members.append([])
            class_of.append(lookup[vector])
            members[lookup[vector]].append(index)

        self._class_of = tuple(class_of)
        self._classes = tuple(tuple(m) for m in members)

    @property
    def size(self) -> int:
        return self.rows * self.cols

    @property
    def class_count(self) -> int:
        return len(self._classes)

    def contains(self, point: PointId) -> bool:
        base = self.index_base
        return base <= point.row < base + self.rows and base <= point.col < base + self.cols

    def index_of(self, point: PointId) -> int:
        if not self.contains(point):
            raise PointOutOfRange(f"Point {self.label(point)} is outside the {self.rows}x{self.cols} grid")
        return (point.row - self.index_base) * self.cols + (point.col - self.index_base)

    def point_at(self, index: int) -> PointId:
        if not 0 <= index < self.size:
            raise PointOutOfRange(f"Point index {index} is outside the {self.rows}x{self.cols} grid")
        row, col = divmod(index, self.cols)
        return PointId(row + self.index_base, col + self.index_base)

    def points(self) -> tuple[PointId, ...]:
        return tuple(self.point_at(index) for index in range(self.size))

    def describe(self, point: PointId) -> FeatureVector:
        return self.vectors[self.index_of(point)]

    def class_of(self, index: int) -> int:
        return self._class_of[index]

    def class_members(self, class_id: int) -> tuple[int, ...]:
        return self._classes[class_id]

    @staticmethod
    def label(point: PointId) -> str:
        if point.row < 10 and point.col < 10:
            return f"x{point.row}{point.col}"
        return f"x{point.row},{point.col}"


class Region(BaseModel):
    """A finite set of points of one space. Iteration is row-major."""
    model_config = ConfigDict(frozen=True)

    space: DescribedSpace
    members: frozenset[PointId] = frozenset()

    def __init__(self, space: DescribedSpace, members: Iterable[PointId] = frozenset()):
        try:
            super().__init__(space=space, members=frozenset(members))
        except ValidationError as e:
            raise SpaceError(f"Invalid region: {_reasons(e)}") from e

    def model_post_init(self, __context) -> None:
        for point in self.members:
            if not self.space.contains(point):
                raise PointOutOfRange(f"Region member {self.space.label(point)} is not a point of the space")

    @classmethod
    def of(cls, space: DescribedSpace, points: Iterable[PointId]) -> Region:
        return cls(space, points)

    @classmethod
    def from_indices(cls, space: DescribedSpace, indices: Iterable[int]) -> Region:
        return cls(space, (space.point_at(i) for i in indices))

    @classmethod
    def whole(cls, space: DescribedSpace) -> Region:
        return cls(space, space.points())

    @classmethod
    def empty(cls, space: DescribedSpace) -> Region:
        return cls(space)

    def __iter__(self) -> Iterator[PointId]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, point: object) -> bool:
        return point in self.members

    def indices(self) -> frozenset[int]:
        return frozenset(self.space.index_of(p) for p in self.members)

    def labels(self) -> list[str]:
        return [self.space.label(p) for p in self]

    def _check_space(self, other: Region):
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatch("Regions belong to different spaces")

    def union(self, other: Region) -> Region:
        self._check_space(other)
        return Region(self.space, self.members | other.members)

    def intersection(self, other: Region) -> Region:
        self._check_space(other)
        return Region(self.space, self.members & other.members)

    def difference(self, other: Region) -> Region:
        self._check_space(other)
        return Region(self.space, self.members - other.members)

    def issubset(self, other: Region) -> bool:
        self._check_space(other)
        return self.members <= other.members

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


def make_space(
    rows: int,
    cols: int,
    probe_count: int,
    entries: Iterable[tuple[PointId, FeatureVector | Sequence[int]]],
    index_base: int = 0,
) -> DescribedSpace:
    """
    Builds a space from (point, vector) entries that must cover the grid exactly once.

    Raises:
        PointOutOfRange: an entry lies outside the grid.
        DuplicatePoint: a cell is described twice.
        LengthMismatch: a vector does not have probe_count components.
        MissingPoint: a cell has no entry.
    """
    if rows < 1 or cols < 1 or probe_count < 1:
        raise SpaceError(f"rows, cols and probe_count must be positive, got {rows}, {cols}, {probe_count}")

    slots: list[FeatureVector | None] = [None] * (rows * cols)
    for point, vector in entries:
        if not isinstance(vector, FeatureVector):
            vector = FeatureVector(tuple(vector))
        row, col = point.row - index_base, point.col - index_base
        if not (0 <= row < rows and 0 <= col < cols):
            raise PointOutOfRange(f"Entry {DescribedSpace.label(point)} is outside the {rows}x{cols} grid")
        if len(vector) != probe_count:
            raise LengthMismatch(
                f"Entry {DescribedSpace.label(point)} has {len(vector)} components, expected {probe_count}"
            )
        index = row * cols + col
        if slots[index] is not None:
            raise DuplicatePoint(f"Entry {DescribedSpace.label(point)} appears more than once")
        slots[index] = vector

    for index, vector in enumerate(slots):
        if vector is None:
            row, col = divmod(index, cols)
            missing = PointId(row + index_base, col + index_base)
            raise MissingPoint(f"No description for {DescribedSpace.label(missing)}")

    space = DescribedSpace(
        rows=rows, cols=cols, probe_count=probe_count, vectors=tuple(slots), index_base=index_base
    )
    logger.info(f"Built {rows}x{cols} space with {space.class_count} distinct descriptions.")
    return space


def describe(space: DescribedSpace, point: PointId) -> FeatureVector:
    """Returns Φ(point). Raises PointOutOfRange for points off the grid."""
    return space.describe(point)


def description_classes(space: DescribedSpace) -> list[Region]:
    """The partition of the space into closure classes, ordered by first member."""
    return [Region.from_indices(space, space.class_members(c)) for c in range(space.class_count)]
