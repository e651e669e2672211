from enum import Enum, IntEnum
from typing import Optional, List

from pydantic import BaseModel, Field

from proxalg.core.space import PointId


class StructureLevel(IntEnum):
    NOT_GROUPOID = 0
    GROUPOID = 1
    SEMIGROUP = 2
    MONOID = 3
    GROUP = 4

    @property
    def title(self) -> str:
        return self.name.lower().replace("_", " ")


class Axiom(str, Enum):
    CLOSURE = "closure"
    ASSOCIATIVITY = "associativity"
    IDENTITY = "identity"
    INVERSE = "inverse"
    COMMUTATIVITY = "commutativity"


class Witness(BaseModel):
    axiom: Axiom = Field(..., description="The axiom this witness violates.")
    inputs: List[PointId] = Field(..., description="Operands that expose the violation.")
    outputs: List[PointId] = Field(
        default_factory=list,
        description="Offending products, in evaluation order. An inverse witness (x, e) lists x·y for every y in the region.",
    )


class InversePair(BaseModel):
    element: PointId
    inverse: PointId


class InverseCandidates(BaseModel):
    element: PointId
    candidates: List[PointId] = Field(default_factory=list)


class StructureReport(BaseModel):
    level: StructureLevel = Field(..., description="Highest rung of the hierarchy whose axioms all pass.")
    commutative: bool = Field(..., description="Whether every pair of members commutes.")
    identities: List[PointId] = Field(default_factory=list, description="All approximately identity elements, row-major.")
    multiple_identities: bool = False
    group_identity: Optional[PointId] = Field(None, description="The identity against which every member has an inverse.")
    inverse_map: List[InversePair] = Field(default_factory=list, description="First inverse per member, row-major.")
    inverse_candidates: List[InverseCandidates] = Field(default_factory=list)
    failed_axiom: Optional[Axiom] = Field(None, description="First axiom that stopped the climb up the hierarchy.")
    witnesses: List[Witness] = Field(default_factory=list)

    def inverse_of(self, point: PointId) -> Optional[PointId]:
        for pair in self.inverse_map:
            if pair.element == point:
                return pair.inverse
        return None

    def inverses(self) -> dict[PointId, PointId]:
        return {pair.element: pair.inverse for pair in self.inverse_map}


class SubgroupReport(BaseModel):
    is_subgroup: bool
    report: StructureReport = Field(..., description="Classification of the candidate under the group's operation.")
    upper_closed: bool = Field(..., description="Whether the candidate's upper approximation is closed under the operation.")
    inverses_in_subset: bool = Field(..., description="Whether every candidate member's group inverse lies in the candidate.")
