from enum import Enum
from typing import Optional, List, Dict

from pydantic import BaseModel, Field, model_validator

from proxalg.core.space import PointId


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    SKIPPED = "skipped"


class AuditCheck(BaseModel):
    claim: str = Field(..., description="Identifier of the audited claim, e.g. 'upper.union'.")
    instance: str = Field(..., description="What the claim was evaluated on.")
    verdict: Verdict
    counterexample: Optional[Dict[str, List[PointId]]] = Field(
        None, description="Named regions (A, B, C, E, H, ...) that replay the failure."
    )
    detail: str = ""

    @model_validator(mode="after")
    def _failures_carry_counterexample(self):
        if self.verdict == Verdict.FAILS and self.counterexample is None:
            raise ValueError(f"Failing check '{self.claim}' has no counterexample")
        return self


class AuditReport(BaseModel):
    checks: List[AuditCheck] = Field(default_factory=list)
    seed: Optional[int] = Field(None, description="Seed of the generator that drew the instances, if any.")
    prng: str = "numpy.PCG64"
    instance_count: int = 0
    notices: List[str] = Field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(check.verdict != Verdict.FAILS for check in self.checks)

    def failures(self) -> List[AuditCheck]:
        return [check for check in self.checks if check.verdict == Verdict.FAILS]

    def verdict_of(self, claim: str) -> Optional[Verdict]:
        """Combined verdict of every check for a claim: fails if any instance fails."""
        verdicts = [check.verdict for check in self.checks if check.claim == claim]
        if not verdicts:
            return None
        if Verdict.FAILS in verdicts:
            return Verdict.FAILS
        if Verdict.HOLDS in verdicts:
            return Verdict.HOLDS
        return Verdict.SKIPPED

    def merge(self, other: "AuditReport") -> "AuditReport":
        return AuditReport(
            checks=self.checks + other.checks,
            seed=self.seed if self.seed is not None else other.seed,
            prng=self.prng,
            instance_count=self.instance_count + other.instance_count,
            notices=self.notices + other.notices,
        )
