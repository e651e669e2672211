from proxalg.audit.approx_theorems import check_approx_theorems
from proxalg.audit.claims import ClaimContext, evaluate, replay
from proxalg.audit.group_theorems import audit_group, check_group_theorems, check_proposition
from proxalg.audit.proximity import ProximityRelationSample, check_ef_axioms, check_lodato_axiom
from proxalg.audit.sampling import random_space

__all__ = [
    "ClaimContext",
    "ProximityRelationSample",
    "audit_group",
    "check_approx_theorems",
    "check_ef_axioms",
    "check_group_theorems",
    "check_lodato_axiom",
    "check_proposition",
    "evaluate",
    "random_space",
    "replay",
]
