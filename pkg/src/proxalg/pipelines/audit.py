from proxalg.pipelines.processors import Processor
from proxalg.pipelines.pipelines import Pipeline
from proxalg.audit.approx_theorems import check_approx_theorems
from proxalg.audit.group_theorems import check_group_theorems
from proxalg.audit.proximity import ProximityRelationSample, check_ef_axioms, check_lodato_axiom
from proxalg.audit.sampling import PRNG_NAME
from proxalg.core.config import Settings
from proxalg.exceptions import AuditError, ProcessorError
from proxalg.models.audit import AuditReport
import logging

logger = logging.getLogger(__name__)

# Steps write their partial reports under these keys; the assembler merges them in this order.
REPORT_KEYS = ("proximity_report", "approx_report", "group_report")


class ProximityAxiomStep(Processor):
    """
    Checks the proximity axioms for the descriptive proximity, exhaustively
    over all subsets. Skipped with a notice on spaces above max_points.
    """
    def run(self, data: dict, context: dict) -> dict:
        space = data["space"]
        settings: Settings = context["settings"]
        if space.size > settings.max_points:
            notice = (
                f"Proximity axioms not audited: {space.size} points exceed max_points={settings.max_points}."
            )
            logger.warning(notice)
            return {"proximity_report": AuditReport(notices=[notice])}

        logger.info(f"Auditing proximity axioms on {space.rows}x{space.cols} space...")
        try:
            sample = ProximityRelationSample.descriptive(space, settings.max_points)
            report = check_ef_axioms(sample).merge(check_lodato_axiom(sample))
        except AuditError as e:
            logger.error(f"Proximity audit failed: {e}", exc_info=True)
            raise ProcessorError(f"Proximity audit failed: {e}") from e
        return {"proximity_report": report}


class ApproxTheoremStep(Processor):
    """
    Audits the approximation properties and the set-description lemma.
    """
    def run(self, data: dict, context: dict) -> dict:
        space = data["space"]
        try:
            report = check_approx_theorems(
                space, context["trials"], context["seed"], context.get("mode"), context["settings"]
            )
        except AuditError as e:
            logger.error(f"Approximation audit failed: {e}", exc_info=True)
            raise ProcessorError(f"Approximation audit failed: {e}") from e
        return {"approx_report": report}


class GroupTheoremStep(Processor):
    """
    Audits the group and subgroup claims when an operation is given, on the
    given region or on approximately groups found in the space.
    """
    def run(self, data: dict, context: dict) -> dict:
        op = data.get("op")
        if op is None:
            logger.info("No operation given; skipping group claims.")
            return {"group_report": AuditReport()}

        space = data["space"]
        group = data.get("region")
        try:
            report = check_group_theorems(
                space,
                op,
                context["trials"],
                context["seed"],
                groups=[group] if group is not None else None,
                settings=context["settings"],
            )
        except AuditError as e:
            if group is None:
                logger.error(f"Group audit failed: {e}", exc_info=True)
                raise ProcessorError(f"Group audit failed: {e}") from e
            notice = f"Group claims not audited: {e}."
            logger.warning(notice)
            report = AuditReport(notices=[notice])
        return {"group_report": report}


class AuditAssembler(Processor):
    """
    Merges the partial reports into one AuditReport.
    """
    def run(self, data: dict, context: dict) -> AuditReport:
        report = AuditReport(seed=context["seed"], prng=PRNG_NAME)
        for key in REPORT_KEYS:
            if key in data:
                report = report.merge(data[key])
        logger.info(f"Audit assembled: {len(report.checks)} checks, {len(report.failures())} failing.")
        return report


def create_audit_pipeline() -> Pipeline:
    return Pipeline([
        # Independent audits, merged in a fixed order.
        [
            ProximityAxiomStep(),
            ApproxTheoremStep(),
            GroupTheoremStep(),
        ],
        AuditAssembler(),
    ])
