"""
Builds ReportDocuments from computed results. Entries are inserted in a fixed
order so that identical inputs always serialize to identical bytes.
"""
import hashlib
from typing import Iterable

from proxalg.algebra import BinaryOp
from proxalg.approx import ApproximationResult, DescriptionSet, accuracy
from proxalg.core.space import DescribedSpace, PointId, Region
from proxalg.models.audit import AuditReport
from proxalg.models.document import ReportDocument
from proxalg.models.structures import StructureLevel, StructureReport
from proxalg.services.spacefile import serialize_space


def labels(space: DescribedSpace, points: Iterable[PointId]) -> str:
    return " ".join(space.label(p) for p in points)


def space_digest(space: DescribedSpace) -> str:
    return hashlib.sha256(serialize_space(space).encode("utf-8")).hexdigest()


def space_entries(space: DescribedSpace) -> dict[str, str]:
    return {
        "space.rows": str(space.rows),
        "space.cols": str(space.cols),
        "space.probes": str(space.probe_count),
        "space.digest": space_digest(space),
    }


def pixel_entries(space: DescribedSpace) -> dict[str, str]:
    """One entry per point, e.g. space.x21=0 102 153."""
    return {
        f"space.{space.label(p)}": " ".join(str(v) for v in space.describe(p))
        for p in space.points()
    }


def description_entry(description: DescriptionSet) -> str:
    return ";".join(" ".join(str(v) for v in vector) for vector in description)


def approximation_entries(region: Region, description: DescriptionSet, result: ApproximationResult) -> dict[str, str]:
    space = region.space
    return {
        "region": labels(space, region),
        "description": description_entry(description),
        "lower": labels(space, result.lower),
        "lower.count": str(len(result.lower)),
        "upper": labels(space, result.upper),
        "upper.count": str(len(result.upper)),
        "boundary": labels(space, result.boundary),
        "boundary.count": str(len(result.boundary)),
        "accuracy": f"{accuracy(region):.4f}",
    }


def inverse_pairs(space: DescribedSpace, report: StructureReport, arrow: str = "->") -> str:
    return " ".join(
        f"{space.label(pair.element)}{arrow}{space.label(pair.inverse)}" for pair in report.inverse_map
    )


def structure_entries(space: DescribedSpace, op: BinaryOp, region: Region, report: StructureReport) -> dict[str, str]:
    entries = {
        "op": op.name,
        "region": labels(space, region),
        "level": report.level.title,
        "commutative": str(report.commutative).lower(),
        "identities": labels(space, report.identities),
        "group_identity": space.label(report.group_identity) if report.group_identity else "",
        "inverses": inverse_pairs(space, report),
        "failed_axiom": report.failed_axiom.value if report.failed_axiom else "",
        "witnesses.count": str(len(report.witnesses)),
    }
    for number, witness in enumerate(report.witnesses, start=1):
        line = f"{witness.axiom.value} {labels(space, witness.inputs)}"
        if witness.outputs:
            line += f" -> {labels(space, witness.outputs)}"
        entries[f"witness.{number}"] = line
    return entries


def structure_summary(space: DescribedSpace, report: StructureReport) -> str:
    """E.g. 'commutative approximately group, identity x00, inverses x23<->x32'."""
    if report.level == StructureLevel.NOT_GROUPOID:
        return f"not an approximately groupoid: {len(report.witnesses)} witnesses"
    words = "commutative " if report.commutative else ""
    text = f"{words}approximately {report.level.title}"
    if report.group_identity is not None:
        text += f", identity {space.label(report.group_identity)}"
    elif len(report.identities) == 1:
        text += f", identity {space.label(report.identities[0])}"
    elif report.identities:
        text += f", identities {labels(space, report.identities)}"
    if report.level == StructureLevel.GROUP:
        shown = []
        for pair in report.inverse_map:
            # x<->y once per unordered pair; self-inverse elements appear as x<->x
            if pair.inverse < pair.element and report.inverse_of(pair.inverse) == pair.element:
                continue
            shown.append(f"{space.label(pair.element)}<->{space.label(pair.inverse)}")
        text += f", inverses {' '.join(shown)}"
    return text


def audit_entries(space: DescribedSpace, report: AuditReport) -> dict[str, str]:
    entries = {
        "seed": "" if report.seed is None else str(report.seed),
        "prng": report.prng,
        "instances": str(report.instance_count),
        "checks": str(len(report.checks)),
        "failures": str(len(report.failures())),
    }
    for number, notice in enumerate(report.notices, start=1):
        entries[f"notice.{number}"] = notice
    width = len(str(len(report.checks)))
    for number, check in enumerate(report.checks, start=1):
        key = f"check.{number:0{width}d}"
        entries[key] = f"{check.claim} {check.verdict.value}"
        entries[f"{key}.instance"] = check.instance
        if check.detail:
            entries[f"{key}.detail"] = check.detail
        if check.counterexample is not None:
            entries[f"{key}.counterexample"] = "; ".join(
                f"{name}: {labels(space, points)}" for name, points in check.counterexample.items()
            )
    return entries


def approx_document(region: Region, description: DescriptionSet, result: ApproximationResult) -> ReportDocument:
    space = region.space
    entries = space_entries(space) | approximation_entries(region, description, result)
    summary = [
        f"Q(A) = {description}",
        f"lower approximation: {len(result.lower)} points",
        f"upper approximation: {len(result.upper)} points",
        f"boundary: {len(result.boundary)} points",
    ]
    return ReportDocument(command="approx", summary=summary, entries=entries)


def classify_document(
    space: DescribedSpace, op: BinaryOp, region: Region, report: StructureReport
) -> ReportDocument:
    entries = space_entries(space) | structure_entries(space, op, region, report)
    exit_code = 1 if report.level == StructureLevel.NOT_GROUPOID else 0
    return ReportDocument(
        command="classify", summary=[structure_summary(space, report)], entries=entries, exit_code=exit_code
    )


def audit_document(space: DescribedSpace, report: AuditReport) -> ReportDocument:
    failures = report.failures()
    summary = list(report.notices)
    summary.append(
        f"{len(report.checks) - len(failures)} of {len(report.checks)} checks hold "
        f"over {report.instance_count} instances (seed {report.seed}, {report.prng})"
    )
    summary += [f"FAILS {check.claim} on {check.instance}" for check in failures]
    return ReportDocument(
        command="audit",
        summary=summary,
        entries=space_entries(space) | audit_entries(space, report),
        exit_code=0 if report.all_hold else 1,
    )
