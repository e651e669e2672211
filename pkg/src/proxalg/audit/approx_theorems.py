"""
Audit of the approximation properties, the set-description lemma and
self-nearness.

Small spaces are audited exhaustively: every subset becomes a bitmask and the
approximations of all subsets are tabulated once, so each claim is a
vectorised comparison over blocks of region pairs. Larger spaces fall back to
sampled regions evaluated through the public approx operations.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from proxalg.audit.claims import PAIR_CLAIMS, REGION_CLAIMS, ClaimContext, evaluate
from proxalg.audit.proximity import subset_descriptions
from proxalg.audit.sampling import PRNG_NAME, make_rng, random_region, region_from_mask
from proxalg.core.config import Settings
from proxalg.core.space import DescribedSpace
from proxalg.exceptions import AuditError, SpaceTooLarge
from proxalg.models.audit import AuditCheck, AuditReport, Verdict

logger = logging.getLogger(__name__)

AuditMode = Literal["exhaustive", "sampled"]

# Exhaustive tables hold one int64 per subset.
_MAX_TABULATED_POINTS = 20
_BLOCK_ROWS = 64


@dataclass(frozen=True)
class SubsetTables:
    masks: np.ndarray
    descriptions: np.ndarray
    upper: np.ndarray
    lower: np.ndarray
    closure_union: np.ndarray


def tabulate(space: DescribedSpace) -> SubsetTables:
    masks = np.arange(1 << space.size, dtype=np.int64)
    descriptions = subset_descriptions(space)
    class_points = [
        sum(1 << j for j in space.class_members(c)) for c in range(space.class_count)
    ]

    upper = np.zeros_like(masks)
    for c, points in enumerate(class_points):
        upper |= ((descriptions >> c) & 1) * points

    lower = np.zeros_like(masks)
    closure_union = np.zeros_like(masks)
    for i in range(space.size):
        closure = class_points[space.class_of(i)]
        member = ((masks >> i) & 1).astype(bool)
        lower |= np.where(member & ((closure & ~masks) == 0), 1 << i, 0)
        closure_union |= np.where(member, closure, 0)

    return SubsetTables(masks, descriptions, upper, lower, closure_union)


# Vectorised forms of the registered claims: True where the claim holds.
_REGION_VECTORS: dict[str, Callable[[SubsetTables, np.ndarray], np.ndarray]] = {
    "lower.within_region": lambda t, a: (t.lower[a] & ~a) == 0,
    "upper.contains_region": lambda t, a: (a & ~t.upper[a]) == 0,
    "upper.idempotent": lambda t, a: t.upper[t.upper[a]] == t.upper[a],
    "upper.closure_union": lambda t, a: t.upper[a] == t.closure_union[a],
    "nearness.self_member": lambda t, a: (a == 0) | ((t.descriptions[a] & t.descriptions[a]) != 0),
}

_PAIR_VECTORS: dict[str, Callable[[SubsetTables, np.ndarray, np.ndarray], np.ndarray]] = {
    "upper.union": lambda t, a, b: t.upper[a | b] == (t.upper[a] | t.upper[b]),
    "lower.intersection": lambda t, a, b: t.lower[a & b] == (t.lower[a] & t.lower[b]),
    "lower.monotone": lambda t, a, b: ((a & ~b) != 0) | ((t.lower[a] & ~t.lower[b]) == 0),
    "upper.monotone": lambda t, a, b: ((a & ~b) != 0) | ((t.upper[a] & ~t.upper[b]) == 0),
    "lower.union_inclusion": lambda t, a, b: ((t.lower[a] | t.lower[b]) & ~t.lower[a | b]) == 0,
    "upper.intersection_inclusion": lambda t, a, b: (t.upper[a & b] & ~(t.upper[a] & t.upper[b])) == 0,
    "description.union": lambda t, a, b: t.descriptions[a | b] == (t.descriptions[a] | t.descriptions[b]),
    "description.intersection_inclusion": lambda t, a, b: (
        (t.descriptions[a & b] & ~(t.descriptions[a] & t.descriptions[b])) == 0
    ),
    "description.intersection_equality": lambda t, a, b: (
        t.descriptions[a & b] == (t.descriptions[a] & t.descriptions[b])
    ),
}


def _exhaustive(space: DescribedSpace, report: AuditReport) -> AuditReport:
    tables = tabulate(space)
    masks = tables.masks
    size = len(masks)
    instance = f"{space.rows}x{space.cols} space, exhaustive over {size} regions"
    first_failure: dict[str, tuple[int, ...]] = {}

    for name in REGION_CLAIMS:
        bad = np.flatnonzero(~_REGION_VECTORS[name](tables, masks))
        if bad.size:
            first_failure[name] = (int(bad[0]),)

    for start in range(0, size, _BLOCK_ROWS):
        a = masks[start:start + _BLOCK_ROWS, None]
        b = masks[None, :]
        for name in PAIR_CLAIMS:
            if name in first_failure:
                continue
            hits = np.argwhere(~_PAIR_VECTORS[name](tables, a, b))
            if hits.size:
                row, col = hits[0]
                first_failure[name] = (start + int(row), int(col))

    for name in REGION_CLAIMS + PAIR_CLAIMS:
        names = ("A",) if name in REGION_CLAIMS else ("A", "B")
        report.checks.append(_make_check(space, name, instance, first_failure.get(name), names))
    report.instance_count = size * size
    return report


def _make_check(space, name, instance, hit, names) -> AuditCheck:
    if hit is None:
        return AuditCheck(claim=name, instance=instance, verdict=Verdict.HOLDS)
    counterexample = {n: list(region_from_mask(space, mask)) for n, mask in zip(names, hit)}
    return AuditCheck(claim=name, instance=instance, verdict=Verdict.FAILS, counterexample=counterexample)


def _sampled(space: DescribedSpace, trials: int, seed: int, report: AuditReport) -> AuditReport:
    rng = make_rng(seed)
    ctx = ClaimContext(space)
    instance = f"{space.rows}x{space.cols} space, {trials} sampled region pairs"
    failures: dict[str, dict] = {}

    for _ in range(trials):
        regions = {"A": random_region(space, rng), "B": random_region(space, rng)}
        for name in REGION_CLAIMS + PAIR_CLAIMS:
            if name not in failures and not evaluate(name, ctx, regions):
                used = ("A",) if name in REGION_CLAIMS else ("A", "B")
                failures[name] = {n: list(regions[n]) for n in used}

    for name in REGION_CLAIMS + PAIR_CLAIMS:
        if name in failures:
            report.checks.append(AuditCheck(
                claim=name, instance=instance, verdict=Verdict.FAILS, counterexample=failures[name]
            ))
        else:
            report.checks.append(AuditCheck(claim=name, instance=instance, verdict=Verdict.HOLDS))
    report.instance_count = trials
    return report


def check_approx_theorems(
    space: DescribedSpace,
    trials: int,
    seed: int,
    mode: AuditMode | None = None,
    settings: Settings | None = None,
) -> AuditReport:
    """
    Audits the approximation properties, both directions of the description
    lemma, self-nearness, idempotence of the upper approximation and its
    closure-union form.

    Args:
        space: The space to audit.
        trials: Number of sampled region pairs when not exhaustive.
        seed: Seed for the region sampler.
        mode: Force "exhaustive" or "sampled"; by default exhaustive when
            2^|X| is within settings.exhaustive_subset_limit.
        settings: Overrides the default Settings.

    Returns:
        One AuditCheck per claim, failing checks carrying a replayable counterexample.
    """
    if trials < 1:
        raise AuditError(f"trials must be at least 1, got {trials}")
    settings = settings or Settings()
    if mode is None:
        mode = "exhaustive" if (1 << space.size) <= settings.exhaustive_subset_limit else "sampled"

    report = AuditReport(seed=seed, prng=PRNG_NAME)
    if mode == "exhaustive":
        if space.size > _MAX_TABULATED_POINTS:
            raise SpaceTooLarge(f"{space.size} points are too many for an exhaustive approximation audit")
        logger.info(f"Auditing approximation claims exhaustively on {space.rows}x{space.cols} space.")
        return _exhaustive(space, report)
    logger.info(f"Auditing approximation claims on {trials} sampled pairs (seed {seed}).")
    return _sampled(space, trials, seed, report)
