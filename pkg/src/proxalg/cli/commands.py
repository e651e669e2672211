"""
The four subcommands. Each takes parsed arguments and Settings and returns a
ReportDocument; exceptions propagate to main, which maps them to exit codes.
"""
import argparse
import asyncio
import logging
from pathlib import Path

from proxalg.algebra import classify
from proxalg.approx import approximate, set_description
from proxalg.audit.sampling import random_space
from proxalg.core.config import Settings
from proxalg.core.space import DescribedSpace
from proxalg.exceptions import ParseError
from proxalg.models.document import ReportDocument
from proxalg.pipelines.audit import create_audit_pipeline
from proxalg.pipelines.reproduction import create_reproduction_pipeline
from proxalg.services.documents import approx_document, audit_document, classify_document
from proxalg.services.raster import load_image
from proxalg.services.spacefile import load_space, parse_op, parse_region

logger = logging.getLogger(__name__)


def _load_space(args: argparse.Namespace) -> DescribedSpace:
    if getattr(args, "random", None):
        rows, cols, alphabet, seed = args.random
        return random_space(rows, cols, alphabet, seed)
    if getattr(args, "image", None):
        return load_image(args.image)
    if getattr(args, "space", None):
        return load_space(args.space)
    raise ParseError("one of --space, --image or --random is required", None, "arguments")


def cmd_approx(args: argparse.Namespace, settings: Settings) -> ReportDocument:
    space = _load_space(args)
    region = parse_region(args.region, space)
    logger.info(f"Approximating region {region}.")
    return approx_document(region, set_description(region), approximate(region))


def cmd_classify(args: argparse.Namespace, settings: Settings) -> ReportDocument:
    space = _load_space(args)
    op = parse_op(args.op)
    op.validate(space)
    region = parse_region(args.region, space)
    max_witnesses = args.max_witnesses if args.max_witnesses is not None else settings.max_witnesses
    report = classify(space, op, region, max_witnesses)
    logger.info(f"Region {region} classifies as {report.level.title} under {op.name}.")
    return classify_document(space, op, region, report)


def cmd_audit(args: argparse.Namespace, settings: Settings) -> ReportDocument:
    space = _load_space(args)
    op = None
    if args.op:
        op = parse_op(args.op)
        op.validate(space)
    region = parse_region(args.region, space) if args.region else None
    seed = args.seed if args.seed is not None else settings.default_seed
    trials = args.trials if args.trials is not None else settings.sampled_pairs

    context = {"settings": settings, "trials": trials, "seed": seed, "mode": args.mode}
    data = {"space": space, "op": op, "region": region}
    report = asyncio.run(create_audit_pipeline().execute(data, context))
    return audit_document(space, report)


def cmd_reproduce_paper(args: argparse.Namespace, settings: Settings) -> ReportDocument:
    fixtures = Path(settings.fixtures_path)
    logger.info(f"Reproducing worked examples from {fixtures}.")
    return asyncio.run(create_reproduction_pipeline().execute(fixtures, {"settings": settings}))
