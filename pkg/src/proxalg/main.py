import argparse
import logging
import sys

from proxalg import __version__
from proxalg.cli.commands import cmd_approx, cmd_audit, cmd_classify, cmd_reproduce_paper
from proxalg.core.config import Settings
from proxalg.exceptions import OpDomainError, ParseError, PointOutOfRange, ProxAlgError
from proxalg.services.report_renderer import ReportRenderer

logger = logging.getLogger(__name__)

EXIT_PARSE = 2
EXIT_RANGE = 3
EXIT_OP_DOMAIN = 4

_EXIT_CODES = (
    (ParseError, EXIT_PARSE),
    (PointOutOfRange, EXIT_RANGE),
    (OpDomainError, EXIT_OP_DOMAIN),
)


def exit_code_for(error: BaseException) -> int:
    """Maps an error (or the error it wraps) to its exit code; other library errors count as bad input."""
    current = error
    while current is not None:
        for error_type, code in _EXIT_CODES:
            if isinstance(current, error_type):
                return code
        current = current.__cause__
    return EXIT_PARSE


def _add_space_source(parser: argparse.ArgumentParser, random: bool = False):
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--space", help="Space file: 'rows cols probes index_base' header, then 'i j v1 ... vL' lines.")
    source.add_argument("--image", help="Raster image; each pixel is described by its RGB components (needs Pillow).")
    if random:
        source.add_argument(
            "--random", nargs=4, type=int, metavar=("ROWS", "COLS", "ALPHABET", "SEED"),
            help="Draw a random single-probe space instead of reading one.",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="proxalg",
        description="Descriptive proximity approximations and approximately algebraic structures.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr.")
    common.add_argument("--format", choices=("text", "kv"), default="text", help="Report format.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    approx = subparsers.add_parser("approx", parents=[common], help="Lower and upper approximations of a region.")
    _add_space_source(approx)
    approx.add_argument("--region", nargs="+", required=True, help="Points as 'i,j' in the space's index base.")
    approx.set_defaults(handler=cmd_approx)

    classify = subparsers.add_parser("classify", parents=[common], help="Place a region in the approximately groupoid..group hierarchy.")
    _add_space_source(classify)
    classify.add_argument("--op", required=True, help="'min', 'modadd:<n>' or 'table:<path>'.")
    classify.add_argument("--region", nargs="+", required=True)
    classify.add_argument("--max-witnesses", type=int, default=None, help="Witnesses kept per axiom (0 keeps all).")
    classify.set_defaults(handler=cmd_classify)

    audit = subparsers.add_parser("audit", parents=[common], help="Brute-force audit of the proximity axioms and theorems.")
    _add_space_source(audit, random=True)
    audit.add_argument("--trials", type=int, default=None, help="Sampled instances per claim.")
    audit.add_argument("--seed", type=int, default=None)
    audit.add_argument("--op", default=None, help="Also audit the group claims under this operation.")
    audit.add_argument("--region", nargs="+", default=None, help="The group G to audit; found by search if omitted.")
    mode = audit.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", dest="mode", action="store_const", const="exhaustive")
    mode.add_argument("--sampled", dest="mode", action="store_const", const="sampled")
    audit.set_defaults(handler=cmd_audit, mode=None)

    reproduce = subparsers.add_parser("reproduce-paper", parents=[common], help="Recompute both worked examples against pinned outputs.")
    reproduce.set_defaults(handler=cmd_reproduce_paper)
    return parser


def main(argv: list[str] | None = None, settings: Settings | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = settings or Settings()

    level = logging.INFO if args.verbose else getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        document = args.handler(args, settings)
        sys.stdout.write(ReportRenderer().render(document, args.format))
    except ProxAlgError as e:
        logger.error(f"{args.command} failed: {e}", exc_info=args.verbose)
        print(f"error: {e}", file=sys.stderr)
        return exit_code_for(e)
    return document.exit_code


if __name__ == "__main__":
    sys.exit(main())
