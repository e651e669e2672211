"""
Recomputes the two worked examples (an RGB grid under the min-index operation
and one under addition modulo 5) from the bundled fixtures and compares the
results key by key with the pinned expected documents.
"""
from dataclasses import dataclass
from pathlib import Path
import logging

from proxalg.algebra import classify
from proxalg.approx import approximate, set_description
from proxalg.exceptions import ConfigurationError, ProcessorError, ProxAlgError
from proxalg.models.document import ReportDocument
from proxalg.pipelines.pipelines import Pipeline
from proxalg.pipelines.processors import Processor
from proxalg.services.documents import description_entry, labels, pixel_entries, structure_entries
from proxalg.services.report_renderer import parse_kv
from proxalg.services.spacefile import load_space, parse_op, parse_region

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WorkedExample:
    number: int
    space_file: str
    op: str
    region: tuple[str, ...]
    region_name: str
    expected_file: str


EXAMPLES = (
    WorkedExample(1, "table1.space", "min", ("2,1", "2,2", "3,2", "3,3"), "A", "expected-example1.kv"),
    WorkedExample(2, "table2.space", "modadd:5", ("2,3", "3,2"), "B", "expected-example2.kv"),
)

# Keys of the example document, in serialization order; pixel entries follow.
EXAMPLE_KEYS = (
    "example", "op", "region", "description", "upper", "upper.count",
    "lower", "boundary", "level", "commutative", "identities", "group_identity", "inverses",
)


def example_entries(example: WorkedExample, fixtures: Path) -> dict[str, str]:
    space = load_space(fixtures / example.space_file)
    op = parse_op(example.op)
    op.validate(space)
    region = parse_region(example.region, space)
    result = approximate(region)
    report = classify(space, op, region)

    computed = {
        "example": str(example.number),
        "description": description_entry(set_description(region)),
        "upper": labels(space, result.upper),
        "upper.count": str(len(result.upper)),
        "lower": labels(space, result.lower),
        "boundary": labels(space, result.boundary),
    } | structure_entries(space, op, region, report)
    entries = {key: computed[key] for key in EXAMPLE_KEYS}
    return entries | pixel_entries(space)


def diff_entries(expected: dict[str, str], actual: dict[str, str]) -> list[str]:
    lines = []
    for key in expected:
        if key not in actual:
            lines.append(f"{key}: missing, expected '{expected[key]}'")
        elif actual[key] != expected[key]:
            lines.append(f"{key}: expected '{expected[key]}', got '{actual[key]}'")
    lines += [f"{key}: unexpected, got '{actual[key]}'" for key in actual if key not in expected]
    return lines


class ExampleLoader(Processor):
    """
    Reads the pinned expected document of every example.
    """
    def run(self, data: Path, context: dict) -> dict:
        fixtures = Path(data)
        expected = {}
        for example in EXAMPLES:
            path = fixtures / example.expected_file
            try:
                expected[example.number] = parse_kv(path.read_text(encoding="utf-8"))
            except (IOError, OSError) as e:
                raise ConfigurationError(f"Cannot read pinned expectation {path}: {e}") from e
        logger.info(f"Loaded {len(expected)} pinned expectations from {fixtures}.")
        return {"fixtures": fixtures, "expected": expected}


class ExampleEvaluator(Processor):
    """
    Recomputes every example from its fixture space.
    """
    def run(self, data: dict, context: dict) -> dict:
        actual = {}
        for example in EXAMPLES:
            logger.info(f"Recomputing example {example.number} from {example.space_file}...")
            try:
                actual[example.number] = example_entries(example, data["fixtures"])
            except ProxAlgError as e:
                logger.error(f"Example {example.number} could not be evaluated: {e}", exc_info=True)
                raise ProcessorError(f"Example {example.number} could not be evaluated: {e}") from e
        data["actual"] = actual
        return data


class ExpectationComparer(Processor):
    """
    Diffs computed documents against the pinned ones and builds the report.
    """
    def run(self, data: dict, context: dict) -> ReportDocument:
        summary = []
        entries = {}
        failed = False
        for example in EXAMPLES:
            expected = data["expected"][example.number]
            actual = data["actual"][example.number]
            diffs = diff_entries(expected, actual)
            upper_ok = expected.get("upper") == actual["upper"]
            verdict = "PASS" if not diffs else "FAIL"
            failed = failed or bool(diffs)
            summary.append(
                f"Example {example.number}: Φ*{example.region_name} "
                f"{'matches' if upper_ok else 'differs'} ({actual['upper.count']} points); "
                f"{actual['level']}: {verdict}"
            )
            summary += [f"  {line}" for line in diffs]
            entries[f"example{example.number}.verdict"] = verdict.lower()
            entries[f"example{example.number}.diffs"] = str(len(diffs))
            for number, line in enumerate(diffs, start=1):
                entries[f"example{example.number}.diff.{number}"] = line
        return ReportDocument(
            command="reproduce-paper", summary=summary, entries=entries, exit_code=1 if failed else 0
        )


def create_reproduction_pipeline() -> Pipeline:
    return Pipeline([
        ExampleLoader(),
        ExampleEvaluator(),
        ExpectationComparer(),
    ])
