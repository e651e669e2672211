"""
Plain-text codecs for described spaces, regions and operation specs.

Space file:
    rows cols probes index_base
    i j v1 v2 ... vL        (one line per point)

Blank lines and lines starting with '#' are ignored. Cayley table files hold
one "i j k l p r" line per pair, meaning x_ij · x_kl = x_pr.
"""
import logging
from pathlib import Path
from typing import Iterable

from proxalg.algebra import BinaryOp, CayleyTable, MinIndex, ModAdd
from proxalg.core.space import DescribedSpace, PointId, Region, make_space
from proxalg.exceptions import ParseError

logger = logging.getLogger(__name__)


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped.split()


def _integers(fields: list[str], number: int, source: str) -> list[int]:
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise ParseError(f"expected integers, got '{' '.join(fields)}'", number, source) from None


def parse_space(text: str, source: str = "<input>") -> DescribedSpace:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty space file", None, source)

    header_line, header = lines[0]
    if len(header) != 4:
        raise ParseError("header must be 'rows cols probes index_base'", header_line, source)
    rows, cols, probes, index_base = _integers(header, header_line, source)
    if index_base not in (0, 1):
        raise ParseError(f"index_base must be 0 or 1, got {index_base}", header_line, source)
    if rows < 1 or cols < 1 or probes < 1:
        raise ParseError("rows, cols and probes must be positive", header_line, source)

    entries = []
    for number, fields in lines[1:]:
        if len(fields) != 2 + probes:
            raise ParseError(f"expected 'i j' and {probes} values, got {len(fields)} fields", number, source)
        i, j, *values = _integers(fields, number, source)
        if i < 0 or j < 0:
            raise ParseError(f"negative index ({i},{j})", number, source)
        entries.append((number, PointId(i, j), values))

    if len(entries) != rows * cols:
        line = entries[-1][0] if entries else header_line
        raise ParseError(f"expected {rows * cols} data lines, got {len(entries)}", line, source)

    base = index_base
    for number, point, _ in entries:
        if not (base <= point.row < base + rows and base <= point.col < base + cols):
            raise ParseError(f"point ({point.row},{point.col}) is outside the {rows}x{cols} grid", number, source)

    seen: dict[PointId, int] = {}
    for number, point, _ in entries:
        if point in seen:
            raise ParseError(f"point ({point.row},{point.col}) already described on line {seen[point]}", number, source)
        seen[point] = number

    return make_space(rows, cols, probes, [(p, v) for _, p, v in entries], index_base)


def serialize_space(space: DescribedSpace) -> str:
    lines = [f"{space.rows} {space.cols} {space.probe_count} {space.index_base}"]
    for point in space.points():
        values = " ".join(str(v) for v in space.describe(point))
        lines.append(f"{point.row} {point.col} {values}")
    return "\n".join(lines) + "\n"


def load_space(path: str | Path) -> DescribedSpace:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (IOError, OSError) as e:
        raise ParseError(f"cannot read space file: {e}", None, str(path)) from e
    space = parse_space(text, str(path))
    logger.info(f"Loaded {space.rows}x{space.cols} space from {path}.")
    return space


def parse_point(token: str, source: str = "--region") -> PointId:
    parts = token.split(",")
    if len(parts) != 2:
        raise ParseError(f"point '{token}' must look like 'i,j'", None, source)
    try:
        row, col = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"point '{token}' must hold two integers", None, source) from None
    if row < 0 or col < 0:
        raise ParseError(f"point '{token}' has a negative index", None, source)
    return PointId(row, col)


def parse_region(tokens: Iterable[str], space: DescribedSpace) -> Region:
    """Parses "i,j" tokens (commas or whitespace between points). Raises PointOutOfRange off the grid."""
    points = [parse_point(token) for raw in tokens for token in raw.replace(";", " ").split()]
    return Region.of(space, points)


def parse_cayley_table(text: str, source: str = "<table>") -> dict[tuple[PointId, PointId], PointId]:
    products: dict[tuple[PointId, PointId], PointId] = {}
    for number, fields in _content_lines(text):
        if len(fields) != 6:
            raise ParseError("table lines must be 'i j k l p r'", number, source)
        i, j, k, l, p, r = _integers(fields, number, source)
        if min(i, j, k, l, p, r) < 0:
            raise ParseError("table indices must be non-negative", number, source)
        key = (PointId(i, j), PointId(k, l))
        if key in products:
            raise ParseError(f"duplicate entry for ({i},{j})·({k},{l})", number, source)
        products[key] = PointId(p, r)
    return products


def parse_op(spec: str) -> BinaryOp:
    """'min' | 'modadd:<n>' | 'table:<path>'."""
    kind, _, argument = spec.partition(":")
    if kind == "min" and not argument:
        return MinIndex()
    if kind == "modadd":
        try:
            n = int(argument)
        except ValueError:
            raise ParseError(f"modadd needs an integer modulus, got '{argument}'", None, "--op") from None
        if n < 1:
            raise ParseError(f"modadd modulus must be positive, got {n}", None, "--op")
        return ModAdd(n)
    if kind == "table" and argument:
        path = Path(argument)
        try:
            text = path.read_text(encoding="utf-8")
        except (IOError, OSError) as e:
            raise ParseError(f"cannot read table file: {e}", None, str(path)) from e
        return CayleyTable(parse_cayley_table(text, str(path)), source=argument)
    raise ParseError(f"unknown operation '{spec}'; expected min, modadd:<n> or table:<path>", None, "--op")


def serialize_cayley_table(space: DescribedSpace, op: BinaryOp) -> str:
    lines = []
    for x in space.points():
        for y in space.points():
            z = op.apply(space, x, y)
            lines.append(f"{x.row} {x.col} {y.row} {y.col} {z.row} {z.col}")
    return "\n".join(lines) + "\n"
