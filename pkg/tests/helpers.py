from pathlib import Path

import proxalg
from proxalg.core.space import PointId, make_space

FIXTURES = Path(proxalg.__file__).parent / "fixtures"


def x(row: int, col: int) -> PointId:
    return PointId(row, col)


def grid(rows: int, cols: int, values: list[int], index_base: int = 0):
    """A single-probe space from row-major values."""
    entries = [
        (PointId(i // cols + index_base, i % cols + index_base), (value,))
        for i, value in enumerate(values)
    ]
    return make_space(rows, cols, 1, entries, index_base)
