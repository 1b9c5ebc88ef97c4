"""Semistandard skew tableaux: enumeration and row-wise sequence insertion.

Insertion works on a materialized form of the tableau where the skew boxes
of row i hold a negative sentinel value (constant per row, strictly
increasing down the rows), so "insert v into row i keeping the row weakly
increasing" covers both content values and skew-extending negative values
with one rule.  Negative entries are transient: they are stripped after
insertion and only enlarge the inner shape.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from itertools import combinations

from .polyring import MultiPoly
from .shapes import Partition, SkewShape


class Tableau:
    """Semistandard filling of a skew shape with entries in 1..nmax.

    rows holds the content cells only (one tuple per row of the outer
    shape); skew cells are implicit.  Rows must be weakly increasing and
    columns strictly increasing.
    """

    __slots__ = ("shape", "rows", "nmax")

    def __init__(self, shape: SkewShape, rows, nmax: int):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        spans = shape.row_spans()
        if len(rows) != len(spans):
            raise ValueError(
                f"{len(rows)} rows for a shape with {len(spans)} rows"
            )
        if nmax < 1:
            raise ValueError(f"nmax must be >= 1, got {nmax}")
        for i, ((lo, hi), row) in enumerate(zip(spans, rows)):
            if len(row) != hi - lo:
                raise ValueError(
                    f"row {i + 1} has {len(row)} entries, shape wants {hi - lo}"
                )
            for v in row:
                if not 1 <= v <= nmax:
                    raise ValueError(f"entry {v} outside 1..{nmax}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {i + 1} not weakly increasing: {row}")
        for i in range(1, len(spans)):
            (plo, phi), (lo, hi) = spans[i - 1], spans[i]
            for j in range(max(lo, plo), min(hi, phi)):
                above = rows[i - 1][j - plo]
                here = rows[i][j - lo]
                if above >= here:
                    raise ValueError(
                        f"column {j + 1} not strictly increasing: "
                        f"{above} above {here}"
                    )
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nmax", nmax)

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return f"Tableau({self.shape}, {list(map(list, self.rows))})"

    def content(self) -> tuple[int, ...]:
        """Multiplicity vector: how many times each of 1..nmax appears."""
        counts = [0] * self.nmax
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def to_json_obj(self) -> dict:
        return {
            "outer": list(self.shape.outer.normalized()),
            "inner": list(self.shape.inner.normalized()),
            "rows": [list(row) for row in self.rows],
        }


def enumerate_ssyt(shape: SkewShape, nmax: int):
    """All semistandard fillings of `shape` with entries 1..nmax.

    Deterministic row-major lexicographic order (cells filled left to
    right, top to bottom, values ascending).  The empty shape yields one
    empty tableau.
    """
    spans = shape.row_spans()
    cells = [
        (i, j) for i, (lo, hi) in enumerate(spans) for j in range(lo, hi)
    ]
    grid: dict[tuple[int, int], int] = {}
    out: list[Tableau] = []

    def fill(idx: int):
        if idx == len(cells):
            rows = tuple(
                tuple(grid[i, j] for j in range(lo, hi))
                for i, (lo, hi) in enumerate(spans)
            )
            out.append(Tableau(shape, rows, nmax))
            return
        i, j = cells[idx]
        lo = 1
        if (i, j - 1) in grid:
            lo = max(lo, grid[i, j - 1])
        if (i - 1, j) in grid:
            lo = max(lo, grid[i - 1, j] + 1)
        for v in range(lo, nmax + 1):
            grid[i, j] = v
            fill(idx + 1)
        grid.pop((i, j), None)

    fill(0)
    return out


def schur_by_tableaux(shape: SkewShape, nvars: int) -> MultiPoly:
    """Skew Schur polynomial as the content generating function of SSYT."""
    terms: dict[tuple[int, ...], int] = {}
    for tab in enumerate_ssyt(shape, nvars):
        key = tab.content()
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(nvars, terms)


@dataclass(frozen=True)
class InsertionSequence:
    """Strictly increasing nonzero values; position i targets row i.

    A negative prefix extends the skew part of the leading rows; positive
    values must stay within the tableau's entry bound.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if any(v == 0 for v in self.values):
            raise ValueError("sequence values must be nonzero")
        if any(a >= b for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"sequence not strictly increasing: {self.values}")


def _materialize(tab: Tableau) -> list[list[int]]:
    """Rows with skew boxes spelled out as negative sentinels.

    Row i (1-based) uses sentinel i - r - 1 where r is the number of
    nonzero inner rows, so sentinels increase strictly down the rows.
    """
    skew_rows = len(tab.shape.inner.normalized())
    rows = []
    for i, ((lo, hi), row) in enumerate(zip(tab.shape.row_spans(), tab.rows)):
        rows.append([i - skew_rows] * lo + list(row))
    return rows


def insert_sequence(tab: Tableau, seq: InsertionSequence) -> Tableau:
    """Insert seq value i into row i, keeping each row weakly increasing.

    A value inserted into a missing row creates a new single-box row.
    Negative values are stripped afterwards and become skew boxes.  The
    result is checked against all tableau invariants; a violation (which
    cannot happen when the sequence respects the shape) raises ValueError.
    """
    rows = _materialize(tab)
    for pos, v in enumerate(seq.values, start=1):
        if v > tab.nmax:
            raise ValueError(f"value {v} exceeds entry bound {tab.nmax}")
        if pos > len(rows):
            rows.append([v])
        else:
            insort(rows[pos - 1], v)
    # columns must be strictly increasing on the sentinel form as well
    for i in range(1, len(rows)):
        for j in range(min(len(rows[i - 1]), len(rows[i]))):
            if rows[i - 1][j] >= rows[i][j]:
                raise ValueError(
                    f"insertion broke column {j + 1}: "
                    f"{rows[i - 1][j]} above {rows[i][j]}"
                )
    outer, inner, content = [], [], []
    for row in rows:
        neg = sum(1 for v in row if v < 0)
        outer.append(len(row))
        inner.append(neg)
        content.append(row[neg:])
    shape = SkewShape(Partition(outer), Partition(inner))
    return Tableau(shape, content, tab.nmax)


def extension_sequences(skew_rows: int, extra: int, nmax: int):
    """All sequences extending `skew_rows` skew rows plus `extra` content values.

    The negative prefix is -skew_rows..-1; the positive tails run over all
    strictly increasing `extra`-subsets of 1..nmax.  These are exactly the
    single-step sequences behind the minor determinant recurrence.
    """
    prefix = tuple(range(-skew_rows, 0))
    return [
        InsertionSequence(prefix + combo)
        for combo in combinations(range(1, nmax + 1), extra)
    ]
