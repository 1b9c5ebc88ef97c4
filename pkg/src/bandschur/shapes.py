"""Partitions, skew shapes, and banded-matrix minor specifications.

A minor specification names the rows and columns deleted from the infinite
banded upper-triangular Toeplitz matrix before taking the leading k x k
block.  Every such minor determinant is a skew Schur polynomial; the shape
it corresponds to is produced by :func:`shape_from_minor`.
"""

from __future__ import annotations

from dataclasses import dataclass


class Partition:
    """Weakly decreasing tuple of non-negative integers.

    Trailing zeros are ignored for equality and hashing but the declared
    parts are preserved, since shape arithmetic sometimes pads with zeros.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def normalized(self) -> tuple[int, ...]:
        """Parts with trailing zeros removed."""
        parts = self.parts
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return parts[:end]

    def __eq__(self, other):
        if isinstance(other, (tuple, list)):
            other = Partition(other)
        if not isinstance(other, Partition):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def __len__(self):
        return len(self.normalized())

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def __str__(self):
        return ",".join(str(p) for p in self.normalized())

    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """1-based part access, 0 beyond the declared length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        n = max(len(self.parts), len(other.parts))
        return all(self.part(i) >= other.part(i) for i in range(1, n + 1))

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram: column lengths become parts."""
        parts = self.normalized()
        if not parts:
            return Partition()
        return Partition(
            tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))
        )


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated partition; empty or blank string is empty."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None
    return Partition(parts)


class SkewShape:
    """Pair of partitions outer/inner with inner contained in outer."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=()):
        outer = outer if isinstance(outer, Partition) else Partition(outer)
        inner = inner if isinstance(inner, Partition) else Partition(inner)
        if not outer.contains(inner):
            raise ValueError(f"inner {inner} not contained in outer {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def __setattr__(self, name, value):
        raise AttributeError("SkewShape is immutable")

    def __eq__(self, other):
        if not isinstance(other, SkewShape):
            return NotImplemented
        return self.outer == other.outer and self.inner == other.inner

    def __hash__(self):
        return hash((self.outer, self.inner))

    def __repr__(self):
        return f"SkewShape({self.outer.parts}, {self.inner.parts})"

    def __str__(self):
        return f"({self.outer})/({self.inner})"

    def row_spans(self) -> list[tuple[int, int]]:
        """Per row of the outer diagram: (inner_i, outer_i), 0-based columns.

        Row i occupies columns inner_i..outer_i-1; empty rows allowed.
        """
        return [
            (self.inner.part(i), self.outer.part(i))
            for i in range(1, len(self.outer.normalized()) + 1)
        ]

    def box_count(self) -> int:
        return self.outer.size() - self.inner.size()

    def column_height(self, j: int) -> int:
        """Number of boxes in 1-based column j."""
        return self.outer.conjugate().part(j) - self.inner.conjugate().part(j)


@dataclass(frozen=True)
class MinorSpec:
    """Deleted row/column index sets for a band-(0..band) Toeplitz matrix.

    deleted_rows and deleted_cols are strictly increasing positive integers;
    with r = len(deleted_rows) and c = len(deleted_cols) the constraints are
    r <= c <= band and deleted_rows[i] >= deleted_cols[i] for each i.
    """

    deleted_rows: tuple[int, ...]
    deleted_cols: tuple[int, ...]
    band: int

    def __post_init__(self):
        object.__setattr__(self, "deleted_rows", tuple(self.deleted_rows))
        object.__setattr__(self, "deleted_cols", tuple(self.deleted_cols))
        for name, seq in (
            ("deleted_rows", self.deleted_rows),
            ("deleted_cols", self.deleted_cols),
        ):
            if any(v < 1 for v in seq):
                raise ValueError(f"{name} must be positive: {seq}")
            if any(a >= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{name} must be strictly increasing: {seq}")
        r, c = len(self.deleted_rows), len(self.deleted_cols)
        if self.band < 1:
            raise ValueError(f"band must be >= 1, got {self.band}")
        if not r <= c <= self.band:
            raise ValueError(
                f"need len(deleted_rows) <= len(deleted_cols) <= band, "
                f"got {r} <= {c} <= {self.band}"
            )
        for i, (a, b) in enumerate(zip(self.deleted_rows, self.deleted_cols)):
            if a < b:
                raise ValueError(
                    f"deleted_rows[{i}] = {a} < deleted_cols[{i}] = {b}"
                )

    @property
    def r(self) -> int:
        return len(self.deleted_rows)

    @property
    def c(self) -> int:
        return len(self.deleted_cols)

    def __str__(self):
        rows = ",".join(str(v) for v in self.deleted_rows)
        cols = ",".join(str(v) for v in self.deleted_cols)
        return f"rows=({rows}) cols=({cols}) band={self.band}"


def surviving(deleted: tuple[int, ...], count: int) -> list[int]:
    """First `count` positive integers not in the deleted set, ascending."""
    dropped = set(deleted)
    out: list[int] = []
    v = 1
    while len(out) < count:
        if v not in dropped:
            out.append(v)
        v += 1
    return out


def min_k(spec: MinorSpec) -> int:
    """Smallest block size at which the minor's skew shape exists.

    max over deleted_rows[r-1] - r, deleted_cols[c-1] - c, and 0; empty
    index sets contribute 0.
    """
    lo = 0
    if spec.deleted_rows:
        lo = max(lo, spec.deleted_rows[-1] - spec.r)
    if spec.deleted_cols:
        lo = max(lo, spec.deleted_cols[-1] - spec.c)
    return lo


def shape_from_minor(spec: MinorSpec, k: int) -> SkewShape:
    """Skew shape whose Schur polynomial equals the k-th minor determinant.

    outer_i = k + i - deleted_cols[i-1] over the c deleted columns, and
    inner_i = k + i - deleted_rows[i-1] over the r deleted rows, padded
    with zeros to length c.  Defined for k >= min_k(spec).
    """
    lo = min_k(spec)
    if k < lo:
        raise ValueError(f"k = {k} below min_k = {lo} for {spec}")
    outer = tuple(k + i - b for i, b in enumerate(spec.deleted_cols, start=1))
    inner = tuple(k + i - a for i, a in enumerate(spec.deleted_rows, start=1))
    inner = inner + (0,) * (spec.c - spec.r)
    return SkewShape(Partition(outer), Partition(inner))
