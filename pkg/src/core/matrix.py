from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

import numpy as np

from src.core.scalar import Number, ZERO, ONE, parse_scalar
from src.exceptions import DimensionMismatchError, NegativeEntryError

Rows = Tuple[Tuple[Number, ...], ...]


@dataclass(frozen=True)
class Matrix:
    """A square nonnegative matrix, immutable and hashable so products can be deduplicated."""

    entries: Rows

    def __post_init__(self):
        dim = len(self.entries)
        if dim == 0:
            raise DimensionMismatchError("matrix must have at least one row")

        for row in self.entries:
            if len(row) != dim:
                raise DimensionMismatchError(f"matrix is not square: row of length {len(row)} in a {dim}-row matrix")
            for value in row:
                if value < 0:
                    raise NegativeEntryError(f"negative entry {value} in matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Matrix":
        return cls(tuple(tuple(parse_scalar(value) for value in row) for row in rows))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "Matrix":
        return cls(tuple(tuple(row) for row in array.tolist()))

    @classmethod
    def identity(cls, dim: int) -> "Matrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(dim)) for i in range(dim)))

    @classmethod
    def zeros(cls, dim: int) -> "Matrix":
        return cls(tuple(tuple(ZERO for _ in range(dim)) for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @cached_property
    def array(self) -> np.ndarray:
        if self.is_exact:
            return np.array(self.entries, dtype=object)
        return np.array(self.entries, dtype=np.float64)

    @cached_property
    def is_exact(self) -> bool:
        return isinstance(self.entries[0][0], Fraction)

    @cached_property
    def is_zero(self) -> bool:
        return all(value == 0 for row in self.entries for value in row)

    def __getitem__(self, index: Tuple[int, int]) -> Number:
        i, j = index
        return self.entries[i][j]

    def positive_entries(self) -> list[Number]:
        return [value for row in self.entries for value in row if value > 0]

    def support(self) -> Tuple[Tuple[bool, ...], ...]:
        return tuple(tuple(value > 0 for value in row) for row in self.entries)

    def is_dominated_by(self, other: "Matrix") -> bool:
        """Entrywise self <= other."""
        return all(a <= b for row_a, row_b in zip(self.entries, other.entries) for a, b in zip(row_a, row_b))

    def restrict(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(tuple(tuple(self.entries[i][j] for j in indices) for i in indices))

    def to_float(self) -> "Matrix":
        return Matrix(tuple(tuple(float(value) for value in row) for row in self.entries))

    def sort_key(self) -> Rows:
        return self.entries


def multiply(a: Matrix, b: Matrix) -> Matrix:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"cannot multiply {a.dim}x{a.dim} by {b.dim}x{b.dim}")

    # numpy dot on object arrays keeps Fraction arithmetic exact
    return Matrix.from_array(np.dot(a.array, b.array))


def max_norm(m: Matrix) -> Number:
    """Largest entry, which is the maximum norm for nonnegative matrices."""
    return max(value for row in m.entries for value in row)


def entrywise_max(matrices: Sequence[Matrix]) -> Matrix:
    dim = matrices[0].dim
    return Matrix(tuple(
        tuple(max(m.entries[i][j] for m in matrices) for j in range(dim))
        for i in range(dim)
    ))
