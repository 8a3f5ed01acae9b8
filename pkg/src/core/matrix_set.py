import hashlib
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Tuple

from src.core.matrix import Matrix, entrywise_max
from src.core.scalar import Number, format_rational
from src.exceptions import ConstantsUndefinedError, DimensionMismatchError


@dataclass(frozen=True)
class MatrixSet:
    """The finite set Σ, kept in input order because witness tie-breaking depends on it."""

    matrices: Tuple[Matrix, ...]

    def __post_init__(self):
        if not self.matrices:
            raise DimensionMismatchError("a matrix set needs at least one matrix")

        dims = {m.dim for m in self.matrices}
        if len(dims) != 1:
            raise DimensionMismatchError(f"all matrices must share one dimension, got {sorted(dims)}")

    @classmethod
    def of(cls, *rows: Iterable[Iterable]) -> "MatrixSet":
        return cls(tuple(Matrix.from_rows(r) for r in rows))

    @property
    def dim(self) -> int:
        return self.matrices[0].dim

    @property
    def size(self) -> int:
        return len(self.matrices)

    @cached_property
    def all_zero(self) -> bool:
        return all(m.is_zero for m in self.matrices)

    @cached_property
    def is_exact(self) -> bool:
        return all(m.is_exact for m in self.matrices)

    def restrict(self, indices: Sequence[int]) -> "MatrixSet":
        return MatrixSet(tuple(m.restrict(indices) for m in self.matrices))

    def entrywise_max(self) -> Matrix:
        return entrywise_max(self.matrices)

    def to_float(self) -> "MatrixSet":
        return MatrixSet(tuple(m.to_float() for m in self.matrices))

    def digest(self) -> str:
        canonical = ";".join(
            "|".join(",".join(format_rational(v) for v in row) for row in m.entries)
            for m in self.matrices
        )
        return hashlib.sha256(f"{self.dim}:{canonical}".encode()).hexdigest()


@dataclass(frozen=True)
class SetConstants:
    U: Number
    V: Number
    K: Number


def set_constants(s: MatrixSet) -> SetConstants:
    """U, V are the largest and smallest positive entries over Σ, K = (V/(U·D))^D."""
    if s.all_zero:
        raise ConstantsUndefinedError("U, V and K are undefined for a set of zero matrices")

    positive = [value for m in s.matrices for value in m.positive_entries()]
    upper = max(positive)
    lower = min(positive)

    return SetConstants(U=upper, V=lower, K=(lower / (upper * s.dim)) ** s.dim)
