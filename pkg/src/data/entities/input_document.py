import json
from typing import List, Literal, Union

from pydantic import BaseModel, Field, ValidationError, model_validator

from src.core import Matrix, MatrixSet, format_rational
from src.exceptions import InputParseError

Entry = Union[int, str]


class InputDocument(BaseModel):
    """{"dimension": D, "matrices": [...], "encoding": "rational" | "decimal"}, entries as strings or integers."""

    dimension: int = Field(gt=0)
    matrices: List[List[List[Entry]]] = Field(min_length=1)
    encoding: Literal["rational", "decimal"] = "rational"

    @model_validator(mode="after")
    def check_shapes(self):
        for index, grid in enumerate(self.matrices):
            if len(grid) != self.dimension or any(len(row) != self.dimension for row in grid):
                raise ValueError(f"matrix {index} is not {self.dimension}x{self.dimension}")

            for row in grid:
                for entry in row:
                    if isinstance(entry, str) and self.encoding == "decimal" and "/" in entry:
                        raise ValueError(f"rational entry {entry!r} in a decimal-encoded document")
        return self

    @classmethod
    def parse(cls, text: str) -> "InputDocument":
        try:
            return cls.model_validate(json.loads(text))
        except (json.JSONDecodeError, ValidationError) as e:
            raise InputParseError(f"invalid matrix set document: {e}") from e

    @classmethod
    def load(cls, path: str) -> "InputDocument":
        try:
            with open(path) as file:
                return cls.parse(file.read())
        except OSError as e:
            raise InputParseError(f"cannot read {path}: {e}") from e

    @classmethod
    def from_matrix_set(cls, s: MatrixSet) -> "InputDocument":
        return cls(
            dimension=s.dim,
            matrices=[[[format_rational(value) for value in row] for row in m.entries] for m in s.matrices],
            encoding="rational",
        )

    def to_matrix_set(self) -> MatrixSet:
        return MatrixSet(tuple(Matrix.from_rows(grid) for grid in self.matrices))
