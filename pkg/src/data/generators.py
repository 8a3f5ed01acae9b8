from fractions import Fraction
from typing import Dict, Sequence

import numpy as np

from src.core import Matrix, MatrixSet


def jordan_block() -> MatrixSet:
    """{[[1, 1], [0, 1]]}: ρ = 1 while ‖Aⁿ‖ = n."""
    return MatrixSet.of([[1, 1], [0, 1]])


def scaled_pair(N: int = 10) -> MatrixSet:
    """{[[1, 1/N], [N, 1]]}: Aⁿ = 2ⁿ⁻¹A, so ρ = 2 while the first norm is N."""
    return MatrixSet.of([[1, Fraction(1, N)], [N, 1]])


def paper_examples() -> Dict[str, MatrixSet]:
    return {
        "jordan_block": jordan_block(),
        "scaled_pair": scaled_pair(),
        "identity": MatrixSet.of([[1, 0], [0, 1]]),
        "diagonal_2_1": MatrixSet.of([[2, 0], [0, 1]]),
        "zero": MatrixSet.of([[0, 0], [0, 0]]),
        "nilpotent_pair": MatrixSet.of([[0, 1], [0, 0]], [[0, 0], [1, 0]]),
        "coordinate_projections": MatrixSet.of([[1, 0], [0, 0]], [[0, 0], [0, 1]]),
        "shear_pair": MatrixSet.of([[1, 1], [0, 1]], [[1, 0], [1, 1]]),
    }


def _random_entry(rng: np.random.Generator, max_entry: int, max_denominator: int) -> Fraction:
    denominator = int(rng.integers(1, max_denominator + 1))
    return Fraction(int(rng.integers(1, max_entry * denominator + 1)), denominator)


def random_matrix(rng: np.random.Generator, dim: int, density: float = 0.6, max_entry: int = 3,
                  max_denominator: int = 4) -> Matrix:
    return Matrix(tuple(
        tuple(_random_entry(rng, max_entry, max_denominator) if rng.random() < density else Fraction(0)
              for _ in range(dim))
        for _ in range(dim)
    ))


def random_matrix_set(rng: np.random.Generator, dim: int, size: int, density: float = 0.6, max_entry: int = 3,
                      max_denominator: int = 4) -> MatrixSet:
    """Random rationals in (0, max_entry] with small denominators; never the all-zero set."""
    while True:
        s = MatrixSet(tuple(random_matrix(rng, dim, density, max_entry, max_denominator) for _ in range(size)))
        if not s.all_zero:
            return s


def random_connected_set(rng: np.random.Generator, dim: int, size: int, density: float = 0.4,
                         max_entry: int = 3, max_denominator: int = 4) -> MatrixSet:
    """Like random_matrix_set, with the cycle 0 -> 1 -> ... -> D-1 -> 0 planted in the first matrix."""
    s = random_matrix_set(rng, dim, size, density, max_entry, max_denominator)
    first = [list(row) for row in s.matrices[0].entries]
    for i in range(dim):
        j = (i + 1) % dim
        if first[i][j] == 0:
            first[i][j] = _random_entry(rng, max_entry, max_denominator)

    return MatrixSet((Matrix(tuple(tuple(row) for row in first)),) + s.matrices[1:])


def block_triangular_set(diagonal: Sequence, couplings: Sequence[tuple[int, int]]) -> MatrixSet:
    """
    One upper-triangular matrix with the given diagonal and unit entries at `couplings`.

    Every vertex is its own component with λ equal to its diagonal value, so
    the growth order can be counted by hand from the couplings.
    """
    dim = len(diagonal)
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i, value in enumerate(diagonal):
        rows[i][i] = Fraction(value)
    for i, j in couplings:
        if not i < j:
            raise ValueError(f"coupling {i}->{j} is not above the diagonal")
        rows[i][j] = Fraction(1)

    return MatrixSet((Matrix(tuple(tuple(row) for row in rows)),))
