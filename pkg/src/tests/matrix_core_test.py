from decimal import Decimal
from fractions import Fraction

import numpy as np
import pytest

from src.core import Matrix, MatrixSet, format_rational, max_norm, multiply, parse_scalar, set_constants, to_decimal
from src.data.generators import random_matrix
from src.exceptions import (ConstantsUndefinedError, DimensionMismatchError, InputParseError, NegativeEntryError)


@pytest.mark.parametrize("value, expected", [
    ("1/10", Fraction(1, 10)),
    ("0.125", Fraction(1, 8)),
    ("3", Fraction(3)),
    (7, Fraction(7)),
    ("1e-3", Fraction(1, 1000)),
    (" 2/4 ", Fraction(1, 2)),
])
def test_parse_scalar(value, expected):
    assert parse_scalar(value) == expected


@pytest.mark.parametrize("value", ["abc", "1/0", 0.5, True])
def test_parse_scalar_rejects(value):
    with pytest.raises(InputParseError):
        parse_scalar(value)


def test_parse_scalar_negative():
    with pytest.raises(NegativeEntryError):
        parse_scalar("-1/2")


def test_format_rational_is_always_a_fraction():
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(2, 6)) == "1/3"


def test_to_decimal_rounds_outward():
    third = Fraction(1, 3)
    down, up = to_decimal(third, "down"), to_decimal(third, "up")

    assert down == Decimal("0.333333333333333")
    assert up == Decimal("0.333333333333334")
    assert down < third < up
    assert to_decimal(Fraction(2), "up") == 2


def test_matrix_validation():
    with pytest.raises(DimensionMismatchError):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(NegativeEntryError):
        Matrix(((Fraction(1), Fraction(-1)), (Fraction(0), Fraction(1))))


def test_multiply_is_exact():
    a = Matrix.from_rows([[1, "1/10"], [10, 1]])
    product = multiply(a, a)

    assert product.entries == ((Fraction(2), Fraction(1, 5)), (Fraction(20), Fraction(2)))
    assert all(isinstance(v, Fraction) for row in product.entries for v in row)
    assert max_norm(product) == 20


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        multiply(Matrix.identity(2), Matrix.identity(3))


def test_matrix_helpers():
    m = Matrix.from_rows([[0, 2], [1, 0]])

    assert m.dim == 2
    assert m[0, 1] == 2
    assert m.support() == ((False, True), (True, False))
    assert m.positive_entries() == [2, 1]
    assert Matrix.zeros(2).is_zero
    assert Matrix.zeros(2).is_dominated_by(m)
    assert not m.is_dominated_by(Matrix.identity(2))
    assert m.restrict([1]).entries == ((Fraction(0),),)


def test_to_float():
    m = Matrix.from_rows([[1, "1/4"], [0, 2]]).to_float()

    assert not m.is_exact
    assert m.entries == ((1.0, 0.25), (0.0, 2.0))


def test_matrix_set_requires_common_dimension():
    with pytest.raises(DimensionMismatchError):
        MatrixSet((Matrix.identity(2), Matrix.identity(3)))
    with pytest.raises(DimensionMismatchError):
        MatrixSet(())


def test_set_constants():
    s = MatrixSet.of([[1, "1/10"], [10, 1]])
    constants = set_constants(s)

    assert constants.U == 10
    assert constants.V == Fraction(1, 10)
    assert constants.K == Fraction(1, 200) ** 2


def test_set_constants_jordan():
    constants = set_constants(MatrixSet.of([[1, 1], [0, 1]]))

    assert (constants.U, constants.V, constants.K) == (1, 1, Fraction(1, 4))


def test_set_constants_undefined_for_zero_set():
    with pytest.raises(ConstantsUndefinedError):
        set_constants(MatrixSet.of([[0, 0], [0, 0]]))


def test_entrywise_max_and_digest():
    s = MatrixSet.of([[1, 0], [0, 0]], [[0, 0], [0, 3]])

    assert s.entrywise_max().entries == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(3)))
    assert s.digest() == MatrixSet.of([[1, 0], [0, 0]], [[0, 0], [0, 3]]).digest()
    assert s.digest() != MatrixSet.of([[0, 0], [0, 3]], [[1, 0], [0, 0]]).digest()


@pytest.mark.parametrize("seed", range(10))
def test_multiply_is_associative(seed):
    rng = np.random.default_rng(1000 + seed)
    dim = int(rng.integers(1, 5))
    a, b, c = (random_matrix(rng, dim) for _ in range(3))

    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@pytest.mark.parametrize("seed", range(10))
def test_multiply_is_monotone(seed):
    rng = np.random.default_rng(1100 + seed)
    dim = int(rng.integers(1, 5))
    p, r = random_matrix(rng, dim), random_matrix(rng, dim)
    q = Matrix.from_array(p.array + random_matrix(rng, dim, density=0.5).array)

    assert p.is_dominated_by(q)
    assert multiply(p, r).is_dominated_by(multiply(q, r))
    assert multiply(r, p).is_dominated_by(multiply(r, q))
    assert max_norm(multiply(p, r)) <= max_norm(multiply(q, r))
