from .scalar import Scalar, Number, parse_scalar, format_rational, to_decimal
from .matrix import Matrix, multiply, max_norm, entrywise_max
from .matrix_set import MatrixSet, SetConstants, set_constants

__all__ = ["Scalar", "Number", "parse_scalar", "format_rational", "to_decimal", "Matrix", "multiply", "max_norm",
           "entrywise_max", "MatrixSet", "SetConstants", "set_constants"]
