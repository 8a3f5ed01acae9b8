from . import bound, converge, growth, selftest

__all__ = ["bound", "converge", "growth", "selftest"]
