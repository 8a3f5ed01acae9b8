from functools import wraps
from time import perf_counter
from typing import Any, Callable, Optional

from src.utils.logger import get_logger

logger = get_logger("timer")


def execution_timer(name: Optional[str] = None) -> Callable:
    """Logs the wall time of every call in ms, also when the call raises."""

    def decorator(func: Callable) -> Callable:
        label = name or func.__qualname__

        @wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            start = perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                logger.info(f"{label} took {(perf_counter() - start) * 1000:.1f}ms")

        return wrapper

    return decorator
