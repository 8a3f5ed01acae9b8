import logging
import sys

from src.config import settings

_configured = False


def get_logger(name: str) -> logging.Logger:
    global _configured
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("[%(name)s] - %(message)s"))
        root = logging.getLogger("jsr")
        root.addHandler(handler)
        root.setLevel(settings.log_level.upper())
        root.propagate = False
        _configured = True

    return logging.getLogger(f"jsr.{name}")
