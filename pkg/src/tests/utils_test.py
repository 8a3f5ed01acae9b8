import logging

import pytest

from src.utils import decorators
from src.utils.decorators import execution_timer


class _Messages(logging.Handler):

    def __init__(self):
        super().__init__(level=logging.INFO)
        self.messages = []

    def emit(self, record: logging.LogRecord) -> None:
        self.messages.append(record.getMessage())


@pytest.fixture
def timer_messages():
    handler = _Messages()
    level = decorators.logger.level
    decorators.logger.addHandler(handler)
    decorators.logger.setLevel(logging.INFO)
    yield handler.messages
    decorators.logger.removeHandler(handler)
    decorators.logger.setLevel(level)


def test_execution_timer_logs_the_label(timer_messages):
    @execution_timer("Bounds")
    def bound(x):
        return x * 2

    assert bound(21) == 42
    assert len(timer_messages) == 1
    assert timer_messages[0].startswith("Bounds took ")
    assert timer_messages[0].endswith("ms")


def test_execution_timer_logs_failed_calls(timer_messages):
    @execution_timer()
    def failing():
        raise ValueError("over budget")

    with pytest.raises(ValueError):
        failing()
    assert timer_messages[0].startswith("test_execution_timer_logs_failed_calls.<locals>.failing took ")
