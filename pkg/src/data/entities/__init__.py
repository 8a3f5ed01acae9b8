from .input_document import InputDocument

__all__ = ["InputDocument"]
