from .runner import EnumerationRunner

__all__ = ["EnumerationRunner"]
