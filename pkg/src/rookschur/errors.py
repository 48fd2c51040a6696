class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds the desk-scale bounds of exact arithmetic."""
