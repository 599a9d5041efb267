__all__ = [
    "settings",
    "observability",
]
