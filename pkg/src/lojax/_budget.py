"""Search budgets, overridable through the ``LOJAX_BUDGET`` environment variable."""
import os


def budget(default: int) -> int:
    raw = os.environ.get("LOJAX_BUDGET")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"LOJAX_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("LOJAX_BUDGET must be positive")
    return value
