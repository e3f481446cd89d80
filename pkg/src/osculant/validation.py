"""Input coercion shared by the estimator facade and scripting callers."""

from __future__ import annotations

from .catalog import catalog_get
from .jets import MODES, Parametrization
from .parser import parametrization_from_dict, parse_parametrization


def check_parametrization(obj) -> Parametrization:
    """Accept a Parametrization, an input-document dict, its JSON text or a catalog name."""
    if isinstance(obj, Parametrization):
        return obj
    if isinstance(obj, dict):
        return parametrization_from_dict(obj)
    if isinstance(obj, str):
        text = obj.strip()
        if text.startswith("{"):
            return parse_parametrization(text)
        return catalog_get(text).parametrization
    raise TypeError(f"cannot interpret {type(obj).__name__} as a parametrization")


def check_parametrizations(X) -> list[Parametrization]:
    if isinstance(X, (str, dict, Parametrization)):
        raise TypeError("expected a sequence of parametrizations, got a single one")
    out = [check_parametrization(x) for x in X]
    if not out:
        raise ValueError("empty input: at least one parametrization is required")
    return out


def check_order(t, name: str = "order", low: int = 1, high: int | None = None) -> int:
    if isinstance(t, bool) or not isinstance(t, int):
        raise TypeError(f"{name} must be an int")
    if t < low or (high is not None and t > high):
        bound = f"{low}..{high}" if high is not None else f">= {low}"
        raise ValueError(f"{name} must lie in {bound}, got {t}")
    return t


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode
