"""Desk-scale size limits, lifted by OSCREP_GUARD_OVERRIDE=1."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import SizeGuard


@dataclass(frozen=True)
class Limits:
    max_rank: int = 6
    max_words: int = 20000
    max_entries: int = 5_000_000


DEFAULT_LIMITS = Limits()


def overridden() -> bool:
    return os.environ.get("OSCREP_GUARD_OVERRIDE", "") == "1"


def check_rank(n: int, limits: Limits = DEFAULT_LIMITS) -> None:
    if n > limits.max_rank and not overridden():
        raise SizeGuard(f"n={n} exceeds the rank guard {limits.max_rank}")


def check_words(count: int, limits: Limits = DEFAULT_LIMITS) -> None:
    if count > limits.max_words and not overridden():
        raise SizeGuard(f"{count} words exceed the guard {limits.max_words}")


def check_entries(count: int, limits: Limits = DEFAULT_LIMITS) -> None:
    if count > limits.max_entries and not overridden():
        raise SizeGuard(f"{count} matrix entries exceed the guard {limits.max_entries}")
