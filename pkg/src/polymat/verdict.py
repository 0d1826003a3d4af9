from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """A boolean answer carrying an optional witness or certificate."""

    value: bool
    witness: Any = None
    reason: str | None = None

    def __bool__(self):
        return self.value
