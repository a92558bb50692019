from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional


@dataclass
class CheckResult:
    """Outcome of a bounded mechanical check.

    ``failure`` describes the first violation found (None when ``ok``);
    ``checked`` counts the elementary comparisons made, so an empty run is
    distinguishable from a passing one.
    """

    ok: bool
    checked: int = 0
    failure: Optional[str] = None
    data: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self):
        return self.ok
