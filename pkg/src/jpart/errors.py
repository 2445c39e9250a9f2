"""Exception types shared across the package.

Two failure classes are kept apart deliberately: bad input is the caller's
problem (plain ``ValueError``), while a violated internal guarantee means the
underlying combinatorial argument failed on a concrete instance.  The second
kind must never be repaired silently -- it is exactly the evidence one would
need to refute the construction -- so it carries its own exception type with
a diagnostic payload.
"""

from __future__ import annotations

from typing import Any


class CounterexampleError(RuntimeError):
    """An internal step that the theory certifies as always possible failed.

    Raised e.g. when a pivot vertex guaranteed by a parity argument does not
    exist, or when a constructed bisection misses its certified degree bound.
    ``details`` holds the offending instance for post-mortem analysis.
    """

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = dict(details)

    def __str__(self) -> str:
        base = super().__str__()
        if not self.details:
            return base
        extra = ", ".join(f"{k}={v!r}" for k, v in sorted(self.details.items()))
        return f"{base} [{extra}]"
