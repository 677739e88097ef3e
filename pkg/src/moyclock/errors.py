"""Shared exception types."""

from __future__ import annotations

from typing import Optional


class TheoremViolation(Exception):
    """A verified mathematical invariant failed on a concrete instance.

    Carries a witness payload (graph JSON plus offending data) so the case
    can be replayed.  Distinct from bad input: if this fires on valid input,
    either the implementation has a bug or the instance is a counterexample
    worth keeping.
    """

    def __init__(self, check: str, witness: dict, message: Optional[str] = None):
        self.check = check
        self.witness = witness
        super().__init__(message or f"theorem violation: {check}")
