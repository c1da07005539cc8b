from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decider; a negative answer always carries its counterexample."""

    holds: bool
    witness: tuple[int, ...] | None = None
    method: str = ""

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError(f"negative verdict from {self.method!r} needs a witness")

    def __bool__(self) -> bool:
        return self.holds
