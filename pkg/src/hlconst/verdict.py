from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    """Outcome of a numerical check.

    ``value`` is the measured quantity the check was decided on (a norm, a
    ratio, the smallest sampled value); ``violations`` lists offending inputs.
    """

    passed: bool
    value: float
    violations: tuple = field(default_factory=tuple)
    note: str = ""

    def __bool__(self) -> bool:
        return self.passed
