"""Size limits for the exponential routines.

Every routine that can blow up takes an explicit limit and raises
:class:`GuardError` instead of running away.
"""
from __future__ import annotations

from dataclasses import dataclass


class GuardError(ValueError):
    """Raised when an input exceeds a configured size limit."""


@dataclass(frozen=True)
class Guards:
    graph_max_n: int = 24
    codegree_max_n: int = 16
    ehrhart_max_n: int = 8
    facet_max_n: int = 12
    lp_lattice_max_n: int = 5
    odd_subset_max_n: int = 16
    sweep_max_n: int = 7

    def __post_init__(self) -> None:
        for name, value in vars(self).items():
            if value <= 0:
                raise ValueError(f"guard {name} must be positive, got {value}")


DEFAULT_GUARDS = Guards()


def check(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise GuardError(f"{what}: size {value} exceeds limit {limit}")
