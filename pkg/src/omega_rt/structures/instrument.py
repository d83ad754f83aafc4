"""Operation-cost instrumentation for the structures module.

Counters are scoped with `counting()`; when no scope is active the hooks
are near-free. Tests use them to assert worst-case visit bounds on every
single operation rather than on averages.
"""

from __future__ import annotations

from contextlib import contextmanager


class StepCounter:
    """Node-visit and comparison tallies for one instrumented scope."""

    __slots__ = ("node_visits", "comparisons")

    def __init__(self) -> None:
        self.node_visits = 0
        self.comparisons = 0

    def reset(self) -> None:
        self.node_visits = 0
        self.comparisons = 0


_active: StepCounter | None = None


def visit(n: int = 1) -> None:
    if _active is not None:
        _active.node_visits += n


def compared(n: int = 1) -> None:
    if _active is not None:
        _active.comparisons += n


@contextmanager
def counting(counter: StepCounter | None = None):
    """Activate a counter for the dynamic extent of the block."""
    global _active
    if counter is None:
        counter = StepCounter()
    prev = _active
    _active = counter
    try:
        yield counter
    finally:
        _active = prev
