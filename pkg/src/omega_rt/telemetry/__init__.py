"""Constant-overhead observability primitives."""

from .histogram import EmptyHistogram, LatencyHistogram
from .ring import RING_COLUMNS, GcEventRing

__all__ = ["EmptyHistogram", "GcEventRing", "LatencyHistogram", "RING_COLUMNS"]
