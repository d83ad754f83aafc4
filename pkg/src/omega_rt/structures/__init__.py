"""Bounded-variance data structures and algorithms."""

from .instrument import StepCounter, counting
from .omap import OrderedMap
from .pvector import IndexOutOfBounds, PopEmpty, PVector, empty
from .sorting import stable_sort

__all__ = [
    "IndexOutOfBounds",
    "OrderedMap",
    "PVector",
    "PopEmpty",
    "StepCounter",
    "counting",
    "empty",
    "stable_sort",
]
