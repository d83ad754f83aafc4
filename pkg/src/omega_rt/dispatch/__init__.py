"""Tiered call-site dispatch tables."""

from .table import (
    CallSiteSpec,
    DispatchTable,
    EmptySpec,
    HashLayoutFailure,
    Strategy,
    UnknownType,
    build,
)

__all__ = [
    "CallSiteSpec",
    "DispatchTable",
    "EmptySpec",
    "HashLayoutFailure",
    "Strategy",
    "UnknownType",
    "build",
]
