"""Stable bottom-up merge sort with a hard comparison bound.

Comparison count never exceeds n*ceil(log2 n) + n on any input: there is
no quadratic fallback, no galloping heuristic, and no input-shape fast
path whose absence would surprise anyone at the tail.
"""

from __future__ import annotations

import operator
from typing import Any, Callable, Iterable, Optional

from . import instrument


def stable_sort(items: Iterable[Any],
                less: Optional[Callable[[Any, Any], bool]] = None) -> list:
    """Sort into a new list; equal elements keep their input order."""
    if less is None:
        less = operator.lt
    src = list(items)
    n = len(src)
    if n < 2:
        return src
    dst = src[:]
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = lo + width
            if mid >= n:
                dst[lo:n] = src[lo:n]
                continue
            hi = min(lo + 2 * width, n)
            i, j = lo, mid
            for k in range(lo, hi):
                if i < mid:
                    if j < hi:
                        instrument.compared()
                        if less(src[j], src[i]):
                            dst[k] = src[j]
                            j += 1
                        else:
                            dst[k] = src[i]
                            i += 1
                    else:
                        dst[k] = src[i]
                        i += 1
                else:
                    dst[k] = src[j]
                    j += 1
        src, dst = dst, src
        width *= 2
    return src
