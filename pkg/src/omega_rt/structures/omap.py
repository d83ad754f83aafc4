"""Persistent ordered map: height-balanced search tree with path copying.

Chosen over a hash table so there is no rehash pause and no hash-flooding
variance; lookups are worst-case logarithmic and enumeration is strictly
key-ascending on every platform. Prior versions stay valid after updates.

Nodes are `(key, value, height, left, right)` tuples; `None` is the empty
tree. Instrumented "node visits" count nodes examined while descending
(path reconstruction revisits the same nodes and is not re-counted).
"""

from __future__ import annotations

import operator
from typing import Any, Callable, Iterator, Optional

from . import instrument

_MISSING = object()


def _h(node) -> int:
    return 0 if node is None else node[2]


def _join(k, v, left, right):
    return (k, v, max(_h(left), _h(right)) + 1, left, right)


def _rebalance(k, v, left, right):
    hl = _h(left)
    hr = _h(right)
    if hl - hr > 1:
        lk, lv, _, ll, lr = left
        if _h(ll) >= _h(lr):
            return _join(lk, lv, ll, _join(k, v, lr, right))
        lrk, lrv, _, lrl, lrr = lr
        return _join(lrk, lrv, _join(lk, lv, ll, lrl), _join(k, v, lrr, right))
    if hr - hl > 1:
        rk, rv, _, rl, rr = right
        if _h(rr) >= _h(rl):
            return _join(rk, rv, _join(k, v, left, rl), rr)
        rlk, rlv, _, rll, rlr = rl
        return _join(rlk, rlv, _join(k, v, left, rll), _join(rk, rv, rlr, rr))
    return _join(k, v, left, right)


def _insert(node, less, key, value):
    if node is None:
        return (key, value, 1, None, None), 1
    instrument.visit()
    k, v, h, left, right = node
    if less(key, k):
        new_left, added = _insert(left, less, key, value)
        return _rebalance(k, v, new_left, right), added
    if less(k, key):
        new_right, added = _insert(right, less, key, value)
        return _rebalance(k, v, left, new_right), added
    return (key, value, h, left, right), 0


def _take_min(node):
    # Returns (min_key, min_value, remainder).
    instrument.visit()
    k, v, _, left, right = node
    if left is None:
        return k, v, right
    mk, mv, rest = _take_min(left)
    return mk, mv, _rebalance(k, v, rest, right)


def _remove(node, less, key):
    if node is None:
        return None, 0
    instrument.visit()
    k, v, _, left, right = node
    if less(key, k):
        new_left, removed = _remove(left, less, key)
        if not removed:
            return node, 0
        return _rebalance(k, v, new_left, right), removed
    if less(k, key):
        new_right, removed = _remove(right, less, key)
        if not removed:
            return node, 0
        return _rebalance(k, v, left, new_right), removed
    if left is None:
        return right, 1
    if right is None:
        return left, 1
    mk, mv, rest = _take_min(right)
    return _rebalance(mk, mv, left, rest), 1


class OrderedMap:
    """Immutable map over a caller-supplied strict total order."""

    __slots__ = ("_root", "_count", "_less")

    def __init__(self, less: Optional[Callable[[Any, Any], bool]] = None,
                 _root=None, _count: int = 0):
        self._less = less if less is not None else operator.lt
        self._root = _root
        self._count = _count

    def __len__(self) -> int:
        return self._count

    @property
    def height(self) -> int:
        return _h(self._root)

    def insert(self, key, value) -> "OrderedMap":
        root, added = _insert(self._root, self._less, key, value)
        return OrderedMap(self._less, root, self._count + added)

    def remove(self, key) -> "OrderedMap":
        root, removed = _remove(self._root, self._less, key)
        if not removed:
            return self
        return OrderedMap(self._less, root, self._count - 1)

    def find(self, key, default=None):
        less = self._less
        node = self._root
        while node is not None:
            instrument.visit()
            k = node[0]
            if less(key, k):
                node = node[3]
            elif less(k, key):
                node = node[4]
            else:
                return node[1]
        return default

    def __contains__(self, key) -> bool:
        return self.find(key, _MISSING) is not _MISSING

    def items(self) -> Iterator[tuple]:
        """Strictly key-ascending; identical across runs and platforms."""
        stack = []
        node = self._root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node[3]
            node = stack.pop()
            yield node[0], node[1]
            node = node[4]

    def keys(self) -> Iterator:
        return (k for k, _ in self.items())

    def __repr__(self) -> str:
        return f"OrderedMap(len={self._count})"
