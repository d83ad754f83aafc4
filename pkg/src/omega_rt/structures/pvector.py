"""Persistent vector backed by a 32-way branching trie.

There is deliberately no tail buffer and no resize path: every operation
walks one node per level (at most depth+1 visits), so the cost of a call
never depends on how the vector was built. Updates copy only the
root-to-leaf path; siblings are shared between versions.
"""

from __future__ import annotations

from typing import Any, Iterator

from . import instrument

BRANCH = 32
SHIFT = 5
MASK = BRANCH - 1


class IndexOutOfBounds(IndexError):
    pass


class PopEmpty(IndexError):
    pass


def _spine(levels: int, value: Any) -> tuple:
    # A minimal path of `levels` interior nodes above a single-element leaf.
    node: tuple = (value,)
    for _ in range(levels):
        node = (node,)
    return node


def _push(node: tuple, depth: int, index: int, value: Any) -> tuple:
    instrument.visit()
    if depth == 0:
        return node + (value,)
    i = (index >> (SHIFT * depth)) & MASK
    if i == len(node):
        return node + (_spine(depth - 1, value),)
    return node[:i] + (_push(node[i], depth - 1, index, value),)


def _set(node: tuple, depth: int, index: int, value: Any) -> tuple:
    instrument.visit()
    if depth == 0:
        i = index & MASK
        return node[:i] + (value,) + node[i + 1:]
    i = (index >> (SHIFT * depth)) & MASK
    return node[:i] + (_set(node[i], depth - 1, index, value),) + node[i + 1:]


def _pop(node: tuple, depth: int, index: int) -> tuple:
    # Removes (and returns) the last element in a single walk.
    instrument.visit()
    if depth == 0:
        return node[:-1], node[-1]
    i = (index >> (SHIFT * depth)) & MASK
    child, value = _pop(node[i], depth - 1, index)
    if not child:
        return node[:i], value
    return node[:i] + (child,), value


class PVector:
    """Immutable sequence; mutating-style methods return a new version."""

    __slots__ = ("_root", "_depth", "_count")

    def __init__(self, root: tuple = (), depth: int = 0, count: int = 0):
        self._root = root
        self._depth = depth
        self._count = count

    @classmethod
    def of(cls, items) -> "PVector":
        """Bulk build, bottom-up; same canonical shape as repeated push."""
        leaves = [tuple(items[i:i + BRANCH]) for i in range(0, len(items), BRANCH)]
        if not leaves:
            return _EMPTY
        depth = 0
        level: list = leaves
        while len(level) > 1:
            level = [tuple(level[i:i + BRANCH]) for i in range(0, len(level), BRANCH)]
            depth += 1
        return cls(level[0], depth, len(items))

    def __len__(self) -> int:
        return self._count

    @property
    def depth(self) -> int:
        return self._depth

    def get(self, index: int) -> Any:
        if not 0 <= index < self._count:
            raise IndexOutOfBounds(f"index {index} out of range for count {self._count}")
        node = self._root
        for level in range(self._depth, 0, -1):
            instrument.visit()
            node = node[(index >> (SHIFT * level)) & MASK]
        instrument.visit()
        return node[index & MASK]

    def set(self, index: int, value: Any) -> "PVector":
        if not 0 <= index < self._count:
            raise IndexOutOfBounds(f"index {index} out of range for count {self._count}")
        return PVector(_set(self._root, self._depth, index, value), self._depth, self._count)

    def push(self, value: Any) -> "PVector":
        cnt = self._count
        if cnt == 0:
            instrument.visit()
            return PVector((value,), 0, 1)
        if cnt == BRANCH ** (self._depth + 1):
            instrument.visit()
            return PVector((self._root, _spine(self._depth, value)), self._depth + 1, cnt + 1)
        return PVector(_push(self._root, self._depth, cnt, value), self._depth, cnt + 1)

    def pop(self) -> tuple["PVector", Any]:
        if self._count == 0:
            raise PopEmpty("pop from empty vector")
        root, last = _pop(self._root, self._depth, self._count - 1)
        if self._count == 1:
            return _EMPTY, last
        depth = self._depth
        while depth > 0 and len(root) == 1:
            root = root[0]
            depth -= 1
        return PVector(root, depth, self._count - 1), last

    def __iter__(self) -> Iterator[Any]:
        def walk(node, depth):
            if depth == 0:
                yield from node
            else:
                for child in node:
                    yield from walk(child, depth - 1)

        if self._count:
            yield from walk(self._root, self._depth)

    def to_list(self) -> list:
        return list(self)

    def __repr__(self) -> str:
        return f"PVector(len={self._count})"


_EMPTY = PVector()


def empty() -> PVector:
    return _EMPTY
