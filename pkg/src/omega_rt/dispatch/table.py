"""Closed-world call-site dispatch with fixed worst-case probe counts.

The complete target set for a call site is known up front, so the lookup
strategy is chosen once, offline, by target count alone:

  1 target            -> monomorphic, the type check is elided (0 probes)
  <= inline_max (4)   -> inline compare chain, probes <= chain length
  <= linear_max (64)  -> sorted contiguous array scan, probes <= length
  otherwise           -> two-choice hash table laid out offline so every
                         entry lands within 2 probes, retrying seeds until
                         the layout works

`resolve` on a type outside the set raises UnknownType: that is a
closed-world violation upstream and is surfaced, never masked.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

_U64 = (1 << 64) - 1


class EmptySpec(ValueError):
    pass


class HashLayoutFailure(RuntimeError):
    pass


class UnknownType(LookupError):
    pass


class Strategy(str, Enum):
    MONOMORPHIC = "monomorphic"
    INLINE_CHAIN = "inline_chain"
    LINEAR_TABLE = "linear_table"
    HASHED_TABLE = "hashed_table"


@dataclass(frozen=True)
class CallSiteSpec:
    """The complete (type_id, impl_id) target set for one call site."""

    targets: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.targets:
            raise EmptySpec("call site needs at least one target")
        tids = [t for t, _ in self.targets]
        if len(set(tids)) != len(tids):
            raise ValueError("duplicate type_id in call site spec")

    @classmethod
    def of(cls, pairs) -> "CallSiteSpec":
        return cls(tuple((int(t), int(i)) for t, i in pairs))


def _mix(type_id: int, seed: int) -> int:
    # splitmix64-style finalizer; pure integer ops, stable everywhere.
    x = (type_id * 0x9E3779B97F4A7C15 + seed * 0xD1B54A32D192ED03 + 0x2545F4914F6CDD1D) & _U64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _U64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _U64
    x ^= x >> 31
    return x


def _slot_pair(type_id: int, seed: int, mask: int) -> tuple[int, int]:
    x = _mix(type_id, seed)
    h1 = x & mask
    h2 = (x >> 32) & mask
    if h2 == h1:
        h2 = (h1 + 1) & mask
    return h1, h2


def _layout_hashed(targets, seed_retry_limit):
    n = len(targets)
    size = 1 << (2 * n - 1).bit_length()  # load factor <= 0.5
    mask = size - 1
    ordered = sorted(targets)  # deterministic placement independent of spec order
    for seed in range(seed_retry_limit):
        slots: list = [None] * size
        ok = True
        for tid, impl in ordered:
            # Cuckoo-style insert: each key may sit in one of its two slots.
            entry = (tid, impl)
            kicks = 0
            while True:
                h1, h2 = _slot_pair(entry[0], seed, mask)
                if slots[h1] is None:
                    slots[h1] = entry
                    break
                if slots[h2] is None:
                    slots[h2] = entry
                    break
                kicks += 1
                if kicks > 4 * n + 16:
                    ok = False
                    break
                victim = slots[h2]
                slots[h2] = entry
                entry = victim
            if not ok:
                break
        if ok:
            return seed, mask, slots
    raise HashLayoutFailure(f"no 2-probe layout within {seed_retry_limit} seeds")


class DispatchTable:
    __slots__ = ("strategy", "worst_case_probes", "_mono", "_chain",
                 "_tids", "_impls", "_seed", "_mask", "_slots")

    def __init__(self, strategy, worst_case_probes):
        self.strategy = strategy
        self.worst_case_probes = worst_case_probes
        self._mono = None
        self._chain = None
        self._tids = None
        self._impls = None
        self._seed = None
        self._mask = None
        self._slots = None

    def resolve(self, type_id: int) -> int:
        impl, _ = self.resolve_with_probes(type_id)
        return impl

    def resolve_with_probes(self, type_id: int) -> tuple[int, int]:
        """Resolve and report the probe count actually spent.

        Monomorphic sites report 0 probes: with a singleton target set the
        emitted code needs no type check. The membership test still runs
        here (standing in for the upstream type system's guarantee) but is
        not a dispatch probe.
        """
        s = self.strategy
        if s is Strategy.MONOMORPHIC:
            tid, impl = self._mono
            if type_id != tid:
                raise UnknownType(f"type {type_id} not in call site set")
            return impl, 0
        if s is Strategy.INLINE_CHAIN:
            probes = 0
            for tid, impl in self._chain:
                probes += 1
                if tid == type_id:
                    return impl, probes
            raise UnknownType(f"type {type_id} not in call site set")
        if s is Strategy.LINEAR_TABLE:
            tids = self._tids
            probes = 0
            for pos in range(len(tids)):
                probes += 1
                t = tids[pos]
                if t == type_id:
                    return self._impls[pos], probes
                if t > type_id:
                    break
            raise UnknownType(f"type {type_id} not in call site set")
        # hashed
        h1, h2 = _slot_pair(type_id, self._seed, self._mask)
        e = self._slots[h1]
        if e is not None and e[0] == type_id:
            return e[1], 1
        e = self._slots[h2]
        if e is not None and e[0] == type_id:
            return e[1], 2
        raise UnknownType(f"type {type_id} not in call site set")


def build(spec: CallSiteSpec, inline_max: int = 4, linear_max: int = 64,
          seed_retry_limit: int = 10**6) -> DispatchTable:
    """Pick the strategy from the target count and lay the table out."""
    targets = spec.targets
    n = len(targets)
    if n == 1:
        table = DispatchTable(Strategy.MONOMORPHIC, 0)
        table._mono = targets[0]
        return table
    if n <= inline_max:
        table = DispatchTable(Strategy.INLINE_CHAIN, n)
        table._chain = targets  # spec order, like an emitted compare chain
        return table
    if n <= linear_max:
        table = DispatchTable(Strategy.LINEAR_TABLE, n)
        ordered = sorted(targets)
        table._tids = tuple(t for t, _ in ordered)
        table._impls = tuple(i for _, i in ordered)
        return table
    seed, mask, slots = _layout_hashed(targets, seed_retry_limit)
    table = DispatchTable(Strategy.HASHED_TABLE, 2)
    table._seed = seed
    table._mask = mask
    table._slots = tuple(slots)
    return table
