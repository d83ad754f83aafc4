"""Log-linear latency histogram with constant-time record.

Major buckets are powers of two; each splits into enough linear
sub-buckets that a bucket representative is within the requested relative
error of anything recorded in it. The bucket array is sized once at
construction: recording never allocates and never rebuckets, so telemetry
cannot perturb the system it measures. Values are integer nanoseconds.
"""

from __future__ import annotations


class EmptyHistogram(ValueError):
    pass


class LatencyHistogram:
    __slots__ = ("min_value", "max_value", "precision", "_sub", "_e_min",
                 "_counts", "_total", "_overflow", "_min_seen", "_max_seen")

    def __init__(self, min_value: int = 100, max_value: int = 10_000_000_000,
                 precision: float = 0.01):
        if min_value < 1 or max_value <= min_value:
            raise ValueError("need 1 <= min_value < max_value")
        if not 0.0 < precision < 1.0:
            raise ValueError("precision must be in (0, 1)")
        self.min_value = min_value
        self.max_value = max_value
        self.precision = precision
        sub = 1
        while 1.0 / (2 * sub) > precision:
            sub <<= 1
        self._sub = sub
        self._e_min = min_value.bit_length() - 1
        e_max = max_value.bit_length() - 1
        self._counts = [0] * ((e_max - self._e_min + 1) * sub)
        self._total = 0
        self._overflow = 0
        self._min_seen = None
        self._max_seen = None

    def _index(self, v: int) -> int:
        e = v.bit_length() - 1
        idx = (e - self._e_min) * self._sub + (((v - (1 << e)) * self._sub) >> e)
        return idx if idx < len(self._counts) else len(self._counts) - 1

    def record(self, value: int) -> None:
        """O(1): one bit_length, a shift, an array bump."""
        v = value
        if v > self.max_value:
            v = self.max_value
            self._overflow += 1
        elif v < self.min_value:
            v = self.min_value
        self._counts[self._index(v)] += 1
        self._total += 1
        if self._min_seen is None or value < self._min_seen:
            self._min_seen = value
        if self._max_seen is None or value > self._max_seen:
            self._max_seen = value

    def bucket_bounds(self, idx: int) -> tuple[int, int]:
        e = self._e_min + idx // self._sub
        s = idx % self._sub
        low = (1 << e) + ((s << e) // self._sub)
        high = (1 << e) + (((s + 1) << e) // self._sub)
        return low, high

    def _representative(self, idx: int) -> int:
        low, high = self.bucket_bounds(idx)
        return (low + high) // 2 if high > low else low

    def quantile(self, q: float) -> int:
        """Representative of the smallest bucket whose cumulative count
        reaches q * total."""
        if self._total == 0:
            raise EmptyHistogram("quantile of empty histogram")
        target = q * self._total
        cum = 0
        last = 0
        for idx, c in enumerate(self._counts):
            if c == 0:
                continue
            cum += c
            last = idx
            if cum >= target:
                return self._representative(idx)
        return self._representative(last)

    @property
    def count(self) -> int:
        return self._total

    @property
    def overflow_count(self) -> int:
        return self._overflow

    @property
    def min_recorded(self):
        return self._min_seen

    @property
    def max_recorded(self):
        return self._max_seen

    @property
    def bucket_count(self) -> int:
        return len(self._counts)

    def export_csv(self) -> str:
        lines = ["bucket_low,bucket_high,count"]
        for idx, c in enumerate(self._counts):
            if c:
                low, high = self.bucket_bounds(idx)
                lines.append(f"{low},{high},{c}")
        return "\n".join(lines) + "\n"
