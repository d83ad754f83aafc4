"""Fixed-capacity ring of collector event snapshots.

Footprint is constant regardless of run length: the newest `capacity`
events are retained, older ones are overwritten in place.
"""

from __future__ import annotations

RING_COLUMNS = ("seq", "timestamp_ns", "pause_work_units", "objects_evacuated",
                "decrements_processed", "objects_released", "footprint_bytes")


class GcEventRing:
    __slots__ = ("capacity", "_rows", "_seq")

    def __init__(self, capacity: int = 4096):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self._rows = [None] * capacity
        self._seq = 0

    def append(self, timestamp_ns: int, pause_work_units: int,
               objects_evacuated: int, decrements_processed: int,
               objects_released: int, footprint_bytes: int) -> int:
        seq = self._seq
        self._rows[seq % self.capacity] = (seq, timestamp_ns, pause_work_units,
                                           objects_evacuated, decrements_processed,
                                           objects_released, footprint_bytes)
        self._seq = seq + 1
        return seq

    def __len__(self) -> int:
        return min(self._seq, self.capacity)

    def rows(self):
        """Retained rows, oldest first."""
        start = max(0, self._seq - self.capacity)
        return [self._rows[i % self.capacity] for i in range(start, self._seq)]

    def export_csv(self) -> str:
        lines = [",".join(RING_COLUMNS)]
        lines.extend(",".join(str(x) for x in row) for row in self.rows())
        return "\n".join(lines) + "\n"
