import random

import pytest

from omega_rt.telemetry import EmptyHistogram, GcEventRing, LatencyHistogram


class TestHistogram:
    def test_below_min_clamps_without_overflow(self):
        h = LatencyHistogram(min_value=100, max_value=10_000)
        h.record(0)
        assert h.count == 1
        assert h.overflow_count == 0
        low, _ = h.bucket_bounds(h._index(h.min_value))
        assert h.quantile(0.5) >= low

    def test_above_max_clamps_and_counts(self):
        h = LatencyHistogram(min_value=100, max_value=10_000)
        h.record(20_000)
        assert h.overflow_count == 1
        assert h.count == 1

    def test_single_value_quantile_within_precision(self):
        h = LatencyHistogram(min_value=1, max_value=10**9, precision=0.01)
        v = 123_456
        h.record(v)
        assert abs(h.quantile(0.5) - v) / v <= 0.01

    def test_representatives_within_relative_error(self):
        h = LatencyHistogram(min_value=1, max_value=10**7, precision=0.01)
        rng = random.Random(4)
        values = [rng.randrange(1, 10**6) for _ in range(100_000)]
        for v in values:
            h.record(v)
        # Replay: the bucket each value landed in represents it within 1%.
        for v in values[:2000]:
            rep = h._representative(h._index(v))
            assert abs(rep - v) / v <= 0.01

    def test_quantile_against_sorted_oracle(self):
        h = LatencyHistogram(min_value=1, max_value=10**6, precision=0.01)
        values = list(range(1, 1001))
        for v in values:
            h.record(v)
        exact = sorted(values)
        for q in (0.5, 0.95, 0.99):
            want = exact[min(len(exact) - 1, int(q * len(exact)) - 1)]
            got = h.quantile(q)
            assert abs(got - want) / want <= 0.02
        assert abs(h.quantile(0.99) - 990) / 990 <= 0.01

    def test_quantile_empty_raises(self):
        with pytest.raises(EmptyHistogram):
            LatencyHistogram().quantile(0.5)

    def test_no_growth(self):
        h = LatencyHistogram(min_value=1, max_value=10**9)
        before = h.bucket_count
        for v in (1, 5, 10**9, 10**12, 0):
            h.record(v)
        assert h.bucket_count == before

    def test_export_csv(self):
        h = LatencyHistogram(min_value=1, max_value=1000)
        assert h.export_csv() == "bucket_low,bucket_high,count\n"
        h.record(17)
        lines = h.export_csv().strip().split("\n")
        assert len(lines) == 2
        low, high, count = (int(x) for x in lines[1].split(","))
        assert low <= 17 < high or low <= 17 <= high
        assert count == 1


class TestRing:
    def test_wraps_keeping_newest(self):
        ring = GcEventRing(capacity=16)
        for i in range(26):
            ring.append(i, i, 0, 0, 0, 0)
        rows = ring.rows()
        assert len(rows) == 16
        assert rows[0][0] == 10  # oldest retained seq
        assert rows[-1][0] == 25

    def test_export_exactly_capacity_rows(self):
        ring = GcEventRing(capacity=8)
        for i in range(8 + 10):
            ring.append(i * 100, 1, 2, 3, 4, 5)
        lines = ring.export_csv().strip().split("\n")
        assert lines[0] == ("seq,timestamp_ns,pause_work_units,objects_evacuated,"
                            "decrements_processed,objects_released,footprint_bytes")
        assert len(lines) == 1 + 8
        seqs = [int(line.split(",")[0]) for line in lines[1:]]
        assert seqs == list(range(10, 18))

    def test_constant_footprint(self):
        ring = GcEventRing(capacity=64)
        for i in range(1000):
            ring.append(i, 0, 0, 0, 0, 0)
        size_1k = len(ring._rows)
        for i in range(1_000_000 - 1000):
            ring.append(i, 0, 0, 0, 0, 0)
        assert len(ring._rows) == size_1k
        assert len(ring) == 64
