"""omega-rt: a runtime kernel built for flat tail latency.

Every subsystem trades a little best-case speed for a hard worst-case
bound: the heap collects in bounded pauses with no mutator barriers, the
data structures have no amortized slow paths, the regex engine is
polynomial on every input, dispatch tables have fixed probe counts, and
telemetry records in constant time.
"""

__version__ = "0.1.0"
