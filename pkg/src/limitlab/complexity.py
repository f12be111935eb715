"""m-compressibility relative to TOYVM-1: decider, level filter, counting bound, census.

A string is *m-compressible* when some valid TOYVM-1 program of at most
``m + c`` bits prints it.  The decider here does not decode arbitrary bit
strings; it searches instruction sequences whose output stays a prefix of the
target.  Every valid program printing ``a`` passes only through prefixes of
``a``, so the search covers exactly the programs that matter, and its answer
can be compared against the brute-force table in ``toyvm``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitstring import LEVEL_CAP, BitString, check_bits, iter_level
from .toyvm import PROGRAM_CAP, Emit, Halt, Repeat, assemble, check_program_len

EMIT_COST = 2
REPEAT_COST = 8
HALT_COST = 2


@dataclass(frozen=True)
class CompressibilityParams:
    m: int
    c: int = 0

    def __post_init__(self):
        if self.m < 0 or self.c < 0:
            raise ValueError("m and c must be non-negative")

    @property
    def machine_bound(self) -> int:
        return self.m + self.c


def shortest_description(a: BitString) -> BitString:
    """A minimal-length TOYVM-1 program printing ``a``.

    Shortest path over output positions 0..len(a): EMIT moves one position for
    2 bits, REPEAT(l, c) moves l*c positions for 8 bits when the next l*c bits
    of ``a`` are the previous l bits repeated.  Ties keep the first edge found,
    EMIT before REPEAT, so the witness is deterministic.
    """
    check_bits(a)
    n = len(a)
    inf = float("inf")
    dist = [inf] * (n + 1)
    back: list = [None] * (n + 1)
    dist[0] = 0
    for j in range(n):
        if dist[j] == inf:
            continue
        here = dist[j]
        if here + EMIT_COST < dist[j + 1]:
            dist[j + 1] = here + EMIT_COST
            back[j + 1] = (j, Emit(a[j]))
        for length in range(1, min(8, j) + 1):
            block = a[j - length:j]
            end = j
            for count in range(1, 9):
                end += length
                if end > n or a[end - length:end] != block:
                    break
                if here + REPEAT_COST < dist[end]:
                    dist[end] = here + REPEAT_COST
                    back[end] = (j, Repeat(length, count))
    ins = [Halt()]
    j = n
    while j:
        j, step = back[j]
        ins.append(step)
    return assemble(reversed(ins))


def description_length(a: BitString) -> int:
    return len(shortest_description(a))


def is_m_noncompressible(a: BitString, params: CompressibilityParams, cap: int = PROGRAM_CAP) -> bool:
    """True iff no valid program of length <= m + c prints ``a``."""
    check_program_len(params.machine_bound, cap)
    return description_length(a) > params.machine_bound


def filter_noncompressible(n: int, params: CompressibilityParams, level_cap: int = LEVEL_CAP,
                           program_cap: int = PROGRAM_CAP) -> list[BitString]:
    check_program_len(params.machine_bound, program_cap)
    return [s for s in iter_level(n, level_cap) if description_length(s) > params.machine_bound]


def incompressible_lower_bound(n: int, m: int) -> int:
    """2^n - 2 - sum(2^i, i=1..m), kept in its summed form; may be negative."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    return 2 ** n - 2 - sum(2 ** i for i in range(1, m + 1))


@dataclass
class Census:
    n: int
    max_prog_len: int
    counts: dict[int, int] = field(default_factory=dict)
    none: int = 0

    def total(self) -> int:
        return sum(self.counts.values()) + self.none

    def rows(self) -> list[dict]:
        out = [{"k": k, "count": c} for k, c in sorted(self.counts.items())]
        out.append({"none": self.none})
        return out


def compression_census(n: int, max_prog_len: int, level_cap: int = LEVEL_CAP,
                       program_cap: int = PROGRAM_CAP) -> Census:
    """Histogram of minimal description lengths over all strings of length ``n``.

    Only non-empty buckets are reported; strings without a description of at
    most ``max_prog_len`` bits land in ``none``.
    """
    check_program_len(max_prog_len, program_cap)
    census = Census(n, max_prog_len)
    for s in iter_level(n, level_cap):
        k = description_length(s)
        if k <= max_prog_len:
            census.counts[k] = census.counts.get(k, 0) + 1
        else:
            census.none += 1
    return census
