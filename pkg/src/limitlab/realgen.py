"""Generators that walk the binary tree: random real prefixes, target search, filtered streams."""

from __future__ import annotations

import enum
import operator
import secrets
from dataclasses import dataclass
from typing import Iterable, Iterator

from .bitstring import BitString, check_bits, iter_all
from .complexity import CompressibilityParams, is_m_noncompressible
from .errors import DeadEnd, SourceExhausted

MASK64 = (1 << 64) - 1


class SplitMix64:
    """The SplitMix64 recurrence, 64-bit words."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


class BitSource:
    """Produces one bit per call to ``next_bit``."""

    def next_bit(self) -> str:
        raise NotImplementedError


class Seeded(BitSource):
    def __init__(self, seed: int):
        self.seed = seed
        self._rng = SplitMix64(seed)

    def next_bit(self) -> str:
        return "1" if self._rng.next_u64() >> 63 else "0"


class Constant(BitSource):
    def __init__(self, bit: str):
        self.bit = check_bits(str(bit))
        if len(self.bit) != 1:
            raise ValueError("Constant needs a single bit")

    def next_bit(self) -> str:
        return self.bit


class Alternating(BitSource):
    """0, 1, 0, 1, ..."""

    def __init__(self):
        self._next = "0"

    def next_bit(self) -> str:
        b = self._next
        self._next = "1" if b == "0" else "0"
        return b


class OsEntropy(BitSource):
    def next_bit(self) -> str:
        return str(secrets.randbits(1))


class Finite(BitSource):
    """Replays a fixed bit string, then raises SourceExhausted."""

    def __init__(self, bits: BitString):
        self._it = iter(check_bits(bits))

    def next_bit(self) -> str:
        try:
            return next(self._it)
        except StopIteration:
            raise SourceExhausted("finite bit source ran dry") from None


class Event(enum.Enum):
    EMIT = "emit"
    REJECT = "reject"
    BACKTRACK = "backtrack"


@dataclass(frozen=True)
class StreamEvent:
    prefix: BitString
    event: Event

    def to_json(self) -> dict:
        return {"len": len(self.prefix), "prefix": self.prefix, "event": self.event.value}


def random_real_stream(source: BitSource, max_len: int) -> Iterator[BitString]:
    """Successive prefixes of one random path through the tree, lengths 1..max_len."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    prefix = ""
    for _ in range(max_len):
        prefix += source.next_bit()
        yield prefix


def find_target(target: BitString, stream: Iterable[BitString] | None = None) -> int:
    """Step index at which the global enumeration first produces ``target``.

    The search really walks the stream and compares every string; the result
    coincides with ``rank_of(target)``.
    """
    check_bits(target)
    if stream is None:
        stream = iter_all(len(target))
    try:
        # sequential equality scan over the stream, done in C
        return operator.indexOf(stream, target)
    except ValueError:
        raise LookupError(f"{target!r} not produced by the given stream") from None


def noncompressible_stream(source: BitSource, params: CompressibilityParams,
                           max_len: int) -> Iterator[StreamEvent]:
    """Random path restricted to m-noncompressible prefixes.

    Prefixes of length <= m + c are accepted unfiltered.  A rejected child is
    replaced by its sibling; when both children of a node are rejected (or
    their subtrees die out) the walk backs up one level and tries the parent's
    untried sibling.  Raises DeadEnd once every option is used up.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    bound = params.machine_bound

    def admissible(s):
        return len(s) <= bound or is_m_noncompressible(s, params)

    prefix = ""
    # untried[d] holds the sibling still available for the bit chosen at depth d
    untried: list[list[str]] = []
    pending: list[str] | None = None
    while len(prefix) < max_len:
        if pending is None:
            first = source.next_bit()
            pending = [first, "1" if first == "0" else "0"]
        while pending:
            cand = prefix + pending.pop(0)
            if admissible(cand):
                untried.append(pending)
                prefix = cand
                pending = None
                yield StreamEvent(prefix, Event.EMIT)
                break
            yield StreamEvent(cand, Event.REJECT)
        else:
            if not untried:
                raise DeadEnd(f"no admissible path of length {max_len} under m={params.m}, c={params.c}")
            yield StreamEvent(prefix, Event.BACKTRACK)
            pending = untried.pop()
            prefix = prefix[:-1]
