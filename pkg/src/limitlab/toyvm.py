"""TOYVM-1: a total, loop-free run-length machine used as the fixed description machine.

Programs are bit strings read left to right::

    0 b           EMIT    append literal bit b                      (2 bits)
    10 lll ccc    REPEAT  append the last lll+1 output bits ccc+1 times (8 bits)
    11            HALT    must consume the final bits              (2 bits)

Every bit string decodes to exactly one outcome, so the minimal description
length of a string is computable by plain exhaustion; no step budget is needed.
The machine is deliberately not universal.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import IO, Iterator, NamedTuple

from .bitstring import BitString, check_bits, iter_level
from .errors import CapExceeded, LimitLabError

PROGRAM_CAP = 26

HALT_BITS = "11"


class Invalid(enum.Enum):
    TRUNCATED = "Truncated"
    TRAILING_BITS = "TrailingBits"
    REPEAT_UNDERFLOW = "RepeatUnderflow"


@dataclass(frozen=True)
class DecodeOutcome:
    output: BitString | None = None
    reason: Invalid | None = None
    emits: int = 0
    repeats: int = 0

    @property
    def valid(self) -> bool:
        return self.reason is None

    def __str__(self):
        if self.valid:
            return f"Valid({self.output!r})"
        return f"Invalid({self.reason.value})"


class Emit(NamedTuple):
    bit: str

    def encode(self) -> str:
        return "0" + self.bit


class Repeat(NamedTuple):
    length: int  # 1..8
    count: int  # 1..8

    def encode(self) -> str:
        if not (1 <= self.length <= 8 and 1 <= self.count <= 8):
            raise ValueError(f"REPEAT operands out of range: {self}")
        return "10" + format(self.length - 1, "03b") + format(self.count - 1, "03b")


class Halt(NamedTuple):
    def encode(self) -> str:
        return HALT_BITS


def assemble(instructions) -> BitString:
    """Concatenate instruction encodings into a program string."""
    return "".join(ins.encode() for ins in instructions)


def decode(program: BitString) -> DecodeOutcome:
    check_bits(program)
    out: list[str] = []
    i = 0
    n = len(program)
    emits = repeats = 0
    while True:
        if i + 2 > n:
            return DecodeOutcome(reason=Invalid.TRUNCATED, emits=emits, repeats=repeats)
        op = program[i:i + 2]
        if op[0] == "0":
            out.append(op[1])
            emits += 1
            i += 2
        elif op == HALT_BITS:
            i += 2
            if i != n:
                return DecodeOutcome(reason=Invalid.TRAILING_BITS, emits=emits, repeats=repeats)
            return DecodeOutcome(output="".join(out), emits=emits, repeats=repeats)
        else:
            if i + 8 > n:
                return DecodeOutcome(reason=Invalid.TRUNCATED, emits=emits, repeats=repeats)
            length = int(program[i + 2:i + 5], 2) + 1
            count = int(program[i + 5:i + 8], 2) + 1
            repeats += 1
            if len(out) < length:
                return DecodeOutcome(reason=Invalid.REPEAT_UNDERFLOW, emits=emits, repeats=repeats)
            # snapshot before appending: the block does not grow while it is copied
            out.extend(out[-length:] * count)
            i += 8


def disassemble(program: BitString) -> list:
    """Instruction list of a *valid* program; raises ValueError otherwise."""
    if not decode(program).valid:
        raise ValueError(f"not a valid TOYVM-1 program: {program!r}")
    ins = []
    i = 0
    while i < len(program):
        if program[i] == "0":
            ins.append(Emit(program[i + 1]))
            i += 2
        elif program[i:i + 2] == HALT_BITS:
            ins.append(Halt())
            i += 2
        else:
            ins.append(Repeat(int(program[i + 2:i + 5], 2) + 1, int(program[i + 5:i + 8], 2) + 1))
            i += 8
    return ins


def check_program_len(max_len: int, cap: int = PROGRAM_CAP) -> None:
    if max_len < 0:
        raise ValueError("program length bound must be non-negative")
    if max_len > cap:
        raise CapExceeded("max_prog_len", max_len, cap)


def enumerate_programs(max_len: int, cap: int = PROGRAM_CAP) -> Iterator[tuple[BitString, DecodeOutcome]]:
    """Every bit string of length 2..max_len in rank order, paired with its decode outcome."""
    check_program_len(max_len, cap)
    for n in range(2, max_len + 1):
        for p in iter_level(n, cap=n):
            yield p, decode(p)


@dataclass
class ComplexityTable:
    max_prog_len: int
    entries: dict[BitString, int] = field(default_factory=dict)

    def __contains__(self, s):
        return s in self.entries

    def __getitem__(self, s):
        return self.entries[s]

    def get(self, s, default=None):
        return self.entries.get(s, default)

    def __len__(self):
        return len(self.entries)

    def sorted_items(self) -> list[tuple[BitString, int]]:
        return sorted(self.entries.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def dump(self, fp: IO[str]) -> None:
        fp.write(json.dumps({"max_prog_len": self.max_prog_len}) + "\n")
        for s, k in self.sorted_items():
            fp.write(json.dumps({"s": s, "k": k}) + "\n")

    @classmethod
    def load(cls, fp: IO[str]) -> "ComplexityTable":
        lines = [ln for ln in fp if ln.strip()]
        if not lines:
            raise LimitLabError("empty complexity table file")
        header = json.loads(lines[0])
        if "max_prog_len" not in header:
            raise LimitLabError("complexity table file lacks a max_prog_len header")
        table = cls(int(header["max_prog_len"]))
        for ln in lines[1:]:
            row = json.loads(ln)
            table.entries[check_bits(row["s"])] = int(row["k"])
        return table


def min_description_table(max_len: int, cap: int = PROGRAM_CAP) -> ComplexityTable:
    """Shortest valid program length for every output reachable within ``max_len`` bits.

    Plain brute force over ``enumerate_programs``; programs arrive in length
    order, so the first hit for an output is its minimum.
    """
    table = ComplexityTable(max_len)
    entries = table.entries
    for p, outcome in enumerate_programs(max_len, cap):
        if outcome.valid and outcome.output not in entries:
            entries[outcome.output] = len(p)
    return table


def count_valid_programs(max_len: int, cap: int = PROGRAM_CAP) -> int:
    return sum(1 for _, o in enumerate_programs(max_len, cap) if o.valid)
