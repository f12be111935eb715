"""Finite binary strings and the level-by-level enumeration over the binary tree.

A bit string is an ordinary ``str`` over the alphabet ``{"0", "1"}``; the empty
string is the root of the tree.  Strings are globally ordered by length and
then lexicographically (``"" < "0" < "1" < "00" < ...``), which turns the
level-wise generator into a single stream with a closed-form index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import CapExceeded, EmptyTruncate, IndexOutOfRange, InvalidBits

BitString = str

LEVEL_CAP = 24
SQUARE_CAP = 4096

_BITS = frozenset("01")


def check_bits(s: str) -> BitString:
    """Return ``s`` unchanged if it is a valid bit string, else raise InvalidBits."""
    if not isinstance(s, str):
        raise InvalidBits(f"expected a str of 0/1 characters, got {type(s).__name__}")
    if not _BITS.issuperset(s):
        raise InvalidBits(f"not a bit string: {s!r}")
    return s


def value_of(s: BitString) -> int:
    """Binary numeral of ``s`` (most significant bit first); 0 for the empty string."""
    return int(s, 2) if s else 0


def level_row(n: int, i: int) -> BitString:
    """Row ``i`` of the level-``n`` matrix, without materialising the level."""
    if not 0 <= i < (1 << n):
        raise IndexOutOfRange(f"row {i} outside level {n}")
    return format(i, f"0{n}b") if n else ""


@dataclass(frozen=True)
class LevelMatrix:
    n: int
    rows: tuple[BitString, ...]

    def __len__(self):
        return len(self.rows)

    def __contains__(self, s):
        if not isinstance(s, str) or len(s) != self.n or not _BITS.issuperset(s):
            return False
        i = value_of(s)
        return i < len(self.rows) and self.rows[i] == s

    def __iter__(self):
        return iter(self.rows)


@dataclass(frozen=True)
class SquareMatrix:
    n: int
    rows: tuple[BitString, ...]

    def __post_init__(self):
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError(f"not an {self.n}x{self.n} matrix")
        for r in self.rows:
            check_bits(r)


def _check_level(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError("level must be non-negative")
    if n > cap:
        raise CapExceeded("n", n, cap)


def iter_level(n: int, cap: int = LEVEL_CAP) -> Iterator[BitString]:
    """Lazily yield the 2^n strings of length ``n`` in ascending order."""
    _check_level(n, cap)
    return map("".join, itertools.product("01", repeat=n))


def enumerate_level(n: int, cap: int = LEVEL_CAP) -> LevelMatrix:
    """All strings of length ``n``, ascending.  Raises CapExceeded above ``cap``."""
    return LevelMatrix(n, tuple(iter_level(n, cap)))


def iter_all(max_len: int | None = None) -> Iterator[BitString]:
    """The global stream: level 0, level 1, ... up to ``max_len`` (unbounded if None)."""
    levels = itertools.count() if max_len is None else range(max_len + 1)
    for n in levels:
        yield from iter_level(n, cap=n)


def rank_of(s: BitString) -> int:
    check_bits(s)
    return (1 << len(s)) - 1 + value_of(s)


def string_at(k: int) -> BitString:
    if k < 0:
        raise IndexOutOfRange(f"negative rank {k}")
    # k + 1 = 2^n + value, so the leading 1 of k + 1 marks the level
    n = (k + 1).bit_length() - 1
    return level_row(n, k + 1 - (1 << n))


def square_matrix(n: int, cap: int = SQUARE_CAP) -> SquareMatrix:
    """First ``n`` rows of level ``n``.

    Only ``n`` rows are built, so the side may go well past LEVEL_CAP.
    """
    if n < 1:
        raise ValueError("square matrix side must be >= 1")
    if n > cap:
        raise CapExceeded("n", n, cap)
    return SquareMatrix(n, tuple(level_row(n, i) for i in range(n)))


def antidiagonal_flip(m: SquareMatrix) -> BitString:
    return "".join("1" if m.rows[i][i] == "0" else "0" for i in range(m.n))


@dataclass(frozen=True)
class Flip:
    index: int


@dataclass(frozen=True)
class Extend:
    bit: str


@dataclass(frozen=True)
class Truncate:
    pass


EditAction = Union[Flip, Extend, Truncate]


def edit_bit(s: BitString, action: EditAction) -> BitString:
    check_bits(s)
    if isinstance(action, Flip):
        i = action.index
        if not 0 <= i < len(s):
            raise IndexOutOfRange(f"flip index {i} outside string of length {len(s)}")
        return s[:i] + ("1" if s[i] == "0" else "0") + s[i + 1:]
    if isinstance(action, Extend):
        b = str(action.bit)
        if b not in _BITS:
            raise InvalidBits(f"cannot extend with {action.bit!r}")
        return s + b
    if isinstance(action, Truncate):
        if not s:
            raise EmptyTruncate("cannot truncate the empty string")
        return s[:-1]
    raise TypeError(f"unknown edit action {action!r}")


def edit_path(target: BitString) -> list[EditAction]:
    """Edits that build ``target`` from the empty string: pad with zeros, then flip the ones."""
    check_bits(target)
    path: list[EditAction] = [Extend("0")] * len(target)
    path += [Flip(i) for i, b in enumerate(target) if b == "1"]
    return path
