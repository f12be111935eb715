import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from limitlab.errors import CapExceeded, InvalidBits
from limitlab.toyvm import (
    ComplexityTable,
    Emit,
    Halt,
    Invalid,
    Repeat,
    assemble,
    count_valid_programs,
    decode,
    disassemble,
    enumerate_programs,
    min_description_table,
)

from oracles import all_strings, min_lengths, valid_programs


@pytest.mark.parametrize("program, output", [
    ("11", ""),
    ("000111", "01"),
    ("00011000111011", "0101010101010101"),
    ("0011", "0"),
    ("0111", "1"),
])
def test_decode_valid_examples(program, output):
    outcome = decode(program)
    assert outcome.valid
    assert outcome.output == output


@pytest.mark.parametrize("program, reason", [
    ("1100", Invalid.TRAILING_BITS),
    ("", Invalid.TRUNCATED),
    ("00", Invalid.TRUNCATED),
    ("10", Invalid.TRUNCATED),
    ("1000000", Invalid.TRUNCATED),
    ("1000000011", Invalid.REPEAT_UNDERFLOW),
    ("00" + "10001000" + "11", Invalid.REPEAT_UNDERFLOW),  # needs 2 bits of output, has 1
])
def test_decode_invalid_examples(program, reason):
    outcome = decode(program)
    assert not outcome.valid
    assert outcome.reason is reason
    assert outcome.output is None


def test_repeat_copies_snapshot():
    # "01", then REPEAT l=2 c=3: the copied block stays "01"
    prog = assemble([Emit("0"), Emit("1"), Repeat(2, 3), Halt()])
    assert decode(prog).output == "01" * 4


def test_assemble_disassemble_roundtrip():
    ins = [Emit("1"), Repeat(1, 8), Emit("0"), Repeat(3, 2), Halt()]
    prog = assemble(ins)
    assert disassemble(prog) == ins
    assert decode(prog).output == "1" + "1" * 8 + "0" + "110" * 2


def test_repeat_operand_range():
    with pytest.raises(ValueError):
        Repeat(9, 1).encode()


def test_decode_rejects_non_bits():
    with pytest.raises(InvalidBits):
        decode("012")


def test_decode_total_and_deterministic_exhaustive():
    for n in range(17):
        for p in all_strings(n):
            a = decode(p)
            assert a == decode(p)
            assert a.valid == (a.reason is None)


@given(st.text(alphabet="01", max_size=200))
def test_decode_total_fuzz(p):
    outcome = decode(p)
    assert outcome.valid or outcome.reason in set(Invalid)


def test_valid_set_matches_forward_construction():
    expected = valid_programs(16)
    got = {p: o.output for p, o in enumerate_programs(16) if o.valid}
    assert got == expected


def test_output_length_accounting():
    # output = EMITs + sum of l*c over REPEATs, hence <= EMITs + 64 * REPEATs
    for p, o in enumerate_programs(14):
        if not o.valid:
            continue
        ins = disassemble(p)
        repeated = sum(i.length * i.count for i in ins if isinstance(i, Repeat))
        assert len(o.output) == o.emits + repeated
        assert len(o.output) <= o.emits + 64 * o.repeats
        assert len(o.output) <= 64 * len(ins)


def test_enumerate_programs_order_and_coverage():
    progs = [p for p, _ in enumerate_programs(6)]
    assert progs == [s for n in range(2, 7) for s in all_strings(n)]


@pytest.mark.parametrize("max_len, valid", [
    (2, {"11": ""}),
    (3, {"11": ""}),
    (4, {"11": "", "0011": "0", "0111": "1"}),
])
def test_enumerate_programs_small(max_len, valid):
    got = {p: o.output for p, o in enumerate_programs(max_len) if o.valid}
    assert got == valid


# valid program counts per length bound, from the forward oracle
@pytest.mark.parametrize("max_len, count", [(2, 1), (4, 3), (6, 7), (8, 15), (10, 31), (12, 79), (14, 239)])
def test_valid_program_counts(max_len, count):
    assert count_valid_programs(max_len) == count
    assert len(valid_programs(max_len)) == count


def test_enumerate_cap():
    with pytest.raises(CapExceeded):
        next(iter(enumerate_programs(27)))
    with pytest.raises(CapExceeded):
        min_description_table(10, cap=8)


def test_table_examples(table14):
    assert min_description_table(2).entries == {"": 2}
    t4 = min_description_table(4)
    assert t4["0"] == 4 and t4["1"] == 4
    assert table14["0101010101010101"] == 14


def test_table_matches_forward_oracle(table14):
    assert table14.entries == min_lengths(14)
    assert len(table14) == 171
    assert min(table14.entries.values()) == 2


def test_table_roundtrip(table8):
    buf = io.StringIO()
    table8.dump(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == '{"max_prog_len": 8}'
    assert lines[1] == '{"s": "", "k": 2}'
    buf.seek(0)
    again = ComplexityTable.load(buf)
    assert again.max_prog_len == 8
    assert again.entries == table8.entries
