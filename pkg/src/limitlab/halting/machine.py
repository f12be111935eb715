"""Minsky counter machines: program text, single steps, and bounded cycle-detecting runs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

from ..errors import MalformedProgram

POSSIBLE_LACK_OF_HALT = "possible lack of halt"


class Inc(NamedTuple):
    reg: int


class DecJz(NamedTuple):
    """If the register is zero jump to ``target``, otherwise decrement it and fall through."""
    reg: int
    target: int


class Halt(NamedTuple):
    pass


Instruction = Union[Inc, DecJz, Halt]


@dataclass(frozen=True)
class MinskyProgram:
    instructions: tuple[Instruction, ...]
    name: str = ""

    def __post_init__(self):
        ins = tuple(self.instructions)
        object.__setattr__(self, "instructions", ins)
        if not ins:
            raise MalformedProgram("program has no instructions")
        for i, op in enumerate(ins):
            if isinstance(op, DecJz) and not 0 <= op.target < len(ins):
                raise MalformedProgram(f"instruction {i}: jump target {op.target} out of range")
            if isinstance(op, (Inc, DecJz)) and op.reg < 0:
                raise MalformedProgram(f"instruction {i}: negative register")
            if not isinstance(op, (Inc, DecJz, Halt)):
                raise MalformedProgram(f"instruction {i}: unknown instruction {op!r}")

    def __len__(self):
        return len(self.instructions)

    def __getitem__(self, i):
        return self.instructions[i]

    @property
    def n_registers(self) -> int:
        regs = [op.reg for op in self.instructions if not isinstance(op, Halt)]
        return max(regs) + 1 if regs else 0


_LABEL = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(.*)$")
_REG = re.compile(r"^r(\d+)$")


def _reg(tok: str, lineno: int) -> int:
    m = _REG.match(tok)
    if not m:
        raise MalformedProgram(f"line {lineno}: bad register {tok!r}")
    return int(m.group(1))


def parse_program(text: str, name: str = "") -> MinskyProgram:
    """Parse the assembly form: ``INC rK``, ``DECJZ rK label``, ``HALT``, ``label:`` prefixes, ``#`` comments."""
    labels: dict[str, int] = {}
    pending: list[tuple[int, str, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        while True:
            m = _LABEL.match(line)
            if not m:
                break
            label = m.group(1)
            if label in labels:
                raise MalformedProgram(f"line {lineno}: duplicate label {label!r}")
            labels[label] = len(pending)
            line = m.group(2).strip()
        if not line:
            continue
        toks = line.split()
        pending.append((lineno, toks[0].upper(), toks[1:]))

    ins: list[Instruction] = []
    for lineno, op, args in pending:
        if op == "INC" and len(args) == 1:
            ins.append(Inc(_reg(args[0], lineno)))
        elif op == "DECJZ" and len(args) == 2:
            target = args[1]
            if target not in labels:
                raise MalformedProgram(f"line {lineno}: unresolved label {target!r}")
            ins.append(DecJz(_reg(args[0], lineno), labels[target]))
        elif op == "HALT" and not args:
            ins.append(Halt())
        else:
            raise MalformedProgram(f"line {lineno}: cannot parse {op} {' '.join(args)}".rstrip())
    return MinskyProgram(tuple(ins), name)


def format_program(program: MinskyProgram) -> str:
    targets = {op.target for op in program.instructions if isinstance(op, DecJz)}
    lines = []
    for i, op in enumerate(program.instructions):
        prefix = f"L{i}: " if i in targets else ""
        if isinstance(op, Inc):
            body = f"INC r{op.reg}"
        elif isinstance(op, DecJz):
            body = f"DECJZ r{op.reg} L{op.target}"
        else:
            body = "HALT"
        lines.append(prefix + body)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class MachineState:
    pc: int
    registers: tuple[int, ...]


def initial_state(program: MinskyProgram, inputs: Sequence[int] = ()) -> MachineState:
    if any(v < 0 for v in inputs):
        raise ValueError("register inputs must be non-negative")
    size = max(program.n_registers, len(inputs))
    regs = list(inputs) + [0] * (size - len(inputs))
    return MachineState(0, tuple(regs))


def step(program: MinskyProgram, state: MachineState) -> MachineState | None:
    """Execute one instruction; None means the machine halted.

    Running off the end of the program counts as halting.
    """
    op = program.instructions[state.pc]
    if isinstance(op, Halt):
        return None
    regs = list(state.registers)
    if isinstance(op, Inc):
        regs[op.reg] += 1
        pc = state.pc + 1
    elif regs[op.reg] == 0:
        pc = op.target
    else:
        regs[op.reg] -= 1
        pc = state.pc + 1
    if pc >= len(program):
        return None
    return MachineState(pc, tuple(regs))


@dataclass(frozen=True)
class Heartbeat:
    step: int
    pc: int
    registers: tuple[int, ...]

    def to_json(self) -> dict:
        return {"heartbeat": self.step, "pc": self.pc, "registers": list(self.registers)}


@dataclass(frozen=True)
class Halted:
    steps: int
    registers: tuple[int, ...]
    heartbeats: tuple[Heartbeat, ...] = ()

    @property
    def steps_executed(self):
        return self.steps

    def to_json(self) -> dict:
        return {"result": "Halted", "steps": self.steps, "registers": list(self.registers)}


@dataclass(frozen=True)
class CycleDetected:
    """``state`` was seen after ``first_step - period`` steps and again after ``first_step``."""
    first_step: int
    period: int
    state: MachineState
    heartbeats: tuple[Heartbeat, ...] = ()

    @property
    def steps_executed(self):
        return self.first_step

    @property
    def witness_steps(self) -> tuple[int, int]:
        return self.first_step - self.period, self.first_step

    def to_json(self) -> dict:
        return {"result": "CycleDetected", "first_step": self.first_step, "period": self.period,
                "pc": self.state.pc, "registers": list(self.state.registers)}


@dataclass(frozen=True)
class BudgetExhausted:
    budget: int
    state: MachineState
    heartbeats: tuple[Heartbeat, ...] = ()
    warning: str = POSSIBLE_LACK_OF_HALT

    @property
    def steps_executed(self):
        return self.budget

    def to_json(self) -> dict:
        return {"result": "BudgetExhausted", "budget": self.budget, "warning": self.warning}


RunReport = Union[Halted, CycleDetected, BudgetExhausted]


def run(program: MinskyProgram, inputs: Sequence[int] = (), budget: int = 10_000,
        heartbeat_every: int | None = None) -> RunReport:
    """Run for at most ``budget`` steps, stopping at the first exact repeat of a full state.

    Every visited state is kept, so memory grows with the budget.  A heartbeat
    is recorded after every ``heartbeat_every``-th step (none if it is None).
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if heartbeat_every is not None and heartbeat_every < 1:
        raise ValueError("heartbeat_every must be >= 1")
    every = heartbeat_every or 0
    ins = program.instructions
    end = len(ins)
    state = initial_state(program, inputs)
    pc, regs = state.pc, list(state.registers)
    seen = {(pc, *regs): 0}
    beats: list[Heartbeat] = []
    for n in range(1, budget + 1):
        op = ins[pc]
        halted = False
        if type(op) is Halt:
            halted = True
        elif type(op) is Inc:
            regs[op.reg] += 1
            pc += 1
        elif regs[op.reg] == 0:
            pc = op.target
        else:
            regs[op.reg] -= 1
            pc += 1
        if pc >= end:
            halted = True
        if every and n % every == 0:
            beats.append(Heartbeat(n, pc, tuple(regs)))
        if halted:
            return Halted(n, tuple(regs), tuple(beats))
        key = (pc, *regs)
        prev = seen.get(key)
        if prev is not None:
            return CycleDetected(n, n - prev, MachineState(pc, tuple(regs)), tuple(beats))
        seen[key] = n
    return BudgetExhausted(budget, MachineState(pc, tuple(regs)), tuple(beats))
