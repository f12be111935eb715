"""Halting testers: the bounded tester, its monitor, and the lockstep composite.

The monitor watches the tester, never the tested program.  It loops when the
tester halts and answers 0 when the tester's own state repeats.  The composite
steps the tester and the monitor in strict alternation inside one thread,
which stands in for the two running in parallel.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Sequence, Union

from .machine import (
    CycleDetected,
    Halted,
    MinskyProgram,
    initial_state,
    parse_program,
    run,
    step,
)


class Verdict(enum.Enum):
    HALTS = "Halts"
    LOOPS = "Loops"
    UNKNOWN = "Unknown"

    @property
    def bit(self) -> int | None:
        return {Verdict.HALTS: 1, Verdict.LOOPS: 0}.get(self)

    def inverse(self) -> "Verdict":
        return {Verdict.HALTS: Verdict.LOOPS, Verdict.LOOPS: Verdict.HALTS}.get(self, self)


def halting_tester(program: MinskyProgram, inputs: Sequence[int] = (), budget: int = 10_000) -> Verdict:
    """Halts / Loops only with proof (a halting run or a repeated state); Unknown otherwise."""
    report = run(program, inputs, budget)
    if isinstance(report, Halted):
        return Verdict.HALTS
    if isinstance(report, CycleDetected):
        return Verdict.LOOPS
    return Verdict.UNKNOWN


class TStatus(enum.Enum):
    RUNNING = "Running"
    HALTED_WITH_VERDICT = "HaltedWithVerdict"
    LOOP_DETECTED = "LoopDetected"


class MonitorAction(enum.Enum):
    CONTINUE_OBSERVING = "ContinueObserving"
    LOOP_FOREVER = "LoopForever"
    RETURN_0 = "Return0"


def monitor_action(t_status: TStatus) -> MonitorAction:
    return {
        TStatus.RUNNING: MonitorAction.CONTINUE_OBSERVING,
        TStatus.HALTED_WITH_VERDICT: MonitorAction.LOOP_FOREVER,
        TStatus.LOOP_DETECTED: MonitorAction.RETURN_0,
    }[t_status]


@dataclass(frozen=True)
class AdversarialScript:
    """The diagonal program S, run on itself.

    S asks the tester about (S, S).  On a Halts answer it runs ``on_halts``
    (which never halts); on any other answer it runs ``on_loops`` (which halts).
    S is a harness object, not a counter machine: it calls the tester.
    """
    name: str
    on_halts: MinskyProgram
    on_loops: MinskyProgram

    def branch(self, answer: Verdict) -> MinskyProgram:
        return self.on_halts if answer is Verdict.HALTS else self.on_loops


Target = Union[MinskyProgram, AdversarialScript]


@dataclass(frozen=True)
class Scenario:
    name: str
    target: Target
    inputs: tuple[int, ...] = ()


class _TesterProcess:
    """The tester as a steppable process answering one query.

    On a counter machine each step simulates one machine step and keeps the
    visited-state set, so the tester's own state never repeats there.  On S the
    first step reaches S's query about (S, S), which is the query being
    answered; the tester then blocks on its own answer and spins in one state.
    """

    def __init__(self, scenario: Scenario):
        self.target = scenario.target
        self.verdict: Verdict | None = None
        self.steps = 0
        if isinstance(self.target, MinskyProgram):
            self.phase = "simulate"
            self.state = initial_state(self.target, scenario.inputs)
            self.seen = {self.state}
        else:
            self.phase = "start"
            self.query = (self.target.name, self.target.name)

    @property
    def halted(self) -> bool:
        return self.verdict is not None

    def advance(self) -> None:
        if self.halted:
            return
        self.steps += 1
        if self.phase == "simulate":
            nxt = step(self.target, self.state)
            if nxt is None:
                self.verdict = Verdict.HALTS
            elif nxt in self.seen:
                self.verdict = Verdict.LOOPS
            else:
                self.seen.add(nxt)
                self.state = nxt
        elif self.phase == "start":
            inner = (self.target.name, self.target.name)
            if inner != self.query:
                raise NotImplementedError("S only ever asks about itself")
            self.phase = "await"

    def snapshot(self) -> tuple:
        if self.phase == "simulate":
            return ("simulate", self.state.pc, self.state.registers, len(self.seen), self.verdict)
        if self.phase == "await":
            return ("await", self.query)
        return ("start", self.query, self.steps)


@dataclass(frozen=True)
class TickEvent:
    tick: int
    t: str
    tprime: str
    verdict: int | None = None
    by: str | None = None
    marker: str | None = None
    terminal: bool = False
    detail: str | None = None

    def to_json(self) -> dict:
        out = {"tick": self.tick, "t": self.t, "tprime": self.tprime}
        if self.terminal:
            out["verdict"] = self.verdict
            if self.by is not None:
                out["by"] = self.by
            if self.marker is not None:
                out["marker"] = self.marker
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class LargeTesterTrace:
    scenario: str
    events: list[TickEvent] = field(default_factory=list)
    verdict: Verdict = Verdict.UNKNOWN
    by: str | None = None
    marker: str | None = None

    @property
    def terminal(self) -> TickEvent:
        return self.events[-1]

    def to_ndjson(self) -> str:
        return "".join(json.dumps(e.to_json()) + "\n" for e in self.events)


T_NAME = "T"
TPRIME_NAME = "T'"
BOTH_LOOPING = "BothLooping"
CONTRADICTION = "ContradictionDetected"


def _finish(trace: LargeTesterTrace, event: TickEvent, verdict: Verdict, by=None, marker=None):
    trace.events.append(event)
    trace.verdict, trace.by, trace.marker = verdict, by, marker
    return trace


def large_tester(scenario: Scenario, budget: int = 1000,
                 sequential: bool = False) -> tuple[Verdict, LargeTesterTrace]:
    """Run the tester and its monitor for at most ``budget`` ticks.

    The first definite output of either component is the composite verdict.
    A monitor ``Return0`` is reported as Loops.  With ``sequential`` the
    monitor only starts once the tester has stopped.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    trace = _lockstep(scenario, budget, sequential)
    return trace.verdict, trace


def _lockstep(scenario: Scenario, budget: int, sequential: bool) -> LargeTesterTrace:
    tester = _TesterProcess(scenario)
    observed: set = set()
    trace = LargeTesterTrace(scenario.name)
    for tick in range(1, budget + 1):
        tester.advance()
        if sequential:
            status = TStatus.HALTED_WITH_VERDICT if tester.halted else TStatus.RUNNING
            action_name = "NotStarted"
        else:
            snap = tester.snapshot()
            if tester.halted:
                status = TStatus.HALTED_WITH_VERDICT
            elif snap in observed:
                status = TStatus.LOOP_DETECTED
            else:
                status = TStatus.RUNNING
            observed.add(snap)
            action_name = monitor_action(status).value

        last = tick == budget
        if status is TStatus.HALTED_WITH_VERDICT:
            v = tester.verdict
            return _finish(trace, TickEvent(tick, status.value, action_name, v.bit, T_NAME, terminal=True),
                           v, by=T_NAME)
        if status is TStatus.LOOP_DETECTED:
            return _finish(trace, TickEvent(tick, status.value, action_name, 0, TPRIME_NAME, terminal=True),
                           Verdict.LOOPS, by=TPRIME_NAME)
        if last:
            return _finish(trace, TickEvent(tick, status.value, action_name, None, marker=BOTH_LOOPING,
                                            terminal=True),
                           Verdict.UNKNOWN, marker=BOTH_LOOPING)
        trace.events.append(TickEvent(tick, status.value, action_name))
    raise AssertionError("unreachable")


# --- scenario library -------------------------------------------------------

HALTING_SRC = """\
# empty r0, then stop
loop: DECJZ r0 done
      DECJZ r1 loop
done: HALT
"""

SELF_LOOP_SRC = "L: DECJZ r0 L\n"

DIVERGENT_SRC = """\
L: INC r0
   DECJZ r1 L
"""

# S's two branches: a short warm-up ending in a self-loop, and an immediate halt
S_LOOP_SRC = """\
   INC r0
   INC r0
   INC r0
spin: DECJZ r1 spin
"""

S_HALT_SRC = "HALT\n"


def adversary() -> AdversarialScript:
    return AdversarialScript("S", parse_program(S_LOOP_SRC, "S/loop"), parse_program(S_HALT_SRC, "S/halt"))


def builtin_scenarios() -> dict[str, Scenario]:
    return {
        "halting": Scenario("halting", parse_program(HALTING_SRC, "countdown"), (3,)),
        "looping": Scenario("looping", parse_program(SELF_LOOP_SRC, "self-loop")),
        "divergent": Scenario("divergent", parse_program(DIVERGENT_SRC, "incrementer")),
        "paper_escape": Scenario("paper_escape", adversary()),
    }


def classic_diagonal(budget: int = 1000) -> LargeTesterTrace:
    """The textbook argument with the tester alone.

    Each definite answer the tester could give for (S, S) is tried in turn; S
    then runs the branch that answer selects, and the bounded tester reports
    what that branch actually does.  If every answer is inverted, no
    consistent verdict exists.  An Unknown from the bounded tester leaves the
    answer unrefuted.
    """
    s = adversary()
    trace = LargeTesterTrace("classic")
    refuted = []
    tick = 0
    for assumed in (Verdict.HALTS, Verdict.LOOPS):
        tick += 1
        branch = s.branch(assumed)
        actual = halting_tester(branch, (), budget)
        trace.events.append(TickEvent(
            tick, f"Assume({assumed.value})", "Absent",
            detail=f"S runs {branch.name}; tester on that run: {actual.value}"))
        if actual is Verdict.UNKNOWN:
            return _finish(trace, TickEvent(tick + 1, "Unknown", "Absent", None, marker="Unknown", terminal=True),
                           Verdict.UNKNOWN, marker="Unknown")
        refuted.append(actual is assumed.inverse())
    if all(refuted):
        return _finish(trace, TickEvent(tick + 1, CONTRADICTION, "Absent", None, marker=CONTRADICTION,
                                        terminal=True),
                       Verdict.UNKNOWN, marker=CONTRADICTION)
    consistent = [v for v, r in zip((Verdict.HALTS, Verdict.LOOPS), refuted) if not r][0]
    return _finish(trace, TickEvent(tick + 1, "Consistent", "Absent", consistent.bit, T_NAME, terminal=True),
                   consistent, by=T_NAME)


def diagonal_scenario(kind: str, budget: int = 1000, sequential: bool = False) -> LargeTesterTrace:
    if kind == "classic":
        return classic_diagonal(budget)
    if kind == "paper_escape":
        return large_tester(builtin_scenarios()["paper_escape"], budget, sequential)[1]
    raise ValueError(f"unknown diagonal scenario {kind!r}")
