"""Counter machines and halting testers."""

from .machine import (
    POSSIBLE_LACK_OF_HALT,
    BudgetExhausted,
    CycleDetected,
    DecJz,
    Halt,
    Halted,
    Heartbeat,
    Inc,
    MachineState,
    MinskyProgram,
    format_program,
    initial_state,
    parse_program,
    run,
    step,
)
from .tester import (
    AdversarialScript,
    LargeTesterTrace,
    MonitorAction,
    Scenario,
    TickEvent,
    TStatus,
    Verdict,
    builtin_scenarios,
    classic_diagonal,
    diagonal_scenario,
    halting_tester,
    large_tester,
    monitor_action,
)
