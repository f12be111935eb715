"""``limitlab`` command line.

Experiment output goes to stdout as ndjson or bare bit-string lines;
diagnostics go to stderr.  Exit status: 0 ok, 1 runtime error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ak, bitstring, complexity, realgen, toyvm
from .errors import LimitLabError
from .halting import machine, tester


def _nat(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _pos(text):
    v = _nat(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _bits(text):
    if not set(text) <= {"0", "1"}:
        raise argparse.ArgumentTypeError(f"not a bit string: {text!r}")
    return text


def _registers(text):
    """``r0=3,r2=1`` -> ``[3, 0, 1]``."""
    values = {}
    for part in filter(None, (x.strip() for x in text.split(","))):
        name, sep, val = part.partition("=")
        name = name.strip()
        if not sep or not name.startswith("r") or not name[1:].isdigit():
            raise argparse.ArgumentTypeError(f"bad register assignment {part!r}")
        values[int(name[1:])] = _nat(val.strip())
    regs = [0] * (max(values) + 1 if values else 0)
    for k, v in values.items():
        regs[k] = v
    return regs


def _assignment(text):
    try:
        return ak.parse_assignment(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="limitlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("enum", help="all strings of one length, ascending")
    s.add_argument("--len", type=_nat, required=True, dest="n")

    s = sub.add_parser("square", help="square matrix from the first n strings of length n")
    s.add_argument("--n", type=_pos, required=True)
    s.add_argument("--antidiagonal", action="store_true", help="print only the flipped diagonal")

    s = sub.add_parser("k-table", help="minimal description lengths by brute force")
    s.add_argument("--max-prog-len", type=_nat, required=True)
    s.add_argument("--out", help="write the table to FILE instead of stdout")

    s = sub.add_parser("filter", help="m-noncompressible strings of one length")
    s.add_argument("--len", type=_nat, required=True, dest="n")
    s.add_argument("--m", type=_nat, required=True)
    s.add_argument("--c", type=_nat, default=0)

    s = sub.add_parser("decide", help="is one string m-noncompressible?")
    s.add_argument("--string", type=_bits, required=True)
    s.add_argument("--m", type=_nat, required=True)
    s.add_argument("--c", type=_nat, default=0)

    s = sub.add_parser("census", help="histogram of minimal description lengths")
    s.add_argument("--len", type=_nat, required=True, dest="n")
    s.add_argument("--max-prog-len", type=_nat, required=True)

    s = sub.add_parser("real", help="prefixes of a random real, optionally filtered")
    s.add_argument("--seed", type=int)
    s.add_argument("--entropy", choices=["os"])
    s.add_argument("--bits", type=_pos, required=True)
    s.add_argument("--m", type=_nat)
    s.add_argument("--c", type=_nat)

    s = sub.add_parser("find", help="step at which the enumeration reaches a target")
    s.add_argument("--target", type=_bits, required=True)

    halt = sub.add_parser("halt", help="counter machines and halting testers")
    hsub = halt.add_subparsers(dest="halt_cmd", required=True)
    for name in ("run", "test"):
        h = hsub.add_parser(name)
        h.add_argument("progfile")
        h.add_argument("--budget", type=_pos, required=True)
        h.add_argument("--input", type=_registers, default=[])
        if name == "run":
            h.add_argument("--heartbeat", type=_pos)
    h = hsub.add_parser("arena")
    h.add_argument("--scenario", required=True,
                   choices=["classic", "paper_escape", "halting", "looping", "divergent"])
    h.add_argument("--budget", type=_pos, default=1000)
    h.add_argument("--sequential", action="store_true",
                   help="start the monitor only after the tester stops")

    akp = sub.add_parser("ak", help="three-valued and AK evaluation")
    asub = akp.add_subparsers(dest="ak_cmd", required=True)
    e = asub.add_parser("eval")
    e.add_argument("--formula", required=True)
    e.add_argument("--assign", type=_assignment, default={})
    e.add_argument("--mode", choices=["kleene", "ak"], default="ak")
    return p


def _emit(out, obj):
    out.write(json.dumps(obj) + "\n")


def _lines(out, strings):
    for s in strings:
        out.write(s + "\n")


def _run(args, parser, out) -> int:
    if args.cmd == "enum":
        _lines(out, bitstring.iter_level(args.n))
    elif args.cmd == "square":
        m = bitstring.square_matrix(args.n)
        _lines(out, [bitstring.antidiagonal_flip(m)] if args.antidiagonal else m.rows)
    elif args.cmd == "k-table":
        table = toyvm.min_description_table(args.max_prog_len)
        if args.out:
            with open(args.out, "w") as fp:
                table.dump(fp)
        else:
            table.dump(out)
    elif args.cmd == "filter":
        params = complexity.CompressibilityParams(args.m, args.c)
        _lines(out, complexity.filter_noncompressible(args.n, params))
    elif args.cmd == "decide":
        params = complexity.CompressibilityParams(args.m, args.c)
        _emit(out, {"noncompressible": complexity.is_m_noncompressible(args.string, params)})
    elif args.cmd == "census":
        for row in complexity.compression_census(args.n, args.max_prog_len).rows():
            _emit(out, row)
    elif args.cmd == "real":
        if (args.seed is None) == (args.entropy is None):
            parser.error("real: pass exactly one of --seed S or --entropy os")
        if args.c is not None and args.m is None:
            parser.error("real: --c requires --m")
        source = realgen.OsEntropy() if args.entropy else realgen.Seeded(args.seed)
        if args.m is None:
            for prefix in realgen.random_real_stream(source, args.bits):
                _emit(out, realgen.StreamEvent(prefix, realgen.Event.EMIT).to_json())
        else:
            params = complexity.CompressibilityParams(args.m, args.c or 0)
            for ev in realgen.noncompressible_stream(source, params, args.bits):
                _emit(out, ev.to_json())
    elif args.cmd == "find":
        _emit(out, {"target": args.target, "step": realgen.find_target(args.target)})
    elif args.cmd == "halt":
        return _halt(args, out)
    elif args.cmd == "ak":
        try:
            sentence = ak.parse_sentence(args.formula)
        except LimitLabError as e:
            parser.error(str(e))
        value = ak.evaluate_kleene(sentence, args.assign)
        if args.mode == "ak":
            value = ak.collapse(value)
        _emit(out, {"mode": args.mode, "value": value.value})
    return 0


def _halt(args, out) -> int:
    if args.halt_cmd == "arena":
        if args.scenario == "classic":
            trace = tester.classic_diagonal(args.budget)
        else:
            scen = tester.builtin_scenarios()[args.scenario]
            _, trace = tester.large_tester(scen, args.budget, args.sequential)
        out.write(trace.to_ndjson())
        return 0
    try:
        with open(args.progfile) as fp:
            program = machine.parse_program(fp.read(), args.progfile)
    except OSError as e:
        raise LimitLabError(f"cannot read {args.progfile}: {e.strerror}") from None
    if args.halt_cmd == "test":
        verdict = tester.halting_tester(program, args.input, args.budget)
        _emit(out, {"verdict": verdict.value})
        return 0
    report = machine.run(program, args.input, args.budget, args.heartbeat)
    for hb in report.heartbeats:
        _emit(out, hb.to_json())
    _emit(out, report.to_json())
    if isinstance(report, machine.BudgetExhausted):
        print(f"warning: {report.warning} after {report.budget} steps", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args, parser, sys.stdout)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except LimitLabError as e:
        print(f"limitlab: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    sys.exit(main())
