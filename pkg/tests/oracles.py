"""Reference computations that share no code path with the package."""

import itertools


def all_strings(n):
    """Level n by counting in binary, not by itertools.product."""
    return [bin(i)[2:].zfill(n) if n else "" for i in range(2 ** n)]


def valid_programs(max_len):
    """Every valid TOYVM-1 program of length <= max_len, built forward from instructions.

    Returns {program_bits: output}.  Never parses a bit string.
    """
    found = {}

    def grow(prog, out):
        if len(prog) + 2 <= max_len:
            found[prog + "11"] = out
        if len(prog) + 4 <= max_len:
            for b in "01":
                grow(prog + "0" + b, out + b)
        if len(prog) + 10 <= max_len:
            for length in range(1, min(8, len(out)) + 1):
                for count in range(1, 9):
                    code = "10" + format(length - 1, "03b") + format(count - 1, "03b")
                    grow(prog + code, out + out[-length:] * count)

    grow("", "")
    return found


def min_lengths(max_len):
    best = {}
    for p, out in valid_programs(max_len).items():
        if out not in best or len(p) < best[out]:
            best[out] = len(p)
    return best


def classical(s, env):
    """Two-valued evaluation on the AST via Python booleans; rejects Liar."""
    name = type(s).__name__
    if name == "Atom":
        return env[s.name]
    if name == "Const":
        return s.value
    if name == "Not":
        return not classical(s.arg, env)
    if name == "And":
        return classical(s.left, env) and classical(s.right, env)
    if name == "Or":
        return classical(s.left, env) or classical(s.right, env)
    if name == "Implies":
        return (not classical(s.left, env)) or classical(s.right, env)
    raise ValueError(f"no classical value for {s}")


ASSIGNMENTS = [dict(zip("pqr", bits)) for bits in itertools.product([False, True], repeat=3)]


def sentences_up_to_depth(depth, leaves):
    """All sentences of depth <= ``depth`` (leaves have depth 0), built by brute force."""
    from limitlab.ak import And, Implies, Not, Or

    all_so_far = list(leaves)
    for _ in range(depth):
        prev = all_so_far
        new = [Not(s) for s in prev]
        new += [op(a, b) for op in (And, Or, Implies) for a in prev for b in prev]
        all_so_far = list(dict.fromkeys(prev + new))
    return all_so_far
