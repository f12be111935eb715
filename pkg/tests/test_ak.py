import pytest
from hypothesis import given
from hypothesis import strategies as st

from limitlab.ak import (
    FALSE,
    LIAR,
    TRUE,
    And,
    Atom,
    Implies,
    Not,
    Or,
    TruthValue3,
    atoms,
    collapse,
    evaluate_ak,
    evaluate_kleene,
    has_liar,
    parse_assignment,
    parse_sentence,
    substitute_liar,
)
from limitlab.errors import ParseError, UnboundAtom

from oracles import ASSIGNMENTS, classical, sentences_up_to_depth

p, q, r = Atom("p"), Atom("q"), Atom("r")
T, F, P = TruthValue3.TRUE, TruthValue3.FALSE, TruthValue3.PARADOX


@pytest.mark.parametrize("text, tree", [
    ("p & (q | !r)", And(p, Or(q, Not(r)))),
    ("LIAR", LIAR),
    ("TRUE", TRUE),
    ("p -> q -> r", Implies(p, Implies(q, r))),
    ("p | q | r", Or(Or(p, q), r)),
    ("p & q & r", And(And(p, q), r)),
    ("p | q & r", Or(p, And(q, r))),
    ("p & q -> r | p", Implies(And(p, q), Or(r, p))),
    ("!!p", Not(Not(p))),
    ("  ( p )  ", p),
    ("x_1 & abc9", And(Atom("x_1"), Atom("abc9"))),
])
def test_parse(text, tree):
    assert parse_sentence(text) == tree


@pytest.mark.parametrize("text, position", [
    ("p &", 3),
    ("", 0),
    ("(p", 2),
    ("p q", 2),
    ("P", 0),
    ("p - q", 2),
    ("p & )", 4),
    ("1p", 0),
])
def test_parse_errors(text, position):
    with pytest.raises(ParseError) as info:
        parse_sentence(text)
    assert info.value.position == position


def test_printed_form_reparses():
    for s in sentences_up_to_depth(2, [p, q, LIAR, TRUE]):
        assert parse_sentence(str(s)) == s


@pytest.mark.parametrize("text, env, value", [
    ("LIAR", {}, P),
    ("p & !p", {"p": True}, F),
    ("LIAR | TRUE", {}, T),
    ("LIAR & FALSE", {}, F),
    ("LIAR & TRUE", {}, P),
    ("!LIAR", {}, P),
    ("LIAR -> LIAR", {}, P),
    ("FALSE -> LIAR", {}, T),
    ("LIAR | p", {"p": False}, P),
])
def test_kleene_examples(text, env, value):
    assert evaluate_kleene(parse_sentence(text), env) is value


def test_kleene_tables_full():
    vals = [T, F, P]
    def lit(v):
        return {T: TRUE, F: FALSE, P: LIAR}[v]
    order = {F: 0, P: 1, T: 2}
    for x in vals:
        assert evaluate_kleene(Not(lit(x)), {}) is {T: F, F: T, P: P}[x]
        for y in vals:
            # strong Kleene: And is min, Or is max under F < P < T
            assert order[evaluate_kleene(And(lit(x), lit(y)), {})] == min(order[x], order[y])
            assert order[evaluate_kleene(Or(lit(x), lit(y)), {})] == max(order[x], order[y])
            assert evaluate_kleene(Implies(lit(x), lit(y)), {}) is evaluate_kleene(Or(Not(lit(x)), lit(y)), {})


@pytest.mark.parametrize("text, env, value", [
    ("LIAR", {}, False),
    ("LIAR | p", {"p": False}, False),
    ("LIAR | p", {"p": True}, True),
    ("LIAR & LIAR", {}, False),
    ("!LIAR", {}, False),
    ("LIAR | FALSE", {}, False),
])
def test_ak_examples(text, env, value):
    assert evaluate_ak(parse_sentence(text), env) is value


def test_unbound_atom():
    with pytest.raises(UnboundAtom) as info:
        evaluate_kleene(parse_sentence("p | q"), {"p": True})
    assert info.value.name == "q"
    with pytest.raises(UnboundAtom):
        evaluate_ak(parse_sentence("TRUE | z"), {})


def test_collapse_idempotent():
    for v in TruthValue3:
        assert collapse(collapse(v)) is collapse(v)
        assert collapse(v) in (T, F)


def test_ak_equals_classical_on_liar_free_depth2():
    for s in sentences_up_to_depth(2, [p, q, r, TRUE, FALSE]):
        for env in ASSIGNMENTS:
            assert evaluate_ak(s, env) == classical(s, env)


def test_kleene_monotone_under_liar_substitution():
    for s in sentences_up_to_depth(2, [p, q, LIAR, FALSE]):
        for env in ASSIGNMENTS:
            v = evaluate_kleene(s, env)
            if v is P:
                continue
            for repl in (TRUE, FALSE):
                assert evaluate_kleene(substitute_liar(s, repl), env) is v


def test_paradox_always_collapses_to_false():
    for s in sentences_up_to_depth(2, [p, LIAR, TRUE]):
        for env in ASSIGNMENTS:
            if evaluate_kleene(s, env) is P:
                assert evaluate_ak(s, env) is False


def test_multi_liar_sentences():
    s = parse_sentence("(LIAR & LIAR) | (LIAR -> !LIAR)")
    assert evaluate_kleene(s, {}) is P
    assert evaluate_ak(s, {}) is False


sentence_st = st.recursive(
    st.sampled_from([p, q, r, TRUE, FALSE, LIAR]),
    lambda kids: st.one_of(
        kids.map(Not),
        st.tuples(kids, kids).map(lambda t: And(*t)),
        st.tuples(kids, kids).map(lambda t: Or(*t)),
        st.tuples(kids, kids).map(lambda t: Implies(*t)),
    ),
    max_leaves=24,
)


@given(sentence_st, st.sampled_from(ASSIGNMENTS))
def test_ak_agrees_with_classical_when_liar_free(s, env):
    if has_liar(s):
        assert evaluate_ak(s, env) == (evaluate_kleene(s, env) is T)
    else:
        assert evaluate_ak(s, env) == classical(s, env)


@given(sentence_st, st.sampled_from(ASSIGNMENTS))
def test_reparse_preserves_value(s, env):
    assert evaluate_kleene(parse_sentence(str(s)), env) is evaluate_kleene(s, env)


def test_helpers():
    s = parse_sentence("p & (LIAR | q)")
    assert atoms(s) == {"p", "q"}
    assert has_liar(s) and not has_liar(parse_sentence("p | q"))


def test_parse_assignment():
    assert parse_assignment("p=1,q=0") == {"p": True, "q": False}
    assert parse_assignment("") == {}
    for bad in ("p=2", "p", "P=1"):
        with pytest.raises(ValueError):
            parse_assignment(bad)
