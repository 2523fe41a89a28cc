import pytest
from hypothesis import given, settings, strategies as st

from seqsavage.actions import (NOOP, ActionLibrary, Do, IfThenElse, Seq, depth, format_action,
                               parse_action, parse_action_unchecked, validate)
from seqsavage.errors import ParseError, ValidationError
from seqsavage.generators import full_library, props_for, random_action
from seqsavage.logic import Prop, PropSet, parse_formula


def test_seq_binds_loosest_and_ite_branches(pq):
    props = PropSet.of("p", "q", "r", "r2")
    a = parse_action_unchecked("if p then do(r) else do(r2); if q then do(~r)", props)
    assert isinstance(a, Seq)
    assert isinstance(a.first, IfThenElse) and a.first.orelse == Do(Prop("r2"))
    assert a.second == IfThenElse(Prop("q"), Do(parse_formula("~r")), NOOP)


def test_seq_is_left_associative(pq):
    a = parse_action_unchecked("do(p); do(q); do(p)", pq)
    assert a == Seq(Seq(Do(Prop("p")), Do(Prop("q"))), Do(Prop("p")))


def test_depth():
    props = PropSet.of("p", "q")
    assert depth(NOOP) == 0
    assert depth(parse_action_unchecked("if p then do(q) else noop", props)) == 1
    assert depth(parse_action_unchecked("do(p); do(q); do(p)", props)) == 3
    assert depth(parse_action_unchecked("if p then (do(p); do(q)) else do(q)", props)) == 2


def test_validation_reports_every_violation(pq):
    lib = ActionLibrary.from_strings(pq, ["p"])
    bad = parse_action_unchecked("if p then noop else noop; do(q); do(p & ~p)", pq)
    messages = [str(v) for v in validate(bad, lib)]
    assert len(messages) == 3
    assert any("both branches noop" in m for m in messages)
    assert any("not in F" in m for m in messages)
    assert any("unsatisfiable" in m for m in messages)
    with pytest.raises(ValidationError):
        parse_action("do(q)", lib)


def test_effects_are_matched_up_to_equivalence(pq):
    lib = ActionLibrary.from_strings(pq, ["p"])
    assert parse_action("do(p & (q | ~q))", lib) == Do(parse_formula("p & (q | ~q)"))
    lax = ActionLibrary.from_strings(pq, ["p"], strict=False)
    parse_action("do(q)", lax)


def test_unsatisfiable_library_effect_rejected(pq):
    with pytest.raises(ValidationError):
        ActionLibrary.from_strings(pq, ["p & ~p"])


def test_parse_errors(pq):
    lib = ActionLibrary.from_strings(pq, ["p"])
    for bad in ["do(p", "if p do(p)", "do(p);", "noop noop", "then"]:
        with pytest.raises(ParseError):
            parse_action(bad, lib)


LIB = full_library(props_for(4))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_format_parse_roundtrip(seed):
    a = random_action(LIB, seed, 3)
    assert not validate(a, LIB)
    assert parse_action(format_action(a), LIB) == a
    assert depth(a) <= 3
