import random

import pytest

from seqsavage.actions import NOOP, ActionLibrary, parse_action
from seqsavage.errors import MissingSelection, ValidationError
from seqsavage.generators import random_action, random_selection_model
from seqsavage.logic import AtomSet, PropSet, parse_formula
from seqsavage.oracles import small_step
from seqsavage.semantics import BasicModel, SelectionModel, interpret, is_F_rich, state_satisfies


@pytest.fixture
def model(pq):
    # w1: p q, w2: p ~q, w3: ~p ~q
    return BasicModel(pq, ("w1", "w2", "w3"), {"p": ["w1", "w2"], "q": ["w1"]})


def test_valuation_and_atoms(model, pq):
    assert model.atom_at("w2").index == pq.atom_for({"p"}).index
    assert state_satisfies(model, "w3", parse_formula("~p & ~q"))
    assert model.extension(parse_formula("p")) == {"w1", "w2"}


def test_f_richness(model, pq):
    lib = ActionLibrary.from_strings(pq, ["p", "~p & q"])
    assert [str(f) for f in is_F_rich(model, lib)] == ["~p & q"]


def test_interpret(model, pq):
    lib = ActionLibrary.from_strings(pq, ["p", "~p"])
    A_p, A_np = AtomSet.of([1, 2]), AtomSet.of([3, 4])
    sm = SelectionModel(model, {("w1", A_np): "w3", ("w3", A_p): "w2", ("w2", A_np): "w3"})
    assert interpret(NOOP, sm, "w1") == "w1"
    assert interpret(parse_action("do(~p)", lib), sm, "w1") == "w3"
    assert interpret(parse_action("do(~p); do(p)", lib), sm, "w1") == "w2"
    assert interpret(parse_action("if q then do(~p) else do(p)", lib), sm, "w3") == "w2"
    with pytest.raises(MissingSelection):
        interpret(parse_action("do(p)", lib), sm, "w1")
    assert ("w1", "p") in sm.missing(lib)


def test_selection_must_satisfy_effect(model):
    with pytest.raises(ValidationError):
        SelectionModel(model, {("w1", AtomSet.of([4])): "w1"})


def test_small_step_oracle_agrees(lib1):
    r = random.Random(11)
    for _ in range(200):
        sm = random_selection_model(lib1, r)
        a = random_action(lib1, r, 3)
        for s in sm.model.states:
            assert interpret(a, sm, s) == small_step(a, sm, s)
