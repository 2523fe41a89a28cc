import itertools

import pytest
from hypothesis import assume, given, settings, strategies as st

from seqsavage.actions import NOOP, ActionLibrary, Do, Seq, parse_action
from seqsavage.canonical import (NOOP_ENTRY, CanonicalMap, DoA, DoASeq, canonical_action,
                                 canonical_map, compose, count_ca_minus, enumerate_CA,
                                 enumerate_CA_minus, enumerate_CM, noop_map, realize)
from seqsavage.errors import BudgetExceeded
from seqsavage.generators import full_library, props_for, random_action
from seqsavage.logic import AtomSet, PropSet, atoms_of, parse_formula


def test_do_maps_every_atom_to_its_atom_set(pq):
    lib = ActionLibrary.from_strings(pq, ["p | q"])
    cmap = canonical_map(parse_action("do(p | q)", lib), lib)
    assert cmap.entries == (DoA(AtomSet.of([1, 2, 3])),) * 4


def test_conditional_then_sequence(pq):
    lib = ActionLibrary.from_strings(pq, ["p", "q"])
    cmap = canonical_map(parse_action("if p then do(q) else noop; do(p)", lib), lib)
    do_p = canonical_map(parse_action("do(p)", lib), lib)
    assert cmap[pq.atom_for({"p", "q"}).index] == DoASeq(atoms_of(parse_formula("q"), pq), do_p)
    assert cmap[pq.atom_for(set()).index] == DoA(atoms_of(parse_formula("p"), pq))


def test_two_layer_example_has_a_continuation_at_every_atom():
    props = PropSet.of("p", "q", "r", "r2")
    lib = ActionLibrary.from_strings(props, ["r", "r2", "~r"])
    cmap = canonical_map(parse_action("if p then do(r) else do(r2); if q then do(~r)", lib), lib)
    assert all(isinstance(e, DoASeq) for e in cmap.entries)
    rest = cmap.entries[0].rest
    for atom in props.atoms:
        assert (rest[atom.index] == NOOP_ENTRY) == ("q" not in atom.true)


def test_noop_and_equivalent_effects():
    lib = full_library(props_for(4))
    assert canonical_action(NOOP, lib).action == NOOP
    a = parse_action("do(p)", lib)
    b = parse_action("do(p & (q | ~q))", lib)
    assert canonical_action(a, lib).action == canonical_action(b, lib).action


def test_trailing_noop_continuation_is_dropped(lib1):
    a = Seq(Do(parse_formula("p")), NOOP)
    assert canonical_map(a, lib1).entries == (DoA(AtomSet.of([1])),) * 2
    with pytest.raises(ValueError):
        DoASeq(AtomSet.of([1]), noop_map(2))


def test_counts(lib1):
    assert len(enumerate_CA_minus(1, lib1)) == 4
    assert len(enumerate_CM(1, lib1)) == 16
    # normalizing do(A); noop to do(A) removes |F~| duplicates from the naive 1 + 3 + 3*16
    assert len(enumerate_CA_minus(2, lib1)) == 1 + 3 + 3 * (16 - 1) == 49
    assert count_ca_minus(2, 3, 2) == 49
    for k in range(3):
        assert len(set(enumerate_CA_minus(k, lib1))) == count_ca_minus(k, 3, 2)


def test_budget_is_enforced(lib1):
    with pytest.raises(BudgetExceeded):
        enumerate_CM(2, lib1, budget=1000)


def test_every_canonical_action_has_its_own_map(lib1):
    for ca in enumerate_CA(2, lib1, budget=10**6):
        assert canonical_map(ca.action, lib1) == ca.map


def test_realize_truncates_after_last_non_noop(pq):
    lib = ActionLibrary.from_strings(pq, ["p"])
    A = AtomSet.of([1, 2])
    cmap = CanonicalMap((NOOP_ENTRY, DoA(A), NOOP_ENTRY, NOOP_ENTRY))
    act = realize(cmap, pq)
    assert str(act) == "if p & q then noop else if p & ~q then do(p & q | p & ~q) else noop"
    assert canonical_map(act, lib) == cmap


LIB4 = full_library(props_for(4))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 10**9))
def test_seq_clause_and_idempotence(s1, s2):
    a = random_action(LIB4, s1, 2)
    b = random_action(LIB4, s2, 2)
    assume(a != NOOP or b != NOOP)
    ca, cb = canonical_map(a, LIB4), canonical_map(b, LIB4)
    assert canonical_map(Seq(a, b), LIB4) == compose(ca, cb)
    assert canonical_map(realize(ca, LIB4.props), LIB4) == ca
    assert ca.depth <= 2


def test_compose_is_associative(lib1):
    maps = enumerate_CM(1, lib1)
    for x, y, z in itertools.islice(itertools.product(maps, repeat=3), 0, 4096, 7):
        assert compose(compose(x, y), z) == compose(x, compose(y, z))
