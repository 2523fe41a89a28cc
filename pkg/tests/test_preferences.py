import random

import pytest

from seqsavage import oracles
from seqsavage.actions import parse_action
from seqsavage.canonical import CanonicalMap, DoA, realize
from seqsavage.errors import BudgetExceeded
from seqsavage.generators import (full_library, induced_order, props_for, random_order, random_pool,
                                  random_utility)
from seqsavage.logic import AtomSet
from seqsavage.preferences import (CancellationWitness, PreferenceOrder, Relation, certify_cancellation,
                                   check_cancellation, induced_order_welldefined, relation,
                                   validate_witness)
from seqsavage.representation import StateDependentUtility


@pytest.fixture
def acts(lib1):
    return [parse_action(t, lib1) for t in ["noop", "do(p)", "do(~p)", "do(p | ~p)"]]


def test_relation_from_tiers(acts):
    po = PreferenceOrder.from_tiers(acts, [[1], [0, 2], [3]])
    assert relation(po, acts[1], acts[0]) is Relation.PREFERRED
    assert relation(po, acts[0], acts[2]) is Relation.INDIFFERENT
    assert relation(po, acts[3], acts[2]) is Relation.DISPREFERRED
    assert all(po.weakly_prefers(a, a) for a in acts)
    with pytest.raises(KeyError):
        po.tier(parse_action("do(p); do(p)", full_library(props_for(2))))


def test_tier_validation(acts):
    with pytest.raises(ValueError):
        PreferenceOrder.from_tiers(acts, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError):
        PreferenceOrder.from_tiers(acts, [[0, 1]])
    with pytest.raises(ValueError):
        PreferenceOrder(acts + [acts[0]], [0, 1, 2, 3, 4])


def test_from_pairs(acts):
    weak = {(0, 1), (1, 0), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)}
    po = PreferenceOrder.from_pairs(acts, weak)
    assert po.tier_groups() == [[0, 1], [2], [3]]
    with pytest.raises(ValueError, match="incomplete"):
        PreferenceOrder.from_pairs(acts, weak - {(2, 3)})
    cyclic = {(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)}
    with pytest.raises(ValueError, match="intransitive"):
        PreferenceOrder.from_pairs(acts, cyclic)


def test_equal_maps_strictly_ranked_is_a_size_one_violation(pq):
    from seqsavage.actions import ActionLibrary

    lib = ActionLibrary.from_strings(pq, ["p"])
    a, b = parse_action("do(p)", lib), parse_action("do(p & (q | ~q))", lib)
    po = PreferenceOrder([a, b], [0, 1])
    assert induced_order_welldefined(po, lib) == (a, b)
    w = check_cancellation(po, lib, 1)
    assert w.n == 1 and not validate_witness(w, po, lib)
    assert induced_order_welldefined(PreferenceOrder([a], [0]), lib) is None


def three_pair_pool(lib):
    props = lib.props
    d1, d2, d12 = (DoA(AtomSet.of(x)) for x in ([1], [2], [1, 2]))
    m = lambda x, y: realize(CanonicalMap((x, y)), props)
    top = [m(d1, d2), m(d2, d12), m(d12, d1)]
    low = [m(d1, d1), m(d2, d2), m(d12, d12)]
    return PreferenceOrder(top + low, [0, 0, 0, 1, 1, 1])


def test_violation_needing_three_pairs(lib1):
    po = three_pair_pool(lib1)
    assert check_cancellation(po, lib1, 2) is None
    assert oracles.cancellation_violation(po, lib1, 2) is None
    w = check_cancellation(po, lib1, 3)
    assert w.n == 3 and not validate_witness(w, po, lib1)
    assert oracles.cancellation_violation(po, lib1, 3) is not None
    cert = certify_cancellation(po, lib1)
    assert isinstance(cert, CancellationWitness) and not validate_witness(cert, po, lib1)


def test_witness_validation_catches_bad_witnesses(lib1):
    po = three_pair_pool(lib1)
    w = check_cancellation(po, lib1, 3)
    assert validate_witness(CancellationWitness(w.alphas[:2], w.betas[:2]), po, lib1)
    assert validate_witness(CancellationWitness(w.betas, w.alphas), po, lib1)


def test_induced_orders_pass_both_checks(lib1):
    r = random.Random(8)
    for _ in range(15):
        pool = random_pool(lib1, r, 2, 8)
        po = induced_order(random_utility(lib1, r, 2), pool, lib1)
        assert check_cancellation(po, lib1, 4) is None
        assert isinstance(certify_cancellation(po, lib1), StateDependentUtility)


def test_search_agrees_with_literal_enumeration(lib1):
    r = random.Random(9)
    for _ in range(30):
        pool = random_pool(lib1, r, 1, r.randint(2, 4), distinct=False)
        po = random_order(pool, r, 3)
        found = check_cancellation(po, lib1, 3)
        literal = oracles.cancellation_violation(po, lib1, 3)
        assert (found is None) == (literal is None)


def test_search_budget(lib1):
    r = random.Random(1)
    pool = random_pool(lib1, r, 2, 40)
    with pytest.raises(BudgetExceeded):
        check_cancellation(random_order(pool, r), lib1, 4, budget=100)
