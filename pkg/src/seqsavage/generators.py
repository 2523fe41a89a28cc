"""Seeded random instances for tests and experiments."""
from __future__ import annotations

import random
from fractions import Fraction

from .actions import NOOP, ActionLibrary, Do, IfThenElse, Seq
from .canonical import canonical_map, enumerate_CA_minus, enumerate_CM, realize
from .logic import BOTTOM, TOP, And, Iff, Implies, Not, Or, Prop, PropSet, atom_set_formula
from .preferences import PreferenceOrder
from .representation import StateDependentUtility
from .semantics import BasicModel, SelectionModel


def rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_formula(props, r, depth=3):
    r = rng(r)
    if depth == 0 or r.random() < 0.3:
        roll = r.random()
        if roll < 0.05:
            return TOP
        if roll < 0.1:
            return BOTTOM
        return Prop(r.choice(props.props))
    op = r.choice([Not, And, Or, Implies, Iff])
    if op is Not:
        return Not(random_formula(props, r, depth - 1))
    return op(random_formula(props, r, depth - 1), random_formula(props, r, depth - 1))


def full_library(props):
    """Every satisfiable effect up to equivalence, one per nonempty atom set."""
    import itertools

    size = props.size
    effects = []
    for n in range(1, size + 1):
        for combo in itertools.combinations(range(1, size + 1), n):
            effects.append(atom_set_formula(combo, props))
    return ActionLibrary(props, effects)


def random_library(props, r, n_effects=3):
    r = rng(r)
    effects = []
    while len(effects) < n_effects:
        atoms = sorted(r.sample(range(1, props.size + 1), r.randint(1, props.size)))
        f = atom_set_formula(atoms, props)
        if f not in effects:
            effects.append(f)
    return ActionLibrary(props, effects)


def random_action(lib, r, max_depth=2):
    """A well-formed action of depth at most ``max_depth``."""
    r = rng(r)
    return _action(lib, r, max_depth, 4)


def _action(lib, r, d, budget):
    if d == 0:
        return NOOP
    roll = r.random()
    if budget <= 0 or roll < 0.35:
        return Do(_effect(lib, r))
    if roll < 0.45:
        return NOOP
    if roll < 0.75:
        test = random_formula(lib.props, r, 2)
        then = _action(lib, r, d, budget - 1)
        orelse = _action(lib, r, d, budget - 1)
        if then == NOOP and orelse == NOOP:
            then = Do(_effect(lib, r))
        return IfThenElse(test, then, orelse)
    if d < 2:
        return Do(_effect(lib, r))
    d1 = r.randint(1, d - 1)
    first = _action(lib, r, d1, budget - 1)
    second = _action(lib, r, d - d1, budget - 1)
    if first == NOOP and second == NOOP:
        return Do(_effect(lib, r))
    return Seq(first, second)


def _effect(lib, r):
    f = r.choice(lib.effects)
    # sometimes an equivalent but syntactically different effect
    if r.random() < 0.2:
        return And(f, Or(Prop(lib.props.props[0]), Not(Prop(lib.props.props[0]))))
    return f


def random_map_action(lib, r, k):
    """The realization of a uniformly chosen canonical map of depth <= k."""
    r = rng(r)
    entries = enumerate_CA_minus(k, lib)
    from .canonical import CanonicalMap

    cmap = CanonicalMap(tuple(r.choice(entries) for _ in range(lib.props.size)))
    return realize(cmap, lib.props)


def random_selection_model(lib, r, max_states=8):
    """A model with at least one state per effect and a full selection table."""
    r = rng(r)
    props = lib.props
    n = r.randint(1, max_states)
    atoms = [r.randint(1, props.size) for _ in range(n)]
    for A in lib.f_tilde:
        if not any(a in A for a in atoms):
            atoms.append(r.choice(list(A)))
    states = [f"s{i}" for i in range(len(atoms))]
    valuation = {p: [s for s, a in zip(states, atoms) if p in props.atom(a).true] for p in props}
    model = BasicModel(props, states, valuation)
    sel = {}
    for s in states:
        for A in lib.f_tilde:
            sel[(s, A)] = r.choice([t for t, a in zip(states, atoms) if a in A])
    return SelectionModel(model, sel)


def random_utility(lib, r, k, denominator=12):
    r = rng(r)
    entries = enumerate_CA_minus(k, lib)
    table = {(a, e): Fraction(r.randint(0, denominator), denominator)
             for a in range(1, lib.props.size + 1) for e in entries}
    return StateDependentUtility(k, table)


def random_pool(lib, r, k, n, distinct=True):
    """``n`` actions of depth <= k; distinct canonical maps unless told otherwise."""
    r = rng(r)
    pool, seen = [], set()
    n_maps = len(enumerate_CM(k, lib))
    attempts = 0
    while len(pool) < n and attempts < 50 * n:
        attempts += 1
        a = random_action(lib, r, k) if r.random() < 0.5 else random_map_action(lib, r, k)
        m = canonical_map(a, lib)
        if a in pool:
            continue
        if distinct and m in seen and len(seen) < n_maps:
            continue
        seen.add(m)
        pool.append(a)
    return pool


def induced_order(v, pool, lib):
    return PreferenceOrder.from_scores(pool, [v.score(canonical_map(a, lib)) for a in pool])


def random_order(pool, r, n_tiers=None):
    r = rng(r)
    n_tiers = n_tiers or max(1, len(pool))
    return PreferenceOrder(pool, [r.randrange(n_tiers) for _ in pool])


def props_for(n_atoms):
    """Propositions p, q, ... giving ``n_atoms`` atoms (a power of two)."""
    n = n_atoms.bit_length() - 1
    if 2 ** n != n_atoms:
        raise ValueError("number of atoms must be a power of two")
    return PropSet.of(*"pqrstu"[:n])
