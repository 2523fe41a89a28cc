"""Brute-force reference implementations used to cross-check the library.

These deliberately avoid canonical maps and the fast search paths: formulas
are evaluated straight from their syntax tree, actions are run by a
small-step machine, cancellation is checked by listing tuples, and progress
functions are computed by walking the action over an olt node by node.
"""
from __future__ import annotations

import itertools
from collections import Counter

from .actions import Do, IfThenElse, Noop, Seq
from .logic import And, Bottom, Iff, Implies, Not, Or, Prop, Top


def truth(formula, assignment):
    """Value of ``formula`` under ``assignment`` (a dict prop -> bool)."""
    match formula:
        case Top():
            return True
        case Bottom():
            return False
        case Prop(name=name):
            return assignment[name]
        case Not(arg=a):
            return not truth(a, assignment)
        case And(left=l, right=r):
            return truth(l, assignment) and truth(r, assignment)
        case Or(left=l, right=r):
            return truth(l, assignment) or truth(r, assignment)
        case Implies(left=l, right=r):
            return (not truth(l, assignment)) or truth(r, assignment)
        case Iff(left=l, right=r):
            return truth(l, assignment) == truth(r, assignment)
    raise TypeError(formula)


def truth_table(formula, names):
    """Row indices (1-based, all-true row first) where ``formula`` holds."""
    rows = []
    for i, values in enumerate(itertools.product([True, False], repeat=len(names)), 1):
        if truth(formula, dict(zip(names, values))):
            rows.append(i)
    return tuple(rows)


def small_step(action, sm, state):
    """Run ``action`` with an explicit continuation stack."""
    names = list(sm.props)
    stack = [action]
    while stack:
        a = stack.pop()
        if isinstance(a, Noop):
            continue
        if isinstance(a, Do):
            target_rows = truth_table(a.effect, names)
            state = sm.sel[(state, _atomset_key(sm, target_rows))]
        elif isinstance(a, IfThenElse):
            here = {p: state in sm.model.valuation[p] for p in names}
            stack.append(a.then if truth(a.test, here) else a.orelse)
        elif isinstance(a, Seq):
            stack.append(a.second)
            stack.append(a.first)
        else:
            raise TypeError(a)
    return state


def _atomset_key(sm, rows):
    for (_, atoms) in sm.sel:
        if tuple(atoms) == rows:
            return atoms
    raise KeyError(rows)


def cancellation_violation(po, lib, max_n):
    """Literal search over all tuple pairs of size <= max_n."""
    from .canonical import canonical_map

    maps = [canonical_map(a, lib) for a in po.pool]
    idx = range(len(po.pool))
    size = lib.props.size
    for n in range(1, max_n + 1):
        for alphas in itertools.product(idx, repeat=n):
            counts = [Counter(maps[i][a] for i in alphas) for a in range(1, size + 1)]
            for betas in itertools.product(idx, repeat=n):
                if not all(po.tiers[alphas[i]] <= po.tiers[betas[i]] for i in range(n - 1)):
                    continue
                if po.tiers[betas[-1]] <= po.tiers[alphas[-1]]:
                    continue
                if all(Counter(maps[j][a] for j in betas) == counts[a - 1] for a in range(1, size + 1)):
                    return [po.pool[i] for i in alphas], [po.pool[j] for j in betas]
    return None


def walk_progress(action, olt, lib):
    """g(t) for every node t, by running ``action`` with its first steps forced along t."""
    names = list(lib.props)
    out = {}
    for t in olt.nodes:
        end, steps = _walk(action, olt, names, t, (), 0)
        if steps > len(t) and end != t:
            out[t] = end
    return out


def _walk(action, olt, names, t, node, steps):
    if isinstance(action, Noop):
        return node, steps
    if isinstance(action, Do):
        if steps < len(t):
            return t[:steps + 1], steps + 1
        rows = truth_table(action.effect, names)
        for x in olt.order_at(node):
            if x in rows:
                return node + (x,), steps + 1
        raise ValueError("unsatisfiable effect")
    if isinstance(action, IfThenElse):
        true = olt.size - olt.label(node)  # bit pattern of the current atom
        here = {p: bool(true >> (len(names) - 1 - j) & 1) for j, p in enumerate(names)}
        branch = action.then if truth(action.test, here) else action.orelse
        return _walk(branch, olt, names, t, node, steps)
    if isinstance(action, Seq):
        node, steps = _walk(action.first, olt, names, t, node, steps)
        return _walk(action.second, olt, names, t, node, steps)
    raise TypeError(action)
