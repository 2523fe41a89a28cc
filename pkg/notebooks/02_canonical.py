"""Canonical maps: what an action does first at each atom, and what comes after.

Run: python3 notebooks/02_canonical.py
"""
from seqsavage import (ActionLibrary, PropSet, canonical_map, count_ca_minus, enumerate_CA_minus,
                       format_action, parse_action, realize)
from seqsavage.generators import full_library, props_for

props = PropSet.of("p", "q", "r")
lib = ActionLibrary.from_strings(props, ["r", "~r"])
alpha = parse_action("if p then do(r) else (do(~r); do(r))", lib)
m = canonical_map(alpha, lib)
for i, e in enumerate(m.entries, 1):
    print(i, e)
gamma = format_action(realize(m, props))
print(f"canonical action: {len(gamma)} characters, starting {gamma[:60]}...")

# Syntactically different actions with equal maps are the same choice.
beta = parse_action("if ~p then (do(~r); do(r)) else do(r)", lib)
print("same map:", canonical_map(beta, lib) == m)

# do(A); noop is stored as do(A), so the counts follow 1 + F + F(c^N - 1).
one = full_library(props_for(2))
for k in (1, 2, 3):
    print(f"depth {k}: {count_ca_minus(k, 3, 2)} entries (enumerated {len(enumerate_CA_minus(k, one))})")
