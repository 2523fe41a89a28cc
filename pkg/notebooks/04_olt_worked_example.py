"""Ordered labeled trees: where an action lands from each node.

Two propositions, a one-level tree whose root ranks the children
~p&q, ~p&~q, p&~q, p&q from closest to farthest.

Run: python3 notebooks/04_olt_worked_example.py
"""
from seqsavage import ActionLibrary, Olt, PropSet, parse_action, progress_of

props = PropSet.of("p", "q")
lib = ActionLibrary.from_strings(props, ["p | q", "p | ~q"])
order = tuple(props.atom_for(t).index for t in [{"q"}, set(), {"p"}, {"p", "q"}])
print("root order (closest first):", order)

s1 = Olt.from_orders(4, 1, 1, {(): order})
for text in ["do(p | q)", "do(p | ~q)"]:
    node = progress_of(parse_action(text, lib), s1, lib)(())
    print(f"{text:12} -> child {node[0]} = {props.atom(node[0])}")

# A two-step action walks down through the first child it picked.
s2 = Olt.from_orders(4, 2, 1, {(): order, (3,): (4, 2, 3, 1)})
g = progress_of(parse_action("do(p | q); do(p | ~q)", lib), s2, lib)
print("sequence ends at", g(()))
# The progress function also records the counterfactual branches.
for t, u in g.moves:
    print(f"  {t} -> {u}")
