"""Formulas, atoms and actions over a small propositional vocabulary.

Run: python3 notebooks/01_language.py
"""
from seqsavage import ActionLibrary, PropSet, atoms_of, depth, format_action, parse_action, parse_formula
from seqsavage.generators import random_selection_model
from seqsavage.semantics import interpret

props = PropSet.of("p", "q")
for i in range(1, props.size + 1):
    print(i, props.atom(i))

# An effect formula is identified with the set of atoms satisfying it.
for text in ["p | q", "p | ~q", "p -> q"]:
    print(f"{text:8} -> atoms {list(atoms_of(parse_formula(text, props), props))}")

lib = ActionLibrary.from_strings(props, ["p | q", "p | ~q", "q"])
alpha = parse_action("if p then do(q) else (do(p | q); do(p | ~q))", lib)
print(format_action(alpha), "has depth", depth(alpha))

# Actions only say what to make true; a selection model picks the state.
sm = random_selection_model(lib, 7, max_states=5)
for s in sm.model.states:
    print(f"from {s}: {interpret(alpha, sm, s)}")
