"""Cancellation: finding a violating tuple, or a utility table showing there is none.

Run: python3 notebooks/03_cancellation.py
"""
from seqsavage import (AtomSet, CanonicalMap, DoA, PreferenceOrder, canonical_map, certify_cancellation,
                       check_cancellation, format_action, parse_action, realize)
from seqsavage.generators import full_library, props_for

lib = full_library(props_for(2))
show = lambda acts: [format_action(a) for a in acts]

# Same outcome at each atom, different ranks: an immediate violation.
bad = PreferenceOrder.from_tiers([parse_action("do(p)", lib), parse_action("if p then do(p) else do(p)", lib)],
                                 [[0], [1]])
w = check_cancellation(bad, lib)
print("n=1 violation:", show(w.alphas), "vs", show(w.betas))

# Three "mixed" actions all beat the three "constant" ones, but the mixed
# outcomes are a rearrangement of the constant ones. No pair or two pairs
# cancel; three do.
d1, d2, d12 = (DoA(AtomSet.of(x)) for x in ([1], [2], [1, 2]))
act = lambda x, y: realize(CanonicalMap((x, y)), lib.props)
mixed = [act(d1, d2), act(d2, d12), act(d12, d1)]
const = [act(d1, d1), act(d2, d2), act(d12, d12)]
po = PreferenceOrder(mixed + const, [0, 0, 0, 1, 1, 1])
print("search up to 2 pairs:", check_cancellation(po, lib, max_n=2))
w = check_cancellation(po, lib, max_n=3)
print(f"search up to 3 pairs: violation with n={w.n}")
for a, b in zip(w.alphas, w.betas):
    print(f"  {format_action(a):45} >= {format_action(b)}")

# The LP side reaches the same verdict without a size bound.
cert = certify_cancellation(po, lib)
print("LP certificate size:", cert.n)

# Drop the constant actions and the order is representable.
ok = PreferenceOrder(mixed, [0, 1, 2])
v = certify_cancellation(ok, lib)
print("representable; scores:", [str(v.score(canonical_map(a, lib))) for a in mixed])
