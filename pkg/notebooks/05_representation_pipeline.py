"""From a preference order to probabilities and utilities over trees, and back.

Run: python3 notebooks/05_representation_pipeline.py
"""
import random

from seqsavage import assemble, canonical_map, expected_utility, format_action, solve_state_dependent
from seqsavage.generators import full_library, induced_order, props_for, random_pool, random_utility
from seqsavage.representation import check_pr_compatibility, verify_representation

lib = full_library(props_for(2))
r = random.Random(3)
pool = random_pool(lib, r, 2, 8)
po = induced_order(random_utility(lib, r, 2), pool, lib)

v = solve_state_dependent(po, lib)
rep = assemble(v, lib)
print(f"{rep.n_olts} trees, uniform prior, {len(rep.u)} nonzero utility cells")
for a in sorted(pool, key=po.tier):
    eu = expected_utility(rep, a)
    print(f"tier {po.tier(a)}  EU {str(eu):>8}  score {str(v.score(canonical_map(a, lib))):>8}  {format_action(a)}")
print("order reproduced:", verify_representation(rep, po) is None)
print("prior consistent across depths up to 3:", check_pr_compatibility(3, 2) is None)
