"""Preference orders over action pools and the cancellation axiom."""
from __future__ import annotations

import enum
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .canonical import canonical_map
from .config import check_budget


class Relation(enum.Enum):
    PREFERRED = ">"
    INDIFFERENT = "~"
    DISPREFERRED = "<"


@dataclass(frozen=True)
class PreferenceOrder:
    """A ranking with ties: ``tiers[i]`` is the tier of ``pool[i]``, lower is better."""

    pool: tuple
    tiers: tuple

    def __post_init__(self):
        object.__setattr__(self, "pool", tuple(self.pool))
        object.__setattr__(self, "tiers", tuple(int(t) for t in self.tiers))
        if len(self.pool) != len(self.tiers):
            raise ValueError("pool and tiers differ in length")
        if len(set(self.pool)) != len(self.pool):
            raise ValueError("pool lists the same action twice")

    @classmethod
    def from_tiers(cls, pool, groups):
        """From lists of pool indices, best group first; every index exactly once."""
        tiers = [None] * len(pool)
        for t, group in enumerate(groups):
            for i in group:
                if not 0 <= i < len(pool):
                    raise ValueError(f"tier index {i} outside the pool")
                if tiers[i] is not None:
                    raise ValueError(f"pool index {i} appears in two tiers")
                tiers[i] = t
        missing = [i for i, t in enumerate(tiers) if t is None]
        if missing:
            raise ValueError(f"pool indices {missing} have no tier")
        return cls(pool, tiers)

    @classmethod
    def from_scores(cls, pool, scores):
        """Higher score is better; equal scores tie."""
        distinct = sorted(set(scores), reverse=True)
        rank = {s: t for t, s in enumerate(distinct)}
        return cls(pool, [rank[s] for s in scores])

    @classmethod
    def from_pairs(cls, pool, weak):
        """From a set of index pairs (i, j) meaning pool[i] is weakly preferred to pool[j].

        Rejects relations that are incomplete or intransitive.
        """
        weak = set(weak)
        n = len(pool)
        for i in range(n):
            for j in range(n):
                if i != j and (i, j) not in weak and (j, i) not in weak:
                    raise ValueError(f"incomplete: pool items {i} and {j} are not compared")
        for i, j, l in itertools.product(range(n), repeat=3):
            if (i, j) in weak and (j, l) in weak and i != l and (i, l) not in weak:
                raise ValueError(f"intransitive: {i} >= {j} >= {l} but not {i} >= {l}")
        # number of items strictly better determines the tier
        better = [sum(1 for j in range(n) if (j, i) in weak and (i, j) not in weak) for i in range(n)]
        return cls.from_scores(pool, [-b for b in better])

    def index(self, action):
        try:
            return self.pool.index(action)
        except ValueError:
            raise KeyError(f"action not in pool: {action}") from None

    def tier(self, action):
        return self.tiers[self.index(action)]

    def weakly_prefers(self, a, b):
        return self.tier(a) <= self.tier(b)

    def tier_groups(self):
        """Pool indices grouped by tier, best first."""
        groups = {}
        for i, t in enumerate(self.tiers):
            groups.setdefault(t, []).append(i)
        return [groups[t] for t in sorted(groups)]


def relation(po, a, b):
    ta, tb = po.tier(a), po.tier(b)
    if ta < tb:
        return Relation.PREFERRED
    if ta > tb:
        return Relation.DISPREFERRED
    return Relation.INDIFFERENT


def induced_order_welldefined(po, lib):
    """None, or a pair (a, b) with equal canonical maps and a strictly preferred to b."""
    seen = {}
    for i, a in enumerate(po.pool):
        cmap = canonical_map(a, lib)
        j = seen.setdefault(cmap, i)
        if po.tiers[j] != po.tiers[i]:
            better, worse = (j, i) if po.tiers[j] < po.tiers[i] else (i, j)
            return po.pool[better], po.pool[worse]
    return None


# -- cancellation -----------------------------------------------------------

@dataclass(frozen=True)
class CancellationWitness:
    """Tuples with equal per-atom outcome multisets, alphas[i] >= betas[i] for
    i < n-1, and alphas[-1] strictly preferred to betas[-1]."""

    alphas: tuple
    betas: tuple

    @property
    def n(self):
        return len(self.alphas)

    def multisets(self, lib):
        """Per atom index, the outcome multisets of both tuples."""
        out = {}
        for a in range(1, lib.props.size + 1):
            left = Counter(canonical_map(x, lib)[a] for x in self.alphas)
            right = Counter(canonical_map(x, lib)[a] for x in self.betas)
            out[a] = (left, right)
        return out


def validate_witness(w, po, lib):
    """Problems with ``w`` as a violation of cancellation; empty means valid."""
    problems = []
    if w.n == 0 or len(w.betas) != w.n:
        return ["tuples must be nonempty and of equal length"]
    for a, (left, right) in w.multisets(lib).items():
        if left != right:
            problems.append(f"outcome multisets differ at atom {a}")
    for i, (x, y) in enumerate(zip(w.alphas[:-1], w.betas[:-1])):
        if not po.weakly_prefers(x, y):
            problems.append(f"premise {i} fails")
    if po.weakly_prefers(w.betas[-1], w.alphas[-1]):
        problems.append("conclusion holds")
    return problems


def _pair_vectors(po, lib):
    """Distinct canonical maps with tiers, and the nonzero weak pairs between them."""
    reps = {}
    for i, a in enumerate(po.pool):
        reps.setdefault(canonical_map(a, lib), i)
    items = list(reps.items())
    coord = {}
    vecs = []
    for (mi, i), (mj, j) in itertools.product(items, repeat=2):
        if i == j or po.tiers[i] > po.tiers[j]:
            continue
        diff = Counter()
        for a, (ei, ej) in enumerate(zip(mi.entries, mj.entries), 1):
            if ei != ej:
                diff[coord.setdefault((a, ei), len(coord))] += 1
                diff[coord.setdefault((a, ej), len(coord))] -= 1
        vecs.append((i, j, po.tiers[i] < po.tiers[j], diff))
    return vecs


def check_cancellation(po, lib, max_n=4, budget=None):
    """Search tuples of size <= max_n for a violation of cancellation.

    Returns a :class:`CancellationWitness` or None. A multiset of weak pairs
    (alpha_i, beta_i) whose outcome counts cancel atom by atom and that
    contains a strict pair is a violation (put the strict pair last); the
    search is meet-in-the-middle over such multisets.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    bad = induced_order_welldefined(po, lib)
    if bad is not None:
        return CancellationWitness((bad[0],), (bad[1],))
    if max_n == 1:
        return None
    vecs = _pair_vectors(po, lib)
    half = math.ceil(max_n / 2)
    check_budget("cancellation half-tuples", math.comb(len(vecs) + half, half), budget)
    # key -> {strict?: smallest multiset}
    table = {}
    for size in range(half + 1):
        for combo in itertools.combinations_with_replacement(range(len(vecs)), size):
            total = Counter()
            for p in combo:
                total.update(vecs[p][3])
            key = frozenset((c, v) for c, v in total.items() if v)
            strict = any(vecs[p][2] for p in combo)
            slot = table.setdefault(key, {})
            if strict not in slot:
                slot[strict] = combo
    best = None
    for key, slot in table.items():
        other = table.get(frozenset((c, -v) for c, v in key))
        if other is None:
            continue
        for s1, c1 in slot.items():
            for s2, c2 in other.items():
                if (s1 or s2) and len(c1) + len(c2) <= max_n:
                    combo = c1 + c2
                    if best is None or len(combo) < len(best):
                        best = combo
    if best is None:
        return None
    pairs = sorted((vecs[p] for p in best), key=lambda v: v[2])
    return CancellationWitness(tuple(po.pool[i] for i, *_ in pairs), tuple(po.pool[j] for _, j, *_ in pairs))


def certify_cancellation(po, lib, k=None):
    """Decide cancellation for every tuple size at once.

    Returns the state-dependent utility when the pool system is feasible, and
    otherwise a :class:`CancellationWitness` unfolded from integer-scaled
    Farkas multipliers.
    """
    from .errors import NotRepresentable
    from .representation import solve_state_dependent

    try:
        return solve_state_dependent(po, lib, k)
    except NotRepresentable as exc:
        return witness_from_multipliers(po, exc.certificate)


def witness_from_multipliers(po, multipliers):
    weights = [w for *_, w in multipliers]
    scale = math.lcm(*(Fraction(w).denominator for w in weights))
    ints = [int(w * scale) for w in weights]
    g = math.gcd(*ints)
    alphas, betas = [], []
    strict_last = None
    for (i, j, strict, _), m in zip(multipliers, ints):
        m //= g
        if strict and strict_last is None:
            strict_last = (i, j)
            m -= 1
        alphas.extend([po.pool[i]] * m)
        betas.extend([po.pool[j]] * m)
    alphas.append(po.pool[strict_last[0]])
    betas.append(po.pool[strict_last[1]])
    return CancellationWitness(tuple(alphas), tuple(betas))


__all__ = [
    "Relation", "PreferenceOrder", "relation", "induced_order_welldefined",
    "CancellationWitness", "validate_witness", "check_cancellation",
    "certify_cancellation", "witness_from_multipliers",
]
