"""Ordered labeled k-trees (olts), progress functions and the transitions f_alpha.

Nodes are identified by their path from the root: a tuple of atom indices,
the root being ``()``. Every olt of a given branching factor and depth has
the same node set; olts differ only in the root label and in the order placed
on each non-leaf node's children (lower in the order = closer).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .actions import NOOP, Do, depth as action_depth, seq
from .canonical import DoA, NoopEntry, canonical_map
from .config import check_budget
from .errors import DepthError, ProvenanceError
from .logic import atom_set_formula, atoms_of


@lru_cache(maxsize=None)
def nonleaf_paths(size, k):
    """Non-leaf node paths in breadth-first, lexicographic order."""
    out = []
    level = [()]
    for _ in range(k):
        out.extend(level)
        level = [p + (x,) for p in level for x in range(1, size + 1)]
    return tuple(out)


@lru_cache(maxsize=None)
def all_paths(size, k):
    out = []
    level = [()]
    for _ in range(k + 1):
        out.extend(level)
        level = [p + (x,) for p in level for x in range(1, size + 1)]
    return tuple(out)


@lru_cache(maxsize=None)
def _path_index(size, k):
    return {p: i for i, p in enumerate(nonleaf_paths(size, k))}


def count_olts(k, size, root_atom=None):
    nodes = (size ** k - 1) // (size - 1)
    per_root = math.factorial(size) ** nodes
    return per_root if root_atom is not None else size * per_root


@dataclass(frozen=True)
class Olt:
    size: int
    k: int
    root_atom: int
    orders: tuple  # one permutation of 1..size per non-leaf path, closest first
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        orders = tuple(tuple(o) for o in self.orders)
        object.__setattr__(self, "orders", orders)
        if len(orders) != len(nonleaf_paths(self.size, self.k)):
            raise ValueError(f"expected {len(nonleaf_paths(self.size, self.k))} orders, got {len(orders)}")
        full = tuple(range(1, self.size + 1))
        for o in orders:
            if tuple(sorted(o)) != full:
                raise ValueError(f"{o} is not an ordering of the atoms 1..{self.size}")
        if not 1 <= self.root_atom <= self.size:
            raise ValueError(f"root atom {self.root_atom} outside 1..{self.size}")
        object.__setattr__(self, "_hash", hash((self.size, self.k, self.root_atom, orders)))

    def __hash__(self):
        return self._hash

    @classmethod
    def from_orders(cls, size, k, root_atom, orders, default=None):
        """Build from ``{path: order}``; unspecified nodes get ``default`` (ascending)."""
        default = tuple(default or range(1, size + 1))
        return cls(size, k, root_atom,
                   tuple(tuple(orders.get(p, default)) for p in nonleaf_paths(size, k)))

    def order_at(self, path):
        return self.orders[_path_index(self.size, self.k)[path]]

    def label(self, path):
        return path[-1] if path else self.root_atom

    def closest_child(self, path, atom_set):
        """The first child of ``path`` (in its order) whose label is in ``atom_set``."""
        for x in self.order_at(path):
            if x in atom_set:
                return path + (x,)
        raise ValueError(f"no child of {path} labeled in {atom_set!r}")

    @property
    def nodes(self):
        return all_paths(self.size, self.k)

    def project(self, k):
        """The prefix of depth ``k``."""
        if k > self.k:
            raise DepthError(f"cannot project a {self.k}-olt to depth {k}")
        n = len(nonleaf_paths(self.size, k))
        return Olt(self.size, k, self.root_atom, self.orders[:n])

    def extends(self, other):
        return other.k <= self.k and self.project(other.k) == other


def enumerate_olts(k, props, root_atom=None, budget=None):
    """All k-olts over ``props``' atoms, optionally only those rooted at one atom."""
    size = props.size if hasattr(props, "size") else int(props)
    check_budget(f"T^{k}", count_olts(k, size, root_atom), budget)
    return list(_olts(size, k, root_atom))


def iter_olts(size, k, root_atom=None):
    perms = list(itertools.permutations(range(1, size + 1)))
    roots = [root_atom] if root_atom is not None else range(1, size + 1)
    n = len(nonleaf_paths(size, k))
    for r in roots:
        for orders in itertools.product(perms, repeat=n):
            yield Olt(size, k, r, orders)


@lru_cache(maxsize=64)
def _olts(size, k, root_atom):
    return tuple(iter_olts(size, k, root_atom))


def extensions(olt, k):
    """All k-olts whose projection to ``olt.k`` is ``olt``."""
    if k < olt.k:
        raise DepthError("extensions must be at least as deep")
    perms = list(itertools.permutations(range(1, olt.size + 1)))
    extra = len(nonleaf_paths(olt.size, k)) - len(olt.orders)
    for tail in itertools.product(perms, repeat=extra):
        yield Olt(olt.size, k, olt.root_atom, olt.orders + tail)


# -- progress functions -----------------------------------------------------

@dataclass(frozen=True)
class ProgressFunction:
    """Node map stored sparsely as its non-fixed points."""

    moves: tuple = ()  # sorted (node, image) pairs

    def __post_init__(self):
        moves = self.moves.items() if isinstance(self.moves, dict) else self.moves
        object.__setattr__(self, "moves", tuple(sorted((tuple(t), tuple(u)) for t, u in moves if tuple(t) != tuple(u))))

    def __call__(self, node):
        for t, u in self.moves:
            if t == node:
                return u
        return node

    def as_dict(self):
        return dict(self.moves)

    @property
    def is_identity(self):
        return not self.moves

    def is_bounded(self, k):
        """Nodes of depth <= k stay within depth k; deeper nodes are fixed."""
        for t, u in self.moves:
            if len(t) > k or len(u) > k:
                return False
        return True

    def project(self, k):
        if not self.is_bounded(k):
            raise DepthError(f"progress function is not {k}-bounded")
        return self

    def is_descending(self):
        return all(u[:len(t)] == t and len(u) >= len(t) for t, u in self.moves)


IDENTITY = ProgressFunction()


def progress_of_entry(entry, olt):
    return ProgressFunction(_progress(entry, olt, ()))


def _progress(entry, olt, base):
    if isinstance(entry, NoopEntry):
        return {}
    remaining = olt.k - len(base)
    if entry.depth > remaining:
        raise DepthError(f"entry of depth {entry.depth} does not fit in {remaining} remaining levels")
    target = olt.closest_child(base, entry.atoms)
    if isinstance(entry, DoA):
        return {base: target}
    moves = {}
    for x in range(1, olt.size + 1):
        moves.update(_progress(entry.rest[x], olt, base + (x,)))
    moves[base] = moves.get(target, target)
    return moves


def progress_of(action, olt, lib):
    """g_{alpha, s}: determined by the canonical entry at the root label."""
    if action_depth(action) > olt.k:
        raise DepthError(f"action of depth {action_depth(action)} on a {olt.k}-olt")
    entry = canonical_map(action, lib)[olt.root_atom]
    return progress_of_entry(entry, olt)


# -- states and transitions -------------------------------------------------

@dataclass(frozen=True)
class OltState:
    """A state (s, g); ``provenance`` is the action that produced g from (s, id)."""

    olt: Olt
    progress: ProgressFunction = IDENTITY
    provenance: object = field(default=NOOP, compare=False)

    @property
    def node(self):
        return self.progress(())

    @property
    def atom(self):
        return self.olt.label(self.node)


def initial_state(olt):
    return OltState(olt, IDENTITY, NOOP)


def apply_f(action, state, lib):
    """f_alpha on (s, id) and on states reached by a known action."""
    olt = state.olt
    before = state.provenance
    if before is None:
        raise ProvenanceError("state has no recorded provenance")
    if before == NOOP and not state.progress.is_identity:
        raise ProvenanceError("non-identity progress function with no provenance")
    total = seq(before, action)
    g = progress_of(total, olt, lib)
    return OltState(olt, g, total)


def olt_valuation(state, prop, props):
    return prop in props.atom(state.atom).true


def olt_selection(state, effect, lib):
    """sel((s, g), phi) = f_{do(phi_A)}(s, g) with A the atoms of phi."""
    atoms = atoms_of(effect, lib.props)
    return apply_f(Do(atom_set_formula(atoms, lib.props)), state, lib)


def olt_selection_model(k, lib, budget=None):
    """Package the depth-k olt construction as a finite :class:`SelectionModel`.

    States are the (s, g) pairs reachable from some (s, id) by at most k
    primitive steps; ``sel`` is filled for every pair whose result still fits
    in depth k. Returns ``(model, states)`` where ``states`` maps each state
    key ``(olt, progress)`` to its :class:`OltState`.
    """
    from .semantics import BasicModel, SelectionModel

    props = lib.props
    frontier = [initial_state(s) for s in enumerate_olts(k, props, budget=budget)]
    states = {state_key(st): st for st in frontier}
    sel = {}
    for _ in range(k):
        # every provenance is followed, so a selection that depended on how
        # a state was reached would show up as a conflict
        nxt = {}
        for st in frontier:
            for A in lib.f_tilde:
                new = olt_selection(st, atom_set_formula(A, props), lib)
                key = state_key(new)
                src = state_key(st)
                if sel.setdefault((src, A), key) != key:
                    raise ProvenanceError(f"selection from {src} depends on provenance")
                states.setdefault(key, new)
                nxt.setdefault((key, canonical_map(new.provenance, lib)), new)
        frontier = list(nxt.values())
    valuation = {p: [key for key, st in states.items() if p in props.atom(st.atom).true] for p in props}
    model = BasicModel(props, tuple(states), valuation)
    return SelectionModel(model, sel), states


def state_key(state):
    return (state.olt, state.progress)
