"""Canonical maps and canonical actions.

A canonical map sends each atom to one of three normal-form first steps:
``noop``, ``do(phi_A)`` or ``do(phi_A); gamma`` where ``gamma`` is again a
canonical action. ``do(phi_A); noop`` is identified with ``do(phi_A)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .actions import NOOP, Do, IfThenElse, Noop, Seq, check
from .config import check_budget
from .logic import atom_formula, atom_set_formula, atoms_of, eval_formula


class Entry:
    __slots__ = ()
    depth = 0


@dataclass(frozen=True, repr=False)
class NoopEntry(Entry):
    depth = 0

    def __repr__(self):
        return "noop"


@dataclass(frozen=True)
class DoA(Entry):
    atoms: object  # AtomSet
    depth = 1

    def __repr__(self):
        return f"do{list(self.atoms)}"


@dataclass(frozen=True)
class DoASeq(Entry):
    atoms: object  # AtomSet
    rest: "CanonicalMap"
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.rest.is_noop:
            raise ValueError("DoASeq with an all-noop continuation; use DoA")
        object.__setattr__(self, "_hash", hash((self.atoms, self.rest)))

    def __hash__(self):
        return self._hash

    @property
    def depth(self):
        return 1 + self.rest.depth

    def __repr__(self):
        return f"do{list(self.atoms)};{self.rest!r}"


NOOP_ENTRY = NoopEntry()


def do_then(atoms, rest):
    """``do(phi_A); gamma_rest`` in normal form."""
    if rest.is_noop:
        return DoA(atoms)
    return DoASeq(atoms, rest)


def entry_atoms(entry):
    """The first-step atom set of a non-noop entry."""
    return entry.atoms


def entry_rest(entry):
    """The continuation map of an entry (all-noop for ``noop`` and ``DoA``)."""
    if isinstance(entry, DoASeq):
        return entry.rest
    return None


@dataclass(frozen=True)
class CanonicalMap:
    """Total map from atoms to entries; ``entries[i - 1]`` belongs to atom i."""

    entries: tuple
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "_hash", hash(self.entries))

    def __hash__(self):
        return self._hash

    def __getitem__(self, atom_index):
        return self.entries[atom_index - 1]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def is_noop(self):
        return all(e is NOOP_ENTRY or isinstance(e, NoopEntry) for e in self.entries)

    @property
    def depth(self):
        return max(e.depth for e in self.entries)

    def __repr__(self):
        return "{" + ", ".join(f"{i}: {e!r}" for i, e in enumerate(self.entries, 1)) + "}"


def noop_map(size):
    return CanonicalMap((NOOP_ENTRY,) * size)


@dataclass(frozen=True)
class CanonicalAction:
    action: object
    map: CanonicalMap

    @property
    def depth(self):
        return self.map.depth


# -- the canonical map of an action -----------------------------------------

def canonical_map(action, lib):
    check(action, lib)
    return _cmap(action, lib.props)


@lru_cache(maxsize=None)
def _cmap(action, props):
    size = props.size
    if isinstance(action, Noop):
        return noop_map(size)
    if isinstance(action, Do):
        entry = DoA(atoms_of(action.effect, props))
        return CanonicalMap((entry,) * size)
    if isinstance(action, IfThenElse):
        then, orelse = _cmap(action.then, props), _cmap(action.orelse, props)
        return CanonicalMap(
            then[a.index] if eval_formula(action.test, a) else orelse[a.index]
            for a in props.atoms
        )
    if isinstance(action, Seq):
        return compose(_cmap(action.first, props), _cmap(action.second, props))
    raise TypeError(f"not an action: {action!r}")


@lru_cache(maxsize=None)
def compose(first, second):
    """Canonical map of ``alpha; beta`` from the maps of ``alpha`` and ``beta``."""
    out = []
    for i, entry in enumerate(first.entries):
        if isinstance(entry, NoopEntry):
            out.append(second.entries[i])
        elif isinstance(entry, DoA):
            out.append(do_then(entry.atoms, second))
        else:
            out.append(do_then(entry.atoms, compose(entry.rest, second)))
    return CanonicalMap(out)


def entry_of(action, atom, lib):
    return canonical_map(action, lib)[atom.index]


# -- realizing maps as actions ----------------------------------------------

def entry_action(entry, props):
    if isinstance(entry, NoopEntry):
        return NOOP
    head = Do(atom_set_formula(entry.atoms, props))
    if isinstance(entry, DoA):
        return head
    return Seq(head, realize(entry.rest, props))


@lru_cache(maxsize=None)
def realize(cmap, props):
    """The nested if-chain over atoms 1..N realizing ``cmap``.

    When the last two entries are both noop, the chain stops at the last
    non-noop entry and closes with ``else noop``.
    """
    entries = cmap.entries
    if all(isinstance(e, NoopEntry) for e in entries):
        return NOOP
    size = len(entries)
    if isinstance(entries[-1], NoopEntry) and isinstance(entries[-2], NoopEntry):
        last = max(i for i, e in enumerate(entries) if not isinstance(e, NoopEntry))
        chain = IfThenElse(atom_formula(props.atom(last + 1), props),
                           entry_action(entries[last], props), NOOP)
        upto = last
    else:
        chain = IfThenElse(atom_formula(props.atom(size - 1), props),
                           entry_action(entries[-2], props),
                           entry_action(entries[-1], props))
        upto = size - 2
    for i in range(upto - 1, -1, -1):
        chain = IfThenElse(atom_formula(props.atom(i + 1), props),
                           entry_action(entries[i], props), chain)
    return chain


def canonical_action(action, lib):
    cmap = canonical_map(action, lib)
    return CanonicalAction(realize(cmap, lib.props), cmap)


# -- enumeration ------------------------------------------------------------

def count_ca_minus(k, n_f_tilde, size):
    count = 1
    for _ in range(k):
        count = 1 + n_f_tilde + n_f_tilde * (count ** size - 1)
    return count


def enumerate_CA_minus(k, lib, budget=None):
    """All normal-form entries of depth at most ``k``."""
    if k < 0:
        raise ValueError("depth must be nonnegative")
    size = lib.props.size
    n_f = len(lib.f_tilde)
    check_budget(f"CA^{{{k},-}}", count_ca_minus(k, n_f, size), budget)
    if k > 0:
        check_budget(f"CM^{k - 1}", count_ca_minus(k - 1, n_f, size) ** size, budget)
    return list(_ca_minus(k, lib.f_tilde, size))


@lru_cache(maxsize=None)
def _ca_minus(k, f_tilde, size):
    if k == 0:
        return (NOOP_ENTRY,)
    out = [NOOP_ENTRY]
    out.extend(DoA(A) for A in f_tilde)
    for A in f_tilde:
        for m in _cm(k - 1, f_tilde, size):
            if not m.is_noop:
                out.append(DoASeq(A, m))
    return tuple(out)


@lru_cache(maxsize=None)
def _cm(k, f_tilde, size):
    entries = _ca_minus(k, f_tilde, size)
    return tuple(CanonicalMap(t) for t in itertools.product(entries, repeat=size))


def enumerate_CM(k, lib, budget=None):
    """All canonical maps of depth at most ``k``."""
    size = lib.props.size
    count = count_ca_minus(k, len(lib.f_tilde), size) ** size
    check_budget(f"CM^{k}", count, budget)
    enumerate_CA_minus(k, lib, budget)
    return list(_cm(k, lib.f_tilde, size))


def enumerate_CA(k, lib, budget=None):
    return [CanonicalAction(realize(m, lib.props), m) for m in enumerate_CM(k, lib, budget)]
