"""Basic models, selection models and the interpretation of actions."""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType

from .actions import Do, IfThenElse, Noop, Seq
from .errors import MissingSelection, ValidationError
from .logic import atoms_of, evaluate, format_formula


@dataclass(frozen=True)
class BasicModel:
    """Finite states plus a valuation ``prop -> set of states``."""

    props: object  # PropSet
    states: tuple
    valuation: MappingProxyType

    def __post_init__(self):
        states = tuple(self.states)
        if not states:
            raise ValueError("a basic model needs at least one state")
        if len(set(states)) != len(states):
            raise ValueError("duplicate states")
        valuation = {p: frozenset(self.valuation.get(p, ())) for p in self.props}
        extra = set(self.valuation) - set(self.props)
        if extra:
            raise ValueError(f"valuation mentions unknown propositions {sorted(extra)}")
        known = set(states)
        for p, ext in valuation.items():
            if not ext <= known:
                raise ValueError(f"valuation of {p} mentions unknown states {sorted(map(str, ext - known))}")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "valuation", MappingProxyType(valuation))

    def __hash__(self):
        return hash((self.props, self.states, tuple(sorted(self.valuation.items()))))

    def _require(self, state):
        if state not in self.valuation_index:
            raise KeyError(f"unknown state {state!r}")

    @property
    def valuation_index(self):
        # states -> frozenset of true props, built lazily
        idx = self.__dict__.get("_index")
        if idx is None:
            idx = {s: frozenset(p for p in self.props if s in self.valuation[p]) for s in self.states}
            object.__setattr__(self, "_index", idx)
        return idx

    def atom_at(self, state):
        """The atom describing ``state``."""
        self._require(state)
        return self.props.atom_for(self.valuation_index[state])

    def extension(self, formula):
        targets = atoms_of(formula, self.props)
        return frozenset(s for s in self.states if self.atom_at(s).index in targets)


def state_satisfies(model, state, formula):
    model._require(state)
    true = model.valuation_index[state]
    return evaluate(formula, true.__contains__)


def is_F_rich(model, lib):
    """Effects of ``lib`` with empty extension in ``model`` (empty list = F-rich)."""
    return [f for f in lib.effects if not model.extension(f)]


@dataclass(frozen=True)
class SelectionModel:
    """A model with ``sel[(state, effect atom set)] = state``.

    The table may be partial; looking up a missing pair raises
    :class:`MissingSelection`.
    """

    model: BasicModel
    sel: MappingProxyType = field(default_factory=dict)

    def __post_init__(self):
        sel = dict(self.sel)
        bad = []
        for (state, atoms), target in sel.items():
            self.model._require(state)
            if self.model.atom_at(target).index not in atoms:
                bad.append(f"sel({state!r}, {list(atoms)}) = {target!r} violates its effect")
        if bad:
            raise ValidationError(bad)
        object.__setattr__(self, "sel", MappingProxyType(sel))

    def __hash__(self):
        return hash((self.model, tuple(sorted(self.sel.items(), key=repr))))

    @property
    def props(self):
        return self.model.props

    def select(self, state, effect):
        atoms = atoms_of(effect, self.model.props)
        try:
            return self.sel[(state, atoms)]
        except KeyError:
            raise MissingSelection(state, atoms) from None

    def missing(self, lib):
        """(state, effect) pairs of ``lib`` with no selection entry."""
        out = []
        for s in self.model.states:
            for f in lib.effects:
                if (s, atoms_of(f, self.model.props)) not in self.sel:
                    out.append((s, format_formula(f)))
        return out


def interpret(action, sm, state):
    """Run ``action`` from ``state``; noop is the identity."""
    if isinstance(action, Noop):
        return state
    if isinstance(action, Do):
        return sm.select(state, action.effect)
    if isinstance(action, IfThenElse):
        branch = action.then if state_satisfies(sm.model, state, action.test) else action.orelse
        return interpret(branch, sm, state)
    if isinstance(action, Seq):
        return interpret(action.second, sm, interpret(action.first, sm, state))
    raise TypeError(f"not an action: {action!r}")
