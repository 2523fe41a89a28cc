"""Sequential actions: AST, concrete syntax, depth and well-formedness."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ._lexer import TokenStream
from .errors import ValidationError
from .logic import PropSet, atoms_of, format_formula, parse_formula, parse_formula_tokens


@dataclass(frozen=True)
class ActionLibrary:
    """The effect formulas allowed inside ``do(...)``.

    In strict mode a ``do`` effect must be logically equivalent to a member of
    ``effects``; lax mode admits any satisfiable effect.
    """

    props: PropSet
    effects: tuple
    strict: bool = True

    def __post_init__(self):
        object.__setattr__(self, "effects", tuple(self.effects))
        empty = [f for f in self.effects if not atoms_of(f, self.props)]
        if empty:
            raise ValidationError(
                Violation((), f"effect {format_formula(f)} is unsatisfiable") for f in empty
            )

    @classmethod
    def from_strings(cls, props, effects, strict=True):
        if not isinstance(props, PropSet):
            props = PropSet.of(props)
        return cls(props, tuple(parse_formula(e, props) for e in effects), strict)

    @cached_property
    def f_tilde(self):
        """Distinct atom sets of the effects, in order of first appearance."""
        seen = {}
        for f in self.effects:
            seen.setdefault(atoms_of(f, self.props), None)
        return tuple(seen)

    @cached_property
    def _f_tilde_set(self):
        return frozenset(self.f_tilde)

    def admits(self, effect):
        atoms = atoms_of(effect, self.props)
        if not atoms:
            return False
        return not self.strict or atoms in self._f_tilde_set

    def extended(self, effects):
        """A library that also contains ``effects`` (duplicates dropped)."""
        have = set(self.f_tilde)
        new = []
        for f in effects:
            atoms = atoms_of(f, self.props)
            if atoms not in have:
                have.add(atoms)
                new.append(f)
        if not new:
            return self
        return ActionLibrary(self.props, self.effects + tuple(new), self.strict)


# -- AST --------------------------------------------------------------------

class Action:
    __slots__ = ()

    def __str__(self):
        return format_action(self)


@dataclass(frozen=True, repr=False)
class Noop(Action):
    def __repr__(self):
        return "NOOP"


@dataclass(frozen=True)
class Do(Action):
    effect: object


@dataclass(frozen=True)
class IfThenElse(Action):
    test: object
    then: Action
    orelse: Action


@dataclass(frozen=True)
class Seq(Action):
    first: Action
    second: Action


NOOP = Noop()


def seq(*actions):
    """Sequence ``actions`` left to right, dropping noops."""
    result = NOOP
    for a in actions:
        if a == NOOP:
            continue
        result = a if result == NOOP else Seq(result, a)
    return result


def depth(action):
    """Least k such that ``action`` is a depth-k action."""
    if isinstance(action, Noop):
        return 0
    if isinstance(action, Do):
        return 1
    if isinstance(action, IfThenElse):
        return max(depth(action.then), depth(action.orelse), 1)
    if isinstance(action, Seq):
        return depth(action.first) + depth(action.second)
    raise TypeError(f"not an action: {action!r}")


def effects_of(action):
    if isinstance(action, Do):
        return [action.effect]
    if isinstance(action, IfThenElse):
        return effects_of(action.then) + effects_of(action.orelse)
    if isinstance(action, Seq):
        return effects_of(action.first) + effects_of(action.second)
    return []


def size(action):
    if isinstance(action, IfThenElse):
        return 1 + size(action.then) + size(action.orelse)
    if isinstance(action, Seq):
        return 1 + size(action.first) + size(action.second)
    return 1


# -- validation -------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    path: tuple
    message: str

    def __str__(self):
        where = "/".join(self.path) or "<root>"
        return f"{where}: {self.message}"


def validate(action, lib):
    """Every grammar violation in ``action``; an empty list means well-formed."""
    out = []
    _validate(action, lib, (), out)
    return out


def _validate(action, lib, path, out):
    if isinstance(action, Noop):
        return
    if isinstance(action, Do):
        atoms = atoms_of(action.effect, lib.props)
        if not atoms:
            out.append(Violation(path, f"effect {format_formula(action.effect)} is unsatisfiable"))
        elif not lib.admits(action.effect):
            out.append(Violation(path, f"effect {format_formula(action.effect)} is not in F"))
        return
    if isinstance(action, IfThenElse):
        if action.then == NOOP and action.orelse == NOOP:
            out.append(Violation(path, "if-then-else with both branches noop"))
        _validate(action.then, lib, path + ("then",), out)
        _validate(action.orelse, lib, path + ("else",), out)
        return
    if isinstance(action, Seq):
        if action.first == NOOP and action.second == NOOP:
            out.append(Violation(path, "sequence of two noops"))
        _validate(action.first, lib, path + ("first",), out)
        _validate(action.second, lib, path + ("second",), out)
        return
    raise TypeError(f"not an action: {action!r}")


def check(action, lib):
    violations = validate(action, lib)
    if violations:
        raise ValidationError(violations)
    return action


# -- concrete syntax --------------------------------------------------------

def format_action(action):
    if isinstance(action, Noop):
        return "noop"
    if isinstance(action, Do):
        return f"do({format_formula(action.effect)})"
    if isinstance(action, IfThenElse):
        return (f"if {format_formula(action.test)} then {_branch(action.then)} "
                f"else {_branch(action.orelse)}")
    if isinstance(action, Seq):
        second = format_action(action.second)
        if isinstance(action.second, Seq):
            second = f"({second})"
        return f"{format_action(action.first)}; {second}"
    raise TypeError(f"not an action: {action!r}")


def _branch(action):
    text = format_action(action)
    return f"({text})" if isinstance(action, Seq) else text


def parse_action(text, lib):
    """Parse and validate an action.

    ``;`` binds loosest and associates to the left; a missing ``else``
    means ``else noop``.
    """
    ts = TokenStream(text)
    action = _parse_seq(ts, lib.props)
    ts.expect_eof()
    return check(action, lib)


def parse_action_unchecked(text, props):
    ts = TokenStream(text)
    action = _parse_seq(ts, props)
    ts.expect_eof()
    return action


def _parse_seq(ts, props):
    left = _parse_ite(ts, props)
    while ts.accept(";"):
        left = Seq(left, _parse_ite(ts, props))
    return left


def _parse_ite(ts, props):
    if ts.accept("if"):
        test = parse_formula_tokens(ts, props)
        ts.expect("then")
        then = _parse_ite(ts, props)
        orelse = _parse_ite(ts, props) if ts.accept("else") else NOOP
        return IfThenElse(test, then, orelse)
    return _parse_primary(ts, props)


def _parse_primary(ts, props):
    if ts.accept("noop"):
        return NOOP
    if ts.accept("do"):
        ts.expect("(")
        effect = parse_formula_tokens(ts, props)
        ts.expect(")")
        return Do(effect)
    if ts.accept("("):
        action = _parse_seq(ts, props)
        ts.expect(")")
        return action
    raise ts.error("expected an action")
