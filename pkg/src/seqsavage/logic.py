"""Propositional language over a finite, ordered set of propositions.

Atoms are total truth assignments. They are numbered 1..N by reading the
assignment as a bit vector (first proposition = most significant bit) and
counting down, so atom 1 makes every proposition true and atom N makes every
proposition false.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce

from ._lexer import TokenStream
from .errors import ParseError, UnknownProposition


# -- formulas ---------------------------------------------------------------

class Formula:
    __slots__ = ()

    def __str__(self):
        return format_formula(self)

    def __invert__(self):
        return Not(self)

    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)


@dataclass(frozen=True, repr=False)
class Prop(Formula):
    name: str

    def __repr__(self):
        return f"Prop({self.name!r})"


@dataclass(frozen=True, repr=False)
class Top(Formula):
    def __repr__(self):
        return "TOP"


@dataclass(frozen=True, repr=False)
class Bottom(Formula):
    def __repr__(self):
        return "BOTTOM"


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


TOP = Top()
BOTTOM = Bottom()

_BINARY = {And: ("&", 4), Or: ("|", 3), Implies: ("->", 2), Iff: ("<->", 1)}


def _level(f):
    if isinstance(f, Not):
        return 5
    op = _BINARY.get(type(f))
    return op[1] if op else 6


def format_formula(f):
    """Render with the minimum parentheses the grammar needs."""
    if isinstance(f, Prop):
        return f.name
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Not):
        inner = format_formula(f.arg)
        return "~" + (f"({inner})" if _level(f.arg) < 5 else inner)
    symbol, level = _BINARY[type(f)]
    left, right = format_formula(f.left), format_formula(f.right)
    # `->` is right-associative, everything else left-associative
    if isinstance(f, Implies):
        left_paren, right_paren = _level(f.left) <= level, _level(f.right) < level
    else:
        left_paren, right_paren = _level(f.left) < level, _level(f.right) <= level
    if left_paren:
        left = f"({left})"
    if right_paren:
        right = f"({right})"
    return f"{left} {symbol} {right}"


def evaluate(f, truth):
    """Evaluate ``f`` given ``truth(name) -> bool`` for its propositions."""
    if isinstance(f, Prop):
        return truth(f.name)
    if isinstance(f, Not):
        return not evaluate(f.arg, truth)
    if isinstance(f, And):
        return evaluate(f.left, truth) and evaluate(f.right, truth)
    if isinstance(f, Or):
        return evaluate(f.left, truth) or evaluate(f.right, truth)
    if isinstance(f, Implies):
        return (not evaluate(f.left, truth)) or evaluate(f.right, truth)
    if isinstance(f, Iff):
        return evaluate(f.left, truth) == evaluate(f.right, truth)
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    raise TypeError(f"not a formula: {f!r}")


def propositions_in(f):
    if isinstance(f, Prop):
        return {f.name}
    if isinstance(f, Not):
        return propositions_in(f.arg)
    if isinstance(f, (And, Or, Implies, Iff)):
        return propositions_in(f.left) | propositions_in(f.right)
    return set()


# -- propositions and atoms -------------------------------------------------

@dataclass(frozen=True)
class Atom:
    index: int
    true: frozenset

    def __repr__(self):
        return f"Atom({self.index}, {{{', '.join(sorted(self.true))}}})"


@dataclass(frozen=True)
class PropSet:
    props: tuple

    def __post_init__(self):
        props = tuple(self.props)
        object.__setattr__(self, "props", props)
        if not props:
            raise ValueError("a proposition set must be nonempty")
        if len(set(props)) != len(props):
            raise ValueError(f"duplicate propositions in {props}")
        for name in props:
            if not isinstance(name, str) or not name.isidentifier() or name in _RESERVED:
                raise ValueError(f"invalid proposition name {name!r}")

    @classmethod
    def of(cls, *names):
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return cls(tuple(names))

    @property
    def n(self):
        return len(self.props)

    @property
    def size(self):
        """Number of atoms, 2**n."""
        return 1 << len(self.props)

    def __len__(self):
        return len(self.props)

    def __iter__(self):
        return iter(self.props)

    def __contains__(self, name):
        return name in self.props

    @cached_property
    def atoms(self):
        n, size = self.n, self.size
        out = []
        for index in range(1, size + 1):
            bits = size - index
            true = frozenset(p for j, p in enumerate(self.props) if bits >> (n - 1 - j) & 1)
            out.append(Atom(index, true))
        return tuple(out)

    def atom(self, index):
        if not 1 <= index <= self.size:
            raise IndexError(f"atom index {index} outside 1..{self.size}")
        return self.atoms[index - 1]

    def atom_for(self, true_props):
        true_props = frozenset(true_props)
        unknown = true_props - set(self.props)
        if unknown:
            raise UnknownProposition(f"unknown propositions {sorted(unknown)}")
        bits = 0
        for p in self.props:
            bits = (bits << 1) | (p in true_props)
        return self.atoms[self.size - bits - 1]


_RESERVED = frozenset({"true", "false", "noop", "do", "if", "then", "else"})


@dataclass(frozen=True, order=True)
class AtomSet:
    """A set of atoms, stored as sorted atom indices."""

    indices: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(sorted(set(self.indices))))

    @classmethod
    def of(cls, indices):
        return cls(tuple(indices))

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, index):
        return index in self.indices

    def __bool__(self):
        return bool(self.indices)

    def issuperset(self, other):
        return set(self.indices) >= set(other.indices)

    def __repr__(self):
        return f"AtomSet({list(self.indices)})"


# -- semantic operations ----------------------------------------------------

class Entailment(enum.Enum):
    IMPLIES = "implies"
    IMPLIES_NEGATION = "implies_negation"


def eval_formula(f, atom):
    return evaluate(f, atom.true.__contains__)


@lru_cache(maxsize=65536)
def atoms_of(f, props):
    """The unique atom set whose disjunction is equivalent to ``f``."""
    return AtomSet(tuple(a.index for a in props.atoms if eval_formula(f, a)))


def entails_atom(atom, f):
    return Entailment.IMPLIES if eval_formula(f, atom) else Entailment.IMPLIES_NEGATION


def equivalent(f, g, props):
    return atoms_of(f, props) == atoms_of(g, props)


def is_satisfiable(f, props):
    return bool(atoms_of(f, props))


def atom_formula(atom, props):
    literals = [Prop(p) if p in atom.true else Not(Prop(p)) for p in props]
    return reduce(And, literals)


def atom_set_formula(atom_set, props):
    if not atom_set:
        return BOTTOM
    return reduce(Or, (atom_formula(props.atom(i), props) for i in atom_set))


# -- parsing ----------------------------------------------------------------

def parse_formula(text, props=None):
    """Parse ``text``; every proposition must belong to ``props`` when given."""
    ts = TokenStream(text)
    f = parse_formula_tokens(ts, props)
    ts.expect_eof()
    return f


def parse_formula_tokens(ts, props):
    left = _parse_implies(ts, props)
    while ts.accept("<->"):
        left = Iff(left, _parse_implies(ts, props))
    return left


def _parse_implies(ts, props):
    left = _parse_or(ts, props)
    if ts.accept("->"):
        return Implies(left, _parse_implies(ts, props))
    return left


def _parse_or(ts, props):
    left = _parse_and(ts, props)
    while ts.accept("|"):
        left = Or(left, _parse_and(ts, props))
    return left


def _parse_and(ts, props):
    left = _parse_unary(ts, props)
    while ts.accept("&"):
        left = And(left, _parse_unary(ts, props))
    return left


def _parse_unary(ts, props):
    if ts.accept("~"):
        return Not(_parse_unary(ts, props))
    tok = ts.peek
    if tok.kind == "ident":
        ts.next()
        if props is not None and tok.value not in props:
            raise UnknownProposition(f"unknown proposition {tok.value!r}", ts.text, tok.pos)
        return Prop(tok.value)
    if tok.kind == "kw" and tok.value in ("true", "false"):
        ts.next()
        return TOP if tok.value == "true" else BOTTOM
    if ts.accept("("):
        f = parse_formula_tokens(ts, props)
        ts.expect(")")
        return f
    found = "end of input" if tok.kind == "eof" else repr(tok.value)
    raise ParseError(f"expected a formula, found {found}", ts.text, tok.pos)
