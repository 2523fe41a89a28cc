"""Tokenizer shared by the formula and action parsers."""
import re
from dataclasses import dataclass

from .errors import ParseError

KEYWORDS = frozenset({"true", "false", "noop", "do", "if", "then", "else"})

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<iff><->)
  | (?P<implies>->)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>[~&|();])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "kw", "op", "eof"
    value: str
    pos: int


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        value = m.group()
        if kind == "ident":
            tokens.append(Token("kw" if value in KEYWORDS else "ident", value, pos))
        elif kind != "ws":
            tokens.append(Token("op", value, pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class TokenStream:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def at(self, value, kind=None):
        tok = self.peek
        return tok.value == value and (kind is None or tok.kind == kind) and tok.kind != "eof"

    def accept(self, value):
        if self.at(value):
            return self.next()
        return None

    def expect(self, value):
        tok = self.peek
        if not self.at(value):
            found = "end of input" if tok.kind == "eof" else repr(tok.value)
            raise ParseError(f"expected {value!r}, found {found}", self.text, tok.pos)
        return self.next()

    def error(self, message):
        return ParseError(message, self.text, self.peek.pos)

    def expect_eof(self):
        if self.peek.kind != "eof":
            raise self.error(f"unexpected {self.peek.value!r}")
