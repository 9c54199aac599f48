"""Expressions built from ``pi`` with sym, tensor, isobaric sum, dual and det.

Concrete syntax::

    expr   := term { "+" term } ;
    term   := factor { "*" factor } ;
    factor := "pi" | "sym" "^" INT "(" expr ")" | "dual" "(" expr ")"
            | "det" [ "^" SINT ] | "(" expr ")" ;
    INT    := digit { digit } ;   SINT := [ "-" ] INT ;

``+`` is the isobaric sum (the parabolically induced representation) and
``*`` is the tensor (Rankin-Selberg) product.  Both associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .char_ring import (
    Character,
    SchurDecomposition,
    VirtualCharacter,
    decompose,
    det_twist,
    dimension,
    direct_sum,
    dual,
    plethysm_sym,
    sym_char,
    tensor,
    unitary_specialize,
)

__all__ = [
    "Pi", "Sym", "Tensor", "IsobaricSum", "Dual", "Det", "RepExpr",
    "ParseError", "LiftDescriptor", "parse", "render", "eval_char", "lift",
    "as_expr",
]


@dataclass(frozen=True)
class Pi:
    pass


@dataclass(frozen=True)
class Sym:
    n: int
    child: "RepExpr"

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("symmetric power degree must be nonnegative")


@dataclass(frozen=True)
class Tensor:
    left: "RepExpr"
    right: "RepExpr"


@dataclass(frozen=True)
class IsobaricSum:
    left: "RepExpr"
    right: "RepExpr"


@dataclass(frozen=True)
class Dual:
    child: "RepExpr"


@dataclass(frozen=True)
class Det:
    b: int = 1


RepExpr = Union[Pi, Sym, Tensor, IsobaricSum, Dual, Det]


class ParseError(ValueError):
    """Malformed expression.

    Attributes
    ----------
    offset : int
        Byte offset (UTF-8) into the source where parsing failed.
    expected : frozenset of str
        Tokens that would have been accepted there.
    """

    def __init__(self, source: str, pos: int, expected, found: str):
        self.source = source
        self.offset = len(source[:pos].encode("utf-8"))
        self.expected = frozenset(expected)
        self.found = found
        want = ", ".join(sorted(self.expected))
        super().__init__(f"at byte {self.offset}: expected one of {{{want}}}, found {found}")


_TOKEN = re.compile(r"(?P<int>[0-9]+)|(?P<word>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()])")
_KEYWORDS = {"pi", "sym", "dual", "det"}


def _tokenize(source: str) -> list[tuple[str, str, int]]:
    # unknown words and characters become BAD tokens so the parser can report
    # what it expected at that point
    toks = []
    pos = 0
    while True:
        while pos < len(source) and source[pos].isspace():
            pos += 1
        if pos == len(source):
            break
        m = _TOKEN.match(source, pos)
        if m is None:
            toks.append(("BAD", source[pos], pos))
            pos += 1
        elif m.group("int"):
            toks.append(("INT", m.group("int"), pos))
        elif m.group("word"):
            word = m.group("word")
            toks.append((word if word in _KEYWORDS else "BAD", word, pos))
        else:
            toks.append((m.group("op"), m.group("op"), pos))
        if m is not None:
            pos = m.end()
    toks.append(("EOF", "", len(source)))
    return toks


class _Parser:
    _FACTOR_START = frozenset({"pi", "sym", "dual", "det", "("})

    def __init__(self, source: str):
        self.source = source
        self.toks = _tokenize(source)
        self.i = 0

    @property
    def kind(self) -> str:
        return self.toks[self.i][0]

    def fail(self, expected):
        kind, text, pos = self.toks[self.i]
        found = "end of input" if kind == "EOF" else repr(text)
        raise ParseError(self.source, pos, expected, found)

    def take(self, kind: str) -> str:
        if self.kind != kind:
            self.fail({kind})
        text = self.toks[self.i][1]
        self.i += 1
        return text

    def parse(self) -> RepExpr:
        node = self.expr()
        if self.kind != "EOF":
            self.fail({"+", "*", "end of input"})
        return node

    def expr(self) -> RepExpr:
        node = self.term()
        while self.kind == "+":
            self.i += 1
            node = IsobaricSum(node, self.term())
        return node

    def term(self) -> RepExpr:
        node = self.factor()
        while self.kind == "*":
            self.i += 1
            node = Tensor(node, self.factor())
        return node

    def factor(self) -> RepExpr:
        kind = self.kind
        if kind == "pi":
            self.i += 1
            return Pi()
        if kind == "sym":
            self.i += 1
            self.take("^")
            n = int(self.take("INT"))
            self.take("(")
            child = self.expr()
            self.take(")")
            return Sym(n, child)
        if kind == "dual":
            self.i += 1
            self.take("(")
            child = self.expr()
            self.take(")")
            return Dual(child)
        if kind == "det":
            self.i += 1
            if self.kind != "^":
                return Det(1)
            self.i += 1
            sign = 1
            if self.kind == "-":
                self.i += 1
                sign = -1
            elif self.kind != "INT":
                self.fail({"-", "INT"})
            return Det(sign * int(self.take("INT")))
        if kind == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        self.fail(self._FACTOR_START)


def parse(source: str) -> RepExpr:
    """Parse ``source`` into an expression tree.

    >>> parse("sym^3(pi) * sym^2(pi)")
    Tensor(left=Sym(n=3, child=Pi()), right=Sym(n=2, child=Pi()))
    """
    if not source.strip():
        raise ParseError(source, len(source), _Parser._FACTOR_START, "end of input")
    return _Parser(source).parse()


def as_expr(e: RepExpr | str) -> RepExpr:
    return parse(e) if isinstance(e, str) else e


def render(e: RepExpr) -> str:
    """Canonical text form; ``parse(render(e)) == e``."""
    if isinstance(e, Pi):
        return "pi"
    if isinstance(e, Sym):
        return f"sym^{e.n}({render(e.child)})"
    if isinstance(e, Dual):
        return f"dual({render(e.child)})"
    if isinstance(e, Det):
        return f"det^{e.b}"
    if isinstance(e, IsobaricSum):
        right = render(e.right)
        if isinstance(e.right, IsobaricSum):
            right = f"({right})"
        return f"{render(e.left)} + {right}"
    if isinstance(e, Tensor):
        left, right = render(e.left), render(e.right)
        if isinstance(e.left, IsobaricSum):
            left = f"({left})"
        if isinstance(e.right, (IsobaricSum, Tensor)):
            right = f"({right})"
        return f"{left} * {right}"
    raise TypeError(f"not an expression node: {e!r}")


@lru_cache(maxsize=4096)
def eval_char(e: RepExpr) -> Character:
    """Character of the representation denoted by ``e``."""
    if isinstance(e, Pi):
        return sym_char(1)
    if isinstance(e, Sym):
        return plethysm_sym(eval_char(e.child), e.n, check=False)
    if isinstance(e, Tensor):
        return tensor(eval_char(e.left), eval_char(e.right))
    if isinstance(e, IsobaricSum):
        return direct_sum(eval_char(e.left), eval_char(e.right))
    if isinstance(e, Dual):
        return dual(eval_char(e.child))
    if isinstance(e, Det):
        return det_twist(sym_char(0), e.b)
    raise TypeError(f"not an expression node: {e!r}")


@dataclass(frozen=True)
class LiftDescriptor:
    """Isobaric data of the lift attached to an expression.

    ``levi_blocks`` lists the block sizes ``a + 1`` of the Levi subgroup,
    one per copy of each constituent, largest first.
    """

    total_degree: int
    constituents: SchurDecomposition
    levi_blocks: tuple[int, ...]
    unitary_constituents: dict[int, int] = field(hash=False)


def lift(e: RepExpr | str) -> LiftDescriptor:
    e = as_expr(e)
    chi = eval_char(e)
    d = decompose(chi)
    if not d.genuine:
        raise VirtualCharacter(f"{render(e)} is not a genuine representation")
    blocks = sorted((c.dim for c in d for _ in range(c.mult)), reverse=True)
    return LiftDescriptor(
        total_degree=dimension(chi),
        constituents=d,
        levi_blocks=tuple(blocks),
        unitary_constituents=unitary_specialize(d),
    )
