"""Parser for the ring-spec language.

Grammar (whitespace is ignored)::

    spec    := ring | ideal
    ring    := "zn(" INT ")"
             | "prod(" ring ("," ring)+ ")"
             | "gf(" INT "," list ")"            # coefficients low to high
             | "polyq(" INT "," list ")"
             | "idealize(" ring ";" "mod=" ("0" | ideal) ")"
             | "amalg(" ring "," ring "," "hom=" NAME "," "j=" list ")"
             | "quot(" ring ";" "gens=" list ")"
             | "loc(" ring ";" "s=" list ")"
    ideal   := "ideal(" ring ";" "gens=" list ")"
    list    := "[" [elem ("," elem)*] "]"
    elem    := INT | "#" INT | list | "(" elem ("," elem)* ")"

``#k`` names the element with raw index ``k``; every other element literal
uses the construction's own encoding (see README).  ``,`` and ``;`` are
interchangeable separators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any

from .errors import ConstructionError, InputError
from .ideals import Ideal, ideal_generated, zero_ideal
from .rings import (
    FiniteRing,
    ModuleSpec,
    hom_by_name,
    localize,
    make_amalgamation,
    make_galois_field,
    make_idealization,
    make_poly_quotient,
    make_product,
    make_quotient,
    make_zn,
)


class DslError(InputError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text[:pos]}<here>{text[pos:]}")
        self.pos = pos


@dataclass
class Call:
    name: str
    args: list = field(default_factory=list)
    kwargs: dict = field(default_factory=dict)
    pos: int = 0
    arg_pos: list = field(default_factory=list)
    kw_pos: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Raw:
    index: int


@dataclass
class Seq:
    items: list
    pos: int = 0


_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[()\[\],;=#]))")


def _tokenize(text: str) -> list[tuple[str, Any, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise DslError(f"unexpected character {text[start]!r}", start, text)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = int(m.group(kind)) if kind == "int" else m.group(kind)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, offset: int = 0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def error(self, message: str, pos: int | None = None):
        raise DslError(message, self.peek()[2] if pos is None else pos, self.text)

    def expect(self, punct: str):
        kind, value, pos = self.peek()
        if kind != "punct" or value != punct:
            self.error(f"expected {punct!r}")
        self.i += 1

    def value(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.i += 1
            return value
        if kind == "punct" and value == "#":
            self.i += 1
            kind, value, _ = self.peek()
            if kind != "int" or value < 0:
                self.error("expected a raw index after '#'")
            self.i += 1
            return Raw(value)
        if kind == "punct" and value in "[(":
            close = "]" if value == "[" else ")"
            self.i += 1
            items = []
            if not (self.peek()[0] == "punct" and self.peek()[1] == close):
                items.append(self.value())
                while self.peek()[0] == "punct" and self.peek()[1] in ",;":
                    self.i += 1
                    items.append(self.value())
            self.expect(close)
            return Seq(items, pos)
        if kind == "name":
            self.i += 1
            if not (self.peek()[0] == "punct" and self.peek()[1] == "("):
                return value
            self.i += 1
            call = Call(value, pos=pos)
            if not (self.peek()[0] == "punct" and self.peek()[1] == ")"):
                self.argument(call)
                while self.peek()[0] == "punct" and self.peek()[1] in ",;":
                    self.i += 1
                    self.argument(call)
            self.expect(")")
            return call
        self.error("unexpected end of input" if kind == "end" else f"unexpected token {value!r}")

    def argument(self, call: Call):
        kind, value, pos = self.peek()
        nxt = self.peek(1)
        if kind == "name" and nxt[0] == "punct" and nxt[1] == "=":
            self.i += 2
            if value in call.kwargs:
                self.error(f"duplicate argument {value!r}", pos)
            call.kw_pos[value] = self.peek()[2]
            call.kwargs[value] = self.value()
        else:
            if call.kwargs:
                self.error("positional argument after keyword argument", pos)
            call.arg_pos.append(pos)
            call.args.append(self.value())

    def parse(self):
        node = self.value()
        if self.peek()[0] != "end":
            self.error("trailing input")
        return node


def parse_tree(text: str):
    return _Parser(text).parse()


# --- evaluation ---------------------------------------------------------------


def _plain(node) -> Any:
    if isinstance(node, Seq):
        return tuple(_plain(v) for v in node.items)
    return node


class _Builder:
    def __init__(self, text: str):
        self.text = text

    def fail(self, message: str, node, pos: int | None = None) -> None:
        raise DslError(message, getattr(node, "pos", 0) if pos is None else pos, self.text)

    def _int(self, call: Call, i: int, what: str) -> int:
        node = call.args[i]
        if not isinstance(node, int):
            self.fail(f"{what} must be an integer", node, call.arg_pos[i])
        return node

    def _coeffs(self, node) -> list[int]:
        if not isinstance(node, Seq) or not all(isinstance(v, int) for v in node.items):
            self.fail("expected a list of integer coefficients", node)
        return list(node.items)

    def _shape(self, call: Call, nargs: int | None, keys: set[str]):
        if nargs is not None and len(call.args) != nargs:
            self.fail(f"{call.name} takes {nargs} positional argument(s), got {len(call.args)}", call)
        extra = set(call.kwargs) - keys
        missing = keys - set(call.kwargs)
        if extra or missing:
            self.fail(f"{call.name}: expected keywords {sorted(keys)}, got {sorted(call.kwargs)}", call)

    def element(self, R: FiniteRing, node) -> int:
        if isinstance(node, Raw):
            if node.index >= R.order:
                raise InputError(f"raw index #{node.index} out of range for {R.label}")
            return node.index
        return R.parse_element(_plain(node))

    def elements(self, R: FiniteRing, node) -> list[int]:
        if not isinstance(node, Seq):
            self.fail("expected a list of elements", node)
        return [self.element(R, v) for v in node.items]

    def ring(self, node) -> FiniteRing:
        if not isinstance(node, Call):
            self.fail("expected a ring expression", node)
        name = node.name
        try:
            if name == "zn":
                self._shape(node, 1, set())
                return make_zn(self._int(node, 0, "n"))
            if name == "prod":
                self._shape(node, None, set())
                if len(node.args) < 2:
                    self.fail("prod needs at least two factors", node)
                return make_product([self.ring(a) for a in node.args])
            if name in ("gf", "polyq"):
                self._shape(node, 2, set())
                p = self._int(node, 0, "p")
                f = self._coeffs(node.args[1])
                return (make_galois_field if name == "gf" else make_poly_quotient)(p, f)
            if name == "idealize":
                self._shape(node, 1, {"mod"})
                R = self.ring(node.args[0])
                mod = node.kwargs["mod"]
                if mod == 0:
                    return make_idealization(R, ModuleSpec(R))
                if not isinstance(mod, Call):
                    self.fail("mod must be 0 or ideal(...)", mod, node.kw_pos["mod"])
                return make_idealization(R, ModuleSpec(R, self.ideal(mod, base=R)))
            if name == "amalg":
                self._shape(node, 2, {"hom", "j"})
                A = self.ring(node.args[0])
                B = self.ring(node.args[1])
                hom = node.kwargs["hom"]
                if not isinstance(hom, str):
                    self.fail("hom must be a name", node, node.kw_pos["hom"])
                if hom == "id" and A.label == B.label:
                    B = A
                f = hom_by_name(A, B, hom)
                J = ideal_generated(B, self.elements(B, node.kwargs["j"]))
                return make_amalgamation(A, B, f, J)
            if name == "quot":
                self._shape(node, 1, {"gens"})
                R = self.ring(node.args[0])
                return make_quotient(R, ideal_generated(R, self.elements(R, node.kwargs["gens"])))[0]
            if name == "loc":
                self._shape(node, 1, {"s"})
                R = self.ring(node.args[0])
                return localize(R, self.elements(R, node.kwargs["s"]))[0]
        except ConstructionError as exc:
            raise DslError(str(exc), node.pos, self.text) from exc
        self.fail(f"unknown ring constructor {name!r}", node)

    def ideal(self, node, base: FiniteRing | None = None) -> Ideal:
        if not isinstance(node, Call) or node.name != "ideal":
            self.fail("expected ideal(<ring>;gens=[...])", node)
        self._shape(node, 1, {"gens"})
        R = self.ring(node.args[0])
        if base is not None:
            if R.label != base.label:
                self.fail(f"module ideal lives in {R.label}, not {base.label}", node)
            R = base
        gens = self.elements(R, node.kwargs["gens"])
        return ideal_generated(R, gens) if gens else zero_ideal(R)


def parse_ring(text: str) -> FiniteRing:
    return _Builder(text).ring(parse_tree(text))


def parse_ideal(text: str) -> Ideal:
    return _Builder(text).ideal(parse_tree(text))


def parse_spec(text: str) -> FiniteRing | Ideal:
    """A ring, or an ideal when the spec is ``ideal(...)``."""
    node = parse_tree(text)
    b = _Builder(text)
    if isinstance(node, Call) and node.name == "ideal":
        return b.ideal(node)
    return b.ring(node)


def parse_elements(R: FiniteRing, text: str) -> list[int]:
    """A bracketed element list such as ``[(0,0,1)]`` or ``[#5, 2]``."""
    return _Builder(text).elements(R, parse_tree(text))
