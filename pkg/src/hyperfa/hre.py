"""Hyperregular expressions: parsing, printing, and compilation to NFH.

Text grammar::

    alphabet: a b           (optional header lines)
    vars: x y
    wildcards: on
    forall x. exists y. ({a_x, a_y}* {#_x, a_y}+)

Atoms list one ``symbol_variable`` slot per variable.  ``#`` is padding,
``?`` a wild card (only with ``wildcards: on``) and ``!s`` stands for every
alphabet symbol other than ``s``.  ``()`` or ``<eps>`` is the empty word,
``<empty>`` the empty language, ``//`` starts a comment.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from .core import PAD, WILD, check_alphabet
from .errors import DomainError, ParseError
from .nfa import Nfa
from .nfh import Nfh, Quantifier


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Atom:
    letter: tuple


@dataclass(frozen=True)
class Concat:
    items: tuple


@dataclass(frozen=True)
class Alt:
    items: tuple


@dataclass(frozen=True)
class Star:
    child: object


@dataclass(frozen=True)
class Plus:
    child: object


@dataclass(frozen=True)
class Hre:
    alphabet: tuple
    variables: tuple
    quant: tuple
    body: object
    wildcards: bool = False


_HEADER = re.compile(r"^\s*(alphabet|vars|wildcards)\s*:(.*)$")


def _strip_comment(line: str) -> str:
    i = line.find("//")
    return line if i < 0 else line[:i]


class _Parser:
    def __init__(self, chars, alphabet, variables, wildcards, last_pos):
        self.chars = chars
        self.pos = 0
        self.alphabet = alphabet
        self.variables = variables
        self.wildcards = wildcards
        self.last_pos = last_pos
        self.seen_symbols = set()
        self.pending_atoms = []

    # character-level helpers
    def where(self):
        if self.pos < len(self.chars):
            return self.chars[self.pos][1], self.chars[self.pos][2]
        return self.last_pos

    def error(self, msg):
        line, col = self.where()
        raise ParseError(msg, line, col)

    def skip_ws(self):
        while self.pos < len(self.chars) and self.chars[self.pos][0].isspace():
            self.pos += 1

    def peek(self, n=1):
        self.skip_ws()
        return "".join(c for c, _, _ in self.chars[self.pos:self.pos + n])

    def take(self, s):
        if self.peek(len(s)) != s:
            self.error(f"expected {s!r}")
        self.pos += len(s)

    def word(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.chars) and (
            self.chars[self.pos][0].isalnum() or self.chars[self.pos][0] in "_'"
        ):
            self.pos += 1
        if start == self.pos:
            self.error("expected an identifier")
        return "".join(c for c, _, _ in self.chars[start:self.pos])

    # grammar
    def prefix(self):
        quant = []
        seen = set()
        while True:
            save = self.pos
            self.skip_ws()
            if self.peek(6) in ("forall", "exists"):
                kw = self.word()
                if kw not in ("forall", "exists"):
                    self.pos = save
                    break
                self.skip_ws()
                line, col = self.where()
                v = self.word()
                if v in seen:
                    raise ParseError(f"duplicate quantifier for variable {v!r}", line, col)
                seen.add(v)
                quant.append((Quantifier(kw), v))
                self.take(".")
            else:
                break
        if not quant:
            self.error("expected a quantifier prefix such as 'forall x.'")
        return quant

    def alt(self):
        items = [self.concat()]
        while self.peek() == "|":
            self.pos += 1
            items.append(self.concat())
        return items[0] if len(items) == 1 else Alt(tuple(items))

    def concat(self):
        items = []
        while True:
            c = self.peek()
            if c in ("{", "(", "<"):
                items.append(self.postfix())
            else:
                break
        if not items:
            self.error("expected an atom, '(' or '<eps>'")
        return items[0] if len(items) == 1 else Concat(tuple(items))

    def postfix(self):
        node = self.primary()
        while self.peek() in ("*", "+"):
            op = self.peek()
            self.pos += 1
            node = Star(node) if op == "*" else Plus(node)
        return node

    def primary(self):
        c = self.peek()
        if c == "{":
            return self.atom()
        if c == "(":
            self.pos += 1
            if self.peek() == ")":
                self.pos += 1
                return Epsilon()
            node = self.alt()
            self.take(")")
            return node
        if self.peek(5) == "<eps>":
            self.pos += 5
            return Epsilon()
        if self.peek(7) == "<empty>":
            self.pos += 7
            return Empty()
        self.error(f"unexpected {c!r}")

    def atom(self):
        line, col = self.where()
        self.take("{")
        slots = {}
        while True:
            self.skip_ws()
            sline, scol = self.where()
            start = self.pos
            while self.pos < len(self.chars) and self.chars[self.pos][0] not in ",}" and not self.chars[self.pos][0].isspace():
                self.pos += 1
            tok = "".join(c for c, _, _ in self.chars[start:self.pos])
            if "_" not in tok:
                raise ParseError(f"slot {tok!r} is not of the form symbol_variable", sline, scol)
            sym, var = tok.rsplit("_", 1)
            if not sym or not var:
                raise ParseError(f"slot {tok!r} is not of the form symbol_variable", sline, scol)
            if var in slots:
                raise ParseError(f"variable {var!r} assigned twice in one letter", sline, scol)
            slots[var] = (sym, sline, scol)
            if self.peek() == ",":
                self.pos += 1
                continue
            self.take("}")
            break
        self.pending_atoms.append((slots, line, col))
        return ("atom", len(self.pending_atoms) - 1)


def _resolve(node, atoms):
    if isinstance(node, tuple) and node and node[0] == "atom":
        return atoms[node[1]]
    if isinstance(node, (Concat, Alt)):
        return type(node)(tuple(_resolve(n, atoms) for n in node.items))
    if isinstance(node, (Star, Plus)):
        return type(node)(_resolve(node.child, atoms))
    return node


def parse_hre(text: str, alphabet: Sequence[str] | None = None, variables=None) -> Hre:
    """Parse HRE text; header lines override nothing passed explicitly."""
    header_alphabet = None
    header_vars = None
    wildcards = False
    chars = []
    in_body = False
    last_pos = (1, 1)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        m = _HEADER.match(line) if not in_body else None
        if m:
            key, value = m.group(1), m.group(2).split()
            if key == "alphabet":
                header_alphabet = value
            elif key == "vars":
                header_vars = value
            else:
                if value not in (["on"], ["off"]):
                    raise ParseError("wildcards must be 'on' or 'off'", lineno, 1)
                wildcards = value == ["on"]
            continue
        if line.strip():
            in_body = True
        for col, c in enumerate(line, start=1):
            chars.append((c, lineno, col))
        chars.append(("\n", lineno, len(line) + 1))
        last_pos = (lineno, len(line) + 1)

    if alphabet is None:
        alphabet = header_alphabet
    if variables is None:
        variables = header_vars

    p = _Parser(chars, alphabet, variables, wildcards, last_pos)
    quant = p.prefix()
    body = p.alt()
    p.skip_ws()
    if p.pos < len(p.chars):
        p.error(f"unexpected trailing input {p.peek()!r}")

    qvars = [x for _, x in quant]
    if variables is None:
        variables = qvars
    variables = tuple(variables)
    if sorted(variables) != sorted(qvars):
        raise ParseError(
            f"quantifier prefix binds {qvars} but the variables are {list(variables)}"
        )

    used = set()
    for slots, _, _ in p.pending_atoms:
        for sym, _, _ in slots.values():
            if sym not in (PAD, WILD):
                used.add(sym.lstrip("!") if sym.startswith("!") and len(sym) > 1 else sym)
    declared = alphabet is not None
    if alphabet is None:
        alphabet = sorted(used)
    try:
        sigma = check_alphabet(alphabet)
    except DomainError as exc:
        raise ParseError(str(exc)) from None

    atoms = []
    for slots, line, col in p.pending_atoms:
        for var, (sym, sl, sc) in slots.items():
            if var not in variables:
                raise ParseError(f"unknown variable {var!r} in atom", sl, sc)
        missing = [x for x in variables if x not in slots]
        if missing:
            raise ParseError(f"atom does not assign variable(s) {missing}", line, col)
        choices = []
        for x in variables:
            sym, sl, sc = slots[x]
            if sym == PAD:
                choices.append((PAD,))
            elif sym == WILD:
                if not wildcards:
                    raise ParseError("wild card '?' requires 'wildcards: on'", sl, sc)
                choices.append((WILD,))
            elif sym.startswith("!") and len(sym) > 1:
                base = sym[1:]
                if not declared:
                    raise ParseError("'!' needs a declared alphabet", sl, sc)
                if base not in sigma:
                    raise ParseError(f"unknown symbol {base!r}", sl, sc)
                choices.append(tuple(s for s in sigma if s != base))
            else:
                if sym not in sigma:
                    raise ParseError(f"unknown symbol {sym!r}", sl, sc)
                choices.append((sym,))
        letters = [Atom(f) for f in itertools.product(*choices)]
        if not letters:
            atoms.append(Empty())
        elif len(letters) == 1:
            atoms.append(letters[0])
        else:
            atoms.append(Alt(tuple(letters)))

    return Hre(sigma, variables, tuple(quant), _resolve(body, atoms), wildcards)


def _fmt(node, variables, prec):
    # prec is the context: 0 top level, 1 alternative, 2 concat item or postfix operand
    if isinstance(node, Empty):
        return "<empty>"
    if isinstance(node, Epsilon):
        return "<eps>"
    if isinstance(node, Atom):
        return "{" + ", ".join(f"{c}_{x}" for c, x in zip(node.letter, variables)) + "}"
    if isinstance(node, Alt):
        s = " | ".join(_fmt(n, variables, 1) for n in node.items)
        return f"({s})" if prec > 0 else s
    if isinstance(node, Concat):
        s = " ".join(_fmt(n, variables, 2) for n in node.items)
        return f"({s})" if prec > 1 else s
    if isinstance(node, (Star, Plus)):
        op = "*" if isinstance(node, Star) else "+"
        return _fmt(node.child, variables, 2) + op
    raise TypeError(f"not a regex node: {node!r}")


def format_hre(h: Hre) -> str:
    lines = [
        "alphabet: " + " ".join(h.alphabet),
        "vars: " + " ".join(h.variables),
    ]
    if h.wildcards:
        lines.append("wildcards: on")
    prefix = " ".join(f"{q.value} {x}." for q, x in h.quant)
    lines.append(prefix + " " + _fmt(h.body, h.variables, 0))
    return "\n".join(lines) + "\n"


def _glushkov(body):
    letters = []
    follow: dict = {}

    def walk(node):
        """Returns (nullable, first, last) over position numbers."""
        if isinstance(node, Empty):
            return False, set(), set()
        if isinstance(node, Epsilon):
            return True, set(), set()
        if isinstance(node, Atom):
            letters.append(node.letter)
            p = len(letters)
            follow[p] = set()
            return False, {p}, {p}
        if isinstance(node, Alt):
            nullable, first, last = False, set(), set()
            for n in node.items:
                nb, fb, lb = walk(n)
                nullable |= nb
                first |= fb
                last |= lb
            return nullable, first, last
        if isinstance(node, Concat):
            nullable, first, last = True, set(), set()
            for n in node.items:
                nb, fb, lb = walk(n)
                for p in last:
                    follow[p] |= fb
                if nullable:
                    first |= fb
                last = (last | lb) if nb else set(lb)
                nullable = nullable and nb
            return nullable, first, last
        if isinstance(node, (Star, Plus)):
            nb, fb, lb = walk(node.child)
            for p in lb:
                follow[p] |= fb
            return (True if isinstance(node, Star) else nb), fb, lb
        raise TypeError(f"not a regex node: {node!r}")

    nullable, first, last = walk(body)
    trans = [(0, letters[p - 1], p) for p in sorted(first)]
    for p in sorted(follow):
        for q in sorted(follow[p]):
            trans.append((p, letters[q - 1], q))
    accepting = sorted(last) + ([0] if nullable else [])
    return Nfa(range(len(letters) + 1), [0], accepting, trans)


def regex_nfa(body) -> Nfa:
    """Epsilon-free position automaton for a regex AST."""
    return _glushkov(body)


def compile_hre(h: Hre) -> Nfh:
    """NFH with the same variables and quantifier prefix as ``h``."""
    return Nfh(h.alphabet, h.variables, _glushkov(h.body), h.quant, h.wildcards)


def compile_text(text: str, **kwargs) -> Nfh:
    return compile_hre(parse_hre(text, **kwargs))
