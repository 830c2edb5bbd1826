"""Line-based text formats for NFH, NFA and finite hyperwords.

NFH files::

    nfh
    alphabet: a b
    vars: x y
    quant: forall x exists y
    wildcards: off
    states: q0 q1
    initial: q0
    accepting: q1
    trans: q0 q1 x=a y=a

NFA files start with ``nfa``, omit ``vars``/``quant``/``wildcards`` and write
letters as bare symbols.  Hyperword files hold one word per line, ``<eps>``
for the empty word, symbols separated by spaces (or one character each when a
line has no spaces).  ``//`` starts a comment everywhere.
"""

from __future__ import annotations

from .core import PAD, WILD, as_word, format_word
from .errors import DomainError, ParseError
from .hre import compile_hre, parse_hre
from .nfa import Nfa
from .nfh import Nfh, Quantifier


def _lines(text: str):
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0].strip()
        if line:
            yield n, line


def _fields(text: str, kind: str):
    lines = list(_lines(text))
    if not lines or lines[0][1] != kind:
        line = lines[0][0] if lines else 1
        raise ParseError(f"expected the header line {kind!r}", line, 1)
    fields: dict = {}
    trans = []
    for n, line in lines[1:]:
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", n, 1)
        if key == "trans":
            trans.append((n, value.split()))
        elif key in fields:
            raise ParseError(f"duplicate field {key!r}", n, 1)
        else:
            fields[key] = (n, value.split())
    return fields, trans


def _need(fields, key, line=1):
    if key not in fields:
        raise ParseError(f"missing field {key!r}", line)
    return fields[key][1]


def parse_nfh(text: str) -> Nfh:
    fields, trans = _fields(text, "nfh")
    alphabet = _need(fields, "alphabet")
    variables = _need(fields, "vars")
    qtoks = _need(fields, "quant")
    qline = fields["quant"][0]
    if len(qtoks) % 2:
        raise ParseError("quant must alternate quantifiers and variables", qline)
    try:
        quant = [(Quantifier(qtoks[i]), qtoks[i + 1]) for i in range(0, len(qtoks), 2)]
    except ValueError:
        raise ParseError("quantifiers must be 'forall' or 'exists'", qline) from None
    wild = fields.get("wildcards", (0, ["off"]))[1]
    if wild not in (["on"], ["off"]):
        raise ParseError("wildcards must be 'on' or 'off'", fields["wildcards"][0])
    states = _need(fields, "states")
    initial = _need(fields, "initial")
    accepting = fields.get("accepting", (0, []))[1]
    edges = []
    for n, toks in trans:
        if len(toks) != 2 + len(variables):
            raise ParseError(
                "a transition needs source, target and one slot per variable", n
            )
        slots = {}
        for tok in toks[2:]:
            var, eq, sym = tok.partition("=")
            if not eq or var not in variables or var in slots:
                raise ParseError(f"bad letter slot {tok!r}", n)
            slots[var] = sym
        for s in toks[:2]:
            if s not in states:
                raise ParseError(f"undeclared state {s!r}", n)
        edges.append((toks[0], tuple(slots[x] for x in variables), toks[1]))
    try:
        nfa = Nfa(states, initial, accepting, edges)
        return Nfh(tuple(alphabet), tuple(variables), nfa, tuple(quant), wild == ["on"])
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def parse_nfa(text: str) -> Nfa:
    fields, trans = _fields(text, "nfa")
    alphabet = _need(fields, "alphabet")
    states = _need(fields, "states")
    initial = _need(fields, "initial")
    accepting = fields.get("accepting", (0, []))[1]
    edges = []
    for n, toks in trans:
        if len(toks) != 3:
            raise ParseError("a transition is 'source target symbol'", n)
        if toks[2] not in alphabet:
            raise ParseError(f"symbol {toks[2]!r} is not in the alphabet", n)
        for s in toks[:2]:
            if s not in states:
                raise ParseError(f"undeclared state {s!r}", n)
        edges.append((toks[0], toks[2], toks[1]))
    try:
        return Nfa(states, initial, accepting, edges, alphabet)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def _state_names(nfa: Nfa) -> dict:
    return {q: f"q{i}" for i, q in enumerate(nfa.states)}


def format_nfh(a: Nfh) -> str:
    names = _state_names(a.nfa)
    out = [
        "nfh",
        "alphabet: " + " ".join(a.alphabet),
        "vars: " + " ".join(a.variables),
        "quant: " + " ".join(f"{q.value} {x}" for q, x in a.quant),
        "wildcards: " + ("on" if a.wildcards else "off"),
        "states: " + " ".join(names[q] for q in a.nfa.states),
        "initial: " + " ".join(sorted((names[q] for q in a.nfa.initial), key=_natural)),
        "accepting: " + " ".join(sorted((names[q] for q in a.nfa.accepting), key=_natural)),
    ]
    rows = []
    for s, f, d in a.nfa.transitions():
        slots = " ".join(f"{x}={c}" for x, c in zip(a.variables, f))
        rows.append((_natural(names[s]), _natural(names[d]), f, f"trans: {names[s]} {names[d]} {slots}"))
    out += [r[-1] for r in sorted(rows)]
    return "\n".join(out) + "\n"


def format_nfa(a: Nfa) -> str:
    names = _state_names(a)
    alphabet = sorted(a.alphabet)
    out = [
        "nfa",
        "alphabet: " + " ".join(alphabet),
        "states: " + " ".join(names[q] for q in a.states),
        "initial: " + " ".join(sorted((names[q] for q in a.initial), key=_natural)),
        "accepting: " + " ".join(sorted((names[q] for q in a.accepting), key=_natural)),
    ]
    rows = sorted(
        (_natural(names[s]), _natural(names[d]), f, f"trans: {names[s]} {names[d]} {f}")
        for s, f, d in a.transitions()
    )
    out += [r[-1] for r in rows]
    return "\n".join(out) + "\n"


def _natural(name: str):
    return (len(name), name)


def parse_hyperword(text: str, alphabet=None) -> frozenset:
    """Read a hyperword file; a one-token line that is a known symbol is one letter."""
    words = set()
    for _, line in _lines(text):
        if line == "<eps>":
            words.add(())
        elif " " in line or "\t" in line or (alphabet is not None and line in alphabet):
            words.add(tuple(line.split()))
        else:
            words.add(as_word(line))
    if not words:
        raise ParseError("a hyperword file must list at least one word")
    for w in words:
        for c in w:
            if c in (PAD, WILD) or (alphabet is not None and c not in alphabet):
                raise ParseError(f"symbol {c!r} is not in the alphabet")
    return frozenset(words)


def format_hyperword(s) -> str:
    words = sorted(as_word(w) for w in s)
    return "".join(
        ("<eps>" if not w else " ".join(w)) + "\n" for w in words
    )


def format_hyperword_inline(s) -> str:
    return "{" + ", ".join(format_word(w) for w in sorted(as_word(w) for w in s)) + "}"


def parse_automaton(text: str) -> Nfh:
    """An NFH from either the NFH file format or HRE text."""
    first = next((line for _, line in _lines(text)), "")
    if first == "nfh":
        return parse_nfh(text)
    return compile_hre(parse_hre(text))
