"""Boolean operations on NFH: complement, union and intersection.

Union and intersection put the two variable sets side by side, so letters of
the result are ``f + g`` with ``f`` over the first operand's variables.  If
the operands share variable names, every variable is renamed ``x -> x.1``
(first operand) and ``x -> x.2`` (second operand).

Neither construction lets an operand read an all-padding letter over its own
variables.  Such a letter only occurs once that operand's words are used up,
and the fresh padding states take over from there.  Without the restriction
an operand could accept ``w . #^j`` where it rejects ``w``.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .core import PAD, WILD, hat_alphabet, is_padding
from .errors import AlphabetMismatchError, DomainError
from .nfa import Nfa, complement_nfa
from .nfh import Nfh, Quantifier, expand_wildcards


def complement(a: Nfh, deadline: float | None = None) -> Nfh:
    """Dual quantifiers, complemented underlying automaton over the full letter set."""
    if a.wildcards:
        raise DomainError("complement needs a wildcard-free NFH; expand wild cards first")
    nfa = complement_nfa(a.nfa, a.hat_alphabet(), deadline)
    quant = tuple((q.dual(), x) for q, x in a.quant)
    return a.replace(nfa=nfa, quant=quant)


def rename(a: Nfh, mapping) -> Nfh:
    variables = tuple(mapping.get(x, x) for x in a.variables)
    quant = tuple((q, mapping.get(x, x)) for q, x in a.quant)
    return a.replace(variables=variables, quant=quant)


def _disjoint(a: Nfh, b: Nfh):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(
            f"operands use different alphabets {list(a.alphabet)} and {list(b.alphabet)}"
        )
    if set(a.variables) & set(b.variables):
        a = rename(a, {x: f"{x}.1" for x in a.variables})
        b = rename(b, {x: f"{x}.2" for x in b.variables})
    if a.wildcards != b.wildcards:
        a, b = expand_wildcards(a), expand_wildcards(b)
    return a.replace(nfa=a.nfa.renumbered()), b.replace(nfa=b.nfa.renumbered())


def _without_padding(a: Nfh) -> list:
    """Transitions of ``a`` with every all-padding letter removed.

    A wild-card letter whose concrete slots are all padding is split into
    disjoint patterns: the first non-padding wild slot is fixed to a real
    symbol, earlier wild slots to padding, later ones stay wild.
    """
    out = []
    for s, f, d in a.nfa.transitions():
        if any(c not in (PAD, WILD) for c in f):
            out.append((s, f, d))
            continue
        wild = [i for i, c in enumerate(f) if c == WILD]
        for n, i in enumerate(wild):
            for sym in a.alphabet:
                g = list(f)
                for j in wild[:n]:
                    g[j] = PAD
                g[i] = sym
                out.append((s, tuple(g), d))
    return out


def _fill(a: Nfh, k: int) -> list:
    """Every letter over ``k`` variables, as wild cards when ``a`` allows them."""
    if a.wildcards:
        return [(WILD,) * k]
    return hat_alphabet(a.alphabet, k)


def union(a: Nfh, b: Nfh) -> Nfh:
    """NFH for the union; quantifiers are the first prefix followed by the second."""
    a, b = _disjoint(a, b)
    ka, kb = a.k, b.k
    gy = _fill(a, kb)
    gx = _fill(a, ka)
    p1, p2 = ("p", 1), ("p", 2)
    states = [("a", q) for q in a.nfa.states] + [("b", q) for q in b.nfa.states] + [p1, p2]
    trans = []
    for s, f, d in _without_padding(a):
        trans += [(("a", s), f + g, ("a", d)) for g in gy]
    for s, f, d in _without_padding(b):
        trans += [(("b", s), g + f, ("b", d)) for g in gx]
    for g in gy:
        pad = (PAD,) * ka + g
        if is_padding(pad):
            continue
        trans += [(("a", q), pad, p1) for q in a.nfa.accepting]
        trans.append((p1, pad, p1))
    for g in gx:
        pad = g + (PAD,) * kb
        if is_padding(pad):
            continue
        trans += [(("b", q), pad, p2) for q in b.nfa.accepting]
        trans.append((p2, pad, p2))
    initial = [("a", q) for q in a.nfa.initial] + [("b", q) for q in b.nfa.initial]
    accepting = [("a", q) for q in a.nfa.accepting] + [("b", q) for q in b.nfa.accepting]
    nfa = Nfa(states, initial, accepting + [p1, p2], trans)
    return Nfh(
        a.alphabet, a.variables + b.variables, nfa, a.quant + b.quant, a.wildcards
    )


def _check_interleaving(quant, qa, qb):
    quant = tuple((Quantifier(q), x) for q, x in quant)
    left = [e for e in quant if e in qa]
    right = [e for e in quant if e in qb]
    if tuple(left) != tuple(qa) or tuple(right) != tuple(qb) or len(quant) != len(qa) + len(qb):
        raise DomainError(
            "intersection prefix must interleave both operands' prefixes, keeping each order"
        )
    return quant


def intersection(a: Nfh, b: Nfh, quant: Sequence | None = None) -> Nfh:
    """NFH for the intersection.

    ``quant`` picks the quantifier prefix; it must be an interleaving of the
    two prefixes (after any renaming).  The default is the first prefix
    followed by the second.
    """
    a, b = _disjoint(a, b)
    ka, kb = a.k, b.k
    quant = a.quant + b.quant if quant is None else _check_interleaving(quant, a.quant, b.quant)
    q_pad, p_pad = "q", "p"
    da = _without_padding(a)
    db = _without_padding(b)
    row_a: dict = {}
    for s, f, d in da:
        row_a.setdefault(s, []).append((f, d))
    row_b: dict = {}
    for s, g, d in db:
        row_b.setdefault(s, []).append((g, d))
    fin_a = set(a.nfa.accepting) | {q_pad}
    fin_b = set(b.nfa.accepting) | {p_pad}
    pad_a = (PAD,) * ka
    pad_b = (PAD,) * kb

    start = [(s, t) for s in sorted(a.nfa.initial, key=repr) for t in sorted(b.nfa.initial, key=repr)]
    seen = dict.fromkeys(start)
    queue = deque(start)
    trans = []
    while queue:
        src = queue.popleft()
        s, t = src
        moves = []
        if s != q_pad and t != p_pad:
            for f, d in row_a.get(s, ()):
                for g, e in row_b.get(t, ()):
                    moves.append((f + g, (d, e)))
        if s in fin_a and t != p_pad:
            moves += [(pad_a + g, (q_pad, e)) for g, e in row_b.get(t, ())]
        if t in fin_b and s != q_pad:
            moves += [(f + pad_b, (d, p_pad)) for f, d in row_a.get(s, ())]
        for letter, dst in moves:
            trans.append((src, letter, dst))
            if dst not in seen:
                seen[dst] = None
                queue.append(dst)
    accepting = [st for st in seen if st[0] in fin_a and st[1] in fin_b]
    nfa = Nfa(list(seen), start, accepting, trans)
    return Nfh(a.alphabet, a.variables + b.variables, nfa, quant, a.wildcards)
