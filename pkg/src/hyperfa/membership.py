"""Membership of finite and regular hyperwords, and containment of NFH."""

from __future__ import annotations

from collections import deque

from .closure import complement, intersection, rename
from .core import as_word, hat_alphabet, is_padding, zip_words
from .emptiness import nonempty_exists_forall
from .errors import AlphabetMismatchError, DeadlineExceeded, DomainError
from .nfa import Nfa, check_deadline, complement_nfa, is_empty, pad_suffix, product
from .nfh import EXISTS, FragmentKind, Nfh, classify, expand_wildcards, underlying_accepts


def finite_membership(a: Nfh, s, strict_wildcards: bool = False) -> bool:
    """Evaluate the quantifier prefix over the words of ``s``.

    ∃ stops at the first success and ∀ at the first failure; runs of the
    underlying automaton are cached per full assignment.
    """
    words = sorted({as_word(w) for w in s})
    if not words:
        raise DomainError("membership is only defined for nonempty hyperwords")
    order = a.quant_indices()
    assignment = [None] * a.k
    runs: dict = {}

    def leaf() -> bool:
        key = tuple(assignment)
        hit = runs.get(key)
        if hit is None:
            hit = runs[key] = underlying_accepts(a, zip_words(assignment), strict_wildcards)
        return hit

    def holds(depth: int) -> bool:
        if depth == len(order):
            return leaf()
        q, i = order[depth]
        want = q is EXISTS
        for w in words:
            assignment[i] = w
            if holds(depth + 1) == want:
                return want
        return not want

    return holds(0)


def _eliminate(cur: Nfa, slot: int, lang: Nfa, deadline) -> Nfa:
    """Automaton over the other slots accepting ``w`` iff some ``u`` in ``lang`` completes it.

    ``lang`` is ``L . #*``, read on the eliminated slot.
    Completions may be longer than ``w``; those extra steps output all
    padding and are folded into the accepting set.
    """

    def pair(f, c):
        if is_padding(f) or f[slot] != c:
            return None
        return f[:slot] + f[slot + 1:]

    prod = product(cur, lang, pair)
    check_deadline(deadline)
    back: dict = {}
    keep = []
    for s, g, d in prod.transitions():
        if is_padding(g):
            back.setdefault(d, set()).add(s)
        else:
            keep.append((s, g, d))
    acc = set(prod.accepting)
    queue = deque(acc)
    while queue:
        q = queue.popleft()
        for s in back.get(q, ()):
            if s not in acc:
                acc.add(s)
                queue.append(s)
    return Nfa(prod.states, prod.initial, acc, keep)


def regular_membership(l: Nfa, a: Nfh, deadline: float | None = None) -> bool:
    """Whether the hyperword ``L(l)`` (possibly infinite) is accepted by ``a``.

    Variables are eliminated from the innermost quantifier outwards.  An ∃
    step pairs the variable's slot with ``L(l) . #*``; a ∀ step is the same
    step wrapped in two complements.
    """
    stray = [c for c in l.alphabet if c not in a.alphabet]
    if stray:
        raise AlphabetMismatchError(f"language uses symbols {stray} outside {list(a.alphabet)}")
    if is_empty(l):
        raise DomainError("membership is only defined for nonempty hyperwords")
    a = expand_wildcards(a)
    lang = pad_suffix(l.trim())
    cur = a.nfa
    slots = list(range(a.k))
    for q, i in reversed(a.quant_indices()):
        check_deadline(deadline)
        slot = slots.index(i)
        n = len(slots)
        if q is EXISTS:
            cur = _eliminate(cur, slot, lang, deadline)
        else:
            neg = complement_nfa(cur, hat_alphabet(a.alphabet, n), deadline)
            cur = _eliminate(neg, slot, lang, deadline)
            cur = complement_nfa(cur, hat_alphabet(a.alphabet, n - 1), deadline)
        slots.pop(slot)
    return not cur.initial.isdisjoint(cur.accepting)


def _prefix_shape(a: Nfh):
    """``"EA"`` if the prefix is ∃*∀*, ``"AE"`` if ∀*∃*, both for pure prefixes."""
    kind = classify(a).kind
    shapes = set()
    if kind in (FragmentKind.EXISTS_ONLY, FragmentKind.FORALL_ONLY, FragmentKind.EXISTS_FORALL):
        shapes.add("EA")
    if kind in (FragmentKind.EXISTS_ONLY, FragmentKind.FORALL_ONLY, FragmentKind.FORALL_EXISTS):
        shapes.add("AE")
    return shapes


def containment_decidable(a: Nfh, b: Nfh) -> bool:
    return "EA" in _prefix_shape(a) and "AE" in _prefix_shape(b)


def containment(a: Nfh, b: Nfh, deadline: float | None = None):
    """``True``/``False`` when decidable, ``None`` for Unknown.

    ``a ⊆ b`` iff ``a ∩ complement(b)`` is empty.  When ``a`` is ∃*∀* and
    ``b`` is ∀*∃*, the complement of ``b`` is ∃*∀* and the intersection is
    given the prefix (∃ of a)(∃ of b̄)(∀ of a)(∀ of b̄), which stays ∃*∀*.
    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(
            f"operands use different alphabets {list(a.alphabet)} and {list(b.alphabet)}"
        )
    if not containment_decidable(a, b):
        return None
    try:
        a = expand_wildcards(a)
        c = complement(expand_wildcards(b), deadline)
        if set(a.variables) & set(c.variables):
            a = rename(a, {x: f"{x}.1" for x in a.variables})
            c = rename(c, {x: f"{x}.2" for x in c.variables})
        quant = (
            [e for e in a.quant if e[0] is EXISTS]
            + [e for e in c.quant if e[0] is EXISTS]
            + [e for e in a.quant if e[0] is not EXISTS]
            + [e for e in c.quant if e[0] is not EXISTS]
        )
        both = intersection(a, c, quant)
        verdict = nonempty_exists_forall(both, deadline=deadline)
    except DeadlineExceeded:
        return None
    return verdict.empty
