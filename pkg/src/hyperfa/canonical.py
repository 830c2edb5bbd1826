"""Canonical underlying automata for alternation-free NFH.

For a ∀-only NFH the completed automaton accepts a legal word ``w`` iff the
original accepts every sequence of ``w`` (every reassignment of words of
``w`` to the variables).  For an ∃-only NFH it accepts ``w`` iff the
original accepts some sequence of ``w``.  Either way the completed language
on legal words is ``{w : S(w) is in the hyperlanguage}``, so two NFH of the
same fragment and arity denote the same hyperlanguage iff their completions
agree on legal words.
"""

from __future__ import annotations

from .core import is_padding, relabel_letter, sequence_maps
from .errors import AlphabetMismatchError, DomainError, FragmentError
from .nfa import Nfa, equivalent, intersect_nfa, minimize, union_nfa
from .nfh import (
    FragmentKind,
    Nfh,
    classify,
    expand_wildcards,
    legal_words_nfa,
    require_fragment,
)


def relabeled_nfa(a: Nfh, zeta) -> Nfa:
    """Automaton accepting legal ``w`` iff ``a``'s underlying one accepts the ``zeta`` sequence of ``w``.

    An input letter whose relabeling is all padding leaves the state unchanged,
    which drops the trailing padding the relabeled word would otherwise carry.
    """
    letters = a.hat_alphabet()
    trans = []
    for q in a.nfa.states:
        row = a.nfa.delta.get(q, {})
        for f in letters:
            g = relabel_letter(f, zeta)
            if is_padding(g):
                trans.append((q, f, q))
                continue
            for d in row.get(g, ()):
                trans.append((q, f, d))
    return Nfa(a.nfa.states, a.nfa.initial, a.nfa.accepting, trans, letters)


def _prepare(a: Nfh, kind) -> Nfh:
    a = expand_wildcards(a)
    require_fragment(a, kind)
    return a


def sequence_complete(a: Nfh, legal: bool = True) -> Nfh:
    """∀-only NFH whose underlying automaton is closed under sequences."""
    a = _prepare(a, FragmentKind.FORALL_ONLY)
    result = legal_words_nfa(a.alphabet, a.k) if legal else None
    for zeta in sequence_maps(a.k):
        part = relabeled_nfa(a, zeta)
        result = part if result is None else intersect_nfa(result, part).trim()
    return a.replace(nfa=result.with_alphabet(a.hat_alphabet()))


def permutation_complete(a: Nfh, legal: bool = True) -> Nfh:
    """∃-only NFH whose underlying automaton is closed under sequences.

    The union runs over all ``k**k`` reassignments, not only the bijective
    ones; with permutations alone two NFH with equal hyperlanguages can keep
    different underlying languages.
    """
    a = _prepare(a, FragmentKind.EXISTS_ONLY)
    result = None
    for zeta in sequence_maps(a.k):
        part = relabeled_nfa(a, zeta)
        result = part if result is None else union_nfa(result, part)
    if legal:
        result = intersect_nfa(result, legal_words_nfa(a.alphabet, a.k))
    return a.replace(nfa=result.trim().with_alphabet(a.hat_alphabet()))


def complete(a: Nfh, legal: bool = True) -> Nfh:
    kind = classify(a).kind
    if kind is FragmentKind.FORALL_ONLY:
        return sequence_complete(a, legal)
    if kind is FragmentKind.EXISTS_ONLY:
        return permutation_complete(a, legal)
    raise FragmentError(f"canonical forms exist only for alternation-free NFH, not {kind.value}")


def canonical_form(a: Nfh) -> Nfh:
    """Completed NFH with a minimal, trimmed deterministic underlying automaton."""
    c = complete(a)
    nfa = minimize(c.nfa, c.hat_alphabet()).trim()
    return c.replace(nfa=nfa.with_alphabet(c.hat_alphabet()))


def equivalent_alternation_free(a: Nfh, b: Nfh, raw: bool = False, deadline=None) -> bool:
    """Whether two ∀-only (or two ∃-only) NFH have the same hyperlanguage.

    Variables are matched by position.  By default the comparison is made on
    legal words only; ``raw=True`` compares the completed automata on every
    word, illegal ones included.
    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError("operands use different alphabets")
    if a.k != b.k:
        raise DomainError(f"variable counts differ: {a.k} and {b.k}")
    ka, kb = classify(a).kind, classify(b).kind
    if ka != kb:
        raise FragmentError(f"fragments differ: {ka.value} and {kb.value}")
    ca = complete(a, legal=not raw)
    cb = complete(b, legal=not raw)
    return equivalent(ca.nfa, cb.nfa, deadline)

