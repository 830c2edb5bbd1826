"""Finite-word hyperautomata and their ground-truth semantics."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    PAD,
    WILD,
    as_word,
    check_alphabet,
    hat_alphabet,
    is_padding,
    letter_matches,
    zip_words,
)
from .errors import DomainError, FragmentError
from .nfa import Nfa


class Quantifier(str, enum.Enum):
    EXISTS = "exists"
    FORALL = "forall"

    def dual(self) -> "Quantifier":
        return Quantifier.FORALL if self is Quantifier.EXISTS else Quantifier.EXISTS


EXISTS = Quantifier.EXISTS
FORALL = Quantifier.FORALL


class FragmentKind(enum.Enum):
    EXISTS_ONLY = "exists"
    FORALL_ONLY = "forall"
    EXISTS_FORALL = "exists-forall"
    FORALL_EXISTS = "forall-exists"
    GENERAL = "general"


@dataclass(frozen=True)
class Fragment:
    kind: FragmentKind
    exists_count: int
    forall_count: int

    def __str__(self):
        return self.kind.value


def quant_pattern(quant) -> str:
    return "".join("E" if q is EXISTS else "A" for q, _ in quant)


@dataclass(frozen=True, eq=False)
class Nfh:
    """Underlying NFA over hyper-letters plus an ordered quantifier prefix.

    Letters are tuples indexed by the position of each variable in
    ``variables``.  ``quant`` lists ``(Quantifier, variable)`` pairs and may
    order the variables differently from ``variables``.
    """

    alphabet: tuple
    variables: tuple
    nfa: Nfa
    quant: tuple
    wildcards: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "variables", tuple(self.variables))
        quant = tuple((Quantifier(q), x) for q, x in self.quant)
        object.__setattr__(self, "quant", quant)
        if not self.variables:
            raise DomainError("an NFH needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise DomainError(f"duplicate variables in {self.variables}")
        qvars = [x for _, x in quant]
        if sorted(qvars) != sorted(self.variables):
            raise DomainError(
                f"quantifiers {qvars} must bind each of {list(self.variables)} exactly once"
            )
        allowed = set(self.alphabet) | {PAD}
        if self.wildcards:
            allowed.add(WILD)
        k = len(self.variables)
        for f in self.nfa.alphabet:
            if not isinstance(f, tuple) or len(f) != k:
                raise DomainError(f"letter {f!r} does not assign all {k} variables")
            for c in f:
                if c not in allowed:
                    raise DomainError(f"letter {f!r} uses symbol {c!r} outside the alphabet")

    @property
    def k(self) -> int:
        return len(self.variables)

    def index(self, variable: str) -> int:
        return self.variables.index(variable)

    def quant_indices(self) -> list:
        """``(Quantifier, variable position)`` pairs in prefix order."""
        return [(q, self.variables.index(x)) for q, x in self.quant]

    def hat_alphabet(self) -> list:
        return hat_alphabet(self.alphabet, self.k)

    def replace(self, **changes) -> "Nfh":
        fields = dict(
            alphabet=self.alphabet,
            variables=self.variables,
            nfa=self.nfa,
            quant=self.quant,
            wildcards=self.wildcards,
        )
        fields.update(changes)
        return Nfh(**fields)

    def __repr__(self):
        prefix = " ".join(f"{q.value} {x}" for q, x in self.quant)
        return f"Nfh({prefix}; sigma={list(self.alphabet)}; {self.nfa!r})"


def classify(a: Nfh) -> Fragment:
    pattern = quant_pattern(a.quant)
    m = pattern.count("E")
    n = pattern.count("A")
    if n == 0:
        kind = FragmentKind.EXISTS_ONLY
    elif m == 0:
        kind = FragmentKind.FORALL_ONLY
    elif pattern == "E" * m + "A" * n:
        kind = FragmentKind.EXISTS_FORALL
    elif pattern == "A" * n + "E" * m:
        kind = FragmentKind.FORALL_EXISTS
    else:
        kind = FragmentKind.GENERAL
    return Fragment(kind, m, n)


def require_fragment(a: Nfh, *kinds) -> Fragment:
    frag = classify(a)
    if frag.kind not in kinds:
        names = ", ".join(k.value for k in kinds)
        raise FragmentError(f"expected fragment {names}, got {frag.kind.value}")
    return frag


def wild_accepts(nfa: Nfa, word, strict: bool = False) -> bool:
    """Run an automaton whose letters may hold wild cards on a concrete word."""
    current = nfa.initial
    for f in word:
        nxt = set()
        for q in current:
            for pattern, ds in nfa.delta.get(q, {}).items():
                if letter_matches(pattern, f, strict):
                    nxt |= ds
        if not nxt:
            return False
        current = nxt
    return not current.isdisjoint(nfa.accepting)


def underlying_accepts(a: Nfh, word, strict: bool = False) -> bool:
    if a.wildcards:
        return wild_accepts(a.nfa, word, strict)
    return a.nfa.accepts(word)


def _check_hyperword(s) -> list:
    words = sorted({as_word(w) for w in s})
    if not words:
        raise DomainError("membership is only defined for nonempty hyperwords")
    return words


def oracle_accepts(a: Nfh, s, strict_wildcards: bool = False) -> bool:
    """Literal recursive evaluation of the quantifier prefix on a finite hyperword.

    This is the trusted baseline every construction is checked against.
    """
    words = _check_hyperword(s)
    order = a.quant_indices()
    assignment = [None] * a.k

    def holds(depth: int) -> bool:
        if depth == len(order):
            return underlying_accepts(a, zip_words(assignment), strict_wildcards)
        q, i = order[depth]

        def branch(w):
            assignment[i] = w
            return holds(depth + 1)

        if q is EXISTS:
            return any(branch(w) for w in words)
        return all(branch(w) for w in words)

    return holds(0)


def diagonal_accepts(a: Nfh, u) -> bool:
    """Whether the underlying automaton accepts ``zip(u, ..., u)``."""
    return underlying_accepts(a, zip_words([as_word(u)] * a.k))


def expand_letter(f, sigma: Sequence[str], strict: bool = False) -> list:
    """All concrete letters covered by ``f``."""
    choices = tuple(sigma) if strict else tuple(sigma) + (PAD,)
    slots = [choices if c == WILD else (c,) for c in f]
    return list(itertools.product(*slots))


def expand_wildcards(a: Nfh, strict: bool = False) -> Nfh:
    """Replace every wild-card transition by the concrete letters it covers."""
    if not a.wildcards:
        return a
    trans = []
    for s, f, d in a.nfa.transitions():
        for g in expand_letter(f, a.alphabet, strict):
            trans.append((s, g, d))
    nfa = Nfa(a.nfa.states, a.nfa.initial, a.nfa.accepting, trans)
    return a.replace(nfa=nfa, wildcards=False)


def legal_words_nfa(sigma: Sequence[str], k: int, normalized: bool = True) -> Nfa:
    """Deterministic automaton for the legal word assignments over ``k`` variables.

    States are bit masks of the variables that have entered padding.  With
    ``normalized`` the all-padding letter is excluded, so the language is
    exactly the set of words produced by zipping ``k`` words.
    """
    trans = []
    letters = hat_alphabet(sigma, k)
    for mask in range(1 << k):
        for f in letters:
            if normalized and is_padding(f):
                continue
            nmask = mask
            ok = True
            for i, c in enumerate(f):
                if c == PAD:
                    nmask |= 1 << i
                elif mask >> i & 1:
                    ok = False
                    break
            if ok:
                trans.append((mask, f, nmask))
    states = list(range(1 << k))
    return Nfa(states, [0], states, trans, letters)


def make_nfh(
    alphabet: Iterable[str],
    variables: Sequence[str],
    quant,
    states,
    initial,
    accepting,
    transitions,
    wildcards: bool = False,
) -> Nfh:
    """Convenience constructor.

    ``quant`` may be a string such as ``"forall x exists y"`` or a sequence of
    pairs; transition letters may be given as dicts, tuples, or strings with
    one character per variable.
    """
    variables = tuple(variables)
    if isinstance(quant, str):
        toks = quant.split()
        if len(toks) % 2:
            raise DomainError(f"malformed quantifier prefix {quant!r}")
        quant = [(Quantifier(toks[i]), toks[i + 1]) for i in range(0, len(toks), 2)]

    def letter(f):
        if isinstance(f, dict):
            return tuple(f[x] for x in variables)
        return tuple(f)

    trans = [(s, letter(f), d) for s, f, d in transitions]
    nfa = Nfa(states, initial, accepting, trans)
    return Nfh(tuple(alphabet), variables, nfa, tuple(quant), wildcards)
