"""Structured alphabets and word assignments.

A hyper-letter is a tuple of symbols indexed by variable position; a word
assignment is a tuple of hyper-letters.  Symbols are plain strings, words
over the base alphabet are tuples of symbols, and hyperwords are frozensets
of such tuples.  ``PAD`` marks the end of a shorter word, ``WILD`` is the
wild-card slot of NFH with wild cards.

Sequence maps are 0-based: ``zeta[i] = j`` means variable ``i`` of the
result takes the word previously held by variable ``j``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DomainError, IllegalWordError

PAD = "#"
WILD = "?"
RESERVED = frozenset({PAD, WILD})

Letter = tuple
Word = tuple


def as_word(word) -> Word:
    """Coerce a word to a tuple of symbols; a ``str`` is split per character."""
    if isinstance(word, str):
        return tuple(word)
    return tuple(word)


def hyperword(*words) -> frozenset:
    """Build a nonempty hyperword from words (strings or symbol sequences)."""
    s = frozenset(as_word(w) for w in words)
    if not s:
        raise DomainError("hyperwords must be nonempty")
    return s


def check_alphabet(symbols: Iterable[str]) -> tuple:
    sigma = tuple(sorted(set(symbols)))
    if not sigma:
        raise DomainError("alphabet must be nonempty")
    for s in sigma:
        if s in RESERVED:
            raise DomainError(f"{s!r} is reserved and cannot be an alphabet symbol")
    return sigma


def is_padding(letter: Letter) -> bool:
    """True iff every slot of the letter is padding."""
    return all(c == PAD for c in letter)


def zip_words(words: Sequence[Word]) -> tuple:
    """Interleave ``k`` words into one word assignment, padding with ``PAD``."""
    words = [as_word(w) for w in words]
    n = max((len(w) for w in words), default=0)
    return tuple(
        tuple(w[i] if i < len(w) else PAD for w in words) for i in range(n)
    )


def zip_assignment(variables: Sequence[str], assignment: Mapping[str, Word]) -> tuple:
    missing = [x for x in variables if x not in assignment]
    extra = [x for x in assignment if x not in variables]
    if missing or extra:
        raise DomainError(
            f"assignment domain mismatch: missing {missing}, unexpected {extra}"
        )
    return zip_words([assignment[x] for x in variables])


def is_legal(letters: Sequence[Letter]) -> bool:
    """No variable may carry a symbol after a padding position."""
    for prev, cur in zip(letters, letters[1:]):
        for a, b in zip(prev, cur):
            if a == PAD and b != PAD:
                return False
    return True


def normalize(letters: Sequence[Letter]) -> tuple:
    """Strip trailing all-padding letters."""
    letters = tuple(letters)
    n = len(letters)
    while n and is_padding(letters[n - 1]):
        n -= 1
    return letters[:n]


def unzip_words(letters: Sequence[Letter], k: int | None = None) -> tuple:
    """Split a legal word assignment into its ``k`` component words."""
    letters = tuple(letters)
    if k is None:
        if not letters:
            raise DomainError("cannot infer arity of an empty word assignment")
        k = len(letters[0])
    padded = [False] * k
    out = [[] for _ in range(k)]
    for pos, f in enumerate(letters):
        if len(f) != k:
            raise DomainError(f"letter {f!r} at position {pos} has arity {len(f)}, expected {k}")
        for i, c in enumerate(f):
            if c == PAD:
                padded[i] = True
            elif padded[i]:
                raise IllegalWordError(pos, i)
            else:
                out[i].append(c)
    return tuple(tuple(w) for w in out)


def unzip(letters: Sequence[Letter], variables: Sequence[str]) -> dict:
    """Inverse of :func:`zip_assignment`; raises on illegal input."""
    try:
        words = unzip_words(letters, len(variables))
    except IllegalWordError as exc:
        raise IllegalWordError(exc.position, variables[exc.variable]) from None
    return dict(zip(variables, words))


def words_of(letters: Sequence[Letter], k: int | None = None) -> frozenset:
    """The set S(w) of words carried by a legal word assignment."""
    return frozenset(unzip_words(letters, k))


def apply_sequence(letters: Sequence[Letter], zeta: Sequence[int]) -> tuple:
    """Reassign words: variable ``i`` of the result carries old variable ``zeta[i]``."""
    if not letters:
        return ()
    words = unzip_words(letters)
    return zip_words([words[j] for j in zeta])


def compose(zeta: Sequence[int], xi: Sequence[int]) -> tuple:
    """The map ``i -> zeta[xi[i]]``, so applying ``zeta`` then ``xi`` equals one step."""
    return tuple(zeta[j] for j in xi)


def sequence_maps(k: int, m: int | None = None) -> Iterator[tuple]:
    """All total maps ``[0, k) -> [0, m)``."""
    m = k if m is None else m
    return itertools.product(range(m), repeat=k)


def permutation_maps(k: int) -> Iterator[tuple]:
    return itertools.permutations(range(k))


def gamma_maps(k: int, m: int) -> Iterator[tuple]:
    """Maps fixing the first ``m`` indices and sending the rest into ``[0, m)``."""
    head = tuple(range(m))
    for tail in itertools.product(range(m), repeat=k - m):
        yield head + tail


def relabel_letter(f: Letter, zeta: Sequence[int]) -> Letter:
    return tuple(f[j] for j in zeta)


def letter_intersect(f: Letter, g: Letter):
    """Meet of two letters with wild cards, or ``None`` when they clash."""
    if len(f) != len(g):
        raise DomainError("letters over different variable sets")
    out = []
    for a, b in zip(f, g):
        if a == WILD:
            out.append(b)
        elif b == WILD or a == b:
            out.append(a)
        else:
            return None
    return tuple(out)


def letter_matches(pattern: Letter, concrete: Letter, strict: bool = False) -> bool:
    """Whether a (possibly wild) letter covers a concrete one.

    In strict mode a wild card ranges over the base alphabet only and does not
    match padding.
    """
    for p, c in zip(pattern, concrete):
        if p == WILD:
            if strict and c == PAD:
                return False
        elif p != c:
            return False
    return True


def hat_alphabet(sigma: Sequence[str], k: int) -> list:
    """All letters of ``(sigma + {PAD})^k`` in a fixed order."""
    return list(itertools.product(tuple(sigma) + (PAD,), repeat=k))


def pad_mask(f: Letter) -> int:
    mask = 0
    for i, c in enumerate(f):
        if c == PAD:
            mask |= 1 << i
    return mask


def format_letter(f: Letter, variables: Sequence[str]) -> str:
    return "{" + ", ".join(f"{c}_{x}" for c, x in zip(f, variables)) + "}"


def format_word(word: Word) -> str:
    if not word:
        return "<eps>"
    if all(len(s) == 1 for s in word):
        return "".join(word)
    return " ".join(word)
