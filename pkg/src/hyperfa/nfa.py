"""Epsilon-free NFA over arbitrary hashable letters.

Letters are hyper-letters (tuples of symbols) for underlying automata of
NFH, and plain symbols for ordinary NFA over the base alphabet.  Every
construction returns a fresh :class:`Nfa`; instances are never mutated
after ``__init__``.
"""

from __future__ import annotations

import time
from collections import deque
from typing import Callable, Iterable, Iterator

from .core import PAD, is_padding
from .errors import DeadlineExceeded, DomainError


def _sort_key(x):
    return repr(x)


def check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise DeadlineExceeded("deadline exceeded")


class Nfa:
    """A nondeterministic automaton ``(states, initial, accepting, delta)``.

    ``alphabet`` defaults to the letters that occur on transitions; pass it
    explicitly when the declared alphabet is larger (complementation is
    always relative to an explicit alphabet).
    """

    __slots__ = ("states", "initial", "accepting", "delta", "alphabet")

    def __init__(self, states, initial, accepting, transitions, alphabet=None):
        order = dict.fromkeys(states)
        delta: dict = {}
        letters = dict()
        for src, letter, dst in transitions:
            order.setdefault(src)
            order.setdefault(dst)
            delta.setdefault(src, {}).setdefault(letter, set()).add(dst)
            letters.setdefault(letter)
        initial = frozenset(initial)
        accepting = frozenset(accepting)
        for q in initial | accepting:
            if q not in order:
                raise DomainError(f"state {q!r} is not declared")
        if alphabet is None:
            alphabet = frozenset(letters)
        else:
            alphabet = frozenset(alphabet)
            stray = [f for f in letters if f not in alphabet]
            if stray:
                raise DomainError(f"transition letters outside the alphabet: {stray[:3]}")
        self.states = tuple(order)
        self.initial = initial
        self.accepting = accepting
        self.delta = {
            q: {f: frozenset(ds) for f, ds in row.items()} for q, row in delta.items()
        }
        self.alphabet = alphabet

    def __len__(self):
        return len(self.states)

    def __repr__(self):
        return (
            f"Nfa(states={len(self.states)}, transitions={self.num_transitions()}, "
            f"initial={len(self.initial)}, accepting={len(self.accepting)})"
        )

    def num_transitions(self) -> int:
        return sum(len(ds) for row in self.delta.values() for ds in row.values())

    def transitions(self) -> Iterator[tuple]:
        for q in self.states:
            row = self.delta.get(q, {})
            for f in sorted(row, key=_sort_key):
                for d in sorted(row[f], key=_sort_key):
                    yield q, f, d

    def successors(self, state) -> dict:
        return self.delta.get(state, {})

    def step(self, current: Iterable, letter) -> frozenset:
        out = set()
        for q in current:
            ds = self.delta.get(q, {}).get(letter)
            if ds:
                out |= ds
        return frozenset(out)

    def accepts(self, word) -> bool:
        current = self.initial
        for letter in word:
            current = self.step(current, letter)
            if not current:
                return False
        return not current.isdisjoint(self.accepting)

    def is_deterministic(self) -> bool:
        if len(self.initial) > 1:
            return False
        return all(len(ds) == 1 for row in self.delta.values() for ds in row.values())

    def is_complete(self, alphabet=None) -> bool:
        alphabet = self.alphabet if alphabet is None else alphabet
        return bool(self.initial) and all(
            f in self.delta.get(q, {}) for q in self.states for f in alphabet
        )

    def renumbered(self) -> "Nfa":
        """Copy with states replaced by ``0..n-1`` in declaration order."""
        index = {q: i for i, q in enumerate(self.states)}
        return Nfa(
            range(len(self.states)),
            (index[q] for q in self.initial),
            (index[q] for q in self.accepting),
            ((index[s], f, index[d]) for s, f, d in self.transitions()),
            self.alphabet,
        )

    def reachable(self) -> "Nfa":
        seen = dict.fromkeys(sorted(self.initial, key=_sort_key))
        queue = deque(seen)
        while queue:
            q = queue.popleft()
            row = self.delta.get(q, {})
            for f in sorted(row, key=_sort_key):
                for d in sorted(row[f], key=_sort_key):
                    if d not in seen:
                        seen[d] = None
                        queue.append(d)
        return self.restrict(seen)

    def trim(self) -> "Nfa":
        """Keep only states that are reachable and can reach acceptance."""
        a = self.reachable()
        back: dict = {}
        for s, _, d in a.transitions():
            back.setdefault(d, set()).add(s)
        live = set(a.accepting)
        queue = deque(live)
        while queue:
            q = queue.popleft()
            for s in back.get(q, ()):
                if s not in live:
                    live.add(s)
                    queue.append(s)
        keep = [q for q in a.states if q in live]
        if not keep:
            return empty_nfa(self.alphabet)
        return a.restrict(keep)

    def restrict(self, keep) -> "Nfa":
        keep = dict.fromkeys(keep)
        return Nfa(
            keep,
            (q for q in self.initial if q in keep),
            (q for q in self.accepting if q in keep),
            ((s, f, d) for s, f, d in self.transitions() if s in keep and d in keep),
            self.alphabet,
        )

    def with_alphabet(self, alphabet) -> "Nfa":
        return Nfa(self.states, self.initial, self.accepting, self.transitions(), alphabet)


def empty_nfa(alphabet=()) -> Nfa:
    return Nfa([0], [0], [], [], alphabet)


def universal_nfa(alphabet) -> Nfa:
    alphabet = frozenset(alphabet)
    return Nfa([0], [0], [0], ((0, f, 0) for f in alphabet), alphabet)


def word_nfa(words: Iterable, alphabet=None) -> Nfa:
    """A trie-shaped NFA accepting exactly the given finite set of words."""
    states = {(): 0}
    trans = []
    accepting = []
    for w in sorted(set(tuple(w) for w in words), key=_sort_key):
        prefix = ()
        for c in w:
            nxt = prefix + (c,)
            if nxt not in states:
                states[nxt] = len(states)
                trans.append((states[prefix], c, states[nxt]))
            prefix = nxt
        accepting.append(states[prefix])
    return Nfa(states.values(), [0], accepting, trans, alphabet)


def product(a: Nfa, b: Nfa, combine: Callable, alphabet=None) -> Nfa:
    """Synchronous product over reachable pairs.

    ``combine(fa, fb)`` returns the output letter for a compatible pair of
    letters, or ``None``.  A state pair is accepting when both are.
    """
    a = a.renumbered()
    b = b.renumbered()
    start = sorted((p, q) for p in a.initial for q in b.initial)
    index = {s: i for i, s in enumerate(start)}
    queue = deque(start)
    trans = []
    while queue:
        p, q = queue.popleft()
        src = index[(p, q)]
        row_a = a.delta.get(p, {})
        row_b = b.delta.get(q, {})
        for fa in sorted(row_a, key=_sort_key):
            for fb in sorted(row_b, key=_sort_key):
                out = combine(fa, fb)
                if out is None:
                    continue
                for p2 in sorted(row_a[fa]):
                    for q2 in sorted(row_b[fb]):
                        key = (p2, q2)
                        if key not in index:
                            index[key] = len(index)
                            queue.append(key)
                        trans.append((src, out, index[key]))
    accepting = [i for (p, q), i in index.items() if p in a.accepting and q in b.accepting]
    initial = [index[s] for s in start]
    if not index:
        return empty_nfa(alphabet if alphabet is not None else ())
    return Nfa(range(len(index)), initial, accepting, trans, alphabet)


def intersect_nfa(a: Nfa, b: Nfa) -> Nfa:
    return product(
        a, b, lambda f, g: f if f == g else None, a.alphabet & b.alphabet
    )


def union_nfa(a: Nfa, b: Nfa) -> Nfa:
    a = a.renumbered()
    b = b.renumbered()
    n = len(a.states)
    return Nfa(
        list(range(n + len(b.states))),
        list(a.initial) + [q + n for q in b.initial],
        list(a.accepting) + [q + n for q in b.accepting],
        list(a.transitions()) + [(s + n, f, d + n) for s, f, d in b.transitions()],
        a.alphabet | b.alphabet,
    )


def determinize(a: Nfa, alphabet=None, deadline: float | None = None) -> Nfa:
    """Subset construction; the result is complete over ``alphabet``."""
    alphabet = a.alphabet if alphabet is None else frozenset(alphabet)
    letters = sorted(alphabet, key=_sort_key)
    a = a.renumbered()
    start = tuple(sorted(a.initial))
    index = {start: 0}
    queue = deque([start])
    trans = []
    while queue:
        check_deadline(deadline)
        subset = queue.popleft()
        src = index[subset]
        for f in letters:
            nxt = tuple(sorted(a.step(subset, f)))
            if nxt not in index:
                index[nxt] = len(index)
                queue.append(nxt)
            trans.append((src, f, index[nxt]))
    accepting = [i for s, i in index.items() if not a.accepting.isdisjoint(s)]
    return Nfa(range(len(index)), [0], accepting, trans, alphabet)


def complement_nfa(a: Nfa, alphabet, deadline: float | None = None) -> Nfa:
    """An automaton for ``alphabet* minus L(a)``."""
    alphabet = frozenset(alphabet)
    kept = Nfa(
        a.states,
        a.initial,
        a.accepting,
        ((s, f, d) for s, f, d in a.transitions() if f in alphabet),
        alphabet,
    )
    d = determinize(kept, alphabet, deadline)
    return Nfa(d.states, d.initial, set(d.states) - d.accepting, d.transitions(), alphabet)


def find_word(
    a: Nfa,
    allow: Callable | None = None,
    legal: bool = False,
    expand: Callable | None = None,
    deadline: float | None = None,
):
    """Breadth-first search for a shortest accepted word.

    ``expand(letter)`` turns a transition letter into the concrete letters it
    stands for (wild cards); ``allow(letter)`` filters concrete letters.  With
    ``legal=True`` letters are hyper-letters and the search only follows
    legal, normalized word assignments: once a slot reads padding it stays
    padded, and all-padding letters are never read.  Returns the word as a
    tuple, or ``None`` when no word qualifies.
    """
    start = sorted(a.initial, key=_sort_key)
    parent: dict = {}
    queue = deque()
    for q in start:
        node = (q, 0)
        parent[node] = None
        queue.append(node)
    while queue:
        check_deadline(deadline)
        node = queue.popleft()
        q, mask = node
        if q in a.accepting:
            word = []
            while parent[node] is not None:
                node, f = parent[node]
                word.append(f)
            return tuple(reversed(word))
        row = a.delta.get(q, {})
        for lab in sorted(row, key=_sort_key):
            concrete = expand(lab, mask) if expand is not None else (lab,)
            for f in concrete:
                if allow is not None and not allow(f):
                    continue
                nmask = 0
                if legal:
                    if is_padding(f):
                        continue
                    nmask = mask
                    ok = True
                    for i, c in enumerate(f):
                        if c == PAD:
                            nmask |= 1 << i
                        elif mask >> i & 1:
                            ok = False
                            break
                    if not ok:
                        continue
                for d in sorted(row[lab], key=_sort_key):
                    nxt = (d, nmask)
                    if nxt not in parent:
                        parent[nxt] = (node, f)
                        queue.append(nxt)
    return None


def is_empty(a: Nfa, allow: Callable | None = None, legal: bool = False) -> bool:
    return find_word(a, allow=allow, legal=legal) is None


def inclusion_counterexample(a: Nfa, b: Nfa, deadline: float | None = None):
    """A shortest word in ``L(a) - L(b)``, or ``None`` if ``L(a) <= L(b)``."""
    a = a.renumbered()
    b = b.renumbered()
    start = [(q, frozenset(b.initial)) for q in sorted(a.initial)]
    parent: dict = {s: None for s in start}
    queue = deque(start)
    while queue:
        check_deadline(deadline)
        node = queue.popleft()
        q, subset = node
        if q in a.accepting and subset.isdisjoint(b.accepting):
            word = []
            while parent[node] is not None:
                node, f = parent[node]
                word.append(f)
            return tuple(reversed(word))
        row = a.delta.get(q, {})
        for f in sorted(row, key=_sort_key):
            nsub = b.step(subset, f)
            for d in sorted(row[f]):
                nxt = (d, nsub)
                if nxt not in parent:
                    parent[nxt] = (node, f)
                    queue.append(nxt)
    return None


def contains(a: Nfa, b: Nfa, deadline: float | None = None) -> bool:
    """Whether ``L(a)`` is a subset of ``L(b)``."""
    return inclusion_counterexample(a, b, deadline) is None


def equivalent(a: Nfa, b: Nfa, deadline: float | None = None) -> bool:
    return contains(a, b, deadline) and contains(b, a, deadline)


def minimize(a: Nfa, alphabet=None, deadline: float | None = None) -> Nfa:
    """The minimal complete DFA for ``L(a)`` over ``alphabet``.

    States are numbered in breadth-first order from the initial state, so
    two automata with the same language yield identical results.
    """
    d = determinize(a, alphabet, deadline).reachable().renumbered()
    letters = sorted(d.alphabet, key=_sort_key)
    succ = {q: [next(iter(d.delta[q][f])) for f in letters] for q in d.states}
    block = {q: int(q in d.accepting) for q in d.states}
    while True:
        check_deadline(deadline)
        sigs = {q: (block[q], tuple(block[t] for t in succ[q])) for q in d.states}
        ids: dict = {}
        new = {q: ids.setdefault(sigs[q], len(ids)) for q in d.states}
        if len(ids) == len(set(block.values())):
            block = new
            break
        block = new
    start = block[next(iter(d.initial))]
    order = {start: 0}
    queue = deque([start])
    rep = {}
    for q in d.states:
        rep.setdefault(block[q], q)
    trans = []
    while queue:
        b = queue.popleft()
        q = rep[b]
        for f, t in zip(letters, succ[q]):
            bt = block[t]
            if bt not in order:
                order[bt] = len(order)
                queue.append(bt)
            trans.append((order[b], f, order[bt]))
    accepting = [order[block[q]] for q in d.accepting if block[q] in order]
    return Nfa(range(len(order)), [0], accepting, trans, d.alphabet)


def project(a: Nfa, fn: Callable, alphabet=None) -> Nfa:
    """Relabel every transition letter ``f`` with ``fn(f)``."""
    return Nfa(
        a.states,
        a.initial,
        a.accepting,
        ((s, fn(f), d) for s, f, d in a.transitions()),
        alphabet,
    )


def pad_suffix(a: Nfa, pad=PAD) -> Nfa:
    """Automaton for ``L(a) . pad*`` via a fresh accepting sink state."""
    a = a.renumbered()
    sink = len(a.states)
    trans = list(a.transitions())
    trans += [(q, pad, sink) for q in sorted(a.accepting)]
    trans.append((sink, pad, sink))
    return Nfa(
        list(range(sink + 1)), a.initial, list(a.accepting) + [sink], trans,
        a.alphabet | {pad},
    )


def strip_pad_suffix(a: Nfa, pad=PAD) -> Nfa:
    """Right quotient by ``pad*``: accept ``u`` whenever ``u . pad^j`` is accepted.

    Padding transitions are dropped, so on languages of the form ``U . pad*``
    this yields exactly ``U``.
    """
    back: dict = {}
    for s, f, d in a.transitions():
        if f == pad:
            back.setdefault(d, set()).add(s)
    acc = set(a.accepting)
    queue = deque(acc)
    while queue:
        q = queue.popleft()
        for s in back.get(q, ()):
            if s not in acc:
                acc.add(s)
                queue.append(s)
    return Nfa(
        a.states,
        a.initial,
        acc,
        ((s, f, d) for s, f, d in a.transitions() if f != pad),
        a.alphabet - {pad},
    )

