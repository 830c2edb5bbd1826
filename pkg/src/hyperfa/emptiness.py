"""Nonemptiness procedures for the decidable fragments of NFH.

Every routine returns a :class:`Verdict`.  Finite witnesses are hyperwords
(frozensets of symbol tuples) that the NFH accepts.  The ∀∃ semi-algorithm
may instead report its witness as an NFA over the base alphabet, because the
hyperword it finds can be infinite.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .core import PAD, WILD, is_padding, letter_matches, unzip_words
from .errors import DeadlineExceeded, DomainError, FragmentError
from .nfa import (
    Nfa,
    check_deadline,
    find_word,
    inclusion_counterexample,
    intersect_nfa,
    is_empty,
    pad_suffix,
    project,
    strip_pad_suffix,
    product,
)
from .nfh import (
    EXISTS,
    FORALL,
    FragmentKind,
    Nfh,
    classify,
    expand_letter,
    expand_wildcards,
    legal_words_nfa,
    require_fragment,
)

NONEMPTY = "NONEMPTY"
EMPTY = "EMPTY"
UNKNOWN = "UNKNOWN"

DEFAULT_MAX_ITERS = 64
UNDECIDABLE_REASON = "undecidable fragment, no semi-algorithm for this shape"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: frozenset | None = None
    witness_nfa: Nfa | None = None
    iterations: int | None = None
    method: str = ""
    reason: str = ""

    @property
    def nonempty(self) -> bool:
        return self.status == NONEMPTY

    @property
    def empty(self) -> bool:
        return self.status == EMPTY

    @property
    def unknown(self) -> bool:
        return self.status == UNKNOWN

    def as_bool(self):
        """True for nonempty, False for empty, None when undecided."""
        return {NONEMPTY: True, EMPTY: False}.get(self.status)

    def describe(self) -> str:
        bits = [self.method] if self.method else []
        if self.iterations is not None:
            bits.append(f"iteration {self.iterations}")
        head = self.status + (f" ({', '.join(bits)})" if bits else "")
        if self.reason:
            head += f": {self.reason}"
        return head


def default_max_iters() -> int:
    value = os.environ.get("HYPERFA_MAX_ITERS")
    if value is None:
        return DEFAULT_MAX_ITERS
    try:
        return max(0, int(value))
    except ValueError:
        raise DomainError(f"HYPERFA_MAX_ITERS must be an integer, got {value!r}") from None


class _Stepper:
    """Cached successor sets of an underlying automaton on concrete letters."""

    def __init__(self, a: Nfh, strict: bool = False):
        self.nfa = a.nfa
        self.wild = a.wildcards
        self.strict = strict
        self.cache: dict = {}

    def __call__(self, states: frozenset, f) -> frozenset:
        key = (states, f)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        out = set()
        for q in states:
            row = self.nfa.delta.get(q, {})
            if self.wild:
                for pattern, ds in row.items():
                    if letter_matches(pattern, f, self.strict):
                        out |= ds
            else:
                ds = row.get(f)
                if ds:
                    out |= ds
        res = frozenset(out)
        self.cache[key] = res
        return res


def nonempty_exists(a: Nfh, strict_wildcards: bool = False, deadline=None) -> Verdict:
    """Search the underlying automaton for an accepted legal word assignment."""
    require_fragment(a, FragmentKind.EXISTS_ONLY)
    expand = None
    if a.wildcards:
        def expand(lab, mask):
            return expand_letter(lab, a.alphabet, strict_wildcards)
    w = find_word(a.nfa, legal=True, expand=expand, deadline=deadline)
    if w is None:
        return Verdict(EMPTY, method="legal-word search")
    return Verdict(NONEMPTY, frozenset(unzip_words(w, a.k)), method="legal-word search")


def nonempty_forall(a: Nfh, strict_wildcards: bool = False, deadline=None) -> Verdict:
    """Search for a diagonal run, which exists iff some singleton is accepted."""
    require_fragment(a, FragmentKind.FORALL_ONLY)
    k = a.k

    def expand(lab, mask):
        if mask:
            return ()
        fixed = {c for c in lab if c != WILD}
        if len(fixed) > 1 or PAD in fixed:
            return ()
        if fixed:
            return [(next(iter(fixed)),) * k]
        return [(s,) * k for s in a.alphabet]

    w = find_word(a.nfa, expand=expand, deadline=deadline)
    if w is None:
        return Verdict(EMPTY, method="diagonal search")
    u = tuple(f[0] for f in w)
    return Verdict(NONEMPTY, frozenset([u]), method="diagonal search")


def _tuple_letters(sigma, m: int, mask: int) -> list:
    """Legal, non-padding letters over ``m`` tracks given the padded-track mask."""
    slots = [(PAD,) if mask >> i & 1 else tuple(sigma) + (PAD,) for i in range(m)]
    return [t for t in itertools.product(*slots) if not is_padding(t)]


def _track_search(a: Nfh, components, m: int, strict: bool, deadline):
    """Breadth-first search over words of ``m`` tracks.

    ``components`` lists maps ``i -> track`` (one per variable of ``a``); each
    component runs the underlying automaton on the relabeled letters, and a
    component whose relabeled letter is all padding stays where it is.  The
    search succeeds when every component can accept.  Returns the track
    words or ``None``.
    """
    step = _Stepper(a, strict)
    comps = [tuple(c) for c in components]
    init = frozenset(a.nfa.initial)
    fin = a.nfa.accepting
    start = (0, tuple(init for _ in comps))
    parent = {start: None}
    queue = deque([start])
    letters_by_mask: dict = {}
    while queue:
        check_deadline(deadline)
        node = queue.popleft()
        mask, sets = node
        if all(not s.isdisjoint(fin) for s in sets):
            word = []
            while parent[node] is not None:
                node, t = parent[node]
                word.append(t)
            word.reverse()
            return unzip_words(tuple(word), m)
        letters = letters_by_mask.get(mask)
        if letters is None:
            letters = letters_by_mask[mask] = _tuple_letters(a.alphabet, m, mask)
        for t in letters:
            nsets = []
            for comp, s in zip(comps, sets):
                f = tuple(t[j] for j in comp)
                if is_padding(f):
                    nsets.append(s)
                    continue
                ns = step(s, f)
                if not ns:
                    break
                nsets.append(ns)
            else:
                nmask = mask
                for i, c in enumerate(t):
                    if c == PAD:
                        nmask |= 1 << i
                nxt = (nmask, tuple(nsets))
                if nxt not in parent:
                    parent[nxt] = (node, t)
                    queue.append(nxt)
    return None


def gamma_components(a: Nfh) -> list:
    """One relabeling per function from the ∀ variables into the ∃ tracks.

    Track ``j`` carries the word of the ``j``-th existential variable in
    prefix order; the ∀ variables range over every choice of track.
    """
    order = a.quant_indices()
    ex = [i for q, i in order if q is EXISTS]
    al = [i for q, i in order if q is FORALL]
    comps = []
    for tail in itertools.product(range(len(ex)), repeat=len(al)):
        comp = [None] * a.k
        for j, i in enumerate(ex):
            comp[i] = j
        for j, i in zip(tail, al):
            comp[i] = j
        comps.append(comp)
    return comps


def nonempty_exists_forall(a: Nfh, strict_wildcards: bool = False, deadline=None) -> Verdict:
    """Decide ∃*∀* nonemptiness through the product of the Γ relabelings."""
    frag = require_fragment(
        a, FragmentKind.EXISTS_FORALL, FragmentKind.EXISTS_ONLY, FragmentKind.FORALL_ONLY
    )
    if frag.exists_count == 0:
        return nonempty_forall(a, strict_wildcards, deadline)
    if frag.forall_count == 0:
        return nonempty_exists(a, strict_wildcards, deadline)
    words = _track_search(
        a, gamma_components(a), frag.exists_count, strict_wildcards, deadline
    )
    if words is None:
        return Verdict(EMPTY, method="gamma product")
    return Verdict(NONEMPTY, frozenset(words), method="gamma product")


class AssignmentTree:
    """The quantifier tree for a prefix and a hyperword size bound.

    Level ``d`` belongs to the ``d``-th quantifier.  A ∀ node has children
    ``1..m``; an ∃ node has a single child numbered 1.  Nodes are encoded by
    their root-to-node paths of child numbers.
    """

    def __init__(self, quant, m: int):
        if m < 1:
            raise DomainError("the hyperword size bound must be at least 1")
        self.quant = [q for q, _ in quant]
        self.m = m

    def nodes_at(self, depth: int) -> list:
        """Nodes at ``depth`` (the root is depth 0)."""
        level = [()]
        for q in self.quant[:depth]:
            children = range(1, self.m + 1) if q is FORALL else (1,)
            level = [p + (c,) for p in level for c in children]
        return level

    def leaves(self) -> list:
        return self.nodes_at(len(self.quant))

    def exists_nodes(self) -> list:
        """Nodes whose label is free: children created by an ∃ quantifier."""
        out = []
        for d, q in enumerate(self.quant):
            if q is EXISTS:
                out += self.nodes_at(d + 1)
        return out

    def count_labelings(self) -> int:
        return self.m ** len(self.exists_nodes())

    def labelings(self) -> Iterator[dict]:
        free = self.exists_nodes()
        for labels in itertools.product(range(1, self.m + 1), repeat=len(free)):
            yield dict(zip(free, labels))

    def leaf_labels(self, leaf, labeling) -> tuple:
        """Labels along the path to ``leaf``, one per quantifier in prefix order."""
        out = []
        for d, q in enumerate(self.quant):
            node = leaf[: d + 1]
            out.append(node[-1] if q is FORALL else labeling[node])
        return tuple(out)


def bounded_nonempty(a: Nfh, m: int, strict_wildcards: bool = False, deadline=None) -> Verdict:
    """Whether ``a`` accepts a hyperword of at most ``m`` words."""
    if not isinstance(m, int) or m < 1:
        raise DomainError("the hyperword size bound must be a positive integer")
    tree = AssignmentTree(a.quant, m)
    order = a.quant_indices()
    leaves = tree.leaves()
    for labeling in tree.labelings():
        comps = set()
        for leaf in leaves:
            labels = tree.leaf_labels(leaf, labeling)
            comp = [None] * a.k
            for (_, i), lab in zip(order, labels):
                comp[i] = lab - 1
            comps.add(tuple(comp))
        words = _track_search(a, sorted(comps), m, strict_wildcards, deadline)
        if words is not None:
            return Verdict(NONEMPTY, frozenset(words), method=f"bounded search, m={m}")
    return Verdict(EMPTY, method=f"bounded search, m={m}")


def _projection(hat: Nfa, i: int) -> Nfa:
    """Words of variable ``i`` in the accepted (legal, normalized) assignments."""
    return strip_pad_suffix(project(hat, lambda f: f[i])).trim()


def finite_language(nfa: Nfa, limit: int = 64):
    """The words of ``nfa`` if its language is finite and small, else ``None``."""
    t = nfa.trim()
    if not t.accepting:
        return []
    color: dict = {}

    def cyclic(q) -> bool:
        stack = [(q, iter(sorted({d for ds in t.delta.get(q, {}).values() for d in ds}, key=repr)))]
        color[q] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = 2
                stack.pop()
                continue
            c = color.get(nxt)
            if c == 1:
                return True
            if c is None:
                color[nxt] = 1
                succ = {d for ds in t.delta.get(nxt, {}).values() for d in ds}
                stack.append((nxt, iter(sorted(succ, key=repr))))
        return False

    for q in t.states:
        if q not in color and cyclic(q):
            return None
    out = []
    stack = [(q, ()) for q in t.initial]
    while stack:
        q, w = stack.pop()
        if q in t.accepting:
            out.append(w)
            if len(out) > limit:
                return None
        for f, ds in t.delta.get(q, {}).items():
            stack += [(d, w + (f,)) for d in ds]
    return sorted(set(out))


def semi_nonempty_forall_exists(
    a: Nfh, max_iters: int | None = None, deadline=None
) -> Verdict:
    """Refinement loop for ``forall x. exists y`` NFH.

    ``ax`` holds the words the ∀ variable can take and ``ay`` the words
    usable for the ∃ variable.  Every accepted hyperword is a subset of
    ``ax`` and pairs each member with a word of ``ay`` ∩ ``ax``.  If that
    intersection is empty the NFH is empty; if ``ay`` lies inside ``ax`` the
    hyperword ``ax`` itself is accepted.  Otherwise ``ay`` shrinks to
    ``ay ∩ ax``, the underlying automaton keeps only pairs whose ∃ word is
    in the new ``ay``, and ``ax`` is recomputed.
    """
    if a.k != 2 or [q for q, _ in a.quant] != [FORALL, EXISTS]:
        raise FragmentError("the semi-algorithm needs exactly the prefix forall x. exists y")
    max_iters = default_max_iters() if max_iters is None else max_iters
    a = expand_wildcards(a)
    ix = a.index(a.quant[0][1])
    iy = a.index(a.quant[1][1])
    hat = product(
        a.nfa, legal_words_nfa(a.alphabet, 2), lambda f, g: f if f == g else None
    ).trim()
    ax = _projection(hat, ix)
    ay = _projection(hat, iy)
    method = "semi-algorithm"
    for it in range(max_iters + 1):
        check_deadline(deadline)
        both = intersect_nfa(ay, ax)
        if is_empty(both):
            return Verdict(EMPTY, iterations=it, method=method)
        if inclusion_counterexample(ay, ax, deadline) is None:
            words = finite_language(ax)
            witness = frozenset(words) if words else None
            return Verdict(NONEMPTY, witness, ax, iterations=it, method=method)
        if it == max_iters:
            break
        ay = both.trim()
        padded = pad_suffix(ay)
        hat = product(
            hat, padded, lambda f, c: f if f[iy] == c else None
        ).trim()
        ax = _projection(hat, ix)
    return Verdict(
        UNKNOWN,
        iterations=max_iters,
        method=method,
        reason=f"no verdict within {max_iters} iterations",
    )


def check_nonempty(
    a: Nfh, max_iters: int | None = None, deadline=None, strict_wildcards: bool = False
) -> Verdict:
    """Dispatch to the procedure matching the fragment of ``a``."""
    frag = classify(a)
    try:
        if frag.kind is FragmentKind.EXISTS_ONLY:
            return nonempty_exists(a, strict_wildcards, deadline)
        if frag.kind is FragmentKind.FORALL_ONLY:
            return nonempty_forall(a, strict_wildcards, deadline)
        if frag.kind is FragmentKind.EXISTS_FORALL:
            return nonempty_exists_forall(a, strict_wildcards, deadline)
        if frag.kind is FragmentKind.FORALL_EXISTS and a.k == 2:
            if a.wildcards and strict_wildcards:
                raise DomainError("the semi-algorithm supports only the default wild cards")
            return semi_nonempty_forall_exists(a, max_iters, deadline)
    except DeadlineExceeded:
        return Verdict(UNKNOWN, reason="timeout")
    return Verdict(UNKNOWN, reason=UNDECIDABLE_REASON)


def universality(a: Nfh, deadline=None):
    """True/False when decidable, ``None`` otherwise.

    ``a`` is universal iff its complement is empty, which is decided for
    ∃*, ∀* and ∀*∃* prefixes (their complements are ∀*, ∃* and ∃*∀*).
    """
    from .closure import complement

    frag = classify(a)
    if frag.kind not in (
        FragmentKind.EXISTS_ONLY, FragmentKind.FORALL_ONLY, FragmentKind.FORALL_EXISTS
    ):
        return None
    try:
        c = complement(expand_wildcards(a), deadline)
        v = check_nonempty(c, deadline=deadline)
    except DeadlineExceeded:
        return None
    if v.unknown:
        return None
    return v.empty
