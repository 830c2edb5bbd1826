"""Brute-force universes and random instances shared by the test modules."""

import itertools
import random

from hyperfa.core import PAD, WILD, hat_alphabet, zip_words
from hyperfa.nfa import Nfa
from hyperfa.nfh import EXISTS, FORALL, Nfh, oracle_accepts

SIGMA = ("a", "b")


def all_words(sigma=SIGMA, max_len=2):
    out = []
    for n in range(max_len + 1):
        out += list(itertools.product(sigma, repeat=n))
    return out


def hyperwords(sigma=SIGMA, max_len=2, max_size=3):
    """Every nonempty set of at most ``max_size`` words of length <= ``max_len``."""
    words = all_words(sigma, max_len)
    out = []
    for r in range(1, max_size + 1):
        out += [frozenset(c) for c in itertools.combinations(words, r)]
    return out


SHAPES = {
    "exists": lambda k: [EXISTS] * k,
    "forall": lambda k: [FORALL] * k,
    "exists-forall": lambda k: [EXISTS] * (k - 1) + [FORALL],
    "forall-exists": lambda k: [FORALL] * (k - 1) + [EXISTS],
}


def make_quant(variables, qs, rng=None):
    order = list(variables)
    if rng is not None:
        rng.shuffle(order)
    return tuple(zip(qs, order))


def random_nfa(rng, letters, n_states=3, density=0.3, accept_p=0.5):
    trans = [
        (s, f, d)
        for s in range(n_states)
        for f in letters
        for d in range(n_states)
        if rng.random() < density / n_states * 2
    ]
    accepting = [q for q in range(n_states) if rng.random() < accept_p]
    return Nfa(range(n_states), [0], accepting, trans)


def random_nfh(rng, k, qs, sigma=SIGMA, n_states=3, density=0.3, wildcards=False,
               shuffle_quant=False):
    variables = tuple("xyzw"[:k])
    letters = hat_alphabet(sigma, k)
    if wildcards:
        letters = list(itertools.product(tuple(sigma) + (PAD, WILD), repeat=k))
    nfa = random_nfa(rng, letters, rng.randint(1, n_states), density)
    quant = make_quant(variables, qs, rng if shuffle_quant else None)
    return Nfh(sigma, variables, nfa, quant, wildcards)


def random_instances(seed, count, kinds, ks=(1, 2), **kw):
    """``count`` random NFH cycling through the given fragment names."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        kind = kinds[i % len(kinds)]
        k = rng.choice([k for k in ks if k >= (2 if "-" in kind else 1)] or [2])
        out.append(random_nfh(rng, k, SHAPES[kind](k), **kw))
    return out


def sweep_accepted(a, universe):
    return [s for s in universe if oracle_accepts(a, s)]


def diag(u, k):
    return zip_words([u] * k)
