import itertools

import pytest

from hyperfa.canonical import (
    canonical_form,
    complete,
    equivalent_alternation_free,
    permutation_complete,
    sequence_complete,
)
from hyperfa.core import apply_sequence, is_legal, permutation_maps, sequence_maps, zip_words
from hyperfa.errors import AlphabetMismatchError, DomainError, FragmentError
from hyperfa.fixtures import a1, r1
from hyperfa.nfa import equivalent
from hyperfa.nfh import make_nfh, oracle_accepts

from support import all_words, hyperwords, random_instances

UNIVERSE = hyperwords(max_len=2, max_size=3)


def legal_words(k, max_len=3):
    return [zip_words(ws) for ws in itertools.product(all_words(max_len=max_len), repeat=k)]


def test_sequence_complete_property_and_preservation():
    pool = [a1()] + random_instances(60, 10, ["forall"], density=0.6)
    for a in pool:
        c = sequence_complete(a)
        for w in legal_words(a.k, 2 if a.k == 2 else 3):
            if c.nfa.accepts(w):
                for zeta in sequence_maps(a.k):
                    assert c.nfa.accepts(apply_sequence(w, zeta))
        for s in UNIVERSE:
            assert oracle_accepts(c, s) == oracle_accepts(a, s)


def test_sequence_complete_a1_accepts_all_sequences_of_accepted_pair():
    c = sequence_complete(a1())
    w = zip_words(["ab", "abb"])
    assert c.nfa.accepts(w)
    assert c.nfa.accepts(zip_words(["ab", "ab"]))
    assert c.nfa.accepts(zip_words(["abb", "ab"]))


def test_sequence_complete_idempotent():
    c = sequence_complete(a1())
    assert equivalent(sequence_complete(c).nfa, c.nfa)


def test_permutation_complete_property_and_preservation():
    pool = random_instances(61, 12, ["exists"], density=0.6)
    for a in pool:
        c = permutation_complete(a)
        for w in legal_words(a.k, 2 if a.k == 2 else 3):
            if c.nfa.accepts(w):
                for xi in permutation_maps(a.k):
                    assert c.nfa.accepts(apply_sequence(w, xi))
        for s in UNIVERSE:
            assert oracle_accepts(c, s) == oracle_accepts(a, s)


def test_permutation_complete_swaps_pair():
    a = make_nfh("ab", "xy", "exists x exists y", [0, 1], [0], [1], [(0, "ab", 1)])
    c = permutation_complete(a)
    assert c.nfa.accepts((("b", "a"),))
    assert c.nfa.accepts((("a", "b"),))


def test_permutation_complete_single_variable():
    a = make_nfh("ab", "x", "exists x", [0, 1], [0], [1], [(0, "a", 1), (1, "b", 1)])
    assert equivalent(permutation_complete(a).nfa, a.nfa)


def test_completed_automata_accept_only_legal_words():
    for a in random_instances(62, 8, ["exists", "forall"], ks=(2,), density=0.7):
        c = complete(a)
        letters = list(itertools.product(("a", "b", "#"), repeat=2))
        for n in range(4):
            for w in itertools.product(letters, repeat=n):
                if c.nfa.accepts(w):
                    assert is_legal(w) and (not w or w[-1] != ("#", "#"))


def test_canonical_form_same_for_equivalent_inputs():
    a = a1()
    # the redundant transposed transitions do not change the hyperlanguage
    trans = [(s, f, d) for s, f, d in a.nfa.transitions()] + [("q0", ("b", "a"), "q3")]
    b = make_nfh("ab", "xy", "forall x forall y", ["q0", "q1", "q2", "q3"], ["q0"],
                 ["q0", "q1", "q2"], trans)
    ca, cb = canonical_form(a), canonical_form(b)
    assert len(ca.nfa.states) == len(cb.nfa.states)
    assert equivalent(ca.nfa, cb.nfa)


def test_equivalence_examples():
    a = a1()
    assert equivalent_alternation_free(a, a)
    equal = make_nfh("ab", "xy", "forall x forall y", [0], [0], [0], [(0, "aa", 0), (0, "bb", 0)])
    shorter = make_nfh("ab", "xy", "forall x forall y", [0, 1], [0], [0, 1],
                       [(0, "aa", 0), (0, "bb", 0), (0, "#a", 1), (0, "#b", 1),
                        (1, "#a", 1), (1, "#b", 1)])
    # under two universal quantifiers each pair is also read in swapped order,
    # so "x shorter" never fires and both accept exactly the singletons
    got = equivalent_alternation_free(equal, shorter)
    sweep = all(oracle_accepts(equal, s) == oracle_accepts(shorter, s) for s in UNIVERSE)
    assert got and sweep
    only_a = make_nfh("ab", "xy", "forall x forall y", [0], [0], [0], [(0, "aa", 0)])
    assert not equivalent_alternation_free(equal, only_a)
    assert not oracle_accepts(only_a, {("b",)})


def test_equivalence_errors():
    with pytest.raises(FragmentError):
        equivalent_alternation_free(a1(), make_nfh("ab", "xy", "forall x exists y", [0], [0], [0], []))
    e = make_nfh("ab", "x", "exists x", [0], [0], [0], [])
    f = make_nfh("ab", "x", "forall x", [0], [0], [0], [])
    with pytest.raises(FragmentError):
        equivalent_alternation_free(e, f)
    with pytest.raises(DomainError):
        equivalent_alternation_free(e, make_nfh("ab", "xy", "exists x exists y", [0], [0], [0], []))
    with pytest.raises(AlphabetMismatchError):
        equivalent_alternation_free(e, make_nfh("a", "x", "exists x", [0], [0], [0], []))
    with pytest.raises(FragmentError):
        complete(r1())


def test_raw_mode_can_differ():
    # an accepting illegal word is invisible to the hyperlanguage
    a = make_nfh("a", "xy", "exists x exists y", [0, 1], [0], [1], [(0, "aa", 1)])
    b = make_nfh("a", "xy", "exists x exists y", [0, 1, 2], [0], [1, 2],
                 [(0, "aa", 1), (0, "#a", 2), (2, "aa", 2)])
    assert equivalent_alternation_free(a, b)
    assert not equivalent_alternation_free(a, b, raw=True)
