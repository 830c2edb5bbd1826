import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperfa.core import (
    PAD,
    WILD,
    apply_sequence,
    check_alphabet,
    compose,
    gamma_maps,
    hyperword,
    is_legal,
    letter_intersect,
    normalize,
    permutation_maps,
    sequence_maps,
    unzip,
    unzip_words,
    words_of,
    zip_assignment,
    zip_words,
)
from hyperfa.errors import DomainError, IllegalWordError

from support import all_words


def test_zip_running_example():
    w = zip_assignment("xy", {"x": "aa", "y": "abb"})
    assert w == (("a", "a"), ("a", "b"), (PAD, "b"))


def test_zip_all_empty():
    assert zip_assignment("x", {"x": ""}) == ()


def test_zip_hand_transcription():
    assert zip_assignment("xy", {"x": "ab", "y": "b"}) == (("a", "b"), ("b", PAD))


def test_zip_domain_mismatch():
    with pytest.raises(DomainError):
        zip_assignment("xy", {"x": "a"})
    with pytest.raises(DomainError):
        zip_assignment("x", {"x": "a", "z": "b"})


def test_unzip_running_example():
    w = (("a", "a"), ("a", "b"), (PAD, "b"))
    assert unzip(w, "xy") == {"x": ("a", "a"), "y": ("a", "b", "b")}


def test_unzip_empty():
    assert unzip((), "xy") == {"x": (), "y": ()}


def test_unzip_illegal_names_position_and_variable():
    with pytest.raises(IllegalWordError) as info:
        unzip(((PAD, "a"), ("a", "a")), "xy")
    assert info.value.position == 1
    assert info.value.variable == "x"


@settings(max_examples=200)
@given(st.lists(st.text("ab", max_size=4), min_size=1, max_size=3))
def test_unzip_zip_roundtrip(words):
    variables = "xyz"[: len(words)]
    m = {x: tuple(w) for x, w in zip(variables, words)}
    assert unzip(zip_assignment(variables, m), variables) == m


def test_zip_always_legal_exhaustive():
    words = all_words(max_len=3)
    for k in (1, 2):
        for ws in itertools.product(words, repeat=k):
            w = zip_words(ws)
            assert is_legal(w)
            assert unzip_words(w, k) == ws


def test_legality_examples():
    assert is_legal((("a",), (PAD,)))
    assert not is_legal(((PAD,), ("a",)))
    assert not is_legal((("a", PAD), ("a", "a")))


def test_is_legal_iff_unzip_succeeds_exhaustive():
    letters = list(itertools.product(("a", "b", PAD), repeat=2))
    for n in range(5):
        for w in itertools.product(letters, repeat=n):
            try:
                unzip_words(w, 2)
                ok = True
            except IllegalWordError:
                ok = False
            assert ok == is_legal(w)
            if ok:
                assert zip_words(unzip_words(w, 2)) == normalize(w)


def test_apply_sequence_examples():
    w = zip_words(["a", "b"])
    assert apply_sequence(w, (0, 1)) == w
    assert apply_sequence(w, (0, 0)) == zip_words(["a", "a"])
    assert len(list(sequence_maps(2))) == 4
    assert len(list(permutation_maps(2))) == 2


def test_apply_sequence_composition():
    words = all_words(max_len=2)
    for ws in itertools.product(words, repeat=3):
        w = zip_words(ws)
        for zeta in sequence_maps(3):
            for xi in sequence_maps(3):
                lhs = apply_sequence(apply_sequence(w, zeta), xi)
                assert lhs == apply_sequence(w, compose(zeta, xi))


def test_sequence_words_are_subset():
    w = zip_words(["ab", "b", ""])
    for zeta in sequence_maps(3):
        assert words_of(apply_sequence(w, zeta), 3) <= words_of(w, 3)


def test_gamma_maps():
    assert list(gamma_maps(3, 2)) == [(0, 1, 0), (0, 1, 1)]
    assert len(list(gamma_maps(4, 2))) == 2 ** 2


def test_letter_intersect_examples():
    assert letter_intersect(("a", WILD), (WILD, "b")) == ("a", "b")
    assert letter_intersect(("a",), ("a",)) == ("a",)
    assert letter_intersect(("a",), ("b",)) is None


def test_letter_intersect_algebra():
    slots = ("a", "b", PAD, WILD)
    letters = list(itertools.product(slots, repeat=2))

    def meet(f, g):
        if f is None or g is None:
            return None
        return letter_intersect(f, g)

    for f in letters:
        assert meet(f, f) == f
        for g in letters:
            assert meet(f, g) == meet(g, f)
            for h in letters:
                assert meet(meet(f, g), h) == meet(f, meet(g, h))


def test_hyperword_and_alphabet_guards():
    assert hyperword("ab", "ab", "") == frozenset({("a", "b"), ()})
    with pytest.raises(DomainError):
        hyperword()
    with pytest.raises(DomainError):
        check_alphabet(["a", PAD])
    with pytest.raises(DomainError):
        check_alphabet([])
