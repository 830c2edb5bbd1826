"""Acceptance criteria, one test per criterion.

Each test prints ``criterion N: PASS|FAIL - title`` and the lines are
repeated in the terminal summary.
"""

import itertools
import random
import time

from hyperfa.canonical import equivalent_alternation_free
from hyperfa.closure import complement, intersection, union
from hyperfa.core import PAD
from hyperfa.emptiness import (
    AssignmentTree,
    bounded_nonempty,
    check_nonempty,
    nonempty_exists,
    nonempty_exists_forall,
    nonempty_forall,
    semi_nonempty_forall_exists,
)
from hyperfa.fixtures import DC, OD, TSNI, a1, policy, r1
from hyperfa.hre import compile_text
from hyperfa.membership import containment, finite_membership, regular_membership
from hyperfa.nfa import Nfa, determinize, minimize, product
from hyperfa.nfh import (
    EXISTS,
    FORALL,
    Nfh,
    expand_wildcards,
    legal_words_nfa,
    make_nfh,
    oracle_accepts,
)

from support import SHAPES, all_words, hyperwords, random_instances, random_nfa, random_nfh
from test_fixtures import CASES

KINDS = list(SHAPES)


def test_closure_constructions_match_oracle(criterion):
    with criterion(1, "closure constructions agree with the oracle"):
        start = time.monotonic()
        universe = hyperwords(max_len=2, max_size=3)
        pool = random_instances(1001, 200, KINDS, ks=(1, 2), n_states=3)
        assert {tuple(q for q, _ in a.quant) for a in pool} >= {
            tuple(SHAPES[k](2)) for k in KINDS
        }
        partners = pool[1:] + pool[:1]
        for a, b in zip(pool, partners):
            c, u, i = complement(a), union(a, b), intersection(a, b)
            for s in universe:
                x, y = oracle_accepts(a, s), oracle_accepts(b, s)
                assert oracle_accepts(c, s) == (not x)
                assert oracle_accepts(u, s) == (x or y)
                assert oracle_accepts(i, s) == (x and y)
        assert time.monotonic() - start < 120


def test_exists_forall_equals_bounded(criterion):
    with criterion(2, "exists-forall nonemptiness equals bounded search"):
        rng = random.Random(2002)
        shapes = [(2, 1), (3, 1), (3, 2)]
        nonempty = 0
        for i in range(100):
            k, m = shapes[i % len(shapes)]
            qs = [EXISTS] * m + [FORALL] * (k - m)
            a = random_nfh(rng, k, qs, n_states=3, density=0.5, shuffle_quant=True)
            v = nonempty_exists_forall(a)
            assert v.status == bounded_nonempty(a, m).status
            if v.nonempty:
                nonempty += 1
                assert len(v.witness) <= m and oracle_accepts(a, v.witness)
        assert 0 < nonempty < 100


def state_bound(a):
    """Reachable states of the underlying automaton paired with legality tracking."""
    lw = legal_words_nfa(a.alphabet, a.k)
    return len(product(a.nfa, lw, lambda f, g: f if f == g else None).reachable().states)


def test_alternation_free_nonemptiness(criterion):
    with criterion(3, "alternation-free nonemptiness matches exhaustive search"):
        rng = random.Random(3003)
        empties = 0
        for i in range(100):
            kind = ("exists", "forall")[i % 2]
            k = 1 + (i // 2) % 2
            a = random_nfh(rng, k, SHAPES[kind](k), n_states=3 if k == 1 else 2, density=0.35)
            n = state_bound(a)
            v = nonempty_exists(a) if kind == "exists" else nonempty_forall(a)
            found = next(
                (s for s in hyperwords(max_len=n, max_size=2) if oracle_accepts(a, s)), None
            )
            assert v.nonempty == (found is not None)
            if v.nonempty:
                assert oracle_accepts(a, v.witness)
            else:
                empties += 1
        assert 0 < empties < 100


def test_r1_end_to_end(criterion):
    with criterion(4, "r1 end to end"):
        a = r1()
        for s in hyperwords(("a",), max_len=3, max_size=4):
            assert not finite_membership(a, s)
        assert regular_membership(Nfa([0], [0], [0], [(0, "a", 0)]), a)
        assert not regular_membership(Nfa([0, 1], [0], [0, 1], [(0, "a", 1)]), a)
        v = semi_nonempty_forall_exists(a)
        assert v.nonempty and v.iterations <= 1


def test_security_policies(criterion):
    with criterion(5, "security policy fixtures"):
        for name in ("od", "ni", "dc"):
            a = policy(name)
            cases = CASES[name]
            assert sum(e for _, e in cases) >= 3 and sum(not e for _, e in cases) >= 3
            for s, expected in cases:
                assert oracle_accepts(a, s) == expected
                assert finite_membership(a, s) == expected


def trie(words):
    states, trans, accepting = {(): 0}, [], []
    for w in words:
        for j in range(len(w)):
            if w[: j + 1] not in states:
                states[w[: j + 1]] = len(states)
                trans.append((states[w[:j]], w[j], states[w[: j + 1]]))
        accepting.append(states[w])
    return Nfa(states.values(), [0], accepting, trans)


def test_regular_vs_finite_membership(criterion):
    with criterion(6, "regular membership agrees with finite membership"):
        start = time.monotonic()
        words = all_words(max_len=2)
        languages = [c for r in range(1, len(words) + 1) for c in itertools.combinations(words, r)]
        assert len(languages) == 2 ** len(words) - 1
        pool = random_instances(6006, 20, KINDS, ks=(1, 2), n_states=2, density=0.5)
        for a in pool:
            for ws in languages:
                assert regular_membership(trie(ws), a) == finite_membership(a, ws)
        assert time.monotonic() - start < 300


def nfh(sigma, quant, text_or_nfa, variables=None):
    if isinstance(text_or_nfa, str):
        toks = quant.split()
        prefix = " ".join(f"{q} {x}." for q, x in zip(toks[::2], toks[1::2]))
        return compile_text(f"alphabet: {' '.join(sigma)}\n{prefix} {text_or_nfa}")
    return Nfh(tuple(sigma), variables, text_or_nfa, tuple(quant))


def lift(n, q):
    trans = [(s, (f,), d) for s, f, d in n.transitions()]
    return Nfh(("a", "b"), ("x",), Nfa(n.states, n.initial, n.accepting, trans), ((q, "x"),))


def equivalence_pairs():
    ab = ("a", "b")
    rng = random.Random(77)
    a = a1()
    redundant = make_nfh(
        "ab", "xy", "forall x forall y", ["q0", "q1", "q2", "q3"], ["q0"], ["q0", "q1", "q2"],
        list(a.nfa.transitions()) + [("q0", ("b", "a"), "q3")],
    )
    r = random_nfa(rng, ab, 3, 0.5)
    s = random_nfa(rng, ab, 3, 0.5)
    aa = "forall x forall y"
    ee = "exists x exists y"
    pairs = [
        # equal hyperlanguages
        (ab, a, a, True),
        (ab, a, redundant, True),
        (ab, nfh(ab, aa, "({a_x,a_y} | {b_x,b_y})*"),
         nfh(ab, aa, "({a_x,a_y} | {b_x,b_y})* {#_x,b_y}*"), True),
        (ab, nfh(ab, ee, "{a_x,b_y}"), nfh(ab, ee, "{b_x,a_y}"), True),
        # a partner of the same length always exists: the word itself
        (ab, nfh(ab, ee, "{a_x,a_y}+"), nfh(ab, ee, "({a_x,a_y} | {a_x,b_y})+"), True),
        (ab, lift(r, FORALL), lift(minimize(r, ab), FORALL), True),
        (ab, lift(s, EXISTS), lift(determinize(s, ab), EXISTS), True),
        (ab, nfh(ab, aa, "{a_x,a_y}*"),
         nfh(ab, aa, "({a_x,a_y}{a_x,a_y})* | {a_x,a_y}({a_x,a_y}{a_x,a_y})*"), True),
        (ab, nfh(ab, ee, "({a_x,a_y} | {b_x,b_y})+"),
         nfh(ab, ee, "({a_x,a_y} | {b_x,b_y})+ {#_x,a_y}*"), True),
        (ab, nfh(ab, ee, "{a_x,b_y} {a_x,#_y}"), nfh(ab, ee, "{b_x,a_y} {#_x,a_y}"), True),
        # different hyperlanguages
        (ab, nfh(ab, "forall x", "{a_x}*"), nfh(ab, "forall x", "({a_x} | {b_x})*"), False),
        (ab, nfh(ab, "exists x", "{a_x}+"), nfh(ab, "exists x", "{b_x}+"), False),
        (ab, a, nfh(ab, aa, "({a_x,a_y} | {b_x,b_y})*"), False),
        (ab, nfh(ab, ee, "{a_x,b_y}"), nfh(ab, ee, "{a_x,a_y}"), False),
        (ab, nfh(ab, aa, "({a_x,a_y} | {b_x,b_y})*"), nfh(ab, aa, "({a_x,a_y} | {b_x,b_y})+"),
         False),
        (ab, nfh(ab, ee, "{a_x,b_y}"), nfh(ab, ee, "{a_x,b_y} {#_x,b_y}"), False),
        (ab, nfh(ab, "forall x", "({a_x}{b_x})*"), nfh(ab, "forall x", "({a_x}{b_x})* {a_x}"),
         False),
        (ab, nfh(ab, ee, "{a_x,a_y} {b_x,b_y}*"), nfh(ab, ee, "{a_x,#_y} {b_x,#_y}*"), False),
        (("li", "pw", "lo"), compile_text(DC), compile_text(DC.replace("{lo_x, lo_y}+", "{lo_x, lo_y}*")),
         False),
        (("h", "l"), compile_text(OD), compile_text(TSNI), False),
    ]
    return pairs


def test_canonical_equivalence(criterion):
    with criterion(7, "canonical equivalence of alternation-free pairs"):
        pairs = equivalence_pairs()
        assert len(pairs) == 20
        for sigma, a, b, expected in pairs:
            max_len = 3 if len(sigma) == 3 else 2
            universe = hyperwords(sigma, max_len=max_len, max_size=3)
            agree = all(oracle_accepts(a, s) == oracle_accepts(b, s) for s in universe)
            assert agree == expected
            assert equivalent_alternation_free(a, b) == expected


def test_wildcard_soundness(criterion):
    with criterion(8, "wildcard expansion is sound"):
        rng = random.Random(8008)
        universe = hyperwords(max_len=2, max_size=3)
        for i in range(50):
            kind = KINDS[i % len(KINDS)]
            k = 2 if "-" in kind else 1 + i % 2
            a = random_nfh(rng, k, SHAPES[kind](k), n_states=3, density=0.25, wildcards=True)
            e, es = expand_wildcards(a), expand_wildcards(a, strict=True)
            for s in universe:
                assert oracle_accepts(a, s) == oracle_accepts(e, s)
                assert oracle_accepts(a, s, strict_wildcards=True) == oracle_accepts(es, s)
            if kind in ("exists", "forall"):
                run = nonempty_exists if kind == "exists" else nonempty_forall
                assert run(a).status == run(e).status
                assert run(a, strict_wildcards=True).status == run(es).status
                v = run(a)
                if v.nonempty:
                    assert oracle_accepts(a, v.witness)


def brute_labelings(qs, m):
    """Walk the tree level by level and count label choices of ∃ children."""
    nodes, free = [()], []
    for q in qs:
        nodes = [p + (c,) for p in nodes for c in (range(1, m + 1) if q is FORALL else (1,))]
        if q is EXISTS:
            free += nodes
    return len(list(itertools.product(range(1, m + 1), repeat=len(free))))


def test_assignment_tree_shape(criterion):
    with criterion(9, "assignment tree shape and labeling count"):
        quant = ((FORALL, "x1"), (EXISTS, "x2"))
        t = AssignmentTree(quant, 3)
        assert t.leaves() == [(1, 1), (2, 1), (3, 1)]
        count = sum(1 for _ in t.labelings())
        assert count == t.count_labelings() == brute_labelings([FORALL, EXISTS], 3) == 3 ** 3


def test_undecidability_guardrails(criterion):
    with criterion(10, "undecidable shapes return Unknown"):
        rng = random.Random(1010)
        for _ in range(10):
            a = random_nfh(rng, 3, [FORALL, EXISTS, EXISTS], density=0.5, shuffle_quant=True)
            v = check_nonempty(a)
            assert v.unknown and v.witness is None
        fe = random_nfh(rng, 2, [FORALL, EXISTS], density=0.5)
        ef = random_nfh(rng, 2, [EXISTS, FORALL], density=0.5)
        eae = random_nfh(rng, 3, [EXISTS, FORALL, EXISTS], density=0.5)
        for x, y in [(fe, ef), (fe, fe), (eae, ef), (ef, eae), (eae, eae)]:
            assert containment(x, y) is None
        assert PAD == "#"
