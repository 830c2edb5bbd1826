"""A walk through the expression r1 over the alphabet {a}.

r1 says: for every word x there is a word y that is strictly longer.  No
finite set of words can satisfy that, but the infinite set a* does.
"""

from hyperfa import (
    Nfa,
    bounded_nonempty,
    check_nonempty,
    finite_membership,
    regular_membership,
    universality,
)
from hyperfa.fixtures import R1, r1
from hyperfa.io import format_nfh


def main():
    a = r1()
    print("expression:", R1)
    print(format_nfh(a))

    finite = [{("a",) * n for n in sizes} for sizes in ([0], [0, 1], [1, 2, 3])]
    for s in finite:
        words = sorted("".join(w) or "<eps>" for w in s)
        print(f"finite hyperword {words}: {finite_membership(a, s)}")

    star = Nfa([0], [0], [0], [(0, "a", 0)])
    print("hyperword a*:", regular_membership(star, a))

    v = check_nonempty(a)
    print(v.describe())
    print("bounded search with 3 words:", bounded_nonempty(a, 3).describe())
    print("universal:", universality(a))


if __name__ == "__main__":
    main()
