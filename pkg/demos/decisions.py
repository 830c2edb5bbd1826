"""Closure, containment and equivalence on two small automata.

``agree`` accepts the sets in which any two words share their common prefix
and the longer one continues with b.  ``top`` accepts every set.
"""

from hyperfa import (
    complement,
    containment,
    equivalent_alternation_free,
    intersection,
    make_nfh,
    oracle_accepts,
    union,
)
from hyperfa.canonical import canonical_form
from hyperfa.fixtures import a1
from hyperfa.io import format_nfh


def main():
    agree = a1()
    top = make_nfh("ab", "z", "forall z", [0], [0], [0], [(0, "a", 0), (0, "b", 0)])
    s, t = {tuple("ab"), tuple("abb")}, {tuple("ab"), tuple("ba")}
    for name, c in [("complement", complement(agree)), ("union", union(agree, top)),
                    ("intersection", intersection(agree, top))]:
        prefix = " ".join(f"{q.value} {x}" for q, x in c.quant)
        print(f"{name}: {prefix}, {len(c.nfa.states)} states, "
              f"{{ab, abb}} -> {oracle_accepts(c, s)}, {{ab, ba}} -> {oracle_accepts(c, t)}")

    print("agree within top:", containment(agree, top))
    print("top within agree:", containment(top, agree))
    print("agree equivalent to itself:", equivalent_alternation_free(agree, agree))
    print("canonical form of agree:")
    print(format_nfh(canonical_form(agree)))


if __name__ == "__main__":
    main()
