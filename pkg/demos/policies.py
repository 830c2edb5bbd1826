"""Information-flow policies as hyperregular expressions.

Each trace is a word; a system is a set of traces.  The policies below are
checked against a few hand-written systems.
"""

from hyperfa import finite_membership
from hyperfa.fixtures import POLICIES, policy

SYSTEMS = {
    "od": [["l l", "h l"], ["l l", "l h"]],
    "ni": [["l lam", "lam lam"], ["l l", "lam"]],
    "dc": [["li pw lo lo"], ["li pw lo", "li pw lo lo"]],
    "gni": [["h", "l", "hl", "nl", "hn", "nn"], ["h", "hn"]],
}


def main():
    for name, systems in SYSTEMS.items():
        a = policy(name)
        print(f"--- {name}")
        print(POLICIES[name].strip())
        for traces in systems:
            s = {tuple(t.split()) for t in traces}
            verdict = "satisfied" if finite_membership(a, s) else "violated"
            print(f"  {traces}: {verdict}")


if __name__ == "__main__":
    main()
