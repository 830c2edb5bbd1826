"""Named automata and expressions used by the tests, demos and docs.

The information-flow policies are written over small explicit alphabets.
A slot of the form ``!l`` ranges over every symbol other than ``l``, and
"any symbol" is spelled out as an alternation over all pairs of symbols.
"""

from __future__ import annotations

import itertools

from .hre import compile_text
from .nfh import Nfh, make_nfh

R1 = "forall x. exists y. ({a_x, a_y}* {#_x, a_y}+)"


def any_pair(sigma) -> str:
    """Alternation of every letter ``{s_x, t_y}`` with ``s, t`` in ``sigma``."""
    atoms = [f"{{{s}_x, {t}_y}}" for s, t in itertools.product(sigma, repeat=2)]
    return "(" + " | ".join(atoms) + ")"


OD_SIGMA = ("h", "l")
OD = f"""alphabet: {' '.join(OD_SIGMA)}
forall x. forall y. (
    {{l_x, l_y}}+
  | {{!l_x, !l_y}} {any_pair(OD_SIGMA)}*
  | {{l_x, !l_y}} {any_pair(OD_SIGMA)}*
  | {{!l_x, l_y}} {any_pair(OD_SIGMA)}*
)
"""

NI = """alphabet: l lam h
forall x. exists y. ({l_x, lam_y} | {lam_x, lam_y})*
"""

DC = """alphabet: li pw lo
forall x. forall y. {li_x, li_y} {pw_x, pw_y} {lo_x, lo_y}+
"""

GNI = """alphabet: h l hl nl hn nn
forall x. forall y. exists z. (
    {h_x, l_y, hl_z}
  | {!h_x, l_y, nl_z}
  | {h_x, !l_y, hn_z}
  | {!h_x, !l_y, nn_z}
)*
"""

TSNI = f"""alphabet: {' '.join(OD_SIGMA)}
forall x. forall y. (
    {{l_x, l_y}} {any_pair(OD_SIGMA)}* {{l_x, l_y}}
  | {{!l_x, !l_y}} {any_pair(OD_SIGMA)}*
  | {{l_x, !l_y}} {any_pair(OD_SIGMA)}*
  | {{!l_x, l_y}} {any_pair(OD_SIGMA)}*
)
"""

POLICIES = {"od": OD, "ni": NI, "dc": DC, "gni": GNI, "tsni": TSNI}


def r1() -> Nfh:
    return compile_text(R1)


def policy(name: str) -> Nfh:
    return compile_text(POLICIES[name])


def a1() -> Nfh:
    """∀x∀y over {a, b}: the two words agree on their common prefix, then the
    longer one continues with ``b`` only."""
    return make_nfh(
        "ab", "xy", "forall x forall y",
        ["q0", "q1", "q2"], ["q0"], ["q0", "q1", "q2"],
        [
            ("q0", "aa", "q0"), ("q0", "bb", "q0"),
            ("q0", "#b", "q1"), ("q1", "#b", "q1"),
            ("q0", "b#", "q2"), ("q2", "b#", "q2"),
        ],
    )
