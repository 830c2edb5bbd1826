"""Finite-word hyperautomata (NFH) and hyperregular expressions (HRE)."""

from .canonical import (
    canonical_form,
    equivalent_alternation_free,
    permutation_complete,
    sequence_complete,
)
from .closure import complement, intersection, union
from .core import (
    PAD,
    WILD,
    apply_sequence,
    hyperword,
    is_legal,
    letter_intersect,
    normalize,
    unzip,
    zip_assignment,
    zip_words,
)
from .emptiness import (
    AssignmentTree,
    Verdict,
    bounded_nonempty,
    check_nonempty,
    nonempty_exists,
    nonempty_exists_forall,
    nonempty_forall,
    semi_nonempty_forall_exists,
    universality,
)
from .errors import (
    AlphabetMismatchError,
    DeadlineExceeded,
    DomainError,
    FragmentError,
    HyperError,
    IllegalWordError,
    ParseError,
)
from .hre import Hre, compile_hre, compile_text, format_hre, parse_hre
from .membership import containment, finite_membership, regular_membership
from .nfa import Nfa
from .nfh import (
    EXISTS,
    FORALL,
    Fragment,
    FragmentKind,
    Nfh,
    Quantifier,
    classify,
    expand_wildcards,
    make_nfh,
    oracle_accepts,
)

__version__ = "0.1.0"
