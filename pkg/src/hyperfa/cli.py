"""Command-line interface.

Exit codes: 0 nonempty/true, 1 empty/false, 2 unknown, 3 parse error,
4 fragment or dispatch error, 5 I/O error.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import canonical, closure, emptiness, membership
from .errors import (
    AlphabetMismatchError,
    DeadlineExceeded,
    DomainError,
    FragmentError,
    IllegalWordError,
    ParseError,
)
from .hre import compile_hre, parse_hre
from .io import (
    format_hyperword_inline,
    format_nfa,
    format_nfh,
    parse_automaton,
    parse_hyperword,
    parse_nfa,
)
from .nfh import Quantifier, expand_wildcards

EXIT_TRUE, EXIT_FALSE, EXIT_UNKNOWN = 0, 1, 2
EXIT_PARSE, EXIT_FRAGMENT, EXIT_IO = 3, 4, 5


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _deadline(args):
    timeout = getattr(args, "timeout", None)
    return None if timeout is None else time.monotonic() + timeout


def _load(path):
    return parse_automaton(_read(path))


def _print_verdict(v: emptiness.Verdict) -> int:
    print(v.describe())
    if v.witness is not None:
        print("witness: " + format_hyperword_inline(v.witness))
    elif v.witness_nfa is not None:
        print(f"witness language: an NFA with {len(v.witness_nfa.states)} states")
        sys.stdout.write(format_nfa(v.witness_nfa))
    return {emptiness.NONEMPTY: EXIT_TRUE, emptiness.EMPTY: EXIT_FALSE}.get(v.status, EXIT_UNKNOWN)


def _print_bool(value) -> int:
    if value is None:
        print("UNKNOWN")
        return EXIT_UNKNOWN
    print("TRUE" if value else "FALSE")
    return EXIT_TRUE if value else EXIT_FALSE


def cmd_compile(args):
    h = parse_hre(_read(args.file))
    _emit(format_nfh(compile_hre(h)), args.output)
    return 0


def cmd_check_empty(args):
    a = _load(args.file)
    v = emptiness.check_nonempty(
        a, max_iters=args.max_iters, deadline=_deadline(args),
        strict_wildcards=args.strict_wildcards,
    )
    return _print_verdict(v)


def cmd_check_bounded(args):
    a = _load(args.file)
    v = emptiness.bounded_nonempty(a, args.m, args.strict_wildcards, _deadline(args))
    return _print_verdict(v)


def cmd_member(args):
    a = _load(args.file)
    if args.hyperword:
        s = parse_hyperword(_read(args.hyperword), a.alphabet)
        return _print_bool(membership.finite_membership(a, s, args.strict_wildcards))
    l = parse_nfa(_read(args.regular))
    return _print_bool(membership.regular_membership(l, a, _deadline(args)))


def cmd_contains(args):
    return _print_bool(
        membership.containment(_load(args.a), _load(args.b), _deadline(args))
    )


def cmd_complement(args):
    a = expand_wildcards(_load(args.file))
    _emit(format_nfh(closure.complement(a, _deadline(args))), args.output)
    return 0


def cmd_union(args):
    _emit(format_nfh(closure.union(_load(args.a), _load(args.b))), args.output)
    return 0


def _parse_quant(text: str):
    toks = text.split()
    if len(toks) % 2:
        raise ParseError("--quant must alternate quantifiers and variables")
    try:
        return [(Quantifier(toks[i]), toks[i + 1]) for i in range(0, len(toks), 2)]
    except ValueError:
        raise ParseError("quantifiers must be 'forall' or 'exists'") from None


def cmd_intersect(args):
    quant = _parse_quant(args.quant) if args.quant else None
    r = closure.intersection(_load(args.a), _load(args.b), quant)
    _emit(format_nfh(r), args.output)
    return 0


def cmd_canonicalize(args):
    _emit(format_nfh(canonical.canonical_form(_load(args.file))), args.output)
    return 0


def cmd_equiv(args):
    value = canonical.equivalent_alternation_free(
        _load(args.a), _load(args.b), raw=args.raw_underlying, deadline=_deadline(args)
    )
    return _print_bool(value)


def cmd_expand(args):
    a = expand_wildcards(_load(args.file), strict=args.strict_wildcards)
    _emit(format_nfh(a), args.output)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="hyperfa", description="Finite-word hyperautomata and hyperregular expressions."
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help, files=("file",), output=False, timeout=True, wild=False):
        sp = sub.add_parser(name, help=help)
        for f in files:
            sp.add_argument(f)
        if output:
            sp.add_argument("-o", "--output", help="output file (default: stdout)")
        if timeout:
            sp.add_argument("--timeout", type=float, help="give up after this many seconds")
        if wild:
            sp.add_argument(
                "--strict-wildcards", action="store_true",
                help="wild cards range over the alphabet only, not padding",
            )
        sp.set_defaults(func=fn)
        return sp

    add("compile", cmd_compile, "compile an HRE file to an NFH file", output=True, timeout=False)
    sp = add("check-empty", cmd_check_empty, "decide or semi-decide nonemptiness", wild=True)
    sp.add_argument("--max-iters", type=int, help="iteration cap of the semi-algorithm")
    sp = add("check-bounded", cmd_check_bounded, "nonemptiness over hyperwords of at most M words", wild=True)
    sp.add_argument("-m", type=int, required=True, help="hyperword size bound")
    sp = add("member", cmd_member, "finite or regular hyperword membership", wild=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--hyperword", help="hyperword file, one word per line")
    group.add_argument("--regular", help="NFA file describing the hyperword")
    add("contains", cmd_contains, "hyperlanguage containment a <= b", files=("a", "b"))
    add("complement", cmd_complement, "complement NFH", output=True)
    add("union", cmd_union, "union NFH", files=("a", "b"), output=True, timeout=False)
    sp = add("intersect", cmd_intersect, "intersection NFH", files=("a", "b"), output=True, timeout=False)
    sp.add_argument("--quant", help="quantifier prefix of the result, e.g. 'exists y forall x'")
    add("canonicalize", cmd_canonicalize, "canonical form of an alternation-free NFH", output=True, timeout=False)
    sp = add("equiv", cmd_equiv, "hyperlanguage equivalence of alternation-free NFH", files=("a", "b"))
    sp.add_argument(
        "--raw-underlying", action="store_true",
        help="compare completed automata on all words, illegal ones included",
    )
    add("expand-wildcards", cmd_expand, "replace wild cards by concrete letters", output=True, timeout=False, wild=True)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DeadlineExceeded:
        print("UNKNOWN: timeout")
        return EXIT_UNKNOWN
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FragmentError, AlphabetMismatchError, IllegalWordError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FRAGMENT
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
