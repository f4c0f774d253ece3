"""Command-line front end.

Commands: analyze, dual, brick, classify, family, lift, search.  Commands
taking a semigroup and an ideal separate the two integer lists with `--`.
Exit status: 0 success, 2 usage error, 3 domain validation error, 4 I/O
failure; errors go to stderr as one machine-readable line.
"""

from __future__ import annotations

import sys

from .balanced import (
    canonical_brick,
    classify,
    frobenius_of_quad,
    frobenius_of_triple,
    unitary_family,
)
from .brickhunt import SearchConfig, lift, render_reports, search, summarize
from .errors import DomainError
from .ideal import RelativeIdeal, brick_check
from .sgcore import NumericalSemigroup

USAGE = """usage: sgbricks <command> [arguments]

commands:
  analyze <gens...>                      semigroup invariants and apery set
  dual <gens...> -- <ideal gens...>      dual ideal, sum and mu values
  brick <gens...> -- <ideal gens...>     brick test for the pair
  classify <a1> <a2> <a3> <a4>           balanced/unitary classification
  family --z-max <Z>                     one-parameter unitary family members
  lift <gens...> -- <ideal gens...>      rebuild the candidate perfect brick
  search --gen-max <N> [--t-min <N>] [--t-max <N>] [--mu-cap <N>]
         [--perfect-only] [--workers <N>] [--format line|table] [--out PATH]
                                         exhaustive brick search
"""


class UsageError(Exception):
    pass


def main() -> None:
    sys.exit(run())


def run(argv: list[str] | None = None) -> int:
    args = list(sys.argv[1:]) if argv is None else list(argv)
    if not args:
        print(USAGE, file=sys.stderr, end="")
        return 2
    if args[0] in ("-h", "--help", "help"):
        print(USAGE, end="")
        return 0
    command, rest = args[0], args[1:]
    handlers = {
        "analyze": _cmd_analyze,
        "dual": _cmd_dual,
        "brick": _cmd_brick,
        "classify": _cmd_classify,
        "family": _cmd_family,
        "lift": _cmd_lift,
        "search": _cmd_search,
    }
    handler = handlers.get(command)
    if handler is None:
        print(f"error: usage: unknown command {command!r}", file=sys.stderr)
        print(USAGE, file=sys.stderr, end="")
        return 2
    try:
        handler(rest)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 4
    return 0


# ------------------------------------------------------------ small parsers

def _int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise UsageError(f"expected an integer, got {token!r}") from None


def _int_list(tokens: list[str], what: str) -> list[int]:
    if not tokens:
        raise UsageError(f"missing {what}")
    return [_int(t) for t in tokens]


def _split_pair(tokens: list[str]) -> tuple[list[int], list[int]]:
    if "--" not in tokens:
        raise UsageError("expected `--` between semigroup and ideal generators")
    cut = tokens.index("--")
    return (_int_list(tokens[:cut], "semigroup generators"),
            _int_list(tokens[cut + 1:], "ideal generators"))


def _fmt_sg(gens) -> str:
    return "<" + ", ".join(map(str, gens)) + ">"


def _fmt_ideal(gens) -> str:
    return "(" + ", ".join(map(str, gens)) + ")"


# ---------------------------------------------------------------- commands

def _cmd_analyze(args: list[str]) -> None:
    S = NumericalSemigroup(_int_list(args, "semigroup generators"))
    print(f"S = {_fmt_sg(S.min_gens)}")
    print(f"multiplicity: {S.multiplicity}")
    print(f"frobenius: {S.frobenius}")
    print(f"n_count: {S.n_count}")
    print(f"symmetric: {'yes' if S.is_symmetric() else 'no'}")
    print("apery set:", " ".join(map(str, S.apery_set())))


def _cmd_dual(args: list[str]) -> None:
    sgens, igens = _split_pair(args)
    S = NumericalSemigroup(sgens)
    I = RelativeIdeal(S, igens)
    D = I.dual()
    K = I + D
    print(f"S = {_fmt_sg(S.min_gens)}")
    print(f"I = {_fmt_ideal(I.min_gens)}")
    print(f"S - I = {_fmt_ideal(D.min_gens)}")
    print(f"I + (S - I) = {_fmt_ideal(K.min_gens)}")
    print(f"mu(I) = {I.mu}, mu(S - I) = {D.mu}, mu(I + (S - I)) = {K.mu}")


def _cmd_brick(args: list[str]) -> None:
    sgens, igens = _split_pair(args)
    S = NumericalSemigroup(sgens)
    I = RelativeIdeal(S, igens)
    chk = brick_check(S, I)
    print(f"S = {_fmt_sg(S.min_gens)}")
    print(f"I = {_fmt_ideal(I.min_gens)}")
    print(f"S - I = {_fmt_ideal(chk.dual_ideal.min_gens)}")
    print(f"I + (S - I) = {_fmt_ideal(chk.sum_ideal.min_gens)}")
    print(f"dimensions: {chk.mu_ideal} x {chk.mu_dual}")
    print(f"brick: {'yes' if chk.is_brick else 'no'}")
    print(f"perfect: {'yes' if chk.is_perfect else 'no'}")


def _cmd_classify(args: list[str]) -> None:
    vals = _int_list(args, "quadruple")
    if len(vals) != 4:
        raise UsageError("classify takes exactly four integers")
    result = classify(vals)
    if not result.is_balanced:
        print(f"quadruple: {_fmt_sg(sorted(vals))}")
        print("classification: not balanced")
        print(f"reason: {result.reason}")
        return
    p = result.profile
    print(f"quadruple: {_fmt_sg(p.gens)}")
    print(f"classification: {result.kind}")
    print(f"gcd(a1, a4) = {p.outer_gcd}, gcd(a2, a3) = {p.inner_gcd}")
    print(f"quotients: q1 = {p.q1}, q2 = {p.q2}, q3 = {p.q3}, q4 = {p.q4}")
    print(f"common sum = {p.common_sum}, common quotient = {p.common_quotient}")
    print(f"shift n = {p.shift}")
    if result.is_unitary:
        igens, dual_gens = canonical_brick(p)
        print(f"frobenius of {_fmt_sg(p.gens[:3])} = {frobenius_of_triple(p)}")
        print(f"frobenius of {_fmt_sg(p.gens)} = {frobenius_of_quad(p)}")
        print(f"canonical ideal: {_fmt_ideal(igens)}")
        print(f"predicted dual: {_fmt_ideal(dual_gens)}")


def _cmd_family(args: list[str]) -> None:
    z_max = None
    i = 0
    while i < len(args):
        if args[i] == "--z-max":
            if i + 1 >= len(args):
                raise UsageError("--z-max needs a value")
            z_max = _int(args[i + 1])
            i += 2
        else:
            raise UsageError(f"unknown option {args[i]!r}")
    if z_max is None:
        raise UsageError("family requires --z-max")
    for z in range(3, z_max + 1):
        quad = unitary_family(z)
        if quad is None:
            continue
        S = NumericalSemigroup(quad)
        igens, dual_gens = canonical_brick(classify(quad).profile)
        chk = brick_check(S, RelativeIdeal(S, igens))
        perfect = "yes" if chk.is_perfect and (chk.mu_ideal, chk.mu_dual) == (2, 2) else "no"
        print(f"z = {z}: {_fmt_sg(quad)}  I = {_fmt_ideal(igens)}  "
              f"dual = {_fmt_ideal(dual_gens)}  perfect 2x2: {perfect}")


def _cmd_lift(args: list[str]) -> None:
    sgens, igens = _split_pair(args)
    S = NumericalSemigroup(sgens)
    I = RelativeIdeal(S, igens)
    res = lift(S, I)
    chk = res.check
    print(f"S = {_fmt_sg(S.min_gens)}")
    print(f"I = {_fmt_ideal(I.min_gens)}")
    print(f"lifted S = {_fmt_sg(res.quad)}")
    print(f"lifted I = {_fmt_ideal(res.ideal_gens)}")
    print(f"dimensions: {chk.mu_ideal} x {chk.mu_dual}")
    print(f"brick: {'yes' if chk.is_brick else 'no'}")
    print(f"perfect: {'yes' if chk.is_perfect else 'no'}")


def _cmd_search(args: list[str]) -> None:
    options = {"t_min": 2, "t_max": 5, "gen_max": None, "mu_cap": None,
               "workers": 1, "fmt": "line", "out": None, "perfect_only": False}
    flags = {"--t-min": "t_min", "--t-max": "t_max", "--gen-max": "gen_max",
             "--mu-cap": "mu_cap", "--workers": "workers"}
    i = 0
    while i < len(args):
        token = args[i]
        if token in flags:
            if i + 1 >= len(args):
                raise UsageError(f"{token} needs a value")
            options[flags[token]] = _int(args[i + 1])
            i += 2
        elif token == "--perfect-only":
            options["perfect_only"] = True
            i += 1
        elif token == "--format":
            if i + 1 >= len(args) or args[i + 1] not in ("line", "table"):
                raise UsageError("--format needs `line` or `table`")
            options["fmt"] = args[i + 1]
            i += 2
        elif token == "--out":
            if i + 1 >= len(args):
                raise UsageError("--out needs a path")
            options["out"] = args[i + 1]
            i += 2
        else:
            raise UsageError(f"unknown option {token!r}")
    if options["gen_max"] is None:
        raise UsageError("search requires --gen-max")

    config = SearchConfig(
        t_min=options["t_min"],
        t_max=options["t_max"],
        gen_max=options["gen_max"],
        mu_cap=options["mu_cap"],
        perfect_only=options["perfect_only"],
        worker_count=options["workers"],
    )
    reports = search(config)
    payload = render_reports(reports, options["fmt"])
    if options["out"] is None:
        sys.stdout.write(payload)
    else:
        with open(options["out"], "w") as fh:
            fh.write(payload)
    print(summarize(reports), file=sys.stderr)


if __name__ == "__main__":
    main()
