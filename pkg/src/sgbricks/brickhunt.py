"""Exhaustive search for brick pairs over bounded generator spaces.

Semigroups are enumerated by ascending candidate tuples, keeping exactly the
tuples that are minimal generating sets with gcd 1.  For each semigroup the
candidate ideals contain 0 plus nonzero offsets up to frobenius minus
multiplicity, with at most 1 + t // 2 generators for a t-generated
semigroup, emitted only when the tuple is already minimal.  Every pair goes
through ideal.brick_check; hits become BrickReport records.

The search fans whole chunks of candidate tuples out to worker processes;
workers own their result lists and a final sort by (semigroup, ideal)
generators makes the output independent of scheduling.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import IO, Iterable, Iterator

from .errors import (
    IntegerOverflowError,
    InvalidInputError,
    NotTwoByTwoError,
    ParentMismatchError,
    ZeroNotGeneratorError,
)
from .ideal import BrickCheck, RelativeIdeal, brick_check
from .sgcore import NumericalSemigroup

log = logging.getLogger(__name__)

TABLE_HEADER = "s_gens;i_gens;dual_gens;k;m;perfect;mult;frob"


@dataclass(frozen=True)
class SearchConfig:
    """Bounds of a search space.

    mu_cap of None applies the default ideal-size cap 1 + t // 2, where t is
    the size of each semigroup's minimal generating set.
    """

    t_min: int = 2
    t_max: int = 5
    gen_max: int = 50
    mu_cap: int | None = None
    perfect_only: bool = False
    worker_count: int = 1

    def __post_init__(self):
        if self.t_min < 2:
            raise InvalidInputError("t_min must be at least 2")
        if self.t_max < self.t_min:
            raise InvalidInputError("t_max must be at least t_min")
        if self.gen_max < 2:
            raise InvalidInputError("gen_max must be at least 2")
        if self.mu_cap is not None and self.mu_cap < 2:
            raise InvalidInputError("mu_cap must be at least 2")
        if self.worker_count < 1:
            raise InvalidInputError("worker_count must be at least 1")

    def cap_for(self, t: int) -> int:
        return self.mu_cap if self.mu_cap is not None else 1 + t // 2


@dataclass(frozen=True)
class BrickReport:
    """One search hit: the pair, its dual, dimensions and key invariants."""

    s_gens: tuple[int, ...]
    i_gens: tuple[int, ...]
    dual_gens: tuple[int, ...]
    k: int
    m: int
    perfect: bool
    multiplicity: int
    frobenius: int

    @classmethod
    def from_check(cls, S: NumericalSemigroup, I: RelativeIdeal,
                   check: BrickCheck) -> "BrickReport":
        return cls(
            s_gens=S.min_gens,
            i_gens=I.min_gens,
            dual_gens=check.dual_ideal.min_gens,
            k=check.mu_ideal,
            m=check.mu_dual,
            perfect=check.is_perfect,
            multiplicity=S.multiplicity,
            frobenius=S.frobenius,
        )


@dataclass(frozen=True)
class LiftResult:
    """Outcome of rebuilding a candidate perfect brick from a 2x2 brick."""

    quad: tuple[int, ...]
    ideal_gens: tuple[int, int]
    check: BrickCheck


def enumerate_semigroups(config: SearchConfig) -> Iterator[NumericalSemigroup]:
    """Each semigroup whose minimal generating set fits the bounds, exactly
    once, in lexicographic order of that set."""
    bound = config.gen_max
    clip = (1 << (bound + 1)) - 1

    def extend(prefix: tuple[int, ...], reach: int) -> Iterator[NumericalSemigroup]:
        if len(prefix) >= config.t_min and math.gcd(*prefix) == 1:
            yield NumericalSemigroup(prefix)
        if len(prefix) == config.t_max:
            return
        start = prefix[-1] + 1 if prefix else 2
        for x in range(start, bound + 1):
            if (reach >> x) & 1:
                # x is a combination of the prefix: redundant in every
                # extension, prune the whole subtree
                continue
            yield from extend(prefix + (x,), _saturate(reach, x, bound, clip))

    yield from extend((), 1)


def enumerate_ideals(S: NumericalSemigroup,
                     config: SearchConfig) -> Iterator[RelativeIdeal]:
    """Minimal ideals (0, u1, ...) with nonzero offsets up to
    frobenius - multiplicity, smallest size first, lexicographic within a
    size.  Tuples that are not minimal generating sets are never formed:
    offsets and their pairwise differences are all gaps."""
    top = S.frobenius - S.multiplicity
    if S.frobenius < 0 or top < 1:
        return
    cap = config.cap_for(len(S.min_gens))
    window = (1 << (top + 1)) - 1
    gapmask = ~S.element_mask(top) & window
    gaps = _bits(gapmask)

    def grow(prefix: tuple[int, ...], cand: int,
             left: int) -> Iterator[tuple[int, ...]]:
        if left == 0:
            yield (0,) + prefix
            return
        for v in _bits(cand):
            yield from grow(prefix + (v,), cand & (gapmask << v), left - 1)

    for size in range(2, cap + 1):
        for u in gaps:
            for gens in grow((u,), gapmask & (gapmask << u), size - 2):
                yield RelativeIdeal._trusted(S, gens)


def search(config: SearchConfig) -> list[BrickReport]:
    """Run brick_check over every (semigroup, ideal) pair in the space and
    collect the bricks, ordered by (s_gens, i_gens) regardless of worker
    count."""
    tasks = _candidate_chunks(config)
    if config.worker_count <= 1:
        chunked = map(_scan_chunk, tasks)
        reports = [r for chunk in chunked for r in chunk]
    else:
        with Pool(config.worker_count) as pool:
            reports = [r for chunk in pool.imap_unordered(_scan_chunk, tasks)
                       for r in chunk]
    reports.sort(key=lambda r: (r.s_gens, r.i_gens))
    return reports


def lift(S: NumericalSemigroup, I: RelativeIdeal) -> LiftResult:
    """Rebuild the candidate perfect brick suggested by a 2x2 brick.

    With I = (0, n) and dual (b1, b3), the lifted pair is the semigroup
    generated by b1, b1 + n, b3, b3 + n together with the ideal (0, n).
    Perfection of the result is reported through the returned check, never
    assumed.  When b1, b3 and n share a factor the quadruple generates no
    numerical semigroup at all and the construction raises NonCoprimeError;
    such bricks exist (e.g. (14, 30, 35, 45) with ideal (0, 3)).
    """
    if I.parent != S:
        raise ParentMismatchError("ideal does not belong to this semigroup")
    if I.min_gens[0] != 0:
        raise ZeroNotGeneratorError(
            f"the ideal's least generator is {I.min_gens[0]}, not 0")
    base = brick_check(S, I)
    if not (base.mu_ideal == 2 and base.mu_dual == 2 and base.is_brick):
        raise NotTwoByTwoError(
            f"(S, I) is {base.mu_ideal}x{base.mu_dual} with mu-sum "
            f"{base.mu_sum}, not a 2x2 brick")
    n = I.min_gens[1]
    b1, b3 = base.dual_ideal.min_gens
    quad = tuple(sorted((b1, b1 + n, b3, b3 + n)))
    lifted_s = NumericalSemigroup(quad)
    lifted_i = RelativeIdeal(lifted_s, (0, n))
    return LiftResult(quad, (0, n), brick_check(lifted_s, lifted_i))


# ------------------------------------------------------------------ workers

def _saturate(reach: int, step: int, bound: int, clip: int) -> int:
    # close the reachability bitset under adding `step`, up to `bound`
    while step <= bound:
        reach |= (reach << step) & clip
        step <<= 1
    return reach


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _candidate_chunks(config: SearchConfig,
                      chunk_size: int = 512) -> Iterator[tuple[tuple, SearchConfig]]:
    for t in range(config.t_min, config.t_max + 1):
        combos = itertools.combinations(range(2, config.gen_max + 1), t)
        while True:
            chunk = tuple(itertools.islice(combos, chunk_size))
            if not chunk:
                break
            yield (chunk, config)


def _is_minimal_tuple(gens: tuple[int, ...]) -> bool:
    # each generator must not be a combination of the smaller ones (larger
    # generators can never take part in representing a smaller one)
    bound = gens[-1]
    clip = (1 << (bound + 1)) - 1
    reach = 1
    for a in gens:
        if (reach >> a) & 1:
            return False
        reach = _saturate(reach, a, bound, clip)
    return True


def _scan_chunk(args: tuple[tuple, SearchConfig]) -> list[BrickReport]:
    tuples, config = args
    reports: list[BrickReport] = []
    for gens in tuples:
        if math.gcd(*gens) != 1:
            continue
        if not _is_minimal_tuple(gens):
            continue
        reports.extend(_scan_semigroup(NumericalSemigroup(gens), config))
    return reports


def _scan_semigroup(S: NumericalSemigroup,
                    config: SearchConfig) -> list[BrickReport]:
    """Scan all candidate ideals of one semigroup.

    The inner test is an exact inlined form of the brick condition:
    mu(I + J) equals mu(I) * mu(J) iff the pairwise generator sums are
    distinct and no difference of two sums is a member (the sums generate
    I + J, and its minimal generating set is their greedy reduction).  Every
    hit is re-validated through ideal.brick_check before being reported.
    """
    out: list[BrickReport] = []
    frob = S.frobenius
    top = frob - S.multiplicity
    if frob < 0 or top < 1:
        return out
    cap = config.cap_for(len(S.min_gens))
    limit = 2 * frob + 2 + top
    smask = S.element_mask(limit)
    gapmask = ~smask & ((1 << (top + 1)) - 1)
    table = S.apery_table
    m = S.multiplicity

    def report(offsets: tuple[int, ...]) -> None:
        ideal = RelativeIdeal._trusted(S, (0, *offsets))
        try:
            check = brick_check(S, ideal)
        except IntegerOverflowError as exc:
            log.warning("skipping pair %s / %s: %s",
                        S.min_gens, ideal.min_gens, exc)
            return
        assert check.is_brick
        if check.is_perfect or not config.perfect_only:
            out.append(BrickReport.from_check(S, ideal, check))

    def deeper(offsets: tuple[int, ...], cand: int, emask: int) -> None:
        # generic extension for mu caps beyond 3
        for x in _bits(cand):
            ext = offsets + (x,)
            ds = [b - a for a in (0, *ext) for b in ext if b > a]
            sub = emask & (smask >> x)
            if _brick_dual_gens(sub, smask, tuple(set(ds)), table, m) is not None:
                report(ext)
            if len(ext) + 1 < cap:
                deeper(ext, cand & (gapmask << x), sub)

    for u in _bits(gapmask):
        emask_u = smask & (smask >> u)
        if _brick_dual_gens(emask_u, smask, (u,), table, m) is not None:
            report((u,))
        if cap >= 3:
            cand_u = gapmask & (gapmask << u)
            for v in _bits(cand_u):
                emask_uv = emask_u & (smask >> v)
                if _brick_dual_gens(emask_uv, smask, (u, v, v - u),
                                    table, m) is not None:
                    report((u, v))
                if cap >= 4:
                    deeper((u, v), cand_u & (gapmask << v), emask_uv)
    return out


def _brick_dual_gens(emask, smask, deltas, table, m):
    """Extract the dual's minimal generators while testing the brick
    condition, aborting at the first violation.

    deltas are the pairwise differences of the ideal's generators (gaps by
    construction, so same-generator cross pairs need no test).  The pair
    (S, I) is a brick iff no cross pair (w_i + z1, w_j + z2) collides or
    differs by a member; collisions show up as a zero difference, which the
    membership test catches since 0 is a member.
    """
    gens: list[int] = []
    rest = emask
    while rest:
        w = (rest & -rest).bit_length() - 1
        for wi in gens:
            diff = w - wi  # ascending extraction keeps this positive
            for delta in deltas:
                d = diff + delta
                if d >= table[d % m]:
                    return None
                d = diff - delta
                if d < 0:
                    d = -d
                if d >= table[d % m]:
                    return None
        gens.append(w)
        rest &= ~(smask << w)
    if len(gens) < 2:
        return None
    return gens


# ------------------------------------------------------------------ reports

def render_report(report: BrickReport, fmt: str = "line") -> str:
    if fmt == "line":
        return json.dumps({
            "s": list(report.s_gens),
            "i": list(report.i_gens),
            "dual": list(report.dual_gens),
            "k": report.k,
            "m": report.m,
            "perfect": report.perfect,
            "mult": report.multiplicity,
            "frob": report.frobenius,
        })
    if fmt == "table":
        return ";".join([
            ",".join(map(str, report.s_gens)),
            ",".join(map(str, report.i_gens)),
            ",".join(map(str, report.dual_gens)),
            str(report.k),
            str(report.m),
            "true" if report.perfect else "false",
            str(report.multiplicity),
            str(report.frobenius),
        ])
    raise InvalidInputError(f"unknown report format {fmt!r}")


def render_reports(reports: Iterable[BrickReport], fmt: str = "line") -> str:
    lines = [render_report(r, fmt) for r in reports]
    if fmt == "table":
        lines.insert(0, TABLE_HEADER)
    return "".join(line + "\n" for line in lines)


def write_reports(reports: Iterable[BrickReport],
                  destination: str | Path | IO[str],
                  fmt: str = "line") -> None:
    """Serialize reports to a path or open text file; output is byte-stable
    for identical report lists."""
    payload = render_reports(reports, fmt)
    if hasattr(destination, "write"):
        destination.write(payload)
    else:
        Path(destination).write_text(payload)


def read_reports(source: str | Path | IO[str],
                 fmt: str = "line") -> list[BrickReport]:
    """Parse the output of write_reports back into report records."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text()
    lines = [line for line in text.splitlines() if line]
    out = []
    if fmt == "line":
        for line in lines:
            obj = json.loads(line)
            out.append(BrickReport(
                s_gens=tuple(obj["s"]),
                i_gens=tuple(obj["i"]),
                dual_gens=tuple(obj["dual"]),
                k=obj["k"],
                m=obj["m"],
                perfect=obj["perfect"],
                multiplicity=obj["mult"],
                frobenius=obj["frob"],
            ))
        return out
    if fmt == "table":
        if not lines or lines[0] != TABLE_HEADER:
            raise InvalidInputError("missing table header")
        for line in lines[1:]:
            s, i, dual, k, m, perfect, mult, frob = line.split(";")
            out.append(BrickReport(
                s_gens=tuple(int(x) for x in s.split(",")),
                i_gens=tuple(int(x) for x in i.split(",")),
                dual_gens=tuple(int(x) for x in dual.split(",")),
                k=int(k),
                m=int(m),
                perfect=perfect == "true",
                multiplicity=int(mult),
                frobenius=int(frob),
            ))
        return out
    raise InvalidInputError(f"unknown report format {fmt!r}")


def summarize(reports: list[BrickReport]) -> str:
    """Counts by dimension, by multiplicity and of perfect hits, plus both
    the pair count and the distinct-semigroup count."""
    dims: dict[str, int] = {}
    mults: dict[int, int] = {}
    perfect_dims: dict[str, int] = {}
    semis = set()
    perfect_count = 0
    for r in reports:
        key = f"{r.k}x{r.m}"
        dims[key] = dims.get(key, 0) + 1
        mults[r.multiplicity] = mults.get(r.multiplicity, 0) + 1
        semis.add(r.s_gens)
        if r.perfect:
            perfect_count += 1
            perfect_dims[key] = perfect_dims.get(key, 0) + 1
    lines = [
        f"bricks: {len(reports)} pairs, {len(semis)} distinct semigroups, "
        f"{perfect_count} perfect",
        "by dimensions: " + (" ".join(
            f"{k}={v}" for k, v in sorted(dims.items())) or "none"),
        "by multiplicity: " + (" ".join(
            f"{k}={v}" for k, v in sorted(mults.items())) or "none"),
        "perfect by dimensions: " + (" ".join(
            f"{k}={v}" for k, v in sorted(perfect_dims.items())) or "none"),
    ]
    return "\n".join(lines)
