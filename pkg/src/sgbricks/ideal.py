"""Relative ideals of a numerical semigroup: duals, sums, and the brick test.

A relative ideal is a finite union of shifted copies z + S of its parent
semigroup S; it is stored by its minimal generating offsets.  The dual
S - I = {z : z + I inside S} and the sum I + J are again relative ideals.
The pair (S, I) multiplies like a brick when the minimal generating sets
obey mu(I) * mu(S - I) = mu(I + (S - I)).

The dual and sum computations run on integer bitsets.  The windows rely on
two facts: any z above frobenius - min(I) belongs to the dual outright,
and every minimal generator of a relative ideal J lies within frobenius of
min(J) (anything further is covered by min(J) itself).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyInputError, InvalidInputError, ParentMismatchError
from .sgcore import NumericalSemigroup


class RelativeIdeal:
    """A finite union of cosets z + S, stored as minimal offsets.

    ``min_gens`` is ascending and minimal: no offset lies in another
    offset's coset.  Offsets may be negative; ideals are deliberately not
    normalized to contain 0.  Instances are immutable.
    """

    __slots__ = ("parent", "min_gens")

    def __init__(self, parent: NumericalSemigroup, gens: Iterable[int]):
        gens = sorted(set(gens))
        if not gens:
            raise EmptyInputError("an ideal needs at least one generator")
        for z in gens:
            if not isinstance(z, int):
                raise InvalidInputError(f"offset {z!r} is not an integer")
        kept: list[int] = []
        for z in gens:
            # z is redundant iff it lands in the coset of a smaller kept
            # offset; differences with larger offsets are negative
            if not any((z - w) in parent for w in kept):
                kept.append(z)
        self.parent = parent
        self.min_gens = tuple(kept)

    @classmethod
    def _trusted(cls, parent: NumericalSemigroup,
                 gens: tuple[int, ...]) -> "RelativeIdeal":
        # gens must already be an ascending minimal generating set
        ideal = cls.__new__(cls)
        ideal.parent = parent
        ideal.min_gens = gens
        return ideal

    @property
    def mu(self) -> int:
        """Size of the minimal generating set."""
        return len(self.min_gens)

    def __contains__(self, x: int) -> bool:
        return any((x - z) in self.parent for z in self.min_gens)

    def dual(self) -> "RelativeIdeal":
        """The relative ideal of all z with z + (this ideal) inside the parent.

        z qualifies iff z + offset is a member for every minimal offset; the
        candidates live in [-min, frobenius - min] and everything above that
        strip qualifies automatically.
        """
        S = self.parent
        frob = S.frobenius
        off = self.min_gens[0]
        if frob < 0:
            # parent is all non-negative integers: z + min >= 0 suffices
            return RelativeIdeal._trusted(S, (-off,))
        shifted = [z - off for z in self.min_gens]
        span = shifted[-1]
        # minimal dual generators (in 0-based offsets) sit below 2*frob + 2;
        # the bitset must be complete that far even after the widest shift
        limit = 2 * frob + 2 + span
        smask = S.element_mask(limit)
        emask = smask
        for z in shifted[1:]:
            emask &= smask >> z
        gens = _mask_min_gens(emask, smask)
        return RelativeIdeal._trusted(S, tuple(w - off for w in gens))

    def __add__(self, other: "RelativeIdeal") -> "RelativeIdeal":
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        if other.parent != self.parent:
            raise ParentMismatchError("ideals live over different semigroups")
        sums = {a + b for a in self.min_gens for b in other.min_gens}
        return RelativeIdeal(self.parent, sums)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return (self.parent == other.parent
                and self.min_gens == other.min_gens)

    def __hash__(self) -> int:
        return hash((self.parent.min_gens, self.min_gens))

    def __repr__(self) -> str:
        inner = ", ".join(map(str, self.min_gens))
        return f"RelativeIdeal(({inner}) over {self.parent!r})"


@dataclass(frozen=True)
class BrickCheck:
    """Outcome of the brick test for a pair (S, I).

    mu_sum never exceeds mu_ideal * mu_dual; a brick attains equality with a
    non-principal I, and a perfect brick additionally has I + (S - I) equal
    to the ideal of all nonzero members of S.
    """

    mu_ideal: int
    mu_dual: int
    mu_sum: int
    is_brick: bool
    is_perfect: bool
    dual_ideal: RelativeIdeal
    sum_ideal: RelativeIdeal


def maximal_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """The relative ideal of all nonzero members; its minimal offsets are
    exactly the minimal generators of S."""
    return RelativeIdeal._trusted(S, S.min_gens)


def brick_check(S: NumericalSemigroup, I: RelativeIdeal) -> BrickCheck:
    """Compute the dual and the sum I + (S - I) and test the brick equality."""
    if I.parent != S:
        raise ParentMismatchError("ideal does not belong to this semigroup")
    k = I.mu
    frob = S.frobenius
    if frob < 0:
        dual = I.dual()
        total = I + dual
        return BrickCheck(k, dual.mu, total.mu, False, False, dual, total)

    off = I.min_gens[0]
    shifted = [z - off for z in I.min_gens]
    span = shifted[-1]
    limit = 2 * frob + 2 + span
    smask = S.element_mask(limit)
    emask = smask
    for z in shifted[1:]:
        emask &= smask >> z
    dual_shifted = _mask_min_gens(emask, smask)
    dual = RelativeIdeal._trusted(S, tuple(w - off for w in dual_shifted))

    # I + (S - I) in 0-based offsets: the two shifts by off cancel.  Sums
    # beyond the trusted strip are covered by the least sum and can be
    # dropped before they touch the bitset.
    trust = limit - span
    kmask = 0
    for z in shifted:
        for w in dual_shifted:
            s = z + w
            if s <= trust:
                kmask |= smask << s
    kmask &= (1 << (trust + 1)) - 1
    total_gens = _mask_min_gens(kmask, smask)
    total = RelativeIdeal._trusted(S, tuple(total_gens))

    mu_dual = len(dual_shifted)
    mu_sum = len(total_gens)
    assert mu_sum <= k * mu_dual
    is_brick = k >= 2 and k * mu_dual == mu_sum
    is_perfect = is_brick and total.min_gens == S.min_gens
    return BrickCheck(k, mu_dual, mu_sum, is_brick, is_perfect, dual, total)


def _mask_min_gens(emask: int, smask: int) -> list[int]:
    # Greedy extraction: the least remaining element is always a minimal
    # generator; clearing its coset removes everything it covers and never
    # touches another minimal generator.  Callers guarantee the element
    # bitset is genuine and complete through the last minimal generator.
    gens: list[int] = []
    while emask:
        z = (emask & -emask).bit_length() - 1
        gens.append(z)
        emask &= ~(smask << z)
    return gens
