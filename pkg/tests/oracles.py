"""Independent brute-force oracles used to cross-check the package.

Everything here works on plain ints and lists, never on the package's
classes, so a bug in the fast paths cannot hide in its own oracle.
"""

from __future__ import annotations


def sieve_members(gens, limit: int) -> list[bool]:
    """Dynamic-programming reachability: out[i] == True iff i is a
    non-negative integer combination of gens, for 0 <= i <= limit."""
    out = [False] * (limit + 1)
    out[0] = True
    for i in range(1, limit + 1):
        for a in gens:
            if a <= i and out[i - a]:
                out[i] = True
                break
    return out


def safe_limit(gens) -> int:
    # every gap is below multiplicity * max(gens)
    return min(gens) * max(gens) + max(gens)


def brute_frobenius(gens) -> int:
    members = sieve_members(gens, safe_limit(gens))
    for i in range(len(members) - 1, -1, -1):
        if not members[i]:
            return i
    return -1


def brute_apery(gens) -> list[int]:
    m = min(gens)
    members = sieve_members(gens, safe_limit(gens))
    table = {}
    for i, ok in enumerate(members):
        if ok and (i % m) not in table:
            table[i % m] = i
        if len(table) == m:
            break
    return sorted(table.values())


def brute_min_gens(gens) -> tuple[int, ...]:
    """Members that are not a sum of two nonzero members."""
    bound = max(gens)
    members = sieve_members(gens, bound)
    nonzero = [i for i in range(1, bound + 1) if members[i]]
    sums = {a + b for a in nonzero for b in nonzero if a + b <= bound}
    return tuple(e for e in nonzero if e not in sums)


def brute_n_count(gens) -> int:
    frob = brute_frobenius(gens)
    if frob < 0:
        return 0
    members = sieve_members(gens, frob)
    return sum(members[:frob])


def coset_union(sgens, offsets, lo: int, hi: int) -> set[int]:
    """Element set of union(z + S for z in offsets) within [lo, hi]."""
    limit = max(hi - min(offsets), 0)
    members = sieve_members(sgens, limit)
    out = set()
    for z in offsets:
        for s in range(0, hi - z + 1):
            if members[s] and lo <= z + s <= hi:
                out.add(z + s)
    return out


def brute_dual_elements(sgens, igens, lo: int, hi: int) -> set[int]:
    """z in [lo, hi] with z + (ideal element) always a member, checked
    element-by-element over the cosets rather than via generators."""
    frob = brute_frobenius(sgens)
    members = sieve_members(sgens, max(hi + frob + 1 - min(igens), 0) + max(igens) + 1)

    def in_s(x):
        if x < 0:
            return False
        if x >= len(members):
            return True
        return members[x]

    out = set()
    for z in range(lo, hi + 1):
        # beyond frob - z everything lands in S automatically
        stop = max(frob - z, min(igens))
        ideal_elems = coset_union(sgens, igens, min(igens), stop)
        if all(in_s(z + y) for y in ideal_elems):
            out.add(z)
    return out


def brute_minimal_generators(sgens, elements) -> tuple[int, ...]:
    """Minimal generating offsets of the ideal whose elements (over a window
    wide enough to contain every minimal generator) are given."""
    frob = brute_frobenius(sgens)
    members = sieve_members(sgens, max(frob, 0) + max(sgens))

    def in_s(x):
        if x < 0:
            return False
        if x >= len(members):
            return True
        return members[x]

    elems = sorted(elements)
    kept = []
    for z in elems:
        if not any(in_s(z - w) for w in kept):
            kept.append(z)
    return tuple(kept)
