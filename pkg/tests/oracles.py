"""Deliberately naive reference implementations used to independently
verify derived values.  Everything here works straight from a basis list
with whole-powerset loops and no shortcuts, so it stays independent of
the package's optimized code paths."""

from __future__ import annotations

import itertools


def all_subsets(ground):
    ground = list(ground)
    for k in range(len(ground) + 1):
        yield from (frozenset(c) for c in itertools.combinations(ground, k))


def rank_brute(bases, subset) -> int:
    subset = frozenset(subset)
    return max(len(b & subset) for b in bases)


def closure_brute(n, bases, subset) -> frozenset:
    subset = frozenset(subset)
    r = rank_brute(bases, subset)
    return frozenset(
        e for e in range(n) if rank_brute(bases, subset | {e}) == r
    )


def flats_brute(n, bases) -> set[frozenset]:
    return {closure_brute(n, bases, s) for s in all_subsets(range(n))}


def points_brute(n, bases) -> list[frozenset]:
    return [f for f in flats_brute(n, bases) if rank_brute(bases, f) == 1]


def long_lines_brute(n, bases) -> list[frozenset]:
    pts = points_brute(n, bases)
    out = []
    for f in flats_brute(n, bases):
        if rank_brute(bases, f) == 2 and sum(1 for p in pts if p <= f) >= 3:
            out.append(f)
    return out


def is_connected_brute(n, bases) -> bool:
    if n <= 1:
        return True
    ground = frozenset(range(n))
    r = rank_brute(bases, ground)
    for x in all_subsets(range(n)):
        if x and x != ground and rank_brute(bases, x) + rank_brute(bases, ground - x) == r:
            return False
    return True


def is_3connected_brute(n, bases) -> bool:
    ground = frozenset(range(n))
    if n < 4 or not is_connected_brute(n, bases):
        return False
    r = rank_brute(bases, ground)
    for x in all_subsets(range(n)):
        y = ground - x
        if len(x) >= 2 and len(y) >= 2:
            if rank_brute(bases, x) + rank_brute(bases, y) - r <= 1:
                return False
    return True


def bases_as_sets(m) -> set[frozenset]:
    from positroids.core import set_of

    return {set_of(b) for b in m.bases}


def minor_bases_brute(n, bases, contract, delete) -> tuple[list[int], set[frozenset]]:
    """Bases of (M / contract) \\ delete on the surviving elements, computed
    as maximal independent subsets, where independence of I means
    rank(I + B_C) = |I| + |B_C| for a greedy maximal independent B_C."""
    contract = frozenset(contract)
    delete = frozenset(delete)
    survivors = [e for e in range(n) if e not in contract and e not in delete]
    bc: set = set()
    for e in sorted(contract):
        if rank_brute(bases, bc | {e}) > len(bc):
            bc.add(e)
    independent = []
    for s in all_subsets(survivors):
        if rank_brute(bases, s | bc) == len(s) + len(bc):
            independent.append(s)
    top = max(len(s) for s in independent)
    return survivors, {s for s in independent if len(s) == top}


def isomorphic_brute(n1, bases1, n2, bases2) -> bool:
    """Try every bijection; fine for n <= 7."""
    if n1 != n2:
        return False
    b2 = set(bases2)
    for perm in itertools.permutations(range(n1)):
        if {frozenset(perm[e] for e in b) for b in bases1} == b2:
            return True
    return False


def has_minor_unrestricted(host, target) -> bool:
    """All disjoint contract/delete splits, no independence restriction."""
    n = host.n
    hb = bases_as_sets(host)
    tb = bases_as_sets(target)
    for contract in all_subsets(range(n)):
        rest = [e for e in range(n) if e not in contract]
        if len(rest) < target.n:
            continue
        for keep in itertools.combinations(rest, target.n):
            delete = frozenset(rest) - frozenset(keep)
            survivors, mb = minor_bases_brute(n, hb, contract, delete)
            relabel = {e: i for i, e in enumerate(survivors)}
            mb_relabelled = {frozenset(relabel[e] for e in b) for b in mb}
            if len(next(iter(mb_relabelled))) != target.rank:
                continue
            if isomorphic_brute(target.n, mb_relabelled, target.n, tb):
                return True
    return False


def cyclic_interval_brute(n, positions) -> bool:
    """positions is the set of positions a flat occupies on the n-cycle."""
    k = len(positions)
    if k == 0 or k == n:
        return True
    for start in range(n):
        if all(((start + i) % n) in positions for i in range(k)):
            return True
    return False
