"""Builders for the named matroids: uniform matroids, parallel connections,
the extremal family of iterated parallel connections of rank-2 uniforms,
principal extensions, the whirl-like families, and the nine-entry excluded
minor catalog.

Parallel connection is computed by literally evaluating the defining flat
condition (a set is a flat iff its trace on each side is a flat) over all
subsets of the glued ground set, then converting flats to bases.  Ground
sets stay small enough (<= 13 in every use here) for that to be cheap.
"""

from __future__ import annotations

import itertools

from .core import Matroid, MatroidError, as_mask, mask_of

CATALOG_IDS = ("M1", "M2", "M3", "M4", "M5", "M6", "M7", "M8", "FIG2")

# Long-line transcriptions of the rank-3 catalog configurations.  These
# lists are the contract: bases are all 3-subsets not inside a line.
_CATALOG_LINES = {
    "M1": (9, [{0, 1, 2}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}]),
    "M2": (9, [{0, 1, 2}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}, {3, 4, 5}]),
    "M3": (9, [{0, 1, 2}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}, {3, 4, 5}, {6, 7, 8}]),
    "M4": (6, [{0, 1, 2}, {0, 3, 5}, {1, 4, 5}, {2, 3, 4}]),
    "M5": (7, [{0, 1, 2}, {0, 3, 6}, {1, 4, 6}, {2, 5, 6}]),
    "M6": (7, [{0, 1, 2}, {0, 3, 6}, {1, 4, 6}, {2, 5, 6}, {3, 4, 5}]),
    "M7": (7, [{0, 1, 2}, {0, 3, 6}, {1, 4, 6}, {2, 4, 5}]),
    "M8": (7, [{0, 1, 2}, {0, 3, 6}, {1, 4, 6}]),
}


def uniform(r: int, n: int) -> Matroid:
    if n < 1 or r < 0 or r > n:
        raise MatroidError(f"no uniform matroid with rank {r} on {n} elements")
    return Matroid(n, (mask_of(c) for c in itertools.combinations(range(n), r)))


def rank3_from_lines(n: int, lines) -> Matroid:
    """Simple rank-3 matroid whose long lines are the given family.

    Lines must have >= 3 elements and pairwise share at most one point,
    and no line may cover the whole ground set.
    """
    line_masks = [mask_of(L) for L in lines]
    full = (1 << n) - 1
    for i, a in enumerate(line_masks):
        if a.bit_count() < 3 or a == full:
            raise MatroidError("each line needs >= 3 points and cannot be the whole ground set")
        for b in line_masks[i + 1:]:
            if (a & b).bit_count() > 1:
                raise MatroidError("two lines share more than one point")
    bases = [
        mask_of(c)
        for c in itertools.combinations(range(n), 3)
        if not any(mask_of(c) & L == mask_of(c) for L in line_masks)
    ]
    return Matroid(n, bases)


def parallel_connection(m: Matroid, other: Matroid, basepoint_m: int, basepoint_n: int) -> Matroid:
    """Glue two matroids along a shared basepoint.

    The result lives on m's labels 0..|m|-1 followed by other's non-basepoint
    elements in increasing original order; ``basepoint_n`` is identified with
    ``basepoint_m``.  Flats are exactly the sets whose trace on each side is
    a flat of that side.
    """
    for mat, e in ((m, basepoint_m), (other, basepoint_n)):
        if e < 0 or e >= mat.n:
            raise MatroidError(f"basepoint {e} outside ground set")
        if mat.rank_mask(1 << e) == 0:
            raise MatroidError(f"basepoint {e} is a loop")
    n_total = m.n + other.n - 1
    new_label = {}
    nxt = m.n
    for j in range(other.n):
        if j == basepoint_n:
            new_label[j] = basepoint_m
        else:
            new_label[j] = nxt
            nxt += 1

    flats_m = {f for level in m.flats_by_rank for f in level}
    flats_n = {f for level in other.flats_by_rank for f in level}
    mask_m_side = (1 << m.n) - 1
    shift_pos = [new_label[j] for j in range(other.n)]

    flats = []
    for s in range(1 << n_total):
        if (s & mask_m_side) not in flats_m:
            continue
        trace_n = 0
        for j in range(other.n):
            if (s >> shift_pos[j]) & 1:
                trace_n |= 1 << j
        if trace_n in flats_n:
            flats.append(s)
    out = Matroid.from_flats(n_total, flats)
    if out.rank != m.rank + other.rank - 1:
        raise MatroidError("parallel connection produced an unexpected rank")
    return out


def extremal_family(r: int, line_size_minus_one: int) -> Matroid:
    """The path-shaped iterated parallel connection of r-1 rank-2 uniforms.

    Each copy of U_{2, l+1} after the first is attached at a previously
    unused element of the last copy, giving a simple rank-r matroid on
    l(r-1)+1 elements.
    """
    ell = line_size_minus_one
    if r < 2 or ell < 1:
        raise MatroidError(f"extremal family needs rank >= 2 and line parameter >= 1, got ({r}, {ell})")
    m = uniform(2, ell + 1)
    for _ in range(r - 2):
        m = parallel_connection(m, uniform(2, ell + 1), m.n - 1, 0)
    return m


def all_parallel_connection_trees(r: int, ell: int) -> list[Matroid]:
    """One representative per isomorphism class of iterated parallel
    connections of r-1 copies of U_{2, ell+1}, over all attachment shapes."""
    from .isomorphism import dedup_by_isomorphism

    if r < 2 or ell < 1:
        raise MatroidError(f"trees need rank >= 2 and line parameter >= 1, got ({r}, {ell})")
    if r == 2:
        return [uniform(2, ell + 1)]
    block_size = ell + 1
    n_blocks = r - 1
    choice_sets = []
    for i in range(1, n_blocks):
        choice_sets.append([(j, idx) for j in range(i) for idx in range(block_size)])
    built = []
    for choices in itertools.product(*choice_sets):
        m = uniform(2, block_size)
        blocks = [list(range(block_size))]
        for (j, idx) in choices:
            attach = blocks[j][idx]
            start = m.n
            m = parallel_connection(m, uniform(2, block_size), attach, 0)
            blocks.append([attach] + list(range(start, start + ell)))
        built.append(m)
    return dedup_by_isomorphism(built)


def principal_extension(m: Matroid, flat) -> Matroid:
    """Add one element freely placed on the given flat.

    The new element e gets label |m|; a set S containing e has rank
    min(rank(S - e) + 1, rank((S - e) + flat)).
    """
    f = as_mask(flat, m.n)
    if m.closure_mask(f) != f:
        raise MatroidError("principal extension requires a flat")
    if m.rank_mask(f) < 1:
        raise MatroidError("principal extension requires a flat of rank >= 1")
    n, r = m.n, m.rank
    new_bit = 1 << n
    bases = set(m.bases)
    for combo in itertools.combinations(range(n), r - 1):
        i_mask = mask_of(combo)
        if m.rank_mask(i_mask) == r - 1 and m.rank_mask(i_mask | f) == r:
            bases.add(i_mask | new_bit)
    return Matroid(n + 1, bases)


def _spoke_flats(r: int) -> list[frozenset[int]]:
    spokes = {frozenset({i, (i + 1) % r}) for i in range(r)}
    return sorted(spokes, key=sorted)


def whirl_like(r: int, ell: int) -> Matroid:
    """Basis b_0..b_{r-1} plus floor((ell-1)/2) points freely placed on the
    span of each cyclically consecutive basis pair."""
    if r < 2 or ell < 3:
        raise MatroidError(f"whirl-like construction needs r >= 2 and ell >= 3, got ({r}, {ell})")
    k = (ell - 1) // 2
    m = uniform(r, r)
    for spoke in _spoke_flats(r):
        for _ in range(k):
            m = principal_extension(m, m.closure_mask(mask_of(spoke)))
    return m


def whirl_like_plus(r: int, ell: int) -> Matroid:
    """whirl_like with one extra point freely placed on the first spoke line."""
    m = whirl_like(r, ell)
    return principal_extension(m, m.closure_mask(mask_of({0, 1})))


def catalog(catalog_id: str) -> Matroid:
    """The fixed labelled matroids of the excluded-minor catalog."""
    if catalog_id in _CATALOG_LINES:
        n, lines = _CATALOG_LINES[catalog_id]
        return rank3_from_lines(n, lines)
    if catalog_id == "FIG2":
        return _fig2()
    raise MatroidError(f"unknown catalog id {catalog_id!r}; expected one of {CATALOG_IDS}")


def _fig2() -> Matroid:
    """Rank-4 catalog entry, built from its circuit description.

    Three-element circuits are the spine line and the three long lines
    hanging off it; four-element circuits are the 4-subsets of each plane
    (spine + one long line) containing neither of its two lines.
    """
    spine = mask_of({0, 1, 2})
    legs = [mask_of({0, 3, 4}), mask_of({1, 5, 6}), mask_of({2, 7, 8})]
    triples = [spine] + legs
    planes = [spine | leg for leg in legs]
    bases = []
    for combo in itertools.combinations(range(9), 4):
        s = mask_of(combo)
        if any(t & s == t for t in triples):
            continue
        if any(s & p == s for p in planes):
            continue
        bases.append(s)
    return Matroid(9, bases)
