"""Minor detection and the structural hypothesis detectors.

``has_minor`` searches contraction sets restricted to independent sets of
exactly the rank difference (a complete reduction, property-tested against
the unrestricted search in the test suite), then deletion sets pruned by
point and long-line counts before any isomorphism test.

The exhaustive corpus of simple rank-3 matroids is generated as families
of long lines (>= 3 points, pairwise sharing at most one point) grown one
point at a time, with isomorphism-class deduplication at every level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Matroid, MatroidError, bits, mask_of, set_of
from .constructions import CATALOG_IDS, catalog, rank3_from_lines, uniform
from .isomorphism import are_isomorphic, dedup_by_isomorphism

CATALOG_SEARCH_ORDER = ("M4", "M6", "M7", "M8", "M5", "M1", "M2", "M3", "FIG2")


@dataclass(frozen=True)
class MinorWitness:
    """A certificate that contracting/deleting the named host elements and
    relabelling by ``iso`` yields exactly the target's basis family."""

    contracted: frozenset[int]
    deleted: frozenset[int]
    iso: dict[int, int]

    def check(self, host: Matroid, target: Matroid) -> bool:
        if self.contracted & self.deleted:
            return False
        minor, survivors = host.minor(mask_of(self.contracted), mask_of(self.deleted))
        if set(survivors) != set(self.iso):
            return False
        relabelled = {
            mask_of(self.iso[survivors[i]] for i in bits(b)) for b in minor.bases
        }
        return minor.n == target.n and relabelled == target.bases


def has_minor(host: Matroid, target: Matroid) -> MinorWitness | None:
    """Search for the target as a minor of the host, smallest witness first."""
    if target.n > host.n or target.rank > host.rank:
        return None
    diff = host.rank - target.rank
    t_points = target.num_points()
    t_lines = len(target.long_lines_masks()) if target.rank >= 2 else 0
    t_nbases = len(target.bases)

    for c_combo in itertools.combinations(range(host.n), diff):
        c_mask = mask_of(c_combo)
        if host.rank_mask(c_mask) != diff:
            continue
        contracted = host.contract(c_mask)
        kept1 = [e for e in range(host.n) if not (c_mask >> e) & 1]
        if contracted.num_points() < t_points:
            continue
        if target.rank >= 2 and len(contracted.long_lines_masks()) < t_lines:
            continue
        for k_combo in itertools.combinations(range(contracted.n), target.n):
            k_mask = mask_of(k_combo)
            if contracted.rank_mask(k_mask) != target.rank:
                continue
            candidate = contracted.restriction_to(k_mask)
            if len(candidate.bases) != t_nbases or candidate.num_points() != t_points:
                continue
            mapping = are_isomorphic(candidate, target)
            if mapping is None:
                continue
            survivors = [kept1[i] for i in k_combo]
            deleted = frozenset(range(host.n)) - set(c_combo) - set(survivors)
            witness = MinorWitness(
                contracted=frozenset(c_combo),
                deleted=deleted,
                iso={orig: mapping[j] for j, orig in enumerate(survivors)},
            )
            return witness
    return None


def has_uniform_line_minor(host: Matroid, k: int) -> bool:
    """Whether the host has a rank-2 uniform minor on k elements.

    Equivalent to the generic search against U_{2,k}: some corank-2 flat F
    has a contraction with at least k points, or the host itself is a
    rank-2 matroid with k points.
    """
    if k < 2:
        raise MatroidError(f"uniform line minors need k >= 2, got {k}")
    if host.rank < 2:
        return False
    if host.rank == 2:
        return host.num_points() >= k
    for f in host.flats_by_rank[host.rank - 2]:
        if host.contract(f).num_points() >= k:
            return True
    return False


def prop31_hypothesis(host: Matroid):
    """A long line with three points each on a second long line, if any.

    Returns (line, (e1, e2, e3)) as frozenset and sorted tuple, or None.
    """
    if not host.is_simple() or host.rank != 3:
        raise MatroidError("the rank-3 hypothesis detector needs a simple rank-3 matroid")
    lines = host.long_lines_masks()
    on_two = [e for e in range(host.n) if sum(1 for L in lines if (L >> e) & 1) >= 2]
    busy = mask_of(on_two)
    for line in sorted(lines):
        hits = tuple(bits(line & busy))
        if len(hits) >= 3:
            return set_of(line), hits[:3]
    return None


def prop32_hypothesis(host: Matroid):
    """A line with three points matched to three planes through it, where
    each point lies on >= 2 long lines inside its plane.  None if absent."""
    if not host.is_simple() or host.rank != 4:
        raise MatroidError("the rank-4 hypothesis detector needs a simple rank-4 matroid")
    long_lines = host.long_lines_masks()
    planes = host.flats_by_rank[3]
    for line in sorted(long_lines):
        pts = tuple(bits(line))
        planes_thru = [p for p in planes if p & line == line]
        if len(planes_thru) < 3:
            continue
        # edge (e, P) iff e is on >= 2 long lines contained in P
        good: dict[int, list[int]] = {}
        for e in pts:
            good[e] = [
                p for p in planes_thru
                if sum(1 for L in long_lines if (L >> e) & 1 and L & p == L) >= 2
            ]
        for trio in itertools.combinations(pts, 3):
            for planes_pick in itertools.permutations(planes_thru, 3):
                if all(planes_pick[i] in good[trio[i]] for i in range(3)):
                    return (
                        set_of(line),
                        trio,
                        tuple(set_of(p) for p in planes_pick),
                    )
    return None


def find_catalog_minor(host: Matroid):
    """First catalog entry appearing as a minor, searched small targets first."""
    for cid in CATALOG_SEARCH_ORDER:
        target = catalog(cid)
        witness = has_minor(host, target)
        if witness is not None:
            return cid, witness
    return None


# -- exhaustive corpus of simple rank-3 matroids ----------------------------------
#
# A simple rank-3 matroid on [n] is the same thing as a family of "long
# lines": subsets of size >= 3, pairwise sharing at most one point, none
# covering the whole ground set.  Families are grown one point at a time;
# a new point p is placed on a set of new/extended lines described by
# disjoint sets of old points.

_FAMILY_CACHE: dict[int, list[tuple[int, ...]]] = {}


def _extensions(m: int, lines: tuple[int, ...]):
    """All ways to add point m to an m-point family, as new line families."""
    candidates = []
    for size in range(2, m + 1):
        for combo in itertools.combinations(range(m), size):
            t = mask_of(combo)
            if all((L & t).bit_count() <= 1 or L & t == L for L in lines):
                candidates.append(t)
    results = []

    def grow(start: int, chosen: tuple[int, ...], used: int) -> None:
        absorbed = [L for L in lines if any(L & t == L for t in chosen)]
        new_lines = tuple(sorted(
            [L for L in lines if L not in absorbed]
            + [t | (1 << m) for t in chosen]
        ))
        results.append(new_lines)
        for i in range(start, len(candidates)):
            t = candidates[i]
            if t & used:
                continue
            grow(i + 1, chosen + (t,), used | t)

    grow(0, (), 0)
    return results


def rank3_line_families(n: int) -> list[tuple[int, ...]]:
    """Isomorphism-class representatives of simple rank-3 matroids on
    exactly n points, each given by its long-line family."""
    if n < 3:
        return []
    if n in _FAMILY_CACHE:
        return _FAMILY_CACHE[n]
    if n == 3:
        reps = [()]
    else:
        parents = list(rank3_line_families(n - 1))
        parents.append(((1 << (n - 1)) - 1,))  # U_{2,n-1}: everything collinear
        full_new = (1 << n) - 1
        seen_children: list[tuple[Matroid, tuple[int, ...]]] = []
        buckets: dict = {}
        for lines in parents:
            for child in _extensions(n - 1, lines):
                if any(L == full_new for L in child):
                    continue  # rank dropped to 2; represented synthetically
                key = _family_fingerprint(n, child)
                bucket = buckets.setdefault(key, [])
                mat = _family_matroid(n, child)
                if not any(are_isomorphic(mat, prev) is not None for prev, _ in bucket):
                    bucket.append((mat, child))
                    seen_children.append((mat, child))
        reps = [child for _, child in seen_children]
    _FAMILY_CACHE[n] = reps
    return reps


def _family_matroid(n: int, lines: tuple[int, ...]) -> Matroid:
    return rank3_from_lines(n, [set_of(L) for L in lines])


def _family_fingerprint(n: int, lines: tuple[int, ...]):
    degrees = [0] * n
    for L in lines:
        for e in bits(L):
            degrees[e] += 1
    per_line = tuple(sorted(
        (L.bit_count(), tuple(sorted(degrees[e] for e in bits(L)))) for L in lines
    ))
    return (n, tuple(sorted(degrees)), per_line)


def simple_rank3_matroids(n: int) -> list[Matroid]:
    """All simple rank-3 matroids on exactly n elements, one per class."""
    return [_family_matroid(n, lines) for lines in rank3_line_families(n)]
