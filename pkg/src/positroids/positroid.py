"""Two independent positroid oracles plus exhaustive enumeration.

Oracle (a): Bonin's flat-interval criterion.  A connected matroid is a
positroid iff some total ordering of the ground set makes every flat F
with both M|F and M/F connected an interval, either itself or via its
complement; this is the same as F being a cyclic interval, so the search
runs over cyclic orders with element 0 pinned first, reflections halved,
and partial orders abandoned as soon as some relevant flat can no longer
end up a cyclic arc.

Oracle (b): generation from decorated permutations through Grassmann
necklaces and the shifted Gale-order basis condition.  The two oracles
never share code; their agreement on everything up to seven elements is
part of the acceptance suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import Matroid, MatroidError, bits, mask_of, set_of
from .isomorphism import are_isomorphic, canonical_form, iso_fingerprint

ENUMERATION_CAP = 9


# -- Bonin's criterion ---------------------------------------------------------


def relevant_flats(m: Matroid) -> list[frozenset[int]]:
    """Proper nonempty flats whose restriction and contraction are connected."""
    return [set_of(f) for f in _relevant_flat_masks(m)]


def _relevant_flat_masks(m: Matroid) -> list[int]:
    if not m.is_connected():
        raise MatroidError("relevant flats are defined for connected matroids")
    full = (1 << m.n) - 1
    out = []
    for level in m.flats_by_rank[:-1]:
        for f in level:
            if f == 0 or f == full:
                continue
            if m.restriction_to(f).is_connected() and m.contract(f).is_connected():
                out.append(f)
    return out


def ordering_is_bonin_witness(m: Matroid, order, flats=None) -> bool:
    """Direct re-validation: every relevant flat is a cyclic arc in ``order``."""
    if sorted(order) != list(range(m.n)):
        return False
    if flats is None:
        flats = _relevant_flat_masks(m)
    else:
        flats = [mask_of(f) if not isinstance(f, int) else f for f in flats]
    pos = [0] * m.n
    for p, e in enumerate(order):
        pos[e] = p
    n = m.n
    full = (1 << n) - 1
    for f in flats:
        p = 0
        for e in bits(f):
            p |= 1 << pos[e]
        if p == 0 or p == full:
            continue
        # single circular run of ones: exactly one 1 -> 0 boundary
        boundaries = 0
        for i in range(n):
            if (p >> i) & 1 and not (p >> ((i + 1) % n)) & 1:
                boundaries += 1
        if boundaries != 1:
            return False
    return True


def bonin_check(m: Matroid):
    """A witness cyclic ordering under which every relevant flat is an arc,
    or None when no ordering exists.  Input must be connected."""
    flats = _relevant_flat_masks(m)
    n = m.n
    if n == 1:
        return (0,)
    flat_sizes = [f.bit_count() for f in flats]

    order = [0] * n
    placed_elems = 1
    pos_of_flat = [1 if f & 1 else 0 for f in flats]  # element 0 sits at position 0
    placed_in_flat = [1 if f & 1 else 0 for f in flats]
    used = 1  # element mask

    def flats_ok(k: int) -> bool:
        full_k = (1 << (k + 1)) - 1
        remaining = n - 1 - k
        for idx, p in enumerate(pos_of_flat):
            if p == 0 or p == full_k:
                continue
            low = p & -p
            if (p + low) & p == 0:
                # contiguous run: safe while it touches an end of the placed arc
                if p & 1 or (p >> k) & 1:
                    continue
                if flat_sizes[idx] != placed_in_flat[idx]:
                    return False
                continue
            comp = full_k ^ p
            low = comp & -comp
            if (comp + low) & comp == 0 and not (comp & 1) and not (comp >> k) & 1:
                # prefix + suffix: the arc must wrap through every unplaced slot
                if flat_sizes[idx] - placed_in_flat[idx] != remaining:
                    return False
                continue
            return False
        return True

    def dfs(k: int) -> bool:
        nonlocal used, placed_elems
        if k == n:
            return True
        for e in range(1, n):
            bit = 1 << e
            if used & bit:
                continue
            if k == n - 1 and e < order[1]:
                continue  # reflection halving
            order[k] = e
            used |= bit
            touched = []
            for idx in range(len(flats)):
                if (flats[idx] >> e) & 1:
                    pos_of_flat[idx] |= 1 << k
                    placed_in_flat[idx] += 1
                    touched.append(idx)
            if flats_ok(k) and dfs(k + 1):
                return True
            for idx in touched:
                pos_of_flat[idx] &= ~(1 << k)
                placed_in_flat[idx] -= 1
            used &= ~bit
        return False

    if dfs(1):
        witness = tuple(order)
        assert ordering_is_bonin_witness(m, witness, flats)
        return witness
    return None


def is_positroid(m: Matroid) -> bool:
    """Componentwise Bonin check; single-element components pass trivially."""
    for comp in m.components():
        if len(comp) == 1:
            continue
        if bonin_check(m.restriction_to(mask_of(comp))) is None:
            return False
    return True


# -- decorated permutations and Grassmann necklaces ---------------------------------


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation of {0..n-1} with each fixed point flagged loop or coloop."""

    perm: tuple[int, ...]
    coloops: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise MatroidError("decorated permutation needs a bijection of {0..n-1}")
        fixed = {i for i in range(n) if self.perm[i] == i}
        if not self.coloops <= fixed:
            raise MatroidError("coloop flags must sit on fixed points")

    @property
    def n(self) -> int:
        return len(self.perm)

    def fixed_points(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if self.perm[i] == i)

    def decoration(self, i: int) -> str:
        if self.perm[i] != i:
            raise MatroidError(f"{i} is not a fixed point")
        return "coloop" if i in self.coloops else "loop"


@dataclass(frozen=True)
class GrassmannNecklace:
    """A cyclic sequence I_0..I_{n-1} of equal-size subsets with
    I_{i+1} containing I_i - {i}."""

    terms: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.terms)

    def validate(self) -> None:
        n = self.n
        sizes = {len(t) for t in self.terms}
        if len(sizes) != 1:
            raise MatroidError("necklace terms must all have the same size")
        for i in range(n):
            if not self.terms[i] - {i} <= self.terms[(i + 1) % n]:
                raise MatroidError(f"necklace violates I_{i+1} >= I_{i} - {{{i}}}")
        for t in self.terms:
            if any(e < 0 or e >= n for e in t):
                raise MatroidError("necklace term outside the ground set")


def necklace_from_decorated_permutation(dp: DecoratedPermutation) -> GrassmannNecklace:
    """I_i collects j with pi^{-1}(j) weakly after j in the i-shifted order,
    skipping loop fixed points and always keeping coloop fixed points."""
    n = dp.n
    inv = [0] * n
    for i, v in enumerate(dp.perm):
        inv[v] = i
    terms = []
    for i in range(n):
        term = set(dp.coloops)
        for j in range(n):
            if dp.perm[j] == j:
                continue
            if (j - i) % n <= (inv[j] - i) % n:
                term.add(j)
        terms.append(frozenset(term))
    neck = GrassmannNecklace(tuple(terms))
    neck.validate()
    return neck


def positroid_from_necklace(neck: GrassmannNecklace) -> Matroid:
    """Bases are the subsets dominating every necklace term in the
    corresponding shifted Gale order."""
    neck.validate()
    n = neck.n
    r = len(neck.terms[0])
    if r == 0:
        return Matroid(n, [0])
    shifted = []
    for i in range(n):
        shifted.append(tuple(sorted((a - i) % n for a in neck.terms[i])))
    bases = []
    for combo in itertools.combinations(range(n), r):
        ok = True
        for i in range(n):
            cand = sorted((b - i) % n for b in combo)
            ref = shifted[i]
            if any(cand[t] < ref[t] for t in range(r)):
                ok = False
                break
        if ok:
            bases.append(mask_of(combo))
    if not bases:
        raise MatroidError("necklace admitted no basis; invariants must be broken")
    return Matroid(n, bases)


def positroid_from_decorated_permutation(dp: DecoratedPermutation) -> Matroid:
    return positroid_from_necklace(necklace_from_decorated_permutation(dp))


def decorated_permutations(n: int):
    """Yield every decorated permutation on n elements."""
    for perm in itertools.permutations(range(n)):
        fixed = [i for i in range(n) if perm[i] == i]
        for k in range(len(fixed) + 1):
            for chosen in itertools.combinations(fixed, k):
                yield DecoratedPermutation(perm, frozenset(chosen))


# -- exhaustive enumeration -----------------------------------------------------------


@dataclass
class PositroidEnumeration:
    n: int
    filters: dict
    scanned: int
    matched: int
    classes: list[Matroid]


def _necklace_rank(perm: tuple[int, ...], inv: list[int], coloops) -> int:
    n = len(perm)
    r = len(coloops)
    for j in range(n):
        if perm[j] != j and j <= inv[j]:
            r += 1
    return r


def _passes_filters(m: Matroid, rank, simple, connected, three_connected, no_line_minor) -> bool:
    from .minors import has_uniform_line_minor

    if rank is not None and m.rank != rank:
        return False
    if simple and not m.is_simple():
        return False
    if connected and not m.is_connected():
        return False
    if three_connected and not m.is_3connected():
        return False
    if no_line_minor is not None and has_uniform_line_minor(m, no_line_minor):
        return False
    return True


def _scan_partition(args):
    """Enumerate decorated permutations with perm[0] fixed to one value."""
    (n, first, rank, simple, connected, three_connected, no_line_minor) = args
    scanned = 0
    matched = 0
    survivors: list[tuple[int, ...]] = []
    rest = [x for x in range(n) if x != first]
    for tail in itertools.permutations(rest):
        perm = (first,) + tail
        inv = [0] * n
        for i, v in enumerate(perm):
            inv[v] = i
        fixed = [i for i in range(n) if perm[i] == i]
        for k in range(len(fixed) + 1):
            for chosen in itertools.combinations(fixed, k):
                scanned += 1
                if simple and len(chosen) < len(fixed):
                    continue  # any loop fixed point kills simplicity
                if rank is not None and _necklace_rank(perm, inv, chosen) != rank:
                    continue
                dp = DecoratedPermutation(perm, frozenset(chosen))
                m = positroid_from_decorated_permutation(dp)
                if _passes_filters(m, rank, simple, connected, three_connected, no_line_minor):
                    matched += 1
                    survivors.append(tuple(sorted(m.bases)))
    return scanned, matched, survivors


def enumerate_positroids(
    n: int,
    rank: int | None = None,
    simple: bool = False,
    connected: bool = False,
    three_connected: bool = False,
    no_uniform_line_minor: int | None = None,
    threads: int = 1,
) -> PositroidEnumeration:
    """All positroids on n elements up to isomorphism, after filtering.

    Iterates every decorated permutation, builds its positroid, filters,
    and deduplicates; the result list is sorted by canonical form so runs
    are deterministic regardless of thread count.
    """
    if n < 1:
        raise MatroidError("enumeration needs n >= 1")
    if n > ENUMERATION_CAP:
        raise MatroidError(
            f"exhaustive enumeration is capped at n = {ENUMERATION_CAP}; {n} was requested"
        )
    jobs = [
        (n, first, rank, simple, connected, three_connected, no_uniform_line_minor)
        for first in range(n)
    ]
    if threads > 1 and n >= 4:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(min(threads, n)) as pool:
            parts = pool.map(_scan_partition, jobs)
    else:
        parts = [_scan_partition(job) for job in jobs]

    scanned = sum(p[0] for p in parts)
    matched = sum(p[1] for p in parts)
    buckets: dict = {}
    classes: list[Matroid] = []
    for _, _, survivors in parts:
        for bases in survivors:
            m = Matroid(n, bases)
            key = iso_fingerprint(m)
            bucket = buckets.setdefault(key, [])
            if not any(are_isomorphic(m, rep) is not None for rep in bucket):
                bucket.append(m)
                classes.append(m)
    classes.sort(key=canonical_form)
    filters = {
        "rank": rank,
        "simple": simple,
        "connected": connected,
        "three_connected": three_connected,
        "no_uniform_line_minor": no_uniform_line_minor,
    }
    return PositroidEnumeration(n=n, filters=filters, scanned=scanned, matched=matched, classes=classes)
