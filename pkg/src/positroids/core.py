"""Matroids on small ground sets, carried by their basis families.

Ground sets are {0, ..., n-1} with n <= 16.  Subsets of the ground set are
represented as Python ints used as bitmasks; the helpers below convert
between masks and iterables of element indices.  Public methods accept
either form and return frozensets, while the ``*_mask`` variants stay in
mask space for the hot enumeration loops.

Everything here is immutable after construction: matroids can be shared
freely, and all operations are pure functions returning new values.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_GROUND = 16


class MatroidError(ValueError):
    """Invalid matroid data or an operation applied outside its domain."""


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def set_of(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def bits(mask: int) -> Iterator[int]:
    """Yield the element indices of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def as_mask(subset, n: int) -> int:
    """Coerce an int mask or an iterable of indices to a validated mask."""
    if isinstance(subset, int):
        m = subset
    else:
        m = mask_of(subset)
    if m < 0 or m >> n:
        raise MatroidError(f"subset {m:#x} has elements outside the {n}-element ground set")
    return m


def submasks_of_size(mask: int, k: int) -> Iterator[int]:
    for combo in itertools.combinations(tuple(bits(mask)), k):
        yield mask_of(combo)


class Matroid:
    """A matroid given by its ground-set size and family of bases.

    Bases are stored as a frozenset of bitmasks, all of equal popcount
    (the rank).  The rank function, closure, flats, minors, connectivity
    and simplification are all derived from the basis family.
    """

    def __init__(self, n: int, bases: Iterable):
        if n < 0 or n > MAX_GROUND:
            raise MatroidError(f"ground-set size {n} outside supported range 0..{MAX_GROUND}")
        base_masks = frozenset(as_mask(b, n) for b in bases)
        if not base_masks:
            raise MatroidError("a matroid needs at least one basis")
        sizes = {b.bit_count() for b in base_masks}
        if len(sizes) != 1:
            raise MatroidError(f"bases of unequal size: {sorted(sizes)}")
        self.n = n
        self.bases = base_masks
        self.rank = sizes.pop()
        self._full = (1 << n) - 1

    @classmethod
    def from_flats(cls, n: int, flats: Iterable) -> "Matroid":
        """Build a matroid from the complete family of its flats.

        The rank of a flat is its height in the containment order; bases
        are the sets of full-rank size whose closure is the whole ground
        set.  The input must really be a matroid flat family (F1-F3); no
        axiom checking happens here.
        """
        flat_masks = sorted({as_mask(f, n) for f in flats}, key=lambda m: m.bit_count())
        full = (1 << n) - 1
        if full not in flat_masks:
            raise MatroidError("flat family must contain the full ground set")
        height: dict[int, int] = {}
        for f in flat_masks:
            below = [height[g] for g in flat_masks if g != f and g & f == g]
            height[f] = max(below, default=-1) + 1
        rank = height[full]
        flat_set = set(flat_masks)

        def cl(m: int) -> int:
            out = full
            for f in flat_set:
                if f & m == m and f & out != out:
                    out &= f
            return out

        bases = [s for s in submasks_of_size(full, rank) if cl(s) == full]
        return cls(n, bases)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Matroid) and self.n == other.n and self.bases == other.bases

    def __hash__(self) -> int:
        return hash((self.n, self.bases))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.bases)})"

    # -- rank and closure --------------------------------------------------

    def rank_mask(self, mask: int) -> int:
        if not mask:
            return 0
        return max((b & mask).bit_count() for b in self.bases)

    def rank_of(self, subset) -> int:
        return self.rank_mask(as_mask(subset, self.n))

    def is_independent_mask(self, mask: int) -> bool:
        k = mask.bit_count()
        if k > self.rank:
            return False
        return any((b & mask) == mask for b in self.bases) if k == self.rank else self.rank_mask(mask) == k

    def closure_mask(self, mask: int) -> int:
        r = self.rank_mask(mask)
        out = mask
        rest = self._full & ~mask
        for e in bits(rest):
            if self.rank_mask(mask | (1 << e)) == r:
                out |= 1 << e
        return out

    def closure(self, subset) -> frozenset[int]:
        return set_of(self.closure_mask(as_mask(subset, self.n)))

    # -- flats -------------------------------------------------------------

    @cached_property
    def flats_by_rank(self) -> tuple[tuple[int, ...], ...]:
        """All flats as masks, grouped by rank, built by iterated closure.

        Level k+1 is generated from level k by closing F + e for every
        e outside F, which avoids touching all 2^n subsets.
        """
        levels = [(self.closure_mask(0),)]
        for _ in range(self.rank):
            nxt = set()
            for f in levels[-1]:
                for e in bits(self._full & ~f):
                    nxt.add(self.closure_mask(f | (1 << e)))
            levels.append(tuple(sorted(nxt)))
        return tuple(levels)

    def flats(self) -> list[list[frozenset[int]]]:
        return [[set_of(f) for f in level] for level in self.flats_by_rank]

    def points_masks(self) -> tuple[int, ...]:
        return self.flats_by_rank[1] if self.rank >= 1 else ()

    def lines_masks(self) -> tuple[int, ...]:
        return self.flats_by_rank[2] if self.rank >= 2 else ()

    def long_lines_masks(self) -> list[int]:
        """Rank-2 flats containing at least three points (rank-1 flats)."""
        pts = self.points_masks()
        out = []
        for line in self.lines_masks():
            if sum(1 for p in pts if p & line == p) >= 3:
                out.append(line)
        return out

    def long_lines(self) -> list[frozenset[int]]:
        return [set_of(m) for m in self.long_lines_masks()]

    def num_points(self) -> int:
        """epsilon(M): the number of rank-1 flats."""
        return len(self.points_masks())

    # -- simplicity and parallel structure ----------------------------------

    def loops_mask(self) -> int:
        return self.closure_mask(0)

    def parallel_classes(self) -> list[int]:
        """Non-loop elements grouped into parallel classes, as masks."""
        loops = self.loops_mask()
        return [p & ~loops for p in self.points_masks()]

    def is_simple(self) -> bool:
        if self.loops_mask():
            return False
        return all(p.bit_count() == 1 for p in self.points_masks())

    def simplify(self) -> tuple["Matroid", list[frozenset[int]]]:
        """Drop loops and collapse each parallel class to its least element.

        Returns the simple matroid together with the parallel classes of
        the original (loops excluded).  A rank-0 matroid simplifies to the
        empty matroid.
        """
        classes = self.parallel_classes()
        if not classes:
            return Matroid(0, [0]), []
        keep = mask_of(min(bits(c)) for c in classes)
        return self.delete(self._full & ~keep), [set_of(c) for c in classes]

    # -- minors --------------------------------------------------------------

    def _compact(self, keep_mask: int) -> tuple[dict[int, int], int]:
        relabel = {old: new for new, old in enumerate(bits(keep_mask))}
        return relabel, keep_mask.bit_count()

    def delete(self, subset) -> "Matroid":
        """M restricted to the complement of ``subset``, relabelled 0-based."""
        d = as_mask(subset, self.n)
        keep = self._full & ~d
        if not keep and self.n:
            raise MatroidError("cannot delete the entire ground set")
        r = self.rank_mask(keep)
        relabel, n2 = self._compact(keep)
        new_bases = set()
        for b in self.bases:
            t = b & keep
            if t.bit_count() == r:
                new_bases.add(mask_of(relabel[e] for e in bits(t)))
        return Matroid(n2, new_bases)

    def contract(self, subset) -> "Matroid":
        """M/C on the complement of C, via a maximal independent subset of C."""
        c = as_mask(subset, self.n)
        keep = self._full & ~c
        if not keep and self.n:
            raise MatroidError("cannot contract the entire ground set")
        rc = self.rank_mask(c)
        relabel, n2 = self._compact(keep)
        new_bases = set()
        for b in self.bases:
            if (b & c).bit_count() == rc:
                new_bases.add(mask_of(relabel[e] for e in bits(b & keep)))
        return Matroid(n2, new_bases)

    def minor(self, contracted, deleted) -> tuple["Matroid", tuple[int, ...]]:
        """Contract then delete, returning the minor and its surviving labels."""
        c = as_mask(contracted, self.n)
        d = as_mask(deleted, self.n)
        if c & d:
            raise MatroidError("contraction and deletion sets overlap")
        m = self.contract(c)
        kept_after_c = [e for e in range(self.n) if not (c >> e) & 1]
        d_new = mask_of(i for i, e in enumerate(kept_after_c) if (d >> e) & 1)
        m2 = m.delete(d_new)
        survivors = tuple(e for e in kept_after_c if not (d >> e) & 1)
        return m2, survivors

    def relabel(self, mapping: Sequence[int]) -> "Matroid":
        """Apply the bijection e -> mapping[e] to the ground set."""
        if sorted(mapping) != list(range(self.n)):
            raise MatroidError("relabelling is not a bijection of the ground set")
        return Matroid(self.n, (mask_of(mapping[e] for e in bits(b)) for b in self.bases))

    # -- connectivity ----------------------------------------------------------

    def components(self) -> list[frozenset[int]]:
        """Finest partition of E into separators; loops are singletons.

        Uses the fundamental-circuit graph of one fixed basis: e outside B
        is tied to each b in B with (B - b) + e again a basis.
        """
        if self.n == 0:
            return []
        b0 = min(self.bases)
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            parent[find(x)] = find(y)

        outside = self._full & ~b0
        for e in bits(outside):
            if self.rank_mask(1 << e) == 0:
                continue
            for b in bits(b0):
                if (b0 & ~(1 << b)) | (1 << e) in self.bases:
                    union(e, b)
        groups: dict[int, set[int]] = {}
        for e in range(self.n):
            groups.setdefault(find(e), set()).add(e)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_3connected(self) -> bool:
        """Tutte 3-connectivity: connected, at least 4 elements, no 2-separation."""
        if self.n < 4 or not self.is_connected():
            return False
        for x in range(1, self._full):
            if not x & 1:  # fix element 0 on one side
                continue
            y = self._full & ~x
            if x.bit_count() < 2 or y.bit_count() < 2:
                continue
            if self.rank_mask(x) + self.rank_mask(y) - self.rank <= 1:
                return False
        return True

    # -- validation helpers (used by tests) -------------------------------------

    def satisfies_basis_exchange(self) -> bool:
        return basis_exchange_ok(self.bases)

    def restriction_to(self, subset) -> "Matroid":
        return self.delete(self._full & ~as_mask(subset, self.n))


def basis_exchange_ok(bases: frozenset[int]) -> bool:
    """Check the basis-exchange axiom directly on a family of masks."""
    blist = list(bases)
    for b1 in blist:
        for b2 in blist:
            diff = b1 & ~b2
            for x in bits(diff):
                ok = False
                for y in bits(b2 & ~b1):
                    if (b1 ^ (1 << x)) | (1 << y) in bases:
                        ok = True
                        break
                if not ok:
                    return False
    return True


# -- text format ----------------------------------------------------------------
#
# Line 1: "matroid <n> <rank>"; one basis per line as strictly increasing
# 0-based indices; "#" starts a comment; a blank line terminates the record.
# Bases are emitted in lexicographically sorted order so files are
# byte-reproducible.


def to_text(m: Matroid) -> str:
    lines = [f"matroid {m.n} {m.rank}"]
    if m.rank == 0:
        # the empty basis would read as a terminating blank line; mark it
        lines.append("-")
    else:
        rows = sorted(tuple(bits(b)) for b in m.bases)
        lines.extend(" ".join(str(e) for e in row) for row in rows)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Matroid:
    matroids = list(iter_matroids(text.splitlines()))
    if len(matroids) != 1:
        raise MatroidError(f"expected exactly one matroid record, found {len(matroids)}")
    return matroids[0]


def iter_matroids(lines: Iterable[str]) -> Iterator[Matroid]:
    """Parse a stream of matroid records; raises with the offending line number."""
    header: tuple[int, int] | None = None
    bases: list[int] = []
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if header is not None:
                yield _finish_record(header, bases, lineno)
                header, bases = None, []
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "matroid":
                raise MatroidError(f"line {lineno}: expected 'matroid <n> <rank>', got {raw!r}")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise MatroidError(f"line {lineno}: non-integer matroid header in {raw!r}") from None
            continue
        if line == "-":
            bases.append(0)
            continue
        try:
            idx = [int(tok) for tok in line.split()]
        except ValueError:
            raise MatroidError(f"line {lineno}: non-integer basis element in {raw!r}") from None
        if idx != sorted(set(idx)):
            raise MatroidError(f"line {lineno}: basis must be strictly increasing, got {raw!r}")
        if idx and (min(idx) < 0 or max(idx) >= header[0]):
            raise MatroidError(f"line {lineno}: basis element outside ground set in {raw!r}")
        bases.append(mask_of(idx))
    if header is not None:
        yield _finish_record(header, bases, lineno)


def _finish_record(header: tuple[int, int], bases: list[int], lineno: int) -> Matroid:
    n, rank = header
    if not bases:
        raise MatroidError(f"line {lineno}: matroid record with no bases")
    m = Matroid(n, bases)
    if m.rank != rank:
        raise MatroidError(f"line {lineno}: header rank {rank} but bases have size {m.rank}")
    return m


def read_matroid(path) -> Matroid:
    with open(path, "r", encoding="utf-8") as fh:
        return from_text(fh.read())


def write_matroid(path, m: Matroid) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_text(m))
