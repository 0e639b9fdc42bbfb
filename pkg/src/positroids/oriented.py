"""Chirotopes for the oriented-minor analysis.

Signs are extracted from integer or rational matrices with exact
arithmetic only; floating point input is rejected, since a single wrong
zero/nonzero call invalidates everything downstream.  Storage indexes
sorted tuples; the alternating extension is computed on access from the
transposition parity.

Oriented deletion and contraction act by deletion and contraction on the
underlying matroid.  Deleting a coloop necessarily drops the rank, which
is the same operation as contracting it; both are handled.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import Matroid, MatroidError, basis_exchange_ok, mask_of, set_of

RAMSEY_DIAGONAL = {1: 6, 2: 18}  # R(l+2, l+2) for the l values where it is known


def _parity(seq) -> int:
    """Sign of the permutation sorting ``seq``; 0 when entries repeat."""
    seq = list(seq)
    n = len(seq)
    if len(set(seq)) != n:
        return 0
    sign = 1
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class Chirotope:
    """A sign map on sorted r-tuples of {0..n-1}, not identically zero."""

    n: int
    r: int
    signs: dict

    def sign(self, seq) -> int:
        seq = tuple(seq)
        if len(seq) != self.r:
            raise MatroidError(f"chirotope of rank {self.r} takes {self.r}-tuples")
        p = _parity(seq)
        if p == 0:
            return 0
        return p * self.signs.get(tuple(sorted(seq)), 0)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(t for t, s in self.signs.items() if s)

    def negated(self) -> "Chirotope":
        return Chirotope(self.n, self.r, {t: -s for t, s in self.signs.items()})

    def is_nonnegative(self) -> bool:
        return all(s >= 0 for s in self.signs.values())


def _exact(value):
    if isinstance(value, float):
        raise MatroidError("floating-point matrix entries are rejected; use ints or fractions")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise MatroidError(f"matrix entries must be ints or fractions, got {type(value).__name__}")


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    m = [row[:] for row in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((i for i in range(col, size) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = m[col][col]
        for i in range(col + 1, size):
            if m[i][col] != 0:
                factor = m[i][col] / inv
                for j in range(col, size):
                    m[i][j] -= factor * m[col][j]
    return det


def chirotope_from_matrix(matrix) -> Chirotope:
    """Signs of all maximal minors of a full-row-rank exact matrix."""
    rows = [[_exact(v) for v in row] for row in matrix]
    if not rows:
        raise MatroidError("empty matrix")
    r = len(rows)
    n = len(rows[0])
    if any(len(row) != n for row in rows):
        raise MatroidError("ragged matrix")
    if n > 16:
        raise MatroidError("column count exceeds the supported ground-set size")
    signs = {}
    any_nonzero = False
    for combo in itertools.combinations(range(n), r):
        d = _det([[row[c] for c in combo] for row in rows])
        s = (d > 0) - (d < 0)
        signs[combo] = s
        any_nonzero = any_nonzero or s != 0
    if not any_nonzero:
        raise MatroidError("matrix does not have full row rank")
    return Chirotope(n=n, r=r, signs=signs)


def underlying_matroid(chi: Chirotope) -> Matroid:
    bases = frozenset(mask_of(t) for t in chi.support())
    if not basis_exchange_ok(bases):
        raise MatroidError("sign support violates basis exchange; not a chirotope")
    return Matroid(chi.n, bases)


def _relabel_after_removal(t: tuple[int, ...], e: int) -> tuple[int, ...]:
    return tuple(x - 1 if x > e else x for x in t)


def oriented_contract(chi: Chirotope, e: int) -> Chirotope:
    """Contract element e: new signs are chi(e, x_1, ..., x_{r-1})."""
    if e < 0 or e >= chi.n:
        raise MatroidError(f"element {e} outside ground set")
    if all(s == 0 for t, s in chi.signs.items() if e in t):
        raise MatroidError(f"cannot contract the loop {e}")
    new_signs = {}
    rest = [x for x in range(chi.n) if x != e]
    for combo in itertools.combinations(rest, chi.r - 1):
        new_signs[_relabel_after_removal(combo, e)] = chi.sign((e,) + combo)
    return Chirotope(n=chi.n - 1, r=chi.r - 1, signs=new_signs)


def oriented_delete(chi: Chirotope, e: int) -> Chirotope:
    """Delete element e; a coloop deletion drops the rank like contraction."""
    if e < 0 or e >= chi.n:
        raise MatroidError(f"element {e} outside ground set")
    coloop = all(e in t for t in chi.support())
    if coloop:
        return oriented_contract(chi, e)
    rest = [x for x in range(chi.n) if x != e]
    new_signs = {
        _relabel_after_removal(combo, e): chi.signs[combo]
        for combo in itertools.combinations(rest, chi.r)
    }
    return Chirotope(n=chi.n - 1, r=chi.r, signs=new_signs)


# -- rank-2 monochromatic structure ----------------------------------------------


def _rank2_minor_with_labels(chi: Chirotope, flat_mask: int):
    """Contract a maximal independent subset of the flat, tracking labels."""
    m = underlying_matroid(chi)
    independent: list[int] = []
    acc = 0
    for e in set_of(flat_mask):
        if m.rank_mask(acc | (1 << e)) > len(independent):
            independent.append(e)
            acc |= 1 << e
    labels = list(range(chi.n))
    cur = chi
    for e in sorted(independent, reverse=True):
        pos = labels.index(e)
        cur = oriented_contract(cur, pos)
        labels.pop(pos)
    return cur, labels


def _transitive_order(chi2: Chirotope, subset: tuple[int, ...], polarity: int):
    """Order the subset so every earlier-later pair has the wanted sign."""
    k = len(subset)
    wins = {e: 0 for e in subset}
    for a, b in itertools.combinations(subset, 2):
        s = chi2.sign((a, b))
        if s == 0:
            return None
        wins[a if s == polarity else b] += 1
    if sorted(wins.values()) != list(range(k)):
        return None
    ordered = sorted(subset, key=lambda e: -wins[e])
    for i in range(k):
        for j in range(i + 1, k):
            if chi2.sign((ordered[i], ordered[j])) != polarity:
                return None
    return tuple(ordered)


def monochromatic_line_minor(chi: Chirotope, k: int, polarity: int):
    """A rank-2 oriented minor with k elements all pairwise of one sign.

    Searches every corank-2 flat of the underlying matroid; returns
    (flat, ordered elements) with the ordering realizing the polarity, or
    None.  At most one element per oriented-parallel class is used.
    """
    if k < 2:
        raise MatroidError(f"monochromatic search needs k >= 2, got {k}")
    if polarity not in (1, -1):
        raise MatroidError("polarity must be +1 or -1")
    m = underlying_matroid(chi)
    if m.rank < 2:
        return None
    for flat_mask in m.flats_by_rank[m.rank - 2]:
        chi2, labels = _rank2_minor_with_labels(chi, flat_mask)
        reps = _parallel_class_reps(chi2)
        if len(reps) < k:
            continue
        for combo in itertools.combinations(reps, k):
            ordered = _transitive_order(chi2, combo, polarity)
            if ordered is not None:
                return set_of(flat_mask), tuple(labels[e] for e in ordered)
    return None


def _parallel_class_reps(chi2: Chirotope) -> list[int]:
    n = chi2.n
    loops = [e for e in range(n) if all(chi2.sign((e, f)) == 0 for f in range(n) if f != e)]
    reps: list[int] = []
    for e in range(n):
        if e in loops:
            continue
        if any(chi2.sign((e, f)) == 0 for f in reps):
            continue
        reps.append(e)
    return reps


@dataclass
class RamseyScanReport:
    line_parameter: int
    ramsey_number: int | None
    threshold_rank_denominator: Fraction | None
    threshold_geometric: Fraction | None
    thresholds_differ: bool | None
    best: dict

    def summary_lines(self) -> list[str]:
        ell = self.line_parameter
        out = [f"ramsey scan, l = {ell} (target monochromatic size {ell + 2})"]
        if self.ramsey_number is None:
            out.append(f"  R({ell + 2},{ell + 2}) is not known; no threshold computed")
        else:
            out.append(f"  R({ell + 2},{ell + 2}) = {self.ramsey_number}")
            out.append(
                f"  element thresholds: (n0^r - 1)/(r - 1) = {self.threshold_rank_denominator}"
                f" vs (n0^r - 1)/(n0 - 1) = {self.threshold_geometric}"
            )
            if self.thresholds_differ:
                out.append("  note: the two threshold formulas disagree; both are reported")
        for pol, label in ((1, "+"), (-1, "-")):
            size, witness = self.best[pol]
            if witness is None:
                out.append(f"  polarity {label}: largest monochromatic subset {size}")
            else:
                flat, elems = witness
                out.append(
                    f"  polarity {label}: largest monochromatic subset {size}"
                    f" via flat {sorted(flat)} order {list(elems)}"
                )
        return out


def ramsey_scan(chi: Chirotope, ell: int) -> RamseyScanReport:
    """Largest monochromatic rank-2 subsets per polarity over all
    corank-2 flat contractions, with both candidate size thresholds."""
    if ell < 1:
        raise MatroidError("line parameter must be >= 1")
    m = underlying_matroid(chi)
    if not m.is_simple():
        raise MatroidError("ramsey scan expects a simple underlying matroid")
    best = {1: (0, None), -1: (0, None)}
    if m.rank >= 2:
        for flat_mask in m.flats_by_rank[m.rank - 2]:
            chi2, labels = _rank2_minor_with_labels(chi, flat_mask)
            reps = _parallel_class_reps(chi2)
            for polarity in (1, -1):
                for size in range(len(reps), best[polarity][0], -1):
                    found = None
                    for combo in itertools.combinations(reps, size):
                        ordered = _transitive_order(chi2, combo, polarity)
                        if ordered is not None:
                            found = (set_of(flat_mask), tuple(labels[e] for e in ordered))
                            break
                    if found is not None:
                        best[polarity] = (size, found)
                        break
    n0 = RAMSEY_DIAGONAL.get(ell)
    if n0 is None:
        thr_rank = thr_geo = None
        differ = None
    else:
        thr_rank = Fraction(n0**chi.r - 1, chi.r - 1) if chi.r > 1 else None
        thr_geo = Fraction(n0**chi.r - 1, n0 - 1)
        differ = thr_rank is not None and thr_rank != thr_geo
    return RamseyScanReport(
        line_parameter=ell,
        ramsey_number=n0,
        threshold_rank_denominator=thr_rank,
        threshold_geometric=thr_geo,
        thresholds_differ=differ,
        best=best,
    )
