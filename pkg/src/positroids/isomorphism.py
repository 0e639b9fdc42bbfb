"""Isomorphism testing and canonical forms for small matroids.

Both routines work on the basis family.  A Weisfeiler-Leman style colour
refinement over the pair matrix W[e][f] = #bases containing both e and f
splits the ground set into classes that any isomorphism must respect; the
backtracking searches then only try class-respecting bijections.

``canonical_form`` returns a byte string equal for two matroids exactly
when they are isomorphic: the minimum, over class-respecting relabellings,
of the characteristic vector of the basis family over all rank-size label
subsets in mask order.  ``are_isomorphic`` stops at the first bijection
carrying bases onto bases and returns it as a certificate.
"""

from __future__ import annotations

import itertools
import math

from .core import Matroid, bits, mask_of


def pair_matrix(m: Matroid) -> list[list[int]]:
    w = [[0] * m.n for _ in range(m.n)]
    for b in m.bases:
        elems = tuple(bits(b))
        for i, e in enumerate(elems):
            w[e][e] += 1
            for f in elems[i + 1:]:
                w[e][f] += 1
                w[f][e] += 1
    return w


def wl_colors(m: Matroid, w: list[list[int]] | None = None) -> tuple[list[int], list[str]]:
    """Stable colour classes with label-independent string signatures.

    Returns (colors, signatures): colors[e] indexes e's class and
    signatures[i] describes class i; corresponding classes of isomorphic
    matroids receive identical signature strings.
    """
    if w is None:
        w = pair_matrix(m)
    n = m.n
    keys = [f"d{w[e][e]}" for e in range(n)]
    order = sorted(set(keys))
    colors = [order.index(k) for k in keys]
    class_sigs = list(order)
    while True:
        keys = [
            class_sigs[colors[e]]
            + "|"
            + repr(sorted((colors[f], w[e][f]) for f in range(n) if f != e))
            for e in range(n)
        ]
        order = sorted(set(keys))
        if len(order) == len(class_sigs):
            return colors, class_sigs
        colors = [order.index(k) for k in keys]
        class_sigs = order


def iso_fingerprint(m: Matroid):
    """Cheap isomorphism invariant used to bucket before real iso tests."""
    colors, sigs = wl_colors(m)
    hist = tuple(sorted((sigs[c], colors.count(c)) for c in range(len(sigs))))
    return (m.n, m.rank, len(m.bases), hist)


def are_isomorphic(m: Matroid, other: Matroid) -> tuple[int, ...] | None:
    """A bijection e -> mapping[e] carrying m's bases onto other's, or None."""
    if m.n != other.n or m.rank != other.rank or len(m.bases) != len(other.bases):
        return None
    n = m.n
    if n == 0:
        return ()
    if m.bases == other.bases:
        return tuple(range(n))
    wa, wb = pair_matrix(m), pair_matrix(other)
    ca, sa = wl_colors(m, wa)
    cb, sb = wl_colors(other, wb)
    size_a = sorted((sa[c], ca.count(c)) for c in range(len(sa)))
    size_b = sorted((sb[c], cb.count(c)) for c in range(len(sb)))
    if size_a != size_b:
        return None
    sig_to_b = {sig: i for i, sig in enumerate(sb)}
    targets: list[list[int]] = []
    for e in range(n):
        bi = sig_to_b.get(sa[ca[e]])
        if bi is None:
            return None
        targets.append([f for f in range(n) if cb[f] == bi])

    order = sorted(range(n), key=lambda e: len(targets[e]))
    mapping = [-1] * n
    used = [False] * n
    found: list[tuple[int, ...] | None] = [None]

    def extend(depth: int) -> bool:
        if depth == n:
            cand = tuple(mapping)
            if {mask_of(cand[e] for e in bits(b)) for b in m.bases} == other.bases:
                found[0] = cand
                return True
            return False
        e = order[depth]
        for f in targets[e]:
            if used[f]:
                continue
            we = wa[e]
            if any(we[order[d]] != wb[f][mapping[order[d]]] for d in range(depth)):
                continue
            mapping[e] = f
            used[f] = True
            if extend(depth + 1):
                return True
            used[f] = False
            mapping[e] = -1
        return False

    extend(0)
    return found[0]


def canonical_form(m: Matroid) -> bytes:
    """Byte string equal for two matroids iff they are isomorphic."""
    n, r = m.n, m.rank
    if n == 0 or r == 0 or r == n:
        return f"{n}|{r}|trivial".encode()
    if len(m.bases) == math.comb(n, r):
        return f"{n}|{r}|uniform".encode()
    colors, sigs = wl_colors(m)
    class_order = sorted(range(len(sigs)), key=lambda c: sigs[c])
    slots: list[list[int]] = []
    for c in class_order:
        members = [e for e in range(n) if colors[e] == c]
        slots.extend([members] * len(members))

    # r-subsets of label positions, grouped by maximum label; within a
    # group (and overall) the mask order gives the prefix property: all
    # subsets of labels 0..d precede any subset containing a later label.
    by_max: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for combo in itertools.combinations(range(n), r):
        by_max[combo[-1]].append(combo)
    for d in range(n):
        by_max[d].sort(key=mask_of)

    best: list[int] | None = None
    label_of = [-1] * n
    used = [False] * n
    prefix: list[int] = []
    bases = m.bases

    def dfs(depth: int, better: bool) -> None:
        nonlocal best
        start = len(prefix)
        for e in slots[depth]:
            if used[e]:
                continue
            label_of[depth] = e
            used[e] = True
            ok = True
            child_better = better
            for combo in by_max[depth]:
                bit = 1 if mask_of(label_of[c] for c in combo) in bases else 0
                prefix.append(bit)
                if not child_better and best is not None:
                    inc = best[len(prefix) - 1]
                    if bit > inc:
                        ok = False
                        break
                    if bit < inc:
                        child_better = True
            if ok:
                if depth + 1 == n:
                    if child_better or best is None:
                        best = list(prefix)
                else:
                    dfs(depth + 1, child_better)
            del prefix[start:]
            used[e] = False
        label_of[depth] = -1

    dfs(0, False)
    assert best is not None
    packed = bytearray()
    acc, k = 0, 0
    for bit in best:
        acc = (acc << 1) | bit
        k += 1
        if k == 8:
            packed.append(acc)
            acc, k = 0, 0
    if k:
        packed.append(acc << (8 - k))
    return f"{n}|{r}|".encode() + bytes(packed)


def dedup_by_isomorphism(matroids) -> list[Matroid]:
    """One representative per isomorphism class, in first-seen order."""
    buckets: dict = {}
    reps: list[Matroid] = []
    for m in matroids:
        key = iso_fingerprint(m)
        bucket = buckets.setdefault(key, [])
        if not any(are_isomorphic(m, rep) is not None for rep in bucket):
            bucket.append(m)
            reps.append(m)
    return reps
