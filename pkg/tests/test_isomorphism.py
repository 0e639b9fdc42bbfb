"""Certificates and canonical forms, cross-checked against brute force."""

import itertools
import random

from positroids.core import Matroid, mask_of, set_of
from positroids.constructions import catalog, extremal_family, uniform, whirl_like
from positroids.isomorphism import (
    are_isomorphic,
    canonical_form,
    dedup_by_isomorphism,
    iso_fingerprint,
)

import oracles


def _relabelled(m, rng):
    perm = list(range(m.n))
    rng.shuffle(perm)
    return m.relabel(perm)


def test_identity_certificate():
    m = catalog("M5")
    cert = are_isomorphic(m, m)
    assert cert == tuple(range(m.n))


def test_certificate_maps_bases_exactly(small_corpus):
    rng = random.Random(11)
    for m in small_corpus:
        other = _relabelled(m, rng)
        cert = are_isomorphic(m, other)
        assert cert is not None
        remapped = {frozenset(cert[e] for e in set_of(b)) for b in m.bases}
        assert remapped == oracles.bases_as_sets(other)


def test_uniform_relabellings_always_found():
    m = uniform(2, 4)
    for perm in itertools.permutations(range(4)):
        assert are_isomorphic(m, m.relabel(list(perm))) is not None


def test_wheel_vs_whirl():
    # the rim of the whirl is a basis; they have different basis counts
    k4 = catalog("M4")
    w = whirl_like(3, 3)
    assert len(k4.bases) == 16 and len(w.bases) == 17
    assert are_isomorphic(k4, w) is None
    assert canonical_form(k4) != canonical_form(w)


def test_canonical_form_characterizes_iso_on_corpus(small_corpus):
    rng = random.Random(5)
    mats = [m for m in small_corpus if m.n <= 7]
    forms = [canonical_form(m) for m in mats]
    for i, a in enumerate(mats):
        # shuffled copy has the same form
        assert canonical_form(_relabelled(a, rng)) == forms[i]
        for j in range(i + 1, len(mats)):
            same_form = forms[i] == forms[j]
            same_iso = are_isomorphic(a, mats[j]) is not None
            assert same_form == same_iso


def test_non_isomorphic_same_counts():
    # same n, rank, #bases, degree profile; different structure
    a = extremal_family(3, 2)
    b = a.relabel([4, 3, 2, 1, 0])
    assert are_isomorphic(a, b) is not None


def test_fingerprint_is_invariant(small_corpus):
    rng = random.Random(23)
    for m in small_corpus:
        assert iso_fingerprint(m) == iso_fingerprint(_relabelled(m, rng))


def test_dedup():
    rng = random.Random(2)
    mats = [uniform(2, 4), catalog("M4"), whirl_like(3, 3)]
    copies = [_relabelled(m, rng) for m in mats for _ in range(3)]
    assert len(dedup_by_isomorphism(mats + copies)) == 3


def test_iso_against_brute_force_small(rank3_corpus_by_n):
    corpus = rank3_corpus_by_n[5]
    for a in corpus:
        for b in corpus:
            fast = are_isomorphic(a, b) is not None
            brute = oracles.isomorphic_brute(
                a.n, oracles.bases_as_sets(a), b.n, oracles.bases_as_sets(b))
            assert fast == brute
