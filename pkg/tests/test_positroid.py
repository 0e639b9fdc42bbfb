"""Bonin check, necklace machinery, and the exhaustive enumeration."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from positroids.core import Matroid, MatroidError, mask_of
from positroids.constructions import (
    all_parallel_connection_trees,
    catalog,
    extremal_family,
    parallel_connection,
    uniform,
    whirl_like,
)
from positroids.isomorphism import are_isomorphic
from positroids.positroid import (
    DecoratedPermutation,
    GrassmannNecklace,
    bonin_check,
    decorated_permutations,
    enumerate_positroids,
    is_positroid,
    necklace_from_decorated_permutation,
    ordering_is_bonin_witness,
    positroid_from_decorated_permutation,
    positroid_from_necklace,
    relevant_flats,
)

import oracles


def test_relevant_flats_examples():
    assert sorted(relevant_flats(uniform(2, 5))) == [frozenset({e}) for e in range(5)]
    rf = relevant_flats(extremal_family(3, 2))
    assert frozenset({0, 1, 2}) in rf and frozenset({2, 3, 4}) in rf
    # the basepoint {2} is excluded: contracting it disconnects the matroid
    assert frozenset({2}) not in rf
    assert len(rf) == 6
    rf4 = relevant_flats(catalog("M4"))
    assert len(rf4) == 10  # six points and four long lines
    with pytest.raises(MatroidError):
        relevant_flats(Matroid(2, [{0, 1}]))  # two coloops: disconnected


def test_bonin_examples():
    assert bonin_check(uniform(2, 4)) is not None
    assert bonin_check(catalog("M4")) is None
    w = bonin_check(extremal_family(3, 2))
    assert w is not None
    assert ordering_is_bonin_witness(extremal_family(3, 2), w)
    # the natural order places both lines consecutively
    assert ordering_is_bonin_witness(extremal_family(3, 2), (0, 1, 2, 3, 4))


def test_bonin_witnesses_validate_independently(small_corpus):
    for m in small_corpus:
        if not m.is_connected():
            continue
        w = bonin_check(m)
        if w is None:
            continue
        assert ordering_is_bonin_witness(m, w)
        # independent cyclic-arc oracle
        pos = {e: i for i, e in enumerate(w)}
        from positroids.positroid import _relevant_flat_masks
        for f in relevant_flats(m):
            positions = {pos[e] for e in f}
            assert oracles.cyclic_interval_brute(m.n, positions)


def test_is_positroid_examples():
    for m in all_parallel_connection_trees(4, 2):
        assert is_positroid(m)
    for cid in ("M1", "M2", "M3", "M4", "M5", "M6", "M7", "M8", "FIG2"):
        assert not is_positroid(catalog(cid))
    assert is_positroid(whirl_like(3, 5))


def test_is_positroid_componentwise():
    two_coloops = Matroid(2, [{0, 1}])
    assert is_positroid(two_coloops)
    loop_plus_line = Matroid(4, [{0, 1}, {0, 2}, {1, 2}])  # 3 is a loop
    assert is_positroid(loop_plus_line)


def test_decorated_permutation_validation():
    with pytest.raises(MatroidError):
        DecoratedPermutation((0, 0, 1))
    with pytest.raises(MatroidError):
        DecoratedPermutation((1, 0), frozenset({0}))  # 0 is not fixed
    dp = DecoratedPermutation((0, 2, 1), frozenset({0}))
    assert dp.fixed_points() == {0}
    assert dp.decoration(0) == "coloop"


def test_necklace_convention_pinned():
    dp = DecoratedPermutation(tuple((i + 2) % 4 for i in range(4)))
    neck = necklace_from_decorated_permutation(dp)
    assert [sorted(t) for t in neck.terms] == [[0, 1], [1, 2], [2, 3], [0, 3]]

    all_coloops = DecoratedPermutation((0, 1, 2), frozenset({0, 1, 2}))
    m = positroid_from_decorated_permutation(all_coloops)
    assert m == uniform(3, 3)

    all_loops = DecoratedPermutation((0, 1, 2))
    m0 = positroid_from_decorated_permutation(all_loops)
    assert m0.rank == 0 and m0.n == 3


def test_necklace_invariants_on_all_n4_permutations():
    for dp in decorated_permutations(4):
        neck = necklace_from_decorated_permutation(dp)
        neck.validate()


def test_necklace_gale_examples():
    dp = DecoratedPermutation(tuple((i + 2) % 4 for i in range(4)))
    assert positroid_from_necklace(necklace_from_decorated_permutation(dp)) == uniform(2, 4)

    constant = GrassmannNecklace(tuple(frozenset({0, 1}) for _ in range(4)))
    m = positroid_from_necklace(constant)
    assert mask_of({0, 1}) in m.bases
    assert is_positroid(m)  # cross-oracle validation

    bad = GrassmannNecklace((frozenset({0}), frozenset({2})))
    with pytest.raises(MatroidError):
        positroid_from_necklace(bad)


def test_every_necklace_positroid_passes_bonin_n4():
    for dp in decorated_permutations(4):
        m = positroid_from_decorated_permutation(dp)
        assert is_positroid(m), dp


def test_single_element_minors_stay_positroids_n5():
    rng = random.Random(31)
    dps = list(decorated_permutations(5))
    rng.shuffle(dps)
    for dp in dps[:40]:
        m = positroid_from_decorated_permutation(dp)
        for e in range(m.n):
            assert is_positroid(m.delete({e}))
            assert is_positroid(m.contract({e}))


def test_parallel_connection_preserves_positroids():
    rng = random.Random(17)
    pool = [uniform(2, 3), uniform(2, 4), uniform(3, 4), extremal_family(3, 2),
            whirl_like(3, 3), uniform(1, 2)]
    for _ in range(8):
        a, b = rng.sample(pool, 2)
        ea = rng.choice([e for e in range(a.n) if a.rank_of({e}) == 1])
        eb = rng.choice([e for e in range(b.n) if b.rank_of({e}) == 1])
        p = parallel_connection(a, b, ea, eb)
        assert is_positroid(p)


def test_enumeration_cap():
    with pytest.raises(MatroidError, match="capped"):
        enumerate_positroids(10)
    with pytest.raises(MatroidError):
        enumerate_positroids(0)


def test_enumeration_tiny_counts():
    e1 = enumerate_positroids(1)
    assert len(e1.classes) == 2  # a loop and a coloop
    assert e1.scanned == 2

    e2 = enumerate_positroids(2)
    assert e2.scanned == 5
    assert len(e2.classes) == 4  # rank 0, loop+coloop, U_{1,2}, rank 2

    e4 = enumerate_positroids(4, rank=2, simple=True)
    assert len(e4.classes) == 1  # derived: U_{2,4} is the only simple rank-2 class
    assert are_isomorphic(e4.classes[0], uniform(2, 4)) is not None


def test_enumeration_theorem_equality_case():
    res = enumerate_positroids(5, rank=3, simple=True, no_uniform_line_minor=4)
    assert len(res.classes) == 1
    assert are_isomorphic(res.classes[0], extremal_family(3, 2)) is not None


def test_enumeration_deterministic_and_thread_stable():
    a = enumerate_positroids(5)
    b = enumerate_positroids(5)
    assert [m.bases for m in a.classes] == [m.bases for m in b.classes]
    assert (a.scanned, a.matched) == (b.scanned, b.matched)
    c = enumerate_positroids(5, threads=3)
    assert [m.bases for m in c.classes] == [m.bases for m in a.classes]
    assert (c.scanned, c.matched) == (a.scanned, a.matched)


def test_enumeration_filters_consistent():
    full = enumerate_positroids(5)
    simple_only = enumerate_positroids(5, simple=True)
    keys = {tuple(sorted(m.bases)) for m in full.classes if m.is_simple()}
    assert {tuple(sorted(m.bases)) for m in simple_only.classes} == keys
    connected = enumerate_positroids(5, connected=True)
    keys = {tuple(sorted(m.bases)) for m in full.classes if m.is_connected()}
    assert {tuple(sorted(m.bases)) for m in connected.classes} == keys


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.data())
def test_necklace_invariants_random(n, data):
    perm = tuple(data.draw(st.permutations(list(range(n)))))
    fixed = [i for i in range(n) if perm[i] == i]
    coloops = frozenset(data.draw(st.sets(st.sampled_from(fixed)))) if fixed else frozenset()
    dp = DecoratedPermutation(perm, coloops)
    neck = necklace_from_decorated_permutation(dp)
    neck.validate()
    sizes = {len(t) for t in neck.terms}
    assert len(sizes) == 1
    m = positroid_from_necklace(neck)
    assert m.rank == sizes.pop()
    # loops of the matroid are exactly the loop-decorated fixed points
    loops = {e for e in range(n) if m.rank_of({e}) == 0}
    assert loops == set(fixed) - set(coloops)
