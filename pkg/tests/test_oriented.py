"""Chirotopes: exact signs, oriented minors, monochromatic searches."""

import itertools
import random
from fractions import Fraction

import pytest

from positroids.core import MatroidError
from positroids.constructions import uniform
from positroids.isomorphism import are_isomorphic
from positroids.oriented import (
    Chirotope,
    chirotope_from_matrix,
    monochromatic_line_minor,
    oriented_contract,
    oriented_delete,
    ramsey_scan,
    underlying_matroid,
)
from positroids.positroid import is_positroid

import oracles


PAPER_MATRIX = [[1, 1, 1, 1], [0, 1, 2, 2]]


def test_paper_matrix_signs():
    chi = chirotope_from_matrix(PAPER_MATRIX)
    assert chi.signs == {
        (0, 1): 1, (0, 2): 1, (0, 3): 1, (1, 2): 1, (1, 3): 1, (2, 3): 0}
    m = underlying_matroid(chi)
    assert oracles.bases_as_sets(m) == {
        frozenset(b) for b in ({0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3})}


def test_identity_chirotope():
    chi = chirotope_from_matrix([[1, 0], [0, 1]])
    assert chi.signs == {(0, 1): 1}
    assert underlying_matroid(chi) == uniform(2, 2)


def test_hand_determinants_increasing_slopes():
    chi = chirotope_from_matrix([[1, 1, 1], [0, 1, 3]])
    assert chi.signs == {(0, 1): 1, (0, 2): 1, (1, 2): 1}


def test_alternating_sign_access():
    chi = chirotope_from_matrix([[1, 1, 1], [0, 1, 3]])
    assert chi.sign((1, 0)) == -1
    assert chi.sign((0, 0)) == 0
    with pytest.raises(MatroidError):
        chi.sign((0, 1, 2))


def test_exactness_no_float():
    with pytest.raises(MatroidError):
        chirotope_from_matrix([[0.5, 1], [0, 1]])
    chi = chirotope_from_matrix([[Fraction(1, 3), Fraction(2, 3)], [1, 2]])
    assert chi.signs[(0, 1)] == 0  # exactly singular pair


def test_rank_deficient_rejected():
    with pytest.raises(MatroidError):
        chirotope_from_matrix([[1, 2], [2, 4]])


def test_near_zero_integer_determinants_exact():
    # products that would collide in floating point stay exact
    big = 10**12
    chi = chirotope_from_matrix([[big, big + 1], [big - 1, big]])
    assert chi.signs[(0, 1)] == 1  # det = big^2 - (big^2 - 1) = 1


def test_underlying_matroid_matches_matrix_rank():
    rng = random.Random(41)
    for _ in range(10):
        mat = [[rng.randint(-3, 3) for _ in range(6)] for _ in range(3)]
        try:
            chi = chirotope_from_matrix(mat)
        except MatroidError:
            continue
        m = underlying_matroid(chi)
        hb = oracles.bases_as_sets(m)
        # independent oracle: rank of each column subset via brute force over
        # the matrix (exact Fractions)
        for combo in itertools.combinations(range(6), 3):
            from positroids.oriented import _det
            d = _det([[Fraction(mat[i][j]) for j in combo] for i in range(3)])
            assert (frozenset(combo) in hb) == (d != 0)


def test_not_a_chirotope_support():
    bad = Chirotope(4, 2, {(0, 1): 1, (2, 3): 1})
    with pytest.raises(MatroidError):
        underlying_matroid(bad)


def test_minor_commutation_paper_case():
    chi = chirotope_from_matrix(PAPER_MATRIX)
    m = underlying_matroid(chi)
    e = 1
    assert underlying_matroid(oriented_contract(chi, e)) == m.contract({e})
    assert underlying_matroid(oriented_delete(chi, e)) == m.delete({e})


def test_minor_commutation_random_3x6():
    rng = random.Random(7)
    tried = 0
    for _ in range(30):
        mat = [[rng.randint(-4, 4) for _ in range(6)] for _ in range(3)]
        try:
            chi = chirotope_from_matrix(mat)
        except MatroidError:
            continue
        tried += 1
        m = underlying_matroid(chi)
        for e in range(6):
            if m.rank_of({e}) == 1:
                assert underlying_matroid(oriented_contract(chi, e)) == m.contract({e})
            else:
                with pytest.raises(MatroidError):
                    oriented_contract(chi, e)
            assert underlying_matroid(oriented_delete(chi, e)) == m.delete({e})
        if tried >= 8:
            break
    assert tried >= 5


def test_delete_identity_column_drops_rank():
    ident = chirotope_from_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    smaller = oriented_delete(ident, 2)
    assert (smaller.n, smaller.r) == (2, 2)
    assert smaller.signs == {(0, 1): 1}


def test_nonnegative_chirotope_gives_positroid():
    rng = random.Random(19)
    found = 0
    for _ in range(40):
        mat = [[rng.randint(0, 4) for _ in range(5)] for _ in range(2)]
        try:
            chi = chirotope_from_matrix(mat)
        except MatroidError:
            continue
        if chi.is_nonnegative():
            found += 1
            assert is_positroid(underlying_matroid(chi))
    assert found >= 3


def test_monochromatic_examples():
    chi = chirotope_from_matrix([[1] * 5, [0, 1, 2, 3, 4]])
    flat, order = monochromatic_line_minor(chi, 5, 1)
    assert order == (0, 1, 2, 3, 4)
    # negation symmetry
    assert monochromatic_line_minor(chi.negated(), 5, -1) is not None
    assert monochromatic_line_minor(chi, 2, -1) is not None  # reversed pairs
    with pytest.raises(MatroidError):
        monochromatic_line_minor(chi, 1, 1)


def test_monochromatic_respects_parallel_classes():
    # duplicate direction: only one of the two parallel columns counts
    chi = chirotope_from_matrix([[1, 1, 1], [0, 0, 1]])
    assert monochromatic_line_minor(chi, 3, 1) is None
    assert monochromatic_line_minor(chi, 2, 1) is not None


def test_monochromatic_on_higher_rank():
    # rank 3: contract corank-2 flats (points) to reach rank-2 minors
    mat = [[1, 1, 1, 1, 1], [0, 1, 2, 3, 4], [0, 1, 4, 9, 16]]
    chi = chirotope_from_matrix(mat)
    found = monochromatic_line_minor(chi, 3, 1)
    assert found is not None
    flat, order = found
    assert len(order) == 3


def test_negation_symmetry_random():
    rng = random.Random(13)
    for _ in range(10):
        mat = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(2)]
        try:
            chi = chirotope_from_matrix(mat)
        except MatroidError:
            continue
        for k in (2, 3):
            a = monochromatic_line_minor(chi, k, 1) is not None
            b = monochromatic_line_minor(chi.negated(), k, -1) is not None
            assert a == b


def _rank2_tournament_chirotopes(n):
    """All zero-free rank-2 sign patterns satisfying the 3-term exchange
    relation on every 4-subset (realizable rank-2 chirotopes)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bitsign in range(1 << len(pairs)):
        signs = {p: (1 if (bitsign >> i) & 1 else -1) for i, p in enumerate(pairs)}
        ok = True
        for a, b, c, d in itertools.combinations(range(n), 4):
            terms = {signs[(a, b)] * signs[(c, d)],
                     -signs[(a, c)] * signs[(b, d)],
                     signs[(a, d)] * signs[(b, c)]}
            if 1 not in terms or -1 not in terms:
                ok = False
                break
        if ok:
            yield Chirotope(n, 2, signs)


def test_every_rank2_chirotope_on_6_has_monochromatic_triple():
    count = 0
    for chi in _rank2_tournament_chirotopes(6):
        count += 1
        plus = monochromatic_line_minor(chi, 3, 1)
        minus = monochromatic_line_minor(chi, 3, -1)
        assert plus is not None or minus is not None
    assert count > 0


def test_ramsey_scan_report():
    chi = chirotope_from_matrix([[1] * 6, [0, 1, 2, 3, 4, 7]])
    rep = ramsey_scan(chi, 1)
    assert rep.ramsey_number == 6
    assert rep.threshold_rank_denominator == Fraction(35)
    assert rep.threshold_geometric == Fraction(7)
    assert rep.thresholds_differ
    assert rep.best[1][0] == 6 and rep.best[-1][0] == 6
    assert any("disagree" in line for line in rep.summary_lines())

    tiny = chirotope_from_matrix([[1]])
    out = ramsey_scan(tiny, 1)
    assert out.best[1][0] == 0  # single element: empty report

    rep3 = ramsey_scan(chirotope_from_matrix([[1, 0], [0, 1]]), 3)
    assert rep3.ramsey_number is None  # R(5,5) unknown; thresholds withheld


def test_ramsey_scan_rejects_non_simple():
    chi = chirotope_from_matrix([[1, 1], [1, 1]])
    with pytest.raises(MatroidError):
        ramsey_scan(chi, 1)
