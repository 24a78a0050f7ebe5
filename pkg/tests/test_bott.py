"""Index iteration, step-function arithmetic, and the certificate searches."""

import random
from fractions import Fraction

import pytest

from loopspace.bott import (
    CONTRADICTION_ESTABLISHED,
    INCONCLUSIVE,
    BottFunction,
    IndexSequence,
    bott_index,
    certify_theorem4,
    certify_theorem5,
    index_parity,
    is_nondegenerate,
    morse_matches_betti,
    parity_distinct,
    parity_remark_certificate,
    quarter_turn_function,
    schwarz_even,
)
from loopspace.gca.cohomology import BettiTable
from loopspace.spaceforms import SpaceFormSpec

from helpers import bott_index_by_scan, random_bott, step_value_by_scan


# -- construction and evaluation ----------------------------------------------


def test_build_sorts_and_defaults_point_values():
    f = BottFunction.build((Fraction(3, 4), Fraction(1, 4)), (0, 1))
    assert f.discontinuities == (Fraction(1, 4), Fraction(3, 4))
    assert f.arc_values == (1, 0)
    assert f.point_values == (0, 0)
    assert f == quarter_turn_function()


def test_constructor_rejects_bad_data():
    with pytest.raises(ValueError):
        BottFunction((Fraction(1, 4),), (1,), (0,))  # not conjugation symmetric
    with pytest.raises(ValueError):
        BottFunction((Fraction(3, 4), Fraction(1, 4)), (1, 0), (0, 0))  # unsorted
    with pytest.raises(ValueError):
        BottFunction((Fraction(1, 4), Fraction(3, 4)), (1,), (0, 0))  # arc count
    with pytest.raises(ValueError):
        BottFunction((Fraction(1, 4), Fraction(3, 4)), (1, 0), (0, 1))  # point asymmetry
    with pytest.raises(ValueError):
        BottFunction((Fraction(1, 4), Fraction(3, 4)), (1, -1), (0, 0))  # negative value
    with pytest.raises(ValueError):
        BottFunction.build((Fraction(1, 4), Fraction(1, 4), Fraction(3, 4)), (1, 1, 0))
    with pytest.raises(ValueError):
        # four discontinuities exceed the eigenvalue bound 2n-2 = 2
        BottFunction.build(
            (Fraction(1, 8), Fraction(7, 8), Fraction(3, 8), Fraction(5, 8)),
            (0, 1, 1, 0),
            ambient_dim=2,
        )


def test_value_at_points_and_arcs():
    f = quarter_turn_function()
    assert f.value_at(Fraction(1, 4)) == 0
    assert f.value_at(Fraction(1, 2)) == 1
    assert f.value_at(0) == 0
    assert f.value_at(Fraction(9, 8)) == f.value_at(Fraction(1, 8)) == 0
    g = BottFunction.constant(3)
    assert g.value_at(Fraction(5, 7)) == 3


# -- index iteration -----------------------------------------------------------


def test_bott_index_zero_function():
    f = BottFunction.constant(0)
    for m in (1, 2, 7, 30):
        assert bott_index(f, m) == 0


def test_bott_index_quarter_function_derived_values():
    f = quarter_turn_function()
    # counting m-th roots of unity on the open arc (1/4, 3/4)
    assert bott_index(f, 3) == 2
    assert bott_index(f, 5) == 2
    assert bott_index(f, 7) == 4
    assert bott_index(f, 9) == 4


def test_bott_index_first_iterate_is_value_at_one():
    rng = random.Random(99)
    for _ in range(100):
        f = random_bott(rng)
        assert bott_index(f, 1) == f.value_at(0)


def test_bott_index_matches_scan_oracle():
    rng = random.Random(2024)
    for _ in range(60):
        f = random_bott(rng)
        for m in list(range(1, 13)) + [25, 50]:
            assert bott_index(f, m) == bott_index_by_scan(f, m)


def test_value_at_matches_scan_oracle():
    rng = random.Random(2025)
    for _ in range(50):
        f = random_bott(rng)
        for q in range(1, 9):
            for p in range(q):
                t = Fraction(p, q)
                assert f.value_at(t) == step_value_by_scan(f, t)


def test_additive_decomposition():
    rng = random.Random(77)
    for _ in range(50):
        f = random_bott(rng)
        g = BottFunction(
            f.discontinuities,
            tuple(v + 1 for v in f.arc_values),
            tuple(v + 1 for v in f.point_values),
        )
        total = BottFunction(
            f.discontinuities,
            tuple(a + b for a, b in zip(f.arc_values, g.arc_values)),
            tuple(a + b for a, b in zip(f.point_values, g.point_values)),
        )
        for m in (1, 2, 3, 8, 13):
            assert bott_index(total, m) == bott_index(f, m) + bott_index(g, m)


def test_conjugation_pairing_parity_contract():
    rng = random.Random(88)
    for _ in range(80):
        f = random_bott(rng)
        for m in range(1, 15):
            expected = f.value_at(0) + (f.value_at(Fraction(1, 2)) if m % 2 == 0 else 0)
            assert index_parity(f, m) == expected % 2
            assert index_parity(f, m) == bott_index(f, m) % 2


# -- degeneracy and parity -------------------------------------------------------


def test_is_nondegenerate_examples():
    f = quarter_turn_function()
    assert not is_nondegenerate(f, 2)  # 2 * 1/4 = 1/2
    assert is_nondegenerate(f, 3)
    assert is_nondegenerate(BottFunction.constant(1), 12)


def test_is_nondegenerate_fails_on_half_integer_multiples():
    rng = random.Random(123)
    for _ in range(50):
        m = rng.randint(1, 12)
        a = rng.randint(1, 2 * m - 1)
        t = Fraction(a, 2 * m) % 1
        if t == 0 or t == Fraction(1, 2):
            disc, arcs = (t,), (0,)
        else:
            disc, arcs = tuple(sorted({t, 1 - t})), (0, 0)
        f = BottFunction.build(disc, arcs)
        assert not is_nondegenerate(f, m)


def test_schwarz_even_examples():
    f = quarter_turn_function()
    assert schwarz_even(f, 1)
    assert schwarz_even(f, 7)  # 4 - 0
    one = BottFunction.constant(1)
    assert not schwarz_even(one, 2)  # 2 - 1 is odd


def test_index_parity_examples():
    f = quarter_turn_function()
    for m in (1, 3, 5, 9, 21):
        assert index_parity(f, m) == 0
    one = BottFunction.constant(1)
    assert index_parity(one, 3) == 1
    assert index_parity(one, 2) == 0


def test_parity_distinct():
    assert parity_distinct(0, 1)
    assert not parity_distinct(2, 4)
    assert not parity_distinct(3, 3)
    with pytest.raises(ValueError):
        parity_distinct(-1, 0)
    assert parity_remark_certificate(0, 1).established
    assert not parity_remark_certificate(2, 4).established


# -- Morse matching -----------------------------------------------------------------


def test_morse_matches_betti_examples():
    betti = BettiTable.from_dims([1, 0, 2, 0, 2])
    seq = IndexSequence(((1, 0), (3, 2), (5, 2), (7, 4), (9, 4)))
    assert morse_matches_betti(seq, betti)
    bad = IndexSequence(((1, 0), (3, 2), (5, 2), (7, 4), (9, 6)))
    assert not morse_matches_betti(bad, betti)
    assert morse_matches_betti(IndexSequence(()), BettiTable.from_dims([0]))


def test_morse_matching_ignores_indices_above_cutoff():
    betti = BettiTable.from_dims([1, 0, 2])
    seq = IndexSequence(((1, 0), (3, 2), (5, 2), (7, 4), (9, 4)))
    assert morse_matches_betti(seq, betti)


def test_index_sequence_validation():
    with pytest.raises(ValueError):
        IndexSequence(((3, 0), (1, 2)))
    with pytest.raises(ValueError):
        IndexSequence(((1, -1),))
    f = quarter_turn_function()
    seq = IndexSequence.from_function(f, range(1, 10, 2))
    assert seq.indices() == (0, 2, 2, 4, 4)


# -- certificates ----------------------------------------------------------------------


def test_certify_theorem4_small_grid():
    cert = certify_theorem4(4, 1, 9)
    assert cert.verdict == CONTRADICTION_ESTABLISHED
    assert len(cert.survivors) == 1
    assert cert.survivors[0]["disc"] == [Fraction(1, 4), Fraction(3, 4)]
    assert cert.survivors[0]["arcs"] == [1, 0]


def test_certify_theorem4_zero_values_inconclusive():
    cert = certify_theorem4(4, 0, 9)
    assert cert.verdict == INCONCLUSIVE
    assert cert.survivors == ()
    # a value bound of 0 cannot produce index 2, so the Morse premise fails
    # on the full grid as well
    cert = certify_theorem4(360, 0, 721)
    assert cert.verdict == INCONCLUSIVE
    assert cert.survivors == ()


def test_certify_theorem4_higher_value_bound_keeps_unique_survivor():
    cert = certify_theorem4(8, 5, 17)
    assert cert.verdict == CONTRADICTION_ESTABLISHED
    assert [s["disc"] for s in cert.survivors] == [[Fraction(1, 4), Fraction(3, 4)]]
    assert [s["arcs"] for s in cert.survivors] == [[1, 0]]


def test_certify_theorem4_survivors_stable_under_grid_refinement():
    coarse = certify_theorem4(4, 1, 9)
    fine = certify_theorem4(8, 1, 17)
    assert [s["disc"] for s in coarse.survivors] == [s["disc"] for s in fine.survivors]


def test_certify_theorem4_preconditions():
    with pytest.raises(ValueError):
        certify_theorem4(5, 1, 11)  # odd grid
    with pytest.raises(ValueError):
        certify_theorem4(4, 1, 8)  # even cutoff
    with pytest.raises(ValueError):
        certify_theorem4(4, 1, 7)  # cutoff below 2N+1
    with pytest.raises(ValueError):
        certify_theorem4(4, -1, 9)


def test_certify_theorem4_deterministic():
    assert certify_theorem4(4, 2, 9) == certify_theorem4(4, 2, 9)


def test_certify_theorem5_established():
    cert = certify_theorem5(SpaceFormSpec(3, 8, 2), True, 1, quarter_turn_function(), 10)
    assert cert.verdict == CONTRADICTION_ESTABLISHED
    assert cert.parameters["pi1_order"] == 4
    iterates = [e for e in cert.transcript if "iterate" in e]
    assert [e["iterate"] for e in iterates] == [1 + 2 * l for l in range(11)]
    assert all(e["parity"] == "even" for e in iterates)


def test_certify_theorem5_trivial_pi1_inconclusive():
    cert = certify_theorem5(SpaceFormSpec(3, 2, 2), True, 1, quarter_turn_function(), 10)
    assert cert.verdict == INCONCLUSIVE


def test_certify_theorem5_preconditions():
    spec = SpaceFormSpec(3, 8, 2)
    with pytest.raises(ValueError):
        certify_theorem5(spec, True, 1, BottFunction.constant(1), 10)  # ind c != 0
    with pytest.raises(ValueError):
        certify_theorem5(spec, False, 1, quarter_turn_function(), 10)
    with pytest.raises(ValueError):
        certify_theorem5(SpaceFormSpec(3, 9, 3), True, 1, quarter_turn_function(), 10)  # odd order
    with pytest.raises(ValueError):
        certify_theorem5(spec, True, 0, quarter_turn_function(), 10)
