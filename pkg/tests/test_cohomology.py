"""Betti tables, model validation, and ring-presentation verification."""

import random

import pytest

from loopspace.gca import (
    BasisLimitError,
    BettiTable,
    DgaModel,
    GcaError,
    RingPresentation,
    apply_differential,
    check_model,
    cochain_complex,
    cohomology,
    quotient_ring_dims,
    verify_ring_presentation,
)
from loopspace.gca.cohomology import differential_matrix
from loopspace.gca import linalg

from helpers import quotient_counts_oracle, random_model


def two_gen_model():
    return DgaModel([("u2", 2), ("u3", 3)], {"u3": [(1, {"u2": 2})]})


def even_k1_model():
    return DgaModel([("u2", 2), ("v2", 2), ("u3", 3)], {"u3": [(1, {"u2": 2})]})


def even_k2_model():
    return DgaModel([("u2", 2), ("u6", 6), ("u7", 7)], {"u7": [(1, {"u2": 4})]})


def odd_model(k):
    return DgaModel(
        [("u2", 2), (f"u{2 * k}" if k > 1 else "v2", 2 * k), (f"u{2 * k + 1}", 2 * k + 1)],
        {f"u{2 * k + 1}": [(1, {"u2": k + 1})]},
    )


def test_sphere_like_quotient_dims():
    # hand computation: only the classes 1 and u2 survive
    assert cohomology(two_gen_model(), 8).dims == (1, 0, 1, 0, 0, 0, 0, 0, 0)


def test_even_k1_dims():
    assert cohomology(even_k1_model(), 8).dims == (1, 0, 2, 0, 2, 0, 2, 0, 2)


def test_empty_model_dims():
    assert cohomology(DgaModel([]), 3).dims == (1, 0, 0, 0)


def test_even_k2_dims_match_bounded_quotient():
    # Q[w,z]/(w^4), deg w = 2, deg z = 6, enumerated independently
    expected = tuple(quotient_counts_oracle(2, 6, 4, 16))
    assert expected == (1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1)
    assert cohomology(even_k2_model(), 16).dims == expected


def test_check_model_passes_odd_models():
    for k in (1, 2, 3):
        report = check_model(odd_model(k))
        assert report.ok, report.format()


def test_check_model_rejects_degree_violations():
    # differential into an equal-degree generator breaks minimality
    m = DgaModel([("u2", 2), ("u3", 3)], {"u2": [(1, {"u3": 1})]})
    report = check_model(m)
    assert not report.ok
    failing = {c.name for c in report.checks if not c.passed}
    assert "minimality" in failing
    # differential that lowers degree
    m2 = DgaModel([("u2", 2), ("u5", 5)], {"u5": [(1, {"u2": 1})]})
    assert not check_model(m2).ok


def test_check_model_flags_degenerate_odd_square():
    m = DgaModel(
        [("u2", 2), ("u3", 3), ("u5", 5)],
        {"u3": [(1, {"u2": 2})], "u5": [(1, {"u3": 2})]},
    )
    report = check_model(m)
    assert not report.ok
    failing = {c.name for c in report.checks if not c.passed}
    assert failing == {"odd-square-exclusion"}
    with pytest.raises(GcaError):
        cohomology(m, 6)


def test_check_model_rejects_broken_d_squared():
    # dc = a*b and dy = c*x with dx = 0 give d(dy) = (a*b)*x != 0
    m = DgaModel(
        [("a", 1), ("b", 1), ("c", 1), ("x", 2), ("y", 3)],
        {"c": [(1, [("a", 1), ("b", 1)])], "y": [(1, [("c", 1), ("x", 1)])]},
    )
    assert not apply_differential(m.differential_of("y")).is_zero
    report = check_model(m)
    assert not report.ok
    assert "d-squared" in {c.name for c in report.checks if not c.passed}


def test_rank_nullity_bookkeeping_randomized():
    rng = random.Random(31415)
    for _ in range(40):
        model = random_model(rng)
        data = cochain_complex(model, 8)
        for d in range(9):
            dd = data.degrees[d]
            assert len(dd.basis) == len(dd.kernel) + dd.rank_out
            assert dd.rank_out == linalg.rank(differential_matrix(model, d))
            assert len(dd.reps) == len(dd.kernel) - len(dd.image)


def test_representatives_are_cocycles_independent_of_image():
    data = cochain_complex(even_k1_model(), 10)
    for d in range(11):
        dd = data.degrees[d]
        for rep in data.representative_elements(d):
            assert apply_differential(rep).is_zero
        span = linalg.IncrementalSpan(len(dd.basis))
        for vec in dd.image:
            assert span.add(vec)
        for vec in dd.reps:
            assert span.add(vec)


def test_determinism_of_tables_and_representatives():
    a = cohomology(even_k2_model(), 14, with_representatives=True)
    b = cohomology(even_k2_model(), 14, with_representatives=True)
    assert a == b


def test_basis_limit_error_names_degree():
    m = DgaModel([("a", 1), ("b", 1), ("c", 1)])
    with pytest.raises(BasisLimitError) as err:
        cohomology(m, 3, basis_limit=2)
    assert err.value.degree == 1  # three degree-1 monomials already exceed the limit
    assert err.value.limit == 2


def test_quotient_ring_dims_against_oracle():
    for deg_w, deg_z, a in [(2, 2, 2), (2, 4, 3), (2, 6, 4), (2, 10, 6)]:
        pres = RingPresentation(deg_w, deg_z, a)
        assert quotient_ring_dims(pres, 30) == quotient_counts_oracle(deg_w, deg_z, a, 30)


def test_verify_ring_presentation_odd_k1():
    report = verify_ring_presentation(odd_model(1), RingPresentation(2, 2, 2), 12)
    assert report.passed, report.format()
    assert report.w is not None and report.z is not None
    # w must be the class whose square is exact: u2 up to scale
    assert report.w.model.format_element(report.w) == "u2"


def test_verify_ring_presentation_even_k2():
    report = verify_ring_presentation(even_k2_model(), RingPresentation(2, 6, 4), 16)
    assert report.passed, report.format()
    assert report.actual_dims == (1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1)


def test_verify_ring_presentation_wrong_nilpotency_fails_at_4():
    report = verify_ring_presentation(even_k1_model(), RingPresentation(2, 2, 3), 12)
    assert not report.passed
    assert report.first_mismatch == 4


def test_verify_ring_presentation_rejects_wrong_degree():
    report = verify_ring_presentation(even_k1_model(), RingPresentation(2, 3, 2), 12)
    assert not report.passed


def test_betti_table_validation():
    with pytest.raises(ValueError):
        BettiTable(2, (1, 0))
    with pytest.raises(ValueError):
        BettiTable(1, (1, -1))
    table = BettiTable.from_dims([0])  # plain data tables may have dims[0] = 0
    assert table.dim(0) == 0 and table.dim(5) == 0
