import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from gammaag import (
    GammaAGError,
    GammaGroupoid,
    LawId,
    check_law,
    derive_power_gamma,
    enumerate_groupoids,
    evaluate_law,
    holds,
    intra_regular_witness,
    intra_regular_witnesses,
    intra_regularity,
    law_violations,
    load_fixture,
    product,
    validate_groupoid,
)


@st.composite
def groupoids(draw, max_n=3, max_g=2):
    n = draw(st.integers(1, max_n))
    g = draw(st.integers(1, max_g))
    flat = draw(st.lists(st.integers(0, n - 1), min_size=g * n * n, max_size=g * n * n))
    return GammaGroupoid(np.array(flat).reshape(g, n, n))


# reference instantiation of each law: (k, m, lhs, rhs) over python lists
def _p(T, x, a, y):
    return T[a][x][y]


REF = {
    "left-invertive": (3, 2, lambda T, v, o: _p(T, _p(T, v[0], o[0], v[1]), o[1], v[2]),
                       lambda T, v, o: _p(T, _p(T, v[2], o[0], v[1]), o[1], v[0])),
    "medial": (4, 3, lambda T, v, o: _p(T, _p(T, v[0], o[0], v[1]), o[1], _p(T, v[2], o[2], v[3])),
               lambda T, v, o: _p(T, _p(T, v[0], o[0], v[2]), o[1], _p(T, v[1], o[2], v[3]))),
    "ag-star-star": (3, 2, lambda T, v, o: _p(T, v[0], o[0], _p(T, v[1], o[1], v[2])),
                     lambda T, v, o: _p(T, v[1], o[0], _p(T, v[0], o[1], v[2]))),
    "paramedial": (4, 3, lambda T, v, o: _p(T, _p(T, v[0], o[0], v[1]), o[1], _p(T, v[2], o[2], v[3])),
                   lambda T, v, o: _p(T, _p(T, v[3], o[0], v[2]), o[1], _p(T, v[1], o[2], v[0]))),
    "commutative": (2, 1, lambda T, v, o: _p(T, v[0], o[0], v[1]), lambda T, v, o: _p(T, v[1], o[0], v[0])),
    "associative": (3, 2, lambda T, v, o: _p(T, _p(T, v[0], o[0], v[1]), o[1], v[2]),
                    lambda T, v, o: _p(T, v[0], o[0], _p(T, v[1], o[1], v[2]))),
    "idempotent-band": (1, 1, lambda T, v, o: _p(T, v[0], o[0], v[0]), lambda T, v, o: v[0]),
}


def first_violation(T, law):
    k, m, lhs, rhs = REF[law]
    n, g = len(T[0]), len(T)
    for v in itertools.product(range(n), repeat=k):
        for o in itertools.product(range(g), repeat=m):
            if lhs(T, v, o) != rhs(T, v, o):
                return v, o, lhs(T, v, o), rhs(T, v, o)
    return None


# ----------------------------------------------------------------------
# validation


def test_validate_rejects_out_of_range_entry_with_location():
    with pytest.raises(GammaAGError) as exc:
        validate_groupoid(2, 1, [[[0, 1], [1, 2]]])
    assert exc.value.code == "OUT_OF_RANGE"
    assert exc.value.where == (0, 1, 1)


@pytest.mark.parametrize("tables", [[[[0, 1]]], [[[0, 1], [1, 0]]] * 2, [[0, 1], [1, 0]]])
def test_validate_rejects_wrong_shape(tables):
    with pytest.raises(GammaAGError) as exc:
        validate_groupoid(2, 1, tables)
    assert exc.value.code == "WRONG_SHAPE"


def test_tables_are_read_only_and_groupoids_compare_by_value():
    G = validate_groupoid(2, 1, [[[0, 1], [1, 0]]])
    with pytest.raises(ValueError):
        G.tables[0, 0, 0] = 1
    H = GammaGroupoid([[[0, 1], [1, 0]]])
    assert G == H and hash(G) == hash(H)
    assert product(G, 1, 0, 1) == 0


def test_default_labels():
    G = GammaGroupoid(np.zeros((2, 3, 3), dtype=int))
    assert G.labels == ("1", "2", "3")
    assert G.gamma_labels == ("α", "β")


# ----------------------------------------------------------------------
# laws against the reference


@pytest.mark.parametrize("name", ["F1", "F2", "F3", "F1-gamma"])
@pytest.mark.parametrize("law", list(REF))
def test_fixture_laws_match_reference(name, law):
    G = load_fixture(name)
    T = oracles.tables_of(G)
    report = check_law(G, LawId(law))
    assert report.holds == oracles.law_holds(T, law)
    ref = first_violation(T, law)
    if ref is None:
        assert report.witness is None
    else:
        w = report.witness
        assert (w.elements, w.gammas, w.lhs, w.rhs) == ref


@settings(max_examples=150, deadline=None)
@given(groupoids())
def test_random_laws_match_reference(G):
    T = oracles.tables_of(G)
    for law in REF:
        report = check_law(G, LawId(law))
        assert report.holds == oracles.law_holds(T, law)
        ref = first_violation(T, law)
        got = None if report.witness is None else (
            report.witness.elements, report.witness.gammas, report.witness.lhs, report.witness.rhs)
        assert got == ref
    assert check_law(G, LawId.S_EQUALS_SGS).holds == oracles.law_holds(T, "s-equals-sgs")


@settings(max_examples=60, deadline=None)
@given(groupoids())
def test_violations_are_sorted_and_reevaluate(G):
    for law in (LawId.LEFT_INVERTIVE, LawId.COMMUTATIVE, LawId.ASSOCIATIVE):
        ws = list(law_violations(G, law))
        keys = [(w.elements, w.gammas) for w in ws]
        assert keys == sorted(keys)
        for w in ws[:20]:
            assert evaluate_law(G, law, w.elements, w.gammas) == (w.lhs, w.rhs)


def test_s_equals_sgs_witness_is_missing_element():
    G = GammaGroupoid([[[0, 0], [0, 0]]])
    r = check_law(G, LawId.S_EQUALS_SGS)
    assert not r.holds and r.witness.elements == (1,) and r.witness.rhs is None
    assert evaluate_law(G, LawId.S_EQUALS_SGS, (1,)) == (1, None)


def test_evaluate_law_arity_mismatch():
    with pytest.raises(GammaAGError) as exc:
        evaluate_law(load_fixture("F1"), LawId.COMMUTATIVE, (0, 1, 2), (0,))
    assert exc.value.code == "ARITY_MISMATCH"


@pytest.mark.parametrize("n,g", [(2, 1), (3, 1), (2, 2)])
def test_left_invertive_implies_medial(n, g):
    # holds for any left invertive structure
    for G in enumerate_groupoids(n, g):
        assert holds(G, LawId.MEDIAL)


@pytest.mark.parametrize("n,g", [(2, 1), (3, 1), (2, 2)])
def test_ag_star_star_implies_paramedial(n, g):
    for G in enumerate_groupoids(n, g, (LawId.LEFT_INVERTIVE, LawId.AG_STAR_STAR)):
        assert holds(G, LawId.PARAMEDIAL)


# ----------------------------------------------------------------------
# intra-regularity


@settings(max_examples=100, deadline=None)
@given(groupoids())
def test_intra_regularity_matches_reference(G):
    r = intra_regularity(G)
    ref = oracles.intra_regular_elements(oracles.tables_of(G))
    assert set(r.witnesses) == ref
    assert set(r.failures) == set(range(G.n)) - ref
    assert r.regular == (len(ref) == G.n)
    for a, w in r.witnesses.items():
        assert w.evaluate(G) == a


def test_intra_witness_is_lexicographically_first():
    G = load_fixture("F2")
    for a in range(G.n):
        every = intra_regular_witnesses(G, a)
        keys = [(w.x, w.y, w.alpha, w.beta, w.gamma) for w in every]
        assert keys == sorted(keys)
        assert intra_regular_witness(G, a) == every[0]
        assert all(w.evaluate(G) == a for w in every)


def test_published_intra_instance_on_f2():
    # 3 = (5 α (3 α 3)) α 5
    G = load_fixture("F2")
    assert any((w.x, w.y) == (4, 4) for w in intra_regular_witnesses(G, 2))


def test_f3_failures_exactly():
    r = intra_regularity(load_fixture("F3"))
    assert r.failures == (1, 2)


# ----------------------------------------------------------------------
# derived operations


def test_power_gamma_matches_pointwise_definition():
    F1 = load_fixture("F1")
    G = derive_power_gamma(F1)
    T = oracles.tables_of(F1)[0]
    sq = lambda t: T[t][t]
    for a in range(9):
        for b in range(9):
            assert G.product(a, 0, b) == sq(T[a][b])
            assert G.product(a, 1, b) == T[T[sq(a)][a]][sq(b)]
    assert G == load_fixture("F1-gamma")
    assert G == derive_power_gamma(F1.tables[0])


def test_power_gamma_needs_one_operation():
    with pytest.raises(GammaAGError):
        derive_power_gamma(load_fixture("F1-gamma"))
