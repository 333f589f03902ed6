from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from gammaag import (
    CrispKind,
    CrispSubset,
    GammaAGError,
    GammaGroupoid,
    is_crisp,
    is_duo,
    level_cut,
    load_fixture,
    make_ifs,
    subset_product,
)

F2 = load_fixture("F2")
F3 = load_fixture("F3")


def _escapes(G, v):
    w = v.witness
    T = G.tables
    if w.kind in (CrispKind.SUBGROUPOID, CrispKind.LEFT_IDEAL, CrispKind.RIGHT_IDEAL):
        return int(T[w.gammas[0], w.elements[0], w.elements[1]]) == w.product
    if w.kind is CrispKind.QUASI:
        s, a, a2, t = w.elements
        return T[w.gammas[0], s, a] == w.product == T[w.gammas[1], a2, t]
    x, a, y = w.elements
    return int(T[w.gammas[1], T[w.gammas[0], x, a], y]) == w.product


def test_subset_basics():
    A = CrispSubset.of(4, [0, 2])
    B = CrispSubset.of(4, [2, 3])
    assert list(A) == [0, 2] and len(A) == 2 and 2 in A and 1 not in A
    assert (A | B).elements() == (0, 2, 3) and (A & B).elements() == (2,)
    assert (A & B).issubset(A) and not A.issubset(B)
    assert CrispSubset.from_mask(A.mask()) == A
    assert repr(A) == "CrispSubset({1, 3})"
    with pytest.raises(GammaAGError):
        CrispSubset.of(4, [4])
    with pytest.raises(GammaAGError):
        A | CrispSubset.of(3, [0])


def test_subset_product():
    A = CrispSubset.of(5, [2])
    assert subset_product(F2, A, A) == CrispSubset.of(5, [3])
    assert subset_product(F2, A, CrispSubset(5)) == CrispSubset(5)
    S = CrispSubset.full(5)
    assert subset_product(F2, S, S) == S


@pytest.mark.parametrize("G", [F2, F3, load_fixture("F1-gamma")], ids=["F2", "F3", "F1-gamma"])
@pytest.mark.parametrize("kind", list(CrispKind))
def test_all_subsets_match_reference(G, kind):
    T = oracles.tables_of(G)
    rng = np.random.default_rng(0)
    masks = range(1 << G.n) if G.n <= 5 else rng.integers(0, 1 << G.n, size=60)
    for bits in masks:
        A = CrispSubset(G.n, int(bits))
        v = is_crisp(G, A, kind)
        assert v.holds == oracles.crisp_holds(T, A.elements(), kind.value), (kind, A)
        assert v.nonempty == (len(A) > 0)
        if not v.holds:
            assert v.witness.product not in A
            assert _escapes(G, v)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, 2), st.lists(st.integers(0, n - 1), min_size=18, max_size=18),
    st.integers(0, (1 << n) - 1))))
def test_random_groupoids_match_reference(data):
    n, g, flat, bits = data
    G = GammaGroupoid(np.array(flat[: g * n * n]).reshape(g, n, n))
    A = CrispSubset(n, bits)
    T = oracles.tables_of(G)
    for kind in CrispKind:
        assert is_crisp(G, A, kind).holds == oracles.crisp_holds(T, A.elements(), kind.value)


def test_empty_set_passes_vacuously():
    v = is_crisp(F2, CrispSubset(5), CrispKind.TWO_SIDED)
    assert v.holds and not v.nonempty


# ----------------------------------------------------------------------
# level cuts


def test_level_cut_matches_reference():
    rng = np.random.default_rng(1)
    for _ in range(200):
        den = int(rng.integers(1, 11))
        mu, nu = [], []
        for _ in range(5):
            p = int(rng.integers(0, den + 1))
            q = int(rng.integers(0, den - p + 1))
            mu.append(Fraction(p, den))
            nu.append(Fraction(q, den))
        A = make_ifs(5, mu, nu)
        for k in range(1, 13):
            alpha = Fraction(k, 12)
            assert set(level_cut(A, alpha)) == oracles.level_cut(oracles.as_pair(A), alpha)


def test_level_cut_accepts_text_and_rejects_bad_alpha():
    A = load_fixture("A-cut")
    assert level_cut(A, "0.4") == level_cut(A, Fraction(2, 5))
    for bad in (Fraction(0), "0"):
        with pytest.raises(GammaAGError) as exc:
            level_cut(A, bad)
        assert exc.value.code == "ALPHA_OUT_OF_RANGE"


# ----------------------------------------------------------------------
# duo


def _brute_duo(G, side):
    T = oracles.tables_of(G)
    one, other = ("left-ideal", "right-ideal") if side == "left" else ("right-ideal", "left-ideal")
    for bits in range(1, 1 << G.n):
        S = [e for e in range(G.n) if bits >> e & 1]
        if oracles.crisp_holds(T, S, one) and not oracles.crisp_holds(T, S, other):
            return S
    return None


@pytest.mark.parametrize("G", [F2, F3], ids=["F2", "F3"])
@pytest.mark.parametrize("side", ["left", "right"])
def test_duo_matches_reference(G, side):
    v = is_duo(G, side)
    ref = _brute_duo(G, side)
    assert v.holds == (ref is None)
    if ref is not None:
        assert list(v.witness) == ref


def test_duo_errors():
    with pytest.raises(GammaAGError) as exc:
        is_duo(F2, "up")
    assert exc.value.code == "BAD_SIDE"
    with pytest.raises(GammaAGError) as exc:
        is_duo(load_fixture("F1"), "left", bound=8)
    assert exc.value.code == "CARRIER_TOO_LARGE"
