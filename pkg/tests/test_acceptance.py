"""Numbered acceptance criteria.

Each test carries ``acceptance(number, title)``; the summary at the end of
a pytest run prints one PASS/FAIL line per criterion (a criterion passes
only when every test tagged with its number passes).
"""

import time
from fractions import Fraction

import numpy as np
import pytest

import oracles
from gammaag import (
    CrispKind,
    CrispSubset,
    HuntConfig,
    IfsKind,
    InstanceBundle,
    LawId,
    TheoremId,
    characterize_by_composition,
    check_law,
    compose,
    constant_ifs,
    delta,
    derive_power_gamma,
    enumerate_groupoids,
    evaluate_law,
    grand_predicates,
    holds,
    hunt,
    intersect,
    intra_regularity,
    is_crisp,
    is_if,
    largest_ideal_below,
    law_violations,
    level_cut,
    load_fixture,
    make_ifs,
    random_ifs,
    semilattice_check,
    verify,
)

F1 = load_fixture("F1")
F2 = load_fixture("F2")
F3 = load_fixture("F3")

crit = pytest.mark.acceptance


def _pt(*xs):
    # 1-based element names to indices
    return tuple(x - 1 for x in xs)


def _ideal_samples(G, count, D, seed, sides=("left", "right", "two-sided")):
    rng = np.random.default_rng(seed)
    for i in range(count):
        A = random_ifs(G.n, D, rng)
        yield A if i % 2 == 0 else largest_ideal_below(G, A, sides[(i // 2) % len(sides)])


# ----------------------------------------------------------------------
# 1


@crit(1, "F1 law checks with the published non-commutativity and non-associativity instances")
def test_c1_fixture_laws():
    t = time.perf_counter()
    assert check_law(F1, LawId.LEFT_INVERTIVE).holds
    assert check_law(F1, LawId.MEDIAL).holds
    comm = check_law(F1, LawId.COMMUTATIVE)
    assoc = check_law(F1, LawId.ASSOCIATIVE)
    assert not comm.holds and comm.witness is not None
    assert not assoc.holds and assoc.witness is not None
    # 2.3 = 5 but 3.2 = 8
    assert evaluate_law(F1, LawId.COMMUTATIVE, _pt(2, 3), (0,)) == _pt(5, 8)
    # (4.2).3 = 1 but 4.(2.3) = 7
    assert evaluate_law(F1, LawId.ASSOCIATIVE, _pt(4, 2, 3), (0, 0)) == _pt(1, 7)
    found = {(w.elements, w.gammas) for w in law_violations(F1, LawId.COMMUTATIVE)}
    assert (_pt(2, 3), (0,)) in found
    found = {(w.elements, w.gammas) for w in law_violations(F1, LawId.ASSOCIATIVE)}
    assert (_pt(4, 2, 3), (0, 0)) in found
    assert time.perf_counter() - t < 1.0


# ----------------------------------------------------------------------
# 2


@crit(2, "derived two-operation structure on F1 is a left invertive, medial band; 9α1 != 1α9")
def test_c2_power_gamma():
    G = derive_power_gamma(F1)
    assert G.g == 2
    for law in (LawId.LEFT_INVERTIVE, LawId.MEDIAL, LawId.IDEMPOTENT_BAND):
        assert check_law(G, law).holds, law
        assert oracles.law_holds(oracles.tables_of(G), law.value)
    assert not check_law(G, LawId.COMMUTATIVE).holds
    assert evaluate_law(G, LawId.COMMUTATIVE, _pt(9, 1), (0,)) == _pt(4, 5)


# ----------------------------------------------------------------------
# 3


@crit(3, "intra-regularity of F2 (with witnesses) and failure on F3")
def test_c3_intra_regularity():
    r2 = intra_regularity(F2)
    assert r2.regular and sorted(r2.witnesses) == list(range(5))
    for a, w in r2.witnesses.items():
        assert w.evaluate(F2) == a
    assert r2.witnesses[_pt(3)[0]].evaluate(F2) == _pt(3)[0]
    r3 = intra_regularity(F3)
    assert not r3.regular
    assert _pt(3)[0] in r3.failures
    assert set(r3.failures) == set(range(5)) - oracles.intra_regular_elements(oracles.tables_of(F3))


# ----------------------------------------------------------------------
# 4


@crit(4, "level cut of A-cut at 2/5 is {1,2}, a left, right and bi-ideal of F2; A-cut is not an IF right ideal")
def test_c4_level_cut():
    A = load_fixture("A-cut")
    cut = level_cut(A, Fraction(2, 5))
    assert cut == CrispSubset.of(5, _pt(1, 2))
    for kind in (CrispKind.LEFT_IDEAL, CrispKind.RIGHT_IDEAL, CrispKind.BI):
        assert is_crisp(F2, cut, kind).holds
    v = is_if(F2, A, IfsKind.IF_RIGHT)
    assert not v.holds
    assert v.witness.elements == _pt(2, 1)


# ----------------------------------------------------------------------
# 5


@crit(5, "cuts of IF right/left/bi/generalized bi-ideals are crisp ideals of the same kind on F2")
def test_c5_levelcut_property():
    kinds = [
        (IfsKind.IF_RIGHT, CrispKind.RIGHT_IDEAL),
        (IfsKind.IF_LEFT, CrispKind.LEFT_IDEAL),
        (IfsKind.IF_BI, CrispKind.BI),
        (IfsKind.IF_GENERALIZED_BI, CrispKind.GENERALIZED_BI),
    ]
    alphas = [Fraction(k, 10) for k in range(1, 11)]
    qualifying = dict.fromkeys([k for k, _ in kinds], 0)
    violations = 0
    samples = 0
    for A in _ideal_samples(F2, 1200, 10, seed=5):
        samples += 1
        for ik, ck in kinds:
            if not is_if(F2, A, ik).holds:
                continue
            qualifying[ik] += 1
            violations += sum(not is_crisp(F2, level_cut(A, a), ck).holds for a in alphas)
    assert samples >= 1000
    assert violations == 0
    assert all(qualifying.values()), qualifying


# ----------------------------------------------------------------------
# 6


DUAL_KINDS = (IfsKind.IF_SUBGROUPOID, IfsKind.IF_LEFT, IfsKind.IF_RIGHT)


def _disagreements(G, sets):
    return sum(is_if(G, A, k).holds != characterize_by_composition(G, A, k).holds for A in sets for k in DUAL_KINDS)


@crit(6, "pointwise and composition characterizations agree (F2 and every n <= 3 left invertive groupoid)")
def test_c6_dual_path_f2():
    sets = list(_ideal_samples(F2, 10_000, 4, seed=6))
    assert _disagreements(F2, sets) == 0


@crit(6, "pointwise and composition characterizations agree (F2 and every n <= 3 left invertive groupoid)")
def test_c6_dual_path_enumerated():
    rng = np.random.default_rng(66)
    count = 0
    for n in (1, 2, 3):
        for G in enumerate_groupoids(n, 1):
            count += 1
            sets = [random_ifs(n, 4, rng) for _ in range(10)]
            assert _disagreements(G, sets) == 0
    assert count == 1 + 6 + 105


# ----------------------------------------------------------------------
# 7


@crit(7, "grand equivalence and the individual equivalences on intra-regular AG** instances")
def test_c7_grand_equivalence():
    T = oracles.tables_of(F2)
    assert oracles.intra_regular_elements(T) == set(range(5))
    assert oracles.law_holds(T, "ag-star-star") and holds(F2, LawId.AG_STAR_STAR)
    assert intra_regularity(F2).regular
    disagreements = 0
    all_true = 0
    for A in _ideal_samples(F2, 10_000, 4, seed=7):
        values = set(grand_predicates(F2, A).values())
        disagreements += len(values) != 1
        all_true += values == {True}
    assert disagreements == 0
    assert all_true > 0


THEOREM_RUNS = (
    TheoremId.QUASI_TS, TheoremId.INT_TS, TheoremId.LR_IFF, TheoremId.QUASI_EQ,
    TheoremId.BI_EQ, TheoremId.INT_EQ, TheoremId.ABSORB, TheoremId.TS_IDEM,
)


@crit(7, "grand equivalence and the individual equivalences on intra-regular AG** instances")
@pytest.mark.parametrize("tid", THEOREM_RUNS, ids=lambda t: t.value)
def test_c7_theorem_runs(tid):
    report = hunt(tid, HuntConfig(denominator=4, budget=1500, seed=70, groupoids=(F2,)))
    assert report.qualified > 0
    assert not report.found, report.verdict


# ----------------------------------------------------------------------
# 8


@crit(8, "A∘B = A ∩ B for IF two-sided ideals; F3 converse-failure example")
def test_c8_prod_cap_qualifying():
    rng = np.random.default_rng(8)
    pairs = 0
    for _ in range(2000):
        A = largest_ideal_below(F2, random_ifs(5, 4, rng), "two-sided")
        B = largest_ideal_below(F2, random_ifs(5, 4, rng), "two-sided")
        v = verify(TheoremId.PROD_CAP, InstanceBundle(F2, (A, B)))
        assert v.hypotheses_hold
        assert v.conclusion_holds, (A, B)
        pairs += 1
    assert pairs == 2000


@crit(8, "A∘B = A ∩ B for IF two-sided ideals; F3 converse-failure example")
def test_c8_f3_converse_example():
    # Exact computation. Known to fail: on F3 the product of the printed
    # A and B differs from their intersection at elements 1 (mu) and 2 (nu).
    A, B = load_fixture("A-fgh"), load_fixture("B-fgh")
    assert not intra_regularity(F3).regular
    assert compose(F3, A, B) == intersect(A, B)


# ----------------------------------------------------------------------
# 9


@crit(9, "hunter finds the absorption counterexample only when role hypotheses are relaxed")
def test_c9_hunter_soundness():
    relaxed = hunt(TheoremId.ABSORB, HuntConfig(denominator=1, budget=10_000, seed=9,
                                                 relax_hypotheses=True, groupoids=(F2,)))
    assert relaxed.found and relaxed.tried <= 10_000
    A = make_ifs(5, [0, 0, 0, 0, 1], [1, 0, 0, 0, 0])
    assert compose(F2, delta(5), A) != A
    v = verify(TheoremId.ABSORB, InstanceBundle(F2, (A,)), relax_hypotheses=True)
    assert v.conclusion_holds is False
    enforced = hunt(TheoremId.ABSORB, HuntConfig(denominator=1, budget=10_000, seed=9, groupoids=(F2,)))
    assert not enforced.found
    assert enforced.tried == 10_000 and enforced.qualified > 0


# ----------------------------------------------------------------------
# 10


@crit(10, "enumeration counts match a full-table scan; every emitted groupoid is medial")
def test_c10_enumeration_oracle():
    t = time.perf_counter()
    for n in (2, 3):
        emitted = list(enumerate_groupoids(n, 1, (LawId.LEFT_INVERTIVE,)))
        assert len(emitted) == oracles.count_tables(n, 1, ["left-invertive"])
        assert all(check_law(G, LawId.MEDIAL).holds for G in emitted)
    assert time.perf_counter() - t < 10.0


# ----------------------------------------------------------------------
# 11


@crit(11, "IF two-sided ideals of F2 form a semilattice with identity δ")
def test_c11_semilattice():
    rng = np.random.default_rng(11)
    constants = [constant_ifs(5, Fraction(p, 4), Fraction(q, 4)) for p in range(5) for q in range(5 - p)]
    sampled = [largest_ideal_below(F2, random_ifs(5, 4, rng), "two-sided") for _ in range(12)]
    v = semilattice_check(F2, [delta(5), *constants, *sampled])
    assert v.hypotheses_hold
    assert v.conclusion_holds, v.witness
    assert all(v.parts.values()), v.parts


# ----------------------------------------------------------------------
# 12


@crit(12, "errata: A-ex is not an IF left ideal of F2")
def test_c12_errata():
    A = load_fixture("A-ex")
    v = is_if(F2, A, IfsKind.IF_LEFT)
    assert not v.holds
    w = v.witness
    assert (w.elements, w.gammas) == (_pt(1, 3), (0,))
    assert (w.value, w.bound) == (Fraction(3, 10), Fraction(1, 5))
    assert not oracles.if_holds(oracles.tables_of(F2), oracles.as_pair(A), "left-ideal")
