"""Catalog of theorem statements, instance verification and counterexample hunts.

Each catalog entry names the structural hypotheses on the groupoid
(left-invertive, AG**, intra-regular), the hypotheses on its input IFS
(e.g. "A is an IF two-sided ideal") and a conclusion evaluated by exact
computation.  :func:`verify` gates the conclusion on the hypotheses;
:func:`hunt` searches sampled instances for a case where the hypotheses
hold and the conclusion fails.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

import numpy as np

from . import carrier
from .carrier import GammaGroupoid, LawId, intra_regularity
from .crisp import CrispKind, is_crisp, level_cut
from .errors import GammaAGError
from .ideals import IfsKind, characterize_by_composition, is_if, largest_ideal_below
from .ifs import IFS, compose, delta, intersect, random_ifs


class TheoremId(enum.Enum):
    LEVELCUT = "levelcut"
    CHAR = "char"
    BI_EQ = "bi-eq"
    INT_EQ = "int-eq"
    LR_IFF = "lr-iff"
    DUO = "duo"
    ABSORB = "absorb"
    DELTA_IDEM = "delta-idem"
    QUASI_EQ = "quasi-eq"
    QUASI_TS = "quasi-ts"
    INT_TS = "int-ts"
    GRAND_EQ = "grand-eq"
    PROD_CAP = "prod-cap"
    TS_IDEM = "ts-idem"
    SEMILATTICE = "semilattice"

    @classmethod
    def parse(cls, text: str) -> "TheoremId":
        key = text.strip().lower().replace("_", "-")
        for t in cls:
            if key == t.value:
                return t
        raise GammaAGError("BAD_THEOREM", f"unknown theorem id {text!r}")


LI = "left-invertive"
AGSS = "ag**"
IR = "intra-regular"


@dataclass(frozen=True)
class InstanceBundle:
    G: GammaGroupoid
    ifs: tuple = ()
    alphas: tuple | None = None  # LEVELCUT thresholds; default covers every distinct cut

    def __post_init__(self):
        object.__setattr__(self, "ifs", tuple(self.ifs))
        for A in self.ifs:
            if A.n != self.G.n:
                raise GammaAGError("SIZE_MISMATCH", f"IFS over {A.n} elements, groupoid has {self.G.n}")


@dataclass(frozen=True)
class TheoremWitness:
    """Where a conclusion broke.

    ``direction`` is ``"forward"``/``"backward"`` for a failed half of a
    biconditional; ``element`` (0-based) locates an unequal IFS pair,
    ``values`` holds the compared quantities.
    """

    part: str
    direction: str | None = None
    element: int | None = None
    values: tuple = ()


@dataclass(frozen=True)
class TheoremVerdict:
    id: TheoremId
    hypotheses: dict
    hypotheses_hold: bool
    conclusion_holds: bool | None
    witness: TheoremWitness | None = None
    parts: dict = field(default_factory=dict)
    observed: dict = field(default_factory=dict)
    relaxed: bool = False


@dataclass(frozen=True)
class Theorem:
    id: TheoremId
    statement: str
    structure: tuple
    arity: int | None  # IFS inputs; None = any number >= 1
    roles: Callable | None  # bundle -> {name: bool}, combined with any()/all() per roles_mode
    roles_mode: str
    conclusion: Callable  # bundle, active role names -> (holds, witness, parts, observed)


# --------------------------------------------------------------------------
# helpers


def _structure(G: GammaGroupoid, needs: Sequence[str]) -> dict:
    out = {}
    for need in needs:
        if need == LI:
            out[LI] = carrier.holds(G, LawId.LEFT_INVERTIVE)
        elif need == AGSS:
            out[AGSS] = carrier.holds(G, LawId.AG_STAR_STAR)
        elif need == IR:
            out[IR] = intra_regularity(G).regular
    return out


def _diff(A: IFS, B: IFS):
    """First element where two IFS differ with both grade pairs, or None."""
    for x, (am, an, bm, bn) in enumerate(zip(A.mu, A.nu, B.mu, B.nu)):
        if am != bm or an != bn:
            return x, ((am, an), (bm, bn))
    return None


def _equality(part: str, A: IFS, B: IFS):
    d = _diff(A, B)
    if d is None:
        return True, None
    return False, TheoremWitness(part, None, d[0], d[1])


def _iff(part: str, left: bool, right: bool):
    if left == right:
        return True, None
    return False, TheoremWitness(part, "forward" if left else "backward", None, (left, right))


def _combine(results):
    """AND over named ``(holds, witness)`` results; first failure is reported."""
    parts, witness = {}, None
    for name, (ok, w) in results:
        parts[name] = ok
        if not ok and witness is None:
            witness = w
    return all(parts.values()), witness, parts


def _ifs(bundle, i=0):
    return bundle.ifs[i]


def _one_ifs(bundle):
    return bundle.G, bundle.ifs[0], delta(bundle.G.n)


# --------------------------------------------------------------------------
# conclusions

_CUT_KINDS = (
    ("right", IfsKind.IF_RIGHT, CrispKind.RIGHT_IDEAL),
    ("left", IfsKind.IF_LEFT, CrispKind.LEFT_IDEAL),
    ("two-sided", IfsKind.IF_TWO_SIDED, CrispKind.TWO_SIDED),
    ("bi", IfsKind.IF_BI, CrispKind.BI),
    ("generalized-bi", IfsKind.IF_GENERALIZED_BI, CrispKind.GENERALIZED_BI),
)


def default_alphas(A: IFS) -> tuple:
    """Thresholds ``k / (2 den)``: every distinct cut of ``A`` appears."""
    den = 2 * A.den
    if den > 400:
        grades = {g for g in A.mu + A.nu if g > 0} | {Fraction(1)}
        return tuple(sorted(grades))
    return tuple(Fraction(k, den) for k in range(1, den + 1))


def _levelcut_roles(bundle):
    G, A = bundle.G, _ifs(bundle)
    return {f"A is IF {name} ideal": is_if(G, A, kind).holds for name, kind, _ in _CUT_KINDS}


def _levelcut(bundle, active):
    G, A = bundle.G, _ifs(bundle)
    alphas = bundle.alphas or default_alphas(A)
    results = []
    for name, _, crisp_kind in _CUT_KINDS:
        if f"A is IF {name} ideal" not in active:
            continue
        ok, w = True, None
        for alpha in alphas:
            cut = level_cut(A, alpha)
            v = is_crisp(G, cut, crisp_kind)
            if not v.holds:
                ok, w = False, TheoremWitness(f"cut is {name} ideal", None, v.witness.product, (alpha, cut))
                break
        results.append((f"cut is {name} ideal", (ok, w)))
    return (*_combine(results), {})


def _char(bundle, active):
    G, A = bundle.G, _ifs(bundle)
    results = []
    for kind in (IfsKind.IF_SUBGROUPOID, IfsKind.IF_LEFT, IfsKind.IF_RIGHT):
        direct = is_if(G, A, kind).holds
        via = characterize_by_composition(G, A, kind).holds
        results.append((kind.value, _iff(kind.value, direct, via)))
    return (*_combine(results), {})


def _bi_eq(bundle, active):
    G, A, D = _one_ifs(bundle)
    AA = compose(G, A, A)
    sandwich = compose(G, compose(G, A, D), A)
    rhs = AA == A and sandwich == A
    return (*_combine([("bi <=> (A∘δ)∘A = A and A∘A = A", _iff("bi-ideal", is_if(G, A, IfsKind.IF_BI).holds, rhs))]),
            {"(A∘δ)∘A = A": sandwich == A, "A∘A = A": AA == A})


def _int_eq(bundle, active):
    G, A, D = _one_ifs(bundle)
    sandwich = compose(G, compose(G, D, A), D)
    return (*_combine([("interior <=> (δ∘A)∘δ = A",
                        _iff("interior", is_if(G, A, IfsKind.IF_INTERIOR).holds, sandwich == A))]), {})


def _lr_iff(bundle, active):
    G, A = bundle.G, _ifs(bundle)
    left, right = is_if(G, A, IfsKind.IF_LEFT).holds, is_if(G, A, IfsKind.IF_RIGHT).holds
    return (*_combine([("left <=> right", _iff("left <=> right", left, right))]), {})


def _duo(bundle, active):
    G, A = bundle.G, _ifs(bundle)
    two = is_if(G, A, IfsKind.IF_TWO_SIDED).holds
    results = []
    for name, kind in (("left", IfsKind.IF_LEFT), ("right", IfsKind.IF_RIGHT)):
        one = is_if(G, A, kind).holds
        ok = two or not one
        results.append((f"{name} => two-sided", (ok, None if ok else TheoremWitness(f"{name} => two-sided", "forward"))))
    return (*_combine(results), {})


def _absorb(bundle, active):
    G, A, D = _one_ifs(bundle)
    return (*_combine([
        ("δ∘A = A", _equality("δ∘A = A", compose(G, D, A), A)),
        ("A∘δ = A", _equality("A∘δ = A", compose(G, A, D), A)),
    ]), {})


def _delta_idem(bundle, active):
    G = bundle.G
    D = delta(G.n)
    return (*_combine([("δ∘δ = δ", _equality("δ∘δ = δ", compose(G, D, D), D))]), {})


def _quasi_eq(bundle, active):
    G, A, D = _one_ifs(bundle)
    meet = intersect(compose(G, A, D), compose(G, D, A))
    return (*_combine([("quasi <=> (A∘δ) ∩ (δ∘A) = A",
                        _iff("quasi", is_if(G, A, IfsKind.IF_QUASI).holds, meet == A))]), {})


def _quasi_ts(bundle, active):
    G, A = bundle.G, _ifs(bundle)
    q, t = is_if(G, A, IfsKind.IF_QUASI).holds, is_if(G, A, IfsKind.IF_TWO_SIDED).holds
    return (*_combine([("quasi <=> two-sided", _iff("quasi <=> two-sided", q, t))]), {})


def _int_ts(bundle, active):
    G, A = bundle.G, _ifs(bundle)
    i, t = is_if(G, A, IfsKind.IF_INTERIOR).holds, is_if(G, A, IfsKind.IF_TWO_SIDED).holds
    return (*_combine([("interior <=> two-sided", _iff("interior <=> two-sided", i, t))]), {})


GRAND_PREDICATES = ("left", "right", "two-sided", "bi", "generalized-bi", "interior", "quasi", "A∘δ = A = δ∘A")


def grand_predicates(G: GammaGroupoid, A: IFS) -> dict:
    D = delta(G.n)
    values = {
        "left": is_if(G, A, IfsKind.IF_LEFT).holds,
        "right": is_if(G, A, IfsKind.IF_RIGHT).holds,
        "two-sided": is_if(G, A, IfsKind.IF_TWO_SIDED).holds,
        "bi": is_if(G, A, IfsKind.IF_BI).holds,
        "generalized-bi": is_if(G, A, IfsKind.IF_GENERALIZED_BI).holds,
        "interior": is_if(G, A, IfsKind.IF_INTERIOR).holds,
        "quasi": is_if(G, A, IfsKind.IF_QUASI).holds,
        "A∘δ = A = δ∘A": compose(G, A, D) == A and compose(G, D, A) == A,
    }
    return values


def _grand_eq(bundle, active):
    values = grand_predicates(bundle.G, _ifs(bundle))
    results = []
    first = GRAND_PREDICATES[0]
    for name in GRAND_PREDICATES[1:]:
        results.append((f"{first} <=> {name}", _iff(f"{first} <=> {name}", values[first], values[name])))
    return (*_combine(results), dict(values))


def _prod_cap_observe(bundle):
    G, A, B = bundle.G, bundle.ifs[0], bundle.ifs[1]
    return compose(G, A, B), intersect(A, B)


def _prod_cap(bundle, active):
    prod, meet = _prod_cap_observe(bundle)
    return (*_combine([("A∘B = A ∩ B", _equality("A∘B = A ∩ B", prod, meet))]), {})


def _ts_idem(bundle, active):
    G, A = bundle.G, _ifs(bundle)
    return (*_combine([("A∘A = A", _equality("A∘A = A", compose(G, A, A), A))]), {})


def _semilattice(bundle, active):
    return _semilattice_parts(bundle.G, bundle.ifs)


def _two_sided_roles(bundle):
    names = "AB" if len(bundle.ifs) == 2 else None
    out = {}
    for i, A in enumerate(bundle.ifs):
        label = names[i] if names else f"#{i + 1}"
        out[f"{label} is IF two-sided ideal"] = is_if(bundle.G, A, IfsKind.IF_TWO_SIDED).holds
    return out


def _one_sided_roles(bundle):
    G, A = bundle.G, _ifs(bundle)
    return {
        "A is IF left ideal": is_if(G, A, IfsKind.IF_LEFT).holds,
        "A is IF right ideal": is_if(G, A, IfsKind.IF_RIGHT).holds,
    }


CATALOG = {
    t.id: t
    for t in (
        Theorem(TheoremId.LEVELCUT, "level cuts of IF right/left/two-sided/bi/generalized bi-ideals are crisp ideals of the same kind",
                (LI,), 1, _levelcut_roles, "any", _levelcut),
        Theorem(TheoremId.CHAR, "IF subgroupoid/left/right ideals are exactly the IFS with A∘A ⊆ A, δ∘A ⊆ A, A∘δ ⊆ A",
                (LI,), 1, None, "all", _char),
        Theorem(TheoremId.BI_EQ, "A is an IF bi-ideal iff (A∘δ)∘A = A and A∘A = A",
                (LI, AGSS, IR), 1, None, "all", _bi_eq),
        Theorem(TheoremId.INT_EQ, "A is an IF interior ideal iff (δ∘A)∘δ = A",
                (LI, AGSS, IR), 1, None, "all", _int_eq),
        Theorem(TheoremId.LR_IFF, "A is an IF left ideal iff A is an IF right ideal",
                (LI, AGSS, IR), 1, None, "all", _lr_iff),
        Theorem(TheoremId.DUO, "every IF left ideal and every IF right ideal is two-sided",
                (LI, AGSS, IR), 1, None, "all", _duo),
        Theorem(TheoremId.ABSORB, "δ∘A = A and A∘δ = A for every IF left, right or two-sided ideal A",
                (LI, IR), 1, _one_sided_roles, "any", _absorb),
        Theorem(TheoremId.DELTA_IDEM, "δ∘δ = δ",
                (LI, IR), 0, None, "all", _delta_idem),
        Theorem(TheoremId.QUASI_EQ, "A is an IF quasi-ideal iff (A∘δ) ∩ (δ∘A) = A",
                (LI, AGSS, IR), 1, None, "all", _quasi_eq),
        Theorem(TheoremId.QUASI_TS, "A is an IF quasi-ideal iff A is an IF two-sided ideal",
                (LI, AGSS, IR), 1, None, "all", _quasi_ts),
        Theorem(TheoremId.INT_TS, "A is an IF interior ideal iff A is an IF two-sided ideal",
                (LI, AGSS, IR), 1, None, "all", _int_ts),
        Theorem(TheoremId.GRAND_EQ, "left, right, two-sided, bi, generalized bi, interior, quasi and A∘δ = A = δ∘A coincide",
                (LI, AGSS, IR), 1, None, "all", _grand_eq),
        Theorem(TheoremId.PROD_CAP, "A∘B = A ∩ B for IF two-sided ideals A, B",
                (LI, AGSS, IR), 2, _two_sided_roles, "all", _prod_cap),
        Theorem(TheoremId.TS_IDEM, "every IF two-sided ideal is idempotent",
                (LI, IR), 1, _two_sided_roles, "all", _ts_idem),
        Theorem(TheoremId.SEMILATTICE, "IF two-sided ideals under ∘ form a semilattice with identity δ",
                (LI, AGSS, IR), None, _two_sided_roles, "all", _semilattice),
    )
}


def verify(id: TheoremId, bundle: InstanceBundle, relax_hypotheses: bool = False) -> TheoremVerdict:
    """Check hypotheses, then (only if they hold) the conclusion.

    With ``relax_hypotheses`` the input-role hypotheses are still reported
    but no longer gate the conclusion; structural hypotheses always do.
    """
    th = CATALOG[id]
    k = len(bundle.ifs)
    if (th.arity is None and k < 1) or (th.arity is not None and k != th.arity):
        want = "at least one" if th.arity is None else str(th.arity)
        raise GammaAGError("ARITY_MISMATCH", f"{id.value} takes {want} IFS, got {k}")
    hyps = _structure(bundle.G, th.structure)
    structural_ok = all(hyps.values())
    roles = th.roles(bundle) if th.roles else {}
    hyps.update(roles)
    observed = {}
    if id is TheoremId.PROD_CAP:
        prod, meet = _prod_cap_observe(bundle)
        observed["A∘B = A ∩ B"] = prod == meet
    if relax_hypotheses:
        active = set(roles)
        role_ok = True
    else:
        active = {name for name, ok in roles.items() if ok}
        role_ok = (any if th.roles_mode == "any" else all)(roles.values()) if roles else True
    if not (structural_ok and role_ok):
        return TheoremVerdict(id, hyps, False, None, None, {}, observed, relax_hypotheses)
    holds, witness, parts, extra = th.conclusion(bundle, active)
    observed.update(extra)
    return TheoremVerdict(id, hyps, True, holds, witness, parts, observed, relax_hypotheses)


# --------------------------------------------------------------------------
# semilattice


def _semilattice_parts(G: GammaGroupoid, ideals: Sequence[IFS], cap: int = 32):
    """Semilattice laws on the listed ideals plus the products they generate.

    Closure means every product is again an IF two-sided ideal.  New products
    join the working set until it holds ``cap`` members; past that they are
    still checked for closure but not used as further factors.
    """
    D = delta(G.n)
    members = list(dict.fromkeys([D, *ideals]))
    index = {A: i for i, A in enumerate(members)}
    table = {}
    witness = None

    def mul(i, j):
        if (i, j) not in table:
            table[i, j] = compose(G, members[i], members[j])
        return table[i, j]

    closure_ok = True
    checked = set()
    i = 0
    while i < len(members) and closure_ok:
        for j in range(i + 1):
            for a, b in ((i, j), (j, i)):
                P = mul(a, b)
                if P in index or P in checked:
                    continue
                if not is_if(G, P, IfsKind.IF_TWO_SIDED).holds:
                    closure_ok = False
                    witness = TheoremWitness("closure", None, None, (a, b))
                    break
                if len(members) < cap:
                    index[P] = len(members)
                    members.append(P)
                else:
                    checked.add(P)
            if not closure_ok:
                break
        i += 1

    results = [("closure", (closure_ok, witness))]
    m = len(members)
    key = {A: idx for idx, A in enumerate(members)}

    def first_failure(part, pairs, test):
        for tup in pairs:
            if not test(*tup):
                return False, TheoremWitness(part, None, None, tup)
        return True, None

    results.append(("commutative", first_failure(
        "commutative", itertools.combinations(range(m), 2), lambda a, b: mul(a, b) == mul(b, a))))

    def assoc(a, b, c):
        ab, bc = mul(a, b), mul(b, c)
        left = compose(G, ab, members[c]) if ab not in key else mul(key[ab], c)
        right = compose(G, members[a], bc) if bc not in key else mul(a, key[bc])
        return left == right

    results.append(("associative", first_failure("associative", itertools.product(range(m), repeat=3), assoc)))
    results.append(("idempotent", first_failure("idempotent", ((a,) for a in range(m)), lambda a: mul(a, a) == members[a])))
    d = key[D]
    results.append(("δ identity", first_failure(
        "δ identity", ((a,) for a in range(m)), lambda a: mul(d, a) == members[a] and mul(a, d) == members[a])))
    holds, w, parts = _combine(results)
    return holds, w, parts, {"working set": m}


def semilattice_check(G: GammaGroupoid, ideals: Sequence[IFS]) -> TheoremVerdict:
    """Closure, commutativity, associativity, idempotence and δ-identity.

    Raises ``HYPOTHESIS_FAILED`` unless ``G`` is an intra-regular AG**
    groupoid and every listed IFS is an IF two-sided ideal.
    """
    v = verify(TheoremId.SEMILATTICE, InstanceBundle(G, tuple(ideals)))
    if not v.hypotheses_hold:
        failed = [name for name, ok in v.hypotheses.items() if not ok]
        raise GammaAGError("HYPOTHESIS_FAILED", f"failed: {', '.join(failed)}", tuple(failed))
    return v


# --------------------------------------------------------------------------
# groupoid enumeration


def enumerate_groupoids(n: int, g: int, required_laws=(LawId.LEFT_INVERTIVE,), limit: int | None = None,
                        max_n: int = 4) -> Iterator[GammaGroupoid]:
    """Every ``(g, n, n)`` table stack satisfying ``required_laws``.

    Backtracks over cells in ``(op, row, col)`` order, values ascending, so
    output follows lexicographic table order.  Partial tables are pruned as
    soon as a fully determined left-invertive instance fails; the remaining
    laws are checked on complete tables.
    """
    if n > max_n:
        raise GammaAGError("CARRIER_TOO_LARGE", f"exhaustive enumeration limited to n <= {max_n}")
    if n < 1 or g < 1:
        raise GammaAGError("WRONG_SHAPE", "need n >= 1 and g >= 1")
    if limit is not None and limit < 1:
        raise GammaAGError("BAD_LIMIT", "limit must be >= 1")
    laws = set(required_laws)
    prune = LawId.LEFT_INVERTIVE in laws
    T = [[[-1] * n for _ in range(n)] for _ in range(g)]
    cells = [(o, x, y) for o in range(g) for x in range(n) for y in range(n)]
    N, G_ = range(n), range(g)

    def ok(x, y, z, a, b):
        p, q = T[a][x][y], T[a][z][y]
        if p < 0 or q < 0:
            return True
        lhs, rhs = T[b][p][z], T[b][q][x]
        return lhs < 0 or rhs < 0 or lhs == rhs

    def consistent(o, r, c):
        # instances in which cell (o, r, c) is an inner product
        for z in N:
            for b in G_:
                if not ok(r, c, z, o, b) or not ok(z, c, r, o, b):
                    return False
        # instances in which it is the outer product: (x a y) o c with x a y == r
        for a in G_:
            Ta = T[a]
            for x in N:
                row = Ta[x]
                for y in N:
                    if row[y] == r and (not ok(x, y, c, a, o) or not ok(c, y, x, a, o)):
                        return False
        return True

    emitted = 0
    rest = laws - {LawId.LEFT_INVERTIVE}

    def search(k):
        nonlocal emitted
        if k == len(cells):
            G = GammaGroupoid(T)
            if all(carrier.holds(G, law) for law in rest):
                emitted += 1
                yield G
            return
        o, r, c = cells[k]
        for v in N:
            T[o][r][c] = v
            if not prune or consistent(o, r, c):
                yield from search(k + 1)
                if limit is not None and emitted >= limit:
                    break
        T[o][r][c] = -1

    for G in search(0):
        yield G
        if limit is not None and emitted >= limit:
            return


def random_groupoids(n: int, g: int, required_laws, rng: np.random.Generator, tries: int) -> list:
    """Uniform random tables kept when every required law holds."""
    found = []
    for _ in range(tries):
        G = GammaGroupoid(rng.integers(0, n, size=(g, n, n)))
        if all(carrier.holds(G, law) for law in required_laws):
            found.append(G)
    return found


# --------------------------------------------------------------------------
# counterexample hunting


@dataclass(frozen=True)
class HuntConfig:
    sizes: tuple = (3,)
    gammas: tuple = (1,)
    denominator: int = 4
    budget: int = 1000
    seed: int = 0
    relax_hypotheses: bool = False
    groupoids: tuple | None = None  # explicit instances instead of enumeration
    conform_inputs: bool = True  # project some draws onto ideals so role hypotheses get exercised
    enumeration_limit: int = 5000
    random_tries: int = 20000


@dataclass(frozen=True)
class HuntReport:
    theorem: TheoremId
    config: HuntConfig
    tried: int
    qualified: int
    groupoid_count: int
    counterexample: InstanceBundle | None = None
    verdict: TheoremVerdict | None = None
    sample_index: int | None = None

    @property
    def found(self) -> bool:
        return self.counterexample is not None


_SIDES = ("left", "right", "two-sided")


def groupoid_supply(th: Theorem, config: HuntConfig) -> list:
    if config.groupoids is not None:
        supply = list(config.groupoids)
    else:
        laws = [LawId.LEFT_INVERTIVE] + ([LawId.AG_STAR_STAR] if AGSS in th.structure else [])
        rng = np.random.default_rng([config.seed, 7])
        supply = []
        for n in config.sizes:
            for g in config.gammas:
                if n <= 3:
                    supply.extend(enumerate_groupoids(n, g, laws, limit=config.enumeration_limit))
                else:
                    supply.extend(random_groupoids(n, g, laws, rng, config.random_tries))
    return [G for G in supply if all(_structure(G, th.structure).values())]


def _draw(th: Theorem, G: GammaGroupoid, config: HuntConfig, rng, i: int) -> tuple:
    k = th.arity if th.arity is not None else 3
    sets = [random_ifs(G.n, config.denominator, rng) for _ in range(k)]
    if config.conform_inputs and not config.relax_hypotheses:
        if th.roles is _two_sided_roles:
            sets = [largest_ideal_below(G, A, "two-sided") for A in sets]
        elif th.roles is not None or i % 2 == 1:
            # biconditionals gain nothing from all-false samples; alternate raw and projected draws
            side = _SIDES[(i // 2) % 3] if th.roles is None else _SIDES[i % 3]
            sets = [largest_ideal_below(G, A, side) for A in sets]
    return tuple(sets)


def hunt(id: TheoremId, config: HuntConfig) -> HuntReport:
    """Search for an instance where the hypotheses hold but the conclusion fails.

    Samples are drawn in a fixed order from one seeded generator; the first
    counterexample (smallest sample index) ends the search.
    """
    if config.budget < 1:
        raise GammaAGError("BAD_BUDGET", "budget must be >= 1")
    th = CATALOG[id]
    supply = groupoid_supply(th, config)
    tried = qualified = 0
    if not supply:
        return HuntReport(id, config, 0, 0, 0)
    rng = np.random.default_rng(config.seed)
    for i in range(config.budget):
        if th.arity == 0:
            if i >= len(supply):
                break
            G, sets = supply[i], ()
        else:
            G = supply[int(rng.integers(len(supply)))] if len(supply) > 1 else supply[0]
            sets = _draw(th, G, config, rng, i)
        tried += 1
        bundle = InstanceBundle(G, sets)
        v = verify(id, bundle, config.relax_hypotheses)
        if not v.hypotheses_hold:
            continue
        qualified += 1
        if v.conclusion_holds is False:
            return HuntReport(id, config, tried, qualified, len(supply), bundle, v, i)
    return HuntReport(id, config, tried, qualified, len(supply))
