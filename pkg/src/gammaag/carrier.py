"""Finite Gamma-groupoids as stacks of multiplication tables.

A ``GammaGroupoid`` over the carrier ``{0, ..., n-1}`` carries ``g`` binary
operations, stored as an integer array ``tables`` of shape ``(g, n, n)`` with
``tables[op, x, y] == x op y``.  Elements are 0-based internally; the
1-based names used by the printed tables live in ``labels`` and in the
document layer (:mod:`gammaag.documents`).

Identity laws are decided by exhaustive vectorised evaluation.  Every failed
law carries the lexicographically smallest violating instantiation (element
coordinates first, then operation indexes).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import GammaAGError

GREEK = ("α", "β", "γ", "δ", "ξ", "ψ", "η", "θ", "κ", "λ")


class GammaGroupoid:
    """Carrier of size ``n`` with ``g`` total binary operations.

    Build instances with :func:`validate_groupoid` when the tables come from
    outside; the constructor trusts its input apart from the array shape.
    """

    __slots__ = ("tables", "labels", "gamma_labels", "_memo")

    def __init__(self, tables, labels=None, gamma_labels=None):
        arr = np.array(tables, dtype=np.int64)
        if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
            raise GammaAGError("WRONG_SHAPE", f"expected (g, n, n) tables, got {arr.shape}")
        arr.setflags(write=False)
        self.tables = arr
        g, n = arr.shape[0], arr.shape[1]
        self.labels = tuple(labels) if labels is not None else tuple(str(i + 1) for i in range(n))
        if gamma_labels is None:
            gamma_labels = GREEK[:g] if g <= len(GREEK) else tuple(f"γ{i + 1}" for i in range(g))
        self.gamma_labels = tuple(gamma_labels)
        self._memo = {}

    @property
    def n(self) -> int:
        return self.tables.shape[1]

    @property
    def g(self) -> int:
        return self.tables.shape[0]

    def product(self, x: int, op: int, y: int) -> int:
        return int(self.tables[op, x, y])

    def memo(self, key, build):
        # derived data is a pure function of the tables, so caching is safe
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = build()
            return value

    def factorization_index(self):
        """Factorizations ``a = b op c`` grouped by target element.

        Returns ``(left, right, starts, has)``: ``left``/``right`` list the
        factors sorted by target, ``starts`` are the segment offsets of the
        targets that have at least one factorization and ``has`` is the
        boolean mask of those targets.
        """
        return self.memo("factorizations", self._build_factorizations)

    def _build_factorizations(self):
        g, n = self.g, self.n
        targets = self.tables.reshape(-1)
        _, b, c = np.unravel_index(np.arange(g * n * n), (g, n, n))
        order = np.argsort(targets, kind="stable")
        targets, left, right = targets[order], b[order], c[order]
        has = np.zeros(n, dtype=bool)
        has[targets] = True
        starts = np.searchsorted(targets, np.flatnonzero(has))
        return left, right, starts, has

    def __eq__(self, other):
        return isinstance(other, GammaGroupoid) and np.array_equal(self.tables, other.tables)

    def __hash__(self):
        return hash(self.tables.tobytes()) ^ hash(self.tables.shape)

    def __repr__(self):
        return f"GammaGroupoid(n={self.n}, g={self.g})"

    def to_lists(self, one_based: bool = True) -> list:
        off = 1 if one_based else 0
        return (self.tables + off).tolist()


def validate_groupoid(n: int, g: int, raw_tables, labels=None, gamma_labels=None) -> GammaGroupoid:
    """Check raw 0-based tables and wrap them as a :class:`GammaGroupoid`.

    Raises ``GammaAGError`` with code ``WRONG_SHAPE`` when the table count
    or a table's dimensions are off, and ``OUT_OF_RANGE`` (``where`` =
    ``(op, row, col)``) for an entry outside ``[0, n)``.
    """
    if n < 1 or g < 1:
        raise GammaAGError("WRONG_SHAPE", f"need n >= 1 and g >= 1, got n={n}, g={g}")
    if len(raw_tables) != g:
        raise GammaAGError("WRONG_SHAPE", f"expected {g} tables, got {len(raw_tables)}")
    for op, table in enumerate(raw_tables):
        if len(table) != n:
            raise GammaAGError("WRONG_SHAPE", f"table {op} has {len(table)} rows, expected {n}", (op,))
        for row, entries in enumerate(table):
            if len(entries) != n:
                raise GammaAGError(
                    "WRONG_SHAPE", f"table {op} row {row} has {len(entries)} entries, expected {n}", (op, row)
                )
            for col, v in enumerate(entries):
                if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                    raise GammaAGError(
                        "OUT_OF_RANGE", f"entry {v!r} at table {op} ({row}, {col}) not in [0, {n})", (op, row, col)
                    )
    if labels is not None and len(labels) != n:
        raise GammaAGError("WRONG_SHAPE", f"expected {n} labels, got {len(labels)}")
    if gamma_labels is not None and len(gamma_labels) != g:
        raise GammaAGError("WRONG_SHAPE", f"expected {g} gamma labels, got {len(gamma_labels)}")
    return GammaGroupoid(raw_tables, labels, gamma_labels)


def product(G: GammaGroupoid, x: int, op: int, y: int) -> int:
    return G.product(x, op, y)


# --------------------------------------------------------------------------
# identity laws


class LawId(enum.Enum):
    LEFT_INVERTIVE = "left-invertive"
    MEDIAL = "medial"
    AG_STAR_STAR = "ag-star-star"
    PARAMEDIAL = "paramedial"
    COMMUTATIVE = "commutative"
    ASSOCIATIVE = "associative"
    IDEMPOTENT_BAND = "idempotent-band"
    S_EQUALS_SGS = "s-equals-sgs"


@dataclass(frozen=True)
class LawWitness:
    elements: tuple
    gammas: tuple
    lhs: int
    rhs: int | None  # None for S_EQUALS_SGS: the element has no factorization


@dataclass(frozen=True)
class LawReport:
    law: LawId
    holds: bool
    witness: LawWitness | None = None


# (element arity, gamma arity, lhs, rhs); sides take (T, xs, gs) with
# broadcastable index arrays
_LAWS = {
    LawId.LEFT_INVERTIVE: (
        3, 2,
        lambda T, v, o: T[o[1], T[o[0], v[0], v[1]], v[2]],
        lambda T, v, o: T[o[1], T[o[0], v[2], v[1]], v[0]],
    ),
    LawId.MEDIAL: (
        4, 3,
        lambda T, v, o: T[o[1], T[o[0], v[0], v[1]], T[o[2], v[2], v[3]]],
        lambda T, v, o: T[o[1], T[o[0], v[0], v[2]], T[o[2], v[1], v[3]]],
    ),
    LawId.AG_STAR_STAR: (
        3, 2,
        lambda T, v, o: T[o[0], v[0], T[o[1], v[1], v[2]]],
        lambda T, v, o: T[o[0], v[1], T[o[1], v[0], v[2]]],
    ),
    LawId.PARAMEDIAL: (
        4, 3,
        lambda T, v, o: T[o[1], T[o[0], v[0], v[1]], T[o[2], v[2], v[3]]],
        lambda T, v, o: T[o[1], T[o[0], v[3], v[2]], T[o[2], v[1], v[0]]],
    ),
    LawId.COMMUTATIVE: (
        2, 1,
        lambda T, v, o: T[o[0], v[0], v[1]],
        lambda T, v, o: T[o[0], v[1], v[0]],
    ),
    LawId.ASSOCIATIVE: (
        3, 2,
        lambda T, v, o: T[o[1], T[o[0], v[0], v[1]], v[2]],
        lambda T, v, o: T[o[0], v[0], T[o[1], v[1], v[2]]],
    ),
    LawId.IDEMPOTENT_BAND: (
        1, 1,
        lambda T, v, o: T[o[0], v[0], v[0]],
        lambda T, v, o: v[0] + 0 * o[0],
    ),
}


def _grid(n: int, g: int, k: int, m: int):
    idx = np.indices((n,) * k + (g,) * m, sparse=True)
    return idx[:k], idx[k:]


def _law_sides(G: GammaGroupoid, law: LawId):
    k, m, lhs, rhs = _LAWS[law]
    v, o = _grid(G.n, G.g, k, m)
    return k, m, lhs(G.tables, v, o), rhs(G.tables, v, o)


def law_violations(G: GammaGroupoid, law: LawId) -> Iterator[LawWitness]:
    """Every violating instantiation of ``law``, in lexicographic order."""
    if law is LawId.S_EQUALS_SGS:
        image = np.zeros(G.n, dtype=bool)
        image[G.tables.reshape(-1)] = True
        for a in np.flatnonzero(~image):
            yield LawWitness((int(a),), (), int(a), None)
        return
    k, _, left, right = _law_sides(G, law)
    left, right = np.broadcast_arrays(left, right)
    for pos in np.argwhere(left != right):
        pos = tuple(int(p) for p in pos)
        yield LawWitness(pos[:k], pos[k:], int(left[pos]), int(right[pos]))


def check_law(G: GammaGroupoid, law: LawId) -> LawReport:
    for witness in law_violations(G, law):
        return LawReport(law, False, witness)
    return LawReport(law, True)


def holds(G: GammaGroupoid, law: LawId) -> bool:
    return G.memo(("law", law), lambda: check_law(G, law).holds)


def evaluate_law(G: GammaGroupoid, law: LawId, elements: Sequence[int], gammas: Sequence[int] = ()):
    """Both sides of ``law`` at one instantiation (0-based)."""
    if law is LawId.S_EQUALS_SGS:
        (a,) = elements
        hit = bool((G.tables == a).any())
        return a, (a if hit else None)
    k, m, lhs, rhs = _LAWS[law]
    if len(elements) != k or len(gammas) != m:
        raise GammaAGError("ARITY_MISMATCH", f"{law.name} takes {k} elements and {m} gammas")
    v = [np.int64(e) for e in elements]
    o = [np.int64(c) for c in gammas]
    return int(lhs(G.tables, v, o)), int(rhs(G.tables, v, o))


# --------------------------------------------------------------------------
# intra-regularity


@dataclass(frozen=True)
class IntraRegularWitness:
    """``(x alpha (a beta a)) gamma y == a``."""

    a: int
    x: int
    y: int
    alpha: int
    beta: int
    gamma: int

    def evaluate(self, G: GammaGroupoid) -> int:
        T = G.tables
        return int(T[self.gamma, T[self.alpha, self.x, T[self.beta, self.a, self.a]], self.y])


@dataclass(frozen=True)
class IntraRegularityReport:
    regular: bool
    witnesses: dict
    failures: tuple


def _intra_hits(G: GammaGroupoid, a: int):
    T = G.tables
    x, y, al, be, ga = np.indices((G.n, G.n, G.g, G.g, G.g), sparse=True)
    value = T[ga, T[al, x, T[be, a, a]], y]
    return np.argwhere(np.broadcast_to(value, (G.n, G.n, G.g, G.g, G.g)) == a)


def intra_regular_witness(G: GammaGroupoid, a: int) -> IntraRegularWitness | None:
    """First ``(x, y, alpha, beta, gamma)`` in lexicographic order, or None."""
    hits = _intra_hits(G, a)
    if len(hits) == 0:
        return None
    x, y, al, be, ga = (int(v) for v in hits[0])
    return IntraRegularWitness(a, x, y, al, be, ga)


def intra_regular_witnesses(G: GammaGroupoid, a: int) -> list:
    """All witnesses for ``a``, lexicographically ordered."""
    return [IntraRegularWitness(a, *(int(v) for v in h)) for h in _intra_hits(G, a)]


def intra_regularity(G: GammaGroupoid) -> IntraRegularityReport:
    return G.memo("intra", lambda: _intra_regularity(G))


def _intra_regularity(G):
    witnesses, failures = {}, []
    for a in range(G.n):
        w = intra_regular_witness(G, a)
        if w is None:
            failures.append(a)
        else:
            witnesses[a] = w
    return IntraRegularityReport(not failures, witnesses, tuple(failures))


# --------------------------------------------------------------------------
# derived operations


def derive_power_gamma(base) -> GammaGroupoid:
    """Two operations from one table: ``a α b = (ab)^2`` and ``a β b = a^3 b^2``.

    Powers are left-normed: ``t^2 = t t`` and ``t^3 = (t t) t``.  ``base``
    is one 0-based Cayley table or a one-operation :class:`GammaGroupoid`.
    """
    if isinstance(base, GammaGroupoid):
        if base.g != 1:
            raise GammaAGError("WRONG_SHAPE", f"need a single operation, got {base.g}")
        base = base.tables[0]
    rows = [list(r) for r in base]
    n = len(rows)
    G0 = validate_groupoid(n, 1, [rows])
    T = G0.tables[0]
    t = np.arange(n)
    sq = T[t, t]
    cube = T[sq, t]
    alpha = sq[T]
    beta = T[cube[:, None], sq[None, :]]
    return GammaGroupoid(np.stack([alpha, beta]), G0.labels)
