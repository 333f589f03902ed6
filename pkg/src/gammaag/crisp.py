"""Crisp Gamma-ideals of explicit subsets, subset products and level cuts."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .carrier import GammaGroupoid
from .errors import GammaAGError
from .ifs import IFS, parse_grade

DUO_BOUND = 12


@dataclass(frozen=True)
class CrispSubset:
    """Subset of ``{0, ..., n-1}`` stored as an integer bitmask."""

    n: int
    bits: int = 0

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "CrispSubset":
        bits = 0
        for e in elements:
            if not 0 <= e < n:
                raise GammaAGError("OUT_OF_RANGE", f"element {e} not in [0, {n})")
            bits |= 1 << e
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "CrispSubset":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_mask(cls, mask) -> "CrispSubset":
        return cls.of(len(mask), np.flatnonzero(mask).tolist())

    def __contains__(self, e: int) -> bool:
        return bool(self.bits >> e & 1)

    def __iter__(self):
        return (e for e in range(self.n) if self.bits >> e & 1)

    def __len__(self):
        return self.bits.bit_count()

    def __or__(self, other):
        _same_size(self, other)
        return CrispSubset(self.n, self.bits | other.bits)

    def __and__(self, other):
        _same_size(self, other)
        return CrispSubset(self.n, self.bits & other.bits)

    def issubset(self, other) -> bool:
        _same_size(self, other)
        return self.bits & ~other.bits == 0

    def mask(self) -> np.ndarray:
        return np.array([self.bits >> e & 1 for e in range(self.n)], dtype=bool)

    def elements(self) -> tuple:
        return tuple(self)

    def __repr__(self):
        return f"CrispSubset({{{', '.join(str(e + 1) for e in self)}}})"


def _same_size(*sets):
    if len({s.n for s in sets}) != 1:
        raise GammaAGError("SIZE_MISMATCH", "subsets live on carriers of different sizes")


def _check(G: GammaGroupoid, *sets):
    for s in sets:
        if s.n != G.n:
            raise GammaAGError("SIZE_MISMATCH", f"subset over {s.n} elements, groupoid has {G.n}")


def subset_product(G: GammaGroupoid, A: CrispSubset, B: CrispSubset) -> CrispSubset:
    """``A Γ B = {a op b : a in A, b in B, op in Γ}``."""
    _check(G, A, B)
    a = np.array(A.elements(), dtype=np.int64)
    b = np.array(B.elements(), dtype=np.int64)
    if len(a) == 0 or len(b) == 0:
        return CrispSubset(G.n)
    return CrispSubset.of(G.n, np.unique(G.tables[:, a[:, None], b[None, :]]).tolist())


class CrispKind(enum.Enum):
    SUBGROUPOID = "subgroupoid"
    LEFT_IDEAL = "left-ideal"
    RIGHT_IDEAL = "right-ideal"
    TWO_SIDED = "two-sided"
    GENERALIZED_BI = "generalized-bi"
    BI = "bi"
    INTERIOR = "interior"
    QUASI = "quasi"


@dataclass(frozen=True)
class CrispWitness:
    """A product that escapes the subset.

    ``elements``/``gammas`` are the factors in the order of the defining
    expression: ``(x, y; op)`` for ``x op y``, ``(x, a, y; beta, gamma)`` for
    ``(x beta a) gamma y``.  For quasi-ideals the escaping element has two
    factorizations ``s op a`` and ``a' op' t``, reported as
    ``(s, a, a', t; op, op')``.
    """

    kind: CrispKind
    product: int
    elements: tuple
    gammas: tuple


@dataclass(frozen=True)
class CrispVerdict:
    kind: CrispKind
    holds: bool
    nonempty: bool
    witness: CrispWitness | None = None


def _first(mask):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


def _binary_violation(G, m, left_in, right_in):
    # (x, y, op) ordering
    P = G.tables.transpose(1, 2, 0)
    bad = ~m[P]
    if left_in:
        bad &= m[:, None, None]
    if right_in:
        bad &= m[None, :, None]
    pos = _first(bad)
    if pos is None:
        return None
    x, y, op = pos
    return int(P[x, y, op]), (x, y), (op,)


def _ternary_products(G):
    # P[x, a, y, beta, gamma] = (x beta a) gamma y
    def build():
        T = G.tables
        x, a, y, be, ga = np.indices((G.n, G.n, G.n, G.g, G.g), sparse=True)
        return np.broadcast_to(T[ga, T[be, x, a], y], (G.n,) * 3 + (G.g,) * 2)

    return G.memo("ternary", build)


def _ternary_violation(G, m, outer_in, middle_in):
    P = _ternary_products(G)
    bad = ~m[P]
    if outer_in:
        bad = bad & m[:, None, None, None, None] & m[None, None, :, None, None]
    if middle_in:
        bad = bad & m[None, :, None, None, None]
    pos = _first(bad)
    if pos is None:
        return None
    return int(P[pos]), pos[:3], pos[3:]


def _quasi_violation(G, m):
    P = G.tables.transpose(1, 2, 0)
    left = np.zeros(G.n, dtype=bool)  # S Γ A
    right = np.zeros(G.n, dtype=bool)  # A Γ S
    left[P[:, m, :].reshape(-1)] = True
    right[P[m, :, :].reshape(-1)] = True
    bad = np.flatnonzero(left & right & ~m)
    if len(bad) == 0:
        return None
    z = int(bad[0])
    s, a, op = _first((P == z) & m[None, :, None])
    a2, t, op2 = _first((P == z) & m[:, None, None])
    return z, (s, a, a2, t), (op, op2)


def is_crisp(G: GammaGroupoid, A: CrispSubset, kind: CrispKind) -> CrispVerdict:
    """Decide one crisp ideal notion; the empty set passes vacuously."""
    _check(G, A)
    m = A.mask()
    if kind is CrispKind.TWO_SIDED:
        for part in (CrispKind.LEFT_IDEAL, CrispKind.RIGHT_IDEAL):
            v = is_crisp(G, A, part)
            if not v.holds:
                return CrispVerdict(kind, False, v.nonempty, v.witness)
        return CrispVerdict(kind, True, bool(m.any()))
    if kind is CrispKind.BI:
        for part in (CrispKind.SUBGROUPOID, CrispKind.GENERALIZED_BI):
            v = is_crisp(G, A, part)
            if not v.holds:
                return CrispVerdict(kind, False, v.nonempty, v.witness)
        return CrispVerdict(kind, True, bool(m.any()))
    if kind is CrispKind.SUBGROUPOID:
        found = _binary_violation(G, m, True, True)
    elif kind is CrispKind.LEFT_IDEAL:
        found = _binary_violation(G, m, False, True)
    elif kind is CrispKind.RIGHT_IDEAL:
        found = _binary_violation(G, m, True, False)
    elif kind is CrispKind.GENERALIZED_BI:
        found = _ternary_violation(G, m, True, False)
    elif kind is CrispKind.INTERIOR:
        found = _ternary_violation(G, m, False, True)
    else:
        found = _quasi_violation(G, m)
    if found is None:
        return CrispVerdict(kind, True, bool(m.any()))
    z, elements, gammas = found
    return CrispVerdict(kind, False, bool(m.any()), CrispWitness(kind, z, elements, gammas))


def level_cut(A: IFS, alpha) -> CrispSubset:
    """``{x : mu(x) >= alpha and nu(x) <= alpha}`` for ``alpha`` in ``(0, 1]``."""
    alpha = alpha if isinstance(alpha, Fraction) else parse_grade(alpha)
    if not 0 < alpha <= 1:
        raise GammaAGError("ALPHA_OUT_OF_RANGE", f"alpha = {alpha} not in (0, 1]")
    # alpha = p/q against numerators over A.den: compare cross-multiplied
    p, q = alpha.numerator, alpha.denominator
    mu, nu = A.scaled(A.den)
    mask = (mu * q >= p * A.den) & (nu * q <= p * A.den)
    return CrispSubset.of(A.n, np.flatnonzero(mask).tolist())


@dataclass(frozen=True)
class DuoVerdict:
    side: str
    holds: bool
    witness: CrispSubset | None
    ideals: int  # number of one-sided ideals inspected


def is_duo(G: GammaGroupoid, side: str, bound: int = DUO_BOUND) -> DuoVerdict:
    """Every left (``side="left"``) or right ideal is two-sided.

    Exhaustive over all ``2**n`` subsets; ``CARRIER_TOO_LARGE`` past
    ``bound``.  The empty set is skipped, matching the non-empty convention.
    """
    side = side.lower()
    if side not in ("left", "right"):
        raise GammaAGError("BAD_SIDE", f"side must be 'left' or 'right', got {side!r}")
    if G.n > bound:
        raise GammaAGError("CARRIER_TOO_LARGE", f"n = {G.n} exceeds duo enumeration bound {bound}")
    one_sided = CrispKind.LEFT_IDEAL if side == "left" else CrispKind.RIGHT_IDEAL
    other = CrispKind.RIGHT_IDEAL if side == "left" else CrispKind.LEFT_IDEAL
    count = 0
    for bits in range(1, 1 << G.n):
        A = CrispSubset(G.n, bits)
        if is_crisp(G, A, one_sided).holds:
            count += 1
            if not is_crisp(G, A, other).holds:
                return DuoVerdict(side, False, A, count)
    return DuoVerdict(side, True, None, count)
