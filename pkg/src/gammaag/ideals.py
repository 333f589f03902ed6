"""Intuitionistic fuzzy Gamma-ideals.

Pointwise notions are decided by scanning every element/operation tuple of
the defining inequalities; quasi-ideals, which only have a composition
form, by the containment ``(A∘δ) ∩ (δ∘A) ⊆ A``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .carrier import GammaGroupoid
from .crisp import _ternary_products
from .errors import GammaAGError
from .ifs import IFS, compose, containment_failure, delta, intersect


class IfsKind(enum.Enum):
    IF_SUBGROUPOID = "subgroupoid"
    IF_LEFT = "left-ideal"
    IF_RIGHT = "right-ideal"
    IF_TWO_SIDED = "two-sided"
    IF_GENERALIZED_BI = "generalized-bi"
    IF_BI = "bi"
    IF_INTERIOR = "interior"
    IF_QUASI = "quasi"

    @classmethod
    def parse(cls, text: str) -> "IfsKind":
        key = text.strip().lower().replace("_", "-")
        for kind in cls:
            if key in (kind.value, kind.name.lower().replace("_", "-"), kind.name.lower()[3:].replace("_", "-")):
                return kind
        raise GammaAGError("BAD_KIND", f"unknown IFS kind {text!r}")


@dataclass(frozen=True)
class IfsWitness:
    """Strict violation of a defining inequality.

    For pointwise kinds ``elements``/``gammas`` instantiate the inequality
    (``(x, y; op)`` or ``(x, a, y; beta, gamma)``), ``at`` is the product
    element and ``value``/``bound`` are the compared grades of
    ``component`` (``"mu"`` needs ``value >= bound``, ``"nu"`` needs
    ``value <= bound``).  Composition-based checks report ``elements=(at,)``
    and keep the composition grades in ``extra``.
    """

    component: str
    elements: tuple
    gammas: tuple
    at: int
    value: Fraction
    bound: Fraction
    extra: tuple = ()


@dataclass(frozen=True)
class IfsVerdict:
    kind: IfsKind
    holds: bool
    witness: IfsWitness | None = None


def _check(G, A):
    if A.n != G.n:
        raise GammaAGError("SIZE_MISMATCH", f"IFS over {A.n} elements, groupoid has {G.n}")


def _scan(A: IFS, P, mu_bound, nu_bound, k):
    """First tuple where ``mu[P] < mu_bound`` or ``nu[P] > nu_bound``."""
    mu, nu = A.num_mu, A.num_nu
    bad_mu = mu[P] < mu_bound
    bad_nu = nu[P] > nu_bound
    bad_mu, bad_nu = np.broadcast_arrays(bad_mu, bad_nu)
    hits = np.argwhere(bad_mu | bad_nu)
    if len(hits) == 0:
        return None
    pos = tuple(int(v) for v in hits[0])
    comp = "mu" if bad_mu[pos] else "nu"
    at = int(P[pos] if np.ndim(P) else P)
    grades = mu if comp == "mu" else nu
    bound = np.broadcast_to(mu_bound if comp == "mu" else nu_bound, bad_mu.shape)[pos]
    return IfsWitness(
        comp, pos[:k], pos[k:], at, Fraction(int(grades[at]), A.den), Fraction(int(bound), A.den)
    )


def _pointwise(G: GammaGroupoid, A: IFS, kind: IfsKind):
    mu, nu = A.num_mu, A.num_nu
    if kind in (IfsKind.IF_SUBGROUPOID, IfsKind.IF_LEFT, IfsKind.IF_RIGHT):
        P = G.tables.transpose(1, 2, 0)  # (x, y, op)
        mx, my = mu[:, None, None], mu[None, :, None]
        nx, ny = nu[:, None, None], nu[None, :, None]
        if kind is IfsKind.IF_SUBGROUPOID:
            return _scan(A, P, np.minimum(mx, my), np.maximum(nx, ny), 2)
        if kind is IfsKind.IF_LEFT:
            return _scan(A, P, my, ny, 2)
        return _scan(A, P, mx, nx, 2)
    P = _ternary_products(G)  # (x, a, y, beta, gamma)
    if kind is IfsKind.IF_GENERALIZED_BI:
        lo = np.minimum(mu[:, None, None, None, None], mu[None, None, :, None, None])
        hi = np.maximum(nu[:, None, None, None, None], nu[None, None, :, None, None])
        return _scan(A, P, lo, hi, 3)
    if kind is IfsKind.IF_INTERIOR:
        return _scan(A, P, mu[None, :, None, None, None], nu[None, :, None, None, None], 3)
    raise AssertionError(kind)


def _quasi(G: GammaGroupoid, A: IFS):
    D = delta(G.n)
    right = compose(G, A, D)
    left = compose(G, D, A)
    meet = intersect(right, left)
    fail = containment_failure(meet, A)
    if fail is None:
        return None
    x, comp = fail
    pick = (lambda S: S.mu[x]) if comp == "mu" else (lambda S: S.nu[x])
    return IfsWitness(comp, (x,), (), x, pick(meet), pick(A), (pick(right), pick(left)))


def is_if(G: GammaGroupoid, A: IFS, kind: IfsKind) -> IfsVerdict:
    _check(G, A)
    if kind is IfsKind.IF_TWO_SIDED:
        parts = (IfsKind.IF_LEFT, IfsKind.IF_RIGHT)
    elif kind is IfsKind.IF_BI:
        parts = (IfsKind.IF_SUBGROUPOID, IfsKind.IF_GENERALIZED_BI)
    else:
        parts = (kind,)
    for part in parts:
        w = _quasi(G, A) if part is IfsKind.IF_QUASI else _pointwise(G, A, part)
        if w is not None:
            return IfsVerdict(kind, False, w)
    return IfsVerdict(kind, True)


def is_if_all(G: GammaGroupoid, A: IFS) -> dict:
    return {kind: is_if(G, A, kind).holds for kind in IfsKind}


def characterize_by_composition(G: GammaGroupoid, A: IFS, kind: IfsKind) -> IfsVerdict:
    """Decide subgroupoid/left/right ideals through products with A and δ.

    Subgroupoid: ``A∘A ⊆ A``; left: ``δ∘A ⊆ A``; right: ``A∘δ ⊆ A``, where
    the δ factor pairs its all-ones membership with ``mu`` and its all-zeros
    nonmembership with ``nu``.
    """
    _check(G, A)
    if kind is IfsKind.IF_SUBGROUPOID:
        prod = compose(G, A, A)
    elif kind is IfsKind.IF_LEFT:
        prod = compose(G, delta(G.n), A)
    elif kind is IfsKind.IF_RIGHT:
        prod = compose(G, A, delta(G.n))
    else:
        raise GammaAGError("BAD_KIND", f"no composition characterization for {kind.name}")
    fail = containment_failure(prod, A)
    if fail is None:
        return IfsVerdict(kind, True)
    x, comp = fail
    value, bound = (prod.mu[x], A.mu[x]) if comp == "mu" else (prod.nu[x], A.nu[x])
    return IfsVerdict(kind, False, IfsWitness(comp, (x,), (), x, value, bound))


def _reach(G: GammaGroupoid, side: str) -> np.ndarray:
    """``R[x, z]``: z lies in the one-/two-sided ideal generated by x."""

    def build():
        n, T = G.n, G.tables
        step = np.eye(n, dtype=bool)
        for x in range(n):
            if side in ("left", "two-sided"):
                step[x, T[:, :, x].reshape(-1)] = True
            if side in ("right", "two-sided"):
                step[x, T[:, x, :].reshape(-1)] = True
        R = step
        while True:
            nxt = (R.astype(np.int64) @ step.astype(np.int64)) > 0
            if np.array_equal(nxt, R):
                return R
            R = nxt

    return G.memo(("reach", side), build)


def largest_ideal_below(G: GammaGroupoid, A: IFS, side: str) -> IFS:
    """Largest IF left/right/two-sided ideal contained in ``A``.

    ``mu'(x)`` is the least membership over the ideal generated by ``x``
    and ``nu'(x)`` the greatest nonmembership; used to draw IFS that meet a
    theorem's ideal hypothesis.
    """
    _check(G, A)
    if side not in ("left", "right", "two-sided"):
        raise GammaAGError("BAD_SIDE", f"side must be left, right or two-sided, got {side!r}")
    R = _reach(G, side)
    mu = [min(A.num_mu[R[x]]) for x in range(G.n)]
    nu = [max(A.num_nu[R[x]]) for x in range(G.n)]
    return IFS(mu, nu, A.den)
