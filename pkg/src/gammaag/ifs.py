"""Intuitionistic fuzzy sets over a finite carrier, with exact grades.

Grades are :class:`fractions.Fraction` values in ``[0, 1]``.  Internally an
:class:`IFS` keeps integer numerators over one shared denominator so that
lattice operations and the sup-min composition run as integer numpy
reductions; min and max never leave the set of input values, so nothing is
rounded anywhere.
"""

from __future__ import annotations

import math
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Sequence

import numpy as np

from .carrier import GammaGroupoid
from .errors import GammaAGError

Grade = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_INT64_SAFE = 2**62


def parse_grade(value) -> Fraction:
    """Exact grade from ``"p/q"``, a finite decimal literal, an int or a Fraction.

    Floats are rejected: ``0.3`` as a float is not 3/10.
    """
    if isinstance(value, Fraction):
        g = value
    elif isinstance(value, bool) or isinstance(value, float):
        raise GammaAGError("BAD_GRADE", f"grade {value!r}: pass a string or Fraction, not {type(value).__name__}")
    elif isinstance(value, int):
        g = Fraction(value)
    elif isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                p, q = text.split("/")
                g = Fraction(int(p), int(q))
            else:
                d = Decimal(text)
                if not d.is_finite():
                    raise InvalidOperation
                g = Fraction(d)
        except (ValueError, ZeroDivisionError, InvalidOperation):
            raise GammaAGError("BAD_GRADE", f"cannot parse grade {value!r}") from None
    else:
        raise GammaAGError("BAD_GRADE", f"unsupported grade type {type(value).__name__}")
    if not 0 <= g <= 1:
        raise GammaAGError("BAD_GRADE", f"grade {g} outside [0, 1]")
    return g


def format_grade(g: Fraction) -> str:
    return f"{g.numerator}/{g.denominator}"


def _as_array(values):
    big = any(abs(int(v)) >= _INT64_SAFE for v in values)
    return np.array([int(v) for v in values], dtype=object if big else np.int64)


class IFS:
    """Pair of grade maps ``(mu, nu)`` with ``mu(x) + nu(x) <= 1``.

    ``nu`` is the nonmembership degree.  Instances are immutable and
    compare by value; use :func:`make_ifs` for validated construction.
    """

    __slots__ = ("num_mu", "num_nu", "den", "_key")

    def __init__(self, num_mu, num_nu, den: int):
        # canonical form: smallest shared denominator
        common = math.gcd(int(den), *(int(v) for v in num_mu), *(int(v) for v in num_nu))
        if common > 1:
            num_mu = [int(v) // common for v in num_mu]
            num_nu = [int(v) // common for v in num_nu]
            den = int(den) // common
        self.den = int(den)
        self.num_mu = _as_array(num_mu)
        self.num_nu = _as_array(num_nu)
        self.num_mu.setflags(write=False)
        self.num_nu.setflags(write=False)
        self._key = (self.den, tuple(int(v) for v in self.num_mu), tuple(int(v) for v in self.num_nu))

    @property
    def n(self) -> int:
        return len(self.num_mu)

    @property
    def mu(self) -> tuple:
        return tuple(Fraction(int(v), self.den) for v in self.num_mu)

    @property
    def nu(self) -> tuple:
        return tuple(Fraction(int(v), self.den) for v in self.num_nu)

    def scaled(self, den: int):
        """Numerators over ``den`` (a multiple of ``self.den``)."""
        k = den // self.den
        if k == 1:
            return self.num_mu, self.num_nu
        if den >= _INT64_SAFE:
            return self.num_mu.astype(object) * k, self.num_nu.astype(object) * k
        return self.num_mu * k, self.num_nu * k

    def is_valid(self) -> bool:
        """``mu + nu <= 1`` everywhere (only unchecked sets can fail this)."""
        return bool(np.all(self.num_mu + self.num_nu <= self.den))

    def __eq__(self, other):
        return isinstance(other, IFS) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        mu = ", ".join(str(g) for g in self.mu)
        nu = ", ".join(str(g) for g in self.nu)
        return f"IFS(mu=[{mu}], nu=[{nu}])"


def make_ifs(n: int, mu: Sequence, nu: Sequence, strict: bool = True) -> IFS:
    """Validated IFS from grade values (strings, ints or Fractions).

    ``strict=False`` skips the ``mu + nu <= 1`` check so published grade
    pairs that break it can still be loaded and examined.
    """
    if len(mu) != n or len(nu) != n:
        raise GammaAGError("LENGTH_MISMATCH", f"expected {n} grades, got mu={len(mu)}, nu={len(nu)}")
    mu = [parse_grade(v) for v in mu]
    nu = [parse_grade(v) for v in nu]
    for x, (m, v) in enumerate(zip(mu, nu)):
        if strict and m + v > 1:
            raise GammaAGError("SUM_EXCEEDS_ONE", f"mu + nu = {m + v} > 1 at element {x}", (x,))
    den = math.lcm(*(g.denominator for g in mu + nu))
    return IFS([g.numerator * (den // g.denominator) for g in mu], [g.numerator * (den // g.denominator) for g in nu], den)


def delta(n: int) -> IFS:
    """The whole-carrier IFS: membership 1 and nonmembership 0 everywhere."""
    if n < 1:
        raise GammaAGError("WRONG_SHAPE", "carrier size must be >= 1")
    return IFS([1] * n, [0] * n, 1)


def constant_ifs(n: int, mu, nu) -> IFS:
    return make_ifs(n, [mu] * n, [nu] * n)


def _check_size(*sets, n=None):
    sizes = {s.n for s in sets}
    if n is not None:
        sizes.add(n)
    if len(sizes) != 1:
        raise GammaAGError("SIZE_MISMATCH", f"carrier sizes differ: {sorted(sizes)}")


def _common(A: IFS, B: IFS):
    den = math.lcm(A.den, B.den)
    return den, A.scaled(den), B.scaled(den)


def _reduce(values, starts, has, fill, ufunc, n):
    out = np.full(n, fill, dtype=values.dtype)
    if len(starts):
        out[has] = ufunc.reduceat(values, starts)
    return out


def compose(G: GammaGroupoid, A: IFS, B: IFS) -> IFS:
    """Sup-min / inf-max product over every factorization ``a = b op c``.

    Elements without a factorization get membership 0 and nonmembership 1.
    """
    _check_size(A, B, n=G.n)
    den, (ma, na), (mb, nb) = _common(A, B)
    left, right, starts, has = G.factorization_index()
    mu = _reduce(np.minimum(ma[left], mb[right]), starts, has, 0, np.maximum, G.n)
    nu = _reduce(np.maximum(na[left], nb[right]), starts, has, den, np.minimum, G.n)
    return IFS(mu, nu, den)


def intersect(A: IFS, B: IFS) -> IFS:
    _check_size(A, B)
    den, (ma, na), (mb, nb) = _common(A, B)
    return IFS(np.minimum(ma, mb), np.maximum(na, nb), den)


def union(A: IFS, B: IFS) -> IFS:
    """Pointwise max of memberships, min of nonmemberships.

    Valid inputs always give a valid result; ``SUM_EXCEEDS_ONE`` can only
    come from sets built with ``strict=False``.
    """
    _check_size(A, B)
    den, (ma, na), (mb, nb) = _common(A, B)
    mu, nu = np.maximum(ma, mb), np.minimum(na, nb)
    bad = np.flatnonzero(mu + nu > den)
    if len(bad):
        raise GammaAGError("SUM_EXCEEDS_ONE", f"union is not an IFS at element {int(bad[0])}", (int(bad[0]),))
    return IFS(mu, nu, den)


def contains(A: IFS, B: IFS) -> bool:
    """``A ⊆ B``: ``mu_A <= mu_B`` and ``nu_A >= nu_B`` pointwise."""
    return containment_failure(A, B) is None


def containment_failure(A: IFS, B: IFS):
    """First element breaking ``A ⊆ B`` as ``(x, component)``, or None."""
    _check_size(A, B)
    _, (ma, na), (mb, nb) = _common(A, B)
    bad_mu = ma > mb
    bad_nu = na < nb
    bad = np.flatnonzero(bad_mu | bad_nu)
    if len(bad) == 0:
        return None
    x = int(bad[0])
    return x, ("mu" if bad_mu[x] else "nu")


def equals(A: IFS, B: IFS) -> bool:
    _check_size(A, B)
    return A == B


def is_idempotent(G: GammaGroupoid, A: IFS) -> bool:
    return compose(G, A, A) == A


def random_ifs(n: int, denominator: int, seed) -> IFS:
    """Uniform draw from ``{(p/D, q/D) : p + q <= D}`` at every element.

    ``seed`` is an integer (reproducible per ``(n, denominator, seed)``) or
    a ``numpy.random.Generator`` to draw from.
    """
    D = int(denominator)
    if D < 1:
        raise GammaAGError("BAD_DENOMINATOR", f"denominator must be >= 1, got {D}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    k = rng.integers(0, (D + 1) * (D + 2) // 2, size=n)
    # decode triangular index k -> (p, q) with p + q <= D, p-major
    starts = np.array([p * (D + 1) - p * (p - 1) // 2 for p in range(D + 2)])
    p = np.searchsorted(starts, k, side="right") - 1
    q = k - starts[p]
    return IFS(p, q, D)
