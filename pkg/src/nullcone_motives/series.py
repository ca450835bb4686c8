"""Truncated twisted power series with ``t^d t^e = L^{-<d,e>} t^{d+e}``."""

from __future__ import annotations

import itertools
from typing import Callable, Iterator, Mapping

from .motive import LaurentPoly, MotiveRat, inv_group_motive
from .quiver import DimVector, Quiver, euler_form, rep_space_dim, sub_dim_vectors

__all__ = [
    "TwistedSeries",
    "dim_vectors_upto",
    "ts_mul",
    "ts_invert",
    "exp_series",
    "gfi_check",
]


def dim_vectors_upto(n: int, bound: int) -> Iterator[DimVector]:
    """Vectors of length ``n`` with total at most ``bound``, graded then lexicographic."""
    for total in range(bound + 1):
        for combo in itertools.combinations_with_replacement(range(n), total):
            v = [0] * n
            for i in combo:
                v[i] += 1
            yield DimVector(v)


def _graded(keys) -> list:
    return sorted(keys, key=lambda d: (d.total, tuple(-x for x in d)))


class TwistedSeries:
    """Coefficients ``{d: MotiveRat}`` for ``dim d <= bound``; missing keys are zero."""

    __slots__ = ("quiver", "bound", "coeffs")

    def __init__(self, quiver: Quiver, bound: int, coeffs: Mapping | None = None):
        if bound < 0:
            raise ValueError("bound must be non-negative")
        self.quiver = quiver
        self.bound = bound
        clean = {}
        for d, c in (coeffs or {}).items():
            d = DimVector.of(quiver, d)
            if d.total > bound:
                continue
            if not isinstance(c, MotiveRat):
                c = MotiveRat(c)
            if c:
                clean[d] = c
        self.coeffs = clean

    @classmethod
    def one(cls, quiver: Quiver, bound: int) -> "TwistedSeries":
        return cls(quiver, bound, {DimVector.zero(quiver.n): MotiveRat.one()})

    @classmethod
    def from_function(cls, quiver: Quiver, bound: int, fn: Callable) -> "TwistedSeries":
        return cls(quiver, bound, {d: fn(d) for d in dim_vectors_upto(quiver.n, bound)})

    def __getitem__(self, d) -> MotiveRat:
        d = DimVector.of(self.quiver, d)
        return self.coeffs.get(d, MotiveRat.zero())

    def keys(self) -> list:
        return _graded(self.coeffs)

    def _compatible(self, other: "TwistedSeries"):
        if self.quiver != other.quiver or self.bound != other.bound:
            raise ValueError("series live on different quivers or truncations")

    def __mul__(self, other):
        return ts_mul(self, other)

    def __add__(self, other: "TwistedSeries"):
        self._compatible(other)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out[d] + c if d in out else c
        return TwistedSeries(self.quiver, self.bound, out)

    def __sub__(self, other: "TwistedSeries"):
        self._compatible(other)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out[d] - c if d in out else -c
        return TwistedSeries(self.quiver, self.bound, out)

    def __eq__(self, other):
        if not isinstance(other, TwistedSeries):
            return NotImplemented
        if self.quiver != other.quiver or self.bound != other.bound:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self[d] == other[d] for d in keys)

    def __hash__(self):
        return hash((self.quiver.key(), self.bound, len(self.coeffs)))

    def is_one(self) -> bool:
        return self == TwistedSeries.one(self.quiver, self.bound)

    def __repr__(self):
        body = ", ".join(f"{tuple(d)}: {self.coeffs[d]}" for d in self.keys())
        return f"TwistedSeries(bound={self.bound}, {{{body}}})"


def ts_mul(f: TwistedSeries, g: TwistedSeries) -> TwistedSeries:
    """Coefficient at ``d`` is ``sum_{e<=d} L^{-<e,d-e>} f_e g_{d-e}``."""
    f._compatible(g)
    q = f.quiver
    out: dict = {}
    for e, a in f.coeffs.items():
        for h, b in g.coeffs.items():
            d = e + h
            if d.total > f.bound:
                continue
            term = (a * b).shift(-euler_form(q, e, h))
            out[d] = out[d] + term if d in out else term
    return TwistedSeries(q, f.bound, out)


def ts_invert(f: TwistedSeries) -> TwistedSeries:
    """Two-sided inverse, solved degree by degree.

    ``g_d = -c^{-1} sum_{0 != e <= d} L^{-<e,d-e>} f_e g_{d-e}`` with ``c`` the
    constant term, which must be a unit of the localized ring.
    """
    q = f.quiver
    zero = DimVector.zero(q.n)
    c = f[zero]
    if not c:
        raise ZeroDivisionError("constant term is zero")
    try:
        c_inv = c.inverse()
    except (ArithmeticError, ValueError) as exc:
        raise ValueError(f"constant term {c} is not a unit") from exc
    g = {zero: c_inv}
    for d in dim_vectors_upto(q.n, f.bound):
        if d.is_zero():
            continue
        acc = MotiveRat.zero()
        for e in sub_dim_vectors(d):
            if e.is_zero():
                continue
            fe = f.coeffs.get(e)
            gr = g.get(d - e)
            if fe is None or gr is None:
                continue
            acc = acc + (fe * gr).shift(-euler_form(q, e, d - e))
        if acc:
            g[d] = -(c_inv * acc)
    return TwistedSeries(q, f.bound, g)


def _inv_pochhammer(d: DimVector) -> MotiveRat:
    den: dict = {}
    for n in d:
        for k in range(1, n + 1):
            den[k] = den.get(k, 0) + 1
    return MotiveRat(LaurentPoly.one(), den, reduce=False)


def _nullcone_coeff(q: Quiver, d: DimVector) -> MotiveRat:
    from .nullcone import motive_recursive

    return MotiveRat(motive_recursive(q, d)) * inv_group_motive(d)


def exp_series(q: Quiver, bound: int, kind: str) -> TwistedSeries:
    """Generating series up to ``dim d <= bound``.

    ``pochhammer_inv``: ``sum t^d/(L)_d``; ``nullcone``: ``sum [N_d]/[G_d] t^d``;
    ``rep_space``: ``sum [R_d]/[G_d] t^d``.
    """
    if kind == "pochhammer_inv":
        fn = _inv_pochhammer
    elif kind == "nullcone":
        fn = lambda d: _nullcone_coeff(q, d)
    elif kind == "rep_space":
        fn = lambda d: MotiveRat(LaurentPoly.monomial(rep_space_dim(q, d))) * inv_group_motive(d)
    else:
        raise ValueError(f"unknown series kind {kind!r}")
    return TwistedSeries.from_function(q, bound, fn)


def gfi_check(q: Quiver, bound: int) -> bool:
    """Nullcone series times ``sum t^d/(L)_d`` equals 1 up to ``bound``."""
    prod = ts_mul(exp_series(q, bound, "nullcone"), exp_series(q, bound, "pochhammer_inv"))
    return prod.is_one()
