"""Plethystic Exp/Log for symmetric quivers and motivic DT invariants.

Series live in the commutative variables ``x^d`` with coefficients in
``Z[w^{+-1}, (1-w^{2i})^{-1}]`` where ``w^2 = L``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

from .motive import HalfPoly, HalfRat, LaurentPoly, MotiveRat, inv_group_motive
from .quiver import DimVector, Quiver, euler_form, is_symmetric, rep_space_dim
from .series import dim_vectors_upto

__all__ = [
    "SymSeries",
    "DTResult",
    "NonPlethysticError",
    "pleth_exp",
    "pleth_log",
    "pleth_exp_dt",
    "pleth_log_adams",
    "rep_series",
    "nullcone_series",
    "dt_invariants",
    "nullcone_dt_check",
    "dt_positive",
    "dt_parity_ok",
]


class NonPlethysticError(ArithmeticError):
    """A Log coefficient was not a Laurent polynomial with integer coefficients."""


def _as_half(c) -> HalfRat:
    if isinstance(c, HalfRat):
        return c
    if isinstance(c, MotiveRat):
        return c.to_half()
    if isinstance(c, LaurentPoly) and not isinstance(c, HalfPoly):
        return HalfRat(HalfPoly.from_motive(c))
    return HalfRat(c)


class SymSeries:
    """Truncated commutative series ``sum_d c_d x^d`` with ``dim d <= bound``."""

    __slots__ = ("quiver", "bound", "coeffs")

    def __init__(self, quiver: Quiver, bound: int, coeffs: Mapping | None = None):
        self.quiver = quiver
        self.bound = bound
        clean = {}
        for d, c in (coeffs or {}).items():
            d = DimVector.of(quiver, d)
            if d.total > bound:
                continue
            c = _as_half(c)
            if c:
                clean[d] = c
        self.coeffs = clean

    @classmethod
    def one(cls, quiver: Quiver, bound: int) -> "SymSeries":
        return cls(quiver, bound, {DimVector.zero(quiver.n): HalfRat.one()})

    def __getitem__(self, d) -> HalfRat:
        return self.coeffs.get(DimVector.of(self.quiver, d), HalfRat.zero())

    def keys(self) -> list:
        return sorted(self.coeffs, key=lambda d: (d.total, tuple(-x for x in d)))

    def _compatible(self, other):
        if self.quiver != other.quiver or self.bound != other.bound:
            raise ValueError("series live on different quivers or truncations")

    def __add__(self, other: "SymSeries") -> "SymSeries":
        self._compatible(other)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out[d] + c if d in out else c
        return SymSeries(self.quiver, self.bound, out)

    def __neg__(self) -> "SymSeries":
        return SymSeries(self.quiver, self.bound, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other: "SymSeries") -> "SymSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymSeries):
            self._compatible(other)
            out: dict = {}
            for d, a in self.coeffs.items():
                for e, b in other.coeffs.items():
                    s = d + e
                    if s.total > self.bound:
                        continue
                    out[s] = out[s] + a * b if s in out else a * b
            return SymSeries(self.quiver, self.bound, out)
        c = _as_half(other)
        return SymSeries(self.quiver, self.bound, {d: v * c for d, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SymSeries):
            return NotImplemented
        if self.quiver != other.quiver or self.bound != other.bound:
            return False
        return all(self[d] == other[d] for d in set(self.coeffs) | set(other.coeffs))

    def __hash__(self):
        return hash((self.quiver.key(), self.bound, len(self.coeffs)))

    def map_coeffs(self, fn) -> "SymSeries":
        return SymSeries(self.quiver, self.bound, {d: fn(c) for d, c in self.coeffs.items()})

    def adams(self, k: int) -> "SymSeries":
        """``w -> w^k`` and ``x^d -> x^{kd}``."""
        out = {}
        for d, c in self.coeffs.items():
            kd = DimVector(k * x for x in d)
            if kd.total <= self.bound:
                out[kd] = c.adams(k)
        return SymSeries(self.quiver, self.bound, out)

    def __repr__(self):
        body = ", ".join(f"{tuple(d)}: {self.coeffs[d]}" for d in self.keys())
        return f"SymSeries(bound={self.bound}, {{{body}}})"


def _require_symmetric(q: Quiver):
    if not is_symmetric(q):
        raise ValueError("quiver is not symmetric")


def _laurent(c: HalfRat, what: str) -> HalfPoly:
    if not c.is_polynomial():
        raise NonPlethysticError(f"{what} is not a Laurent polynomial: {c}")
    p = c.to_poly()
    if not p.is_integral():
        raise NonPlethysticError(f"{what} has non-integer coefficients: {p}")
    return p


def _neg_binomial(c: int, j: int) -> int:
    """Coefficient of ``y^j`` in ``(1 - y)^{-c}``."""
    return comb(c + j - 1, j) if c >= 0 else (-1) ** j * comb(-c, j)


def _power_factor(q: Quiver, bound: int, d: DimVector, k: int, c: int) -> SymSeries:
    """``(1 - w^k x^d)^{-c}`` truncated."""
    out = {}
    j = 0
    while j * d.total <= bound:
        coef = _neg_binomial(c, j)
        if coef:
            out[DimVector(j * x for x in d)] = HalfRat(HalfPoly.monomial(k * j, coef))
        j += 1
        if d.is_zero():
            break
    return SymSeries(q, bound, out)


def _check_zero_constant(a: SymSeries):
    if a[DimVector.zero(a.quiver.n)]:
        raise ValueError("Exp needs a series without constant term")


def pleth_exp(a: SymSeries) -> SymSeries:
    """``Exp(sum c_{d,k} w^k x^d) = prod (1 - w^k x^d)^{-c_{d,k}}``."""
    _check_zero_constant(a)
    out = SymSeries.one(a.quiver, a.bound)
    for d in a.keys():
        p = _laurent(a.coeffs[d], f"coefficient at {tuple(d)}")
        for k, c in p.items():
            out = out * _power_factor(a.quiver, a.bound, d, k, int(c))
    return out


def pleth_log(f: SymSeries) -> SymSeries:
    """Inverse of :func:`pleth_exp`, peeling off one ``x^d`` at a time."""
    q, bound = f.quiver, f.bound
    zero = DimVector.zero(q.n)
    if f[zero] != HalfRat.one():
        raise ValueError("Log needs constant term 1")
    cur = f
    out = {}
    for d in dim_vectors_upto(q.n, bound):
        if d.is_zero():
            continue
        g = cur[d]
        if not g:
            continue
        p = _laurent(g, f"Log coefficient at {tuple(d)}")
        out[d] = HalfRat(p)
        for k, c in p.items():
            cur = cur * _power_factor(q, bound, d, k, -int(c))
    return SymSeries(q, bound, out)


# ---------------------------------------------------------------------
# the DT prefactor 1/(w^{-1} - w) = sum_{n>=0} w^{2n+1}


def _qexp_factor(q: Quiver, bound: int, d: DimVector, k: int, c: int) -> SymSeries:
    """``Exp(c w^k x^d / (w^{-1} - w))`` truncated.

    Equals ``prod_{n>=0} (1 - z L^n)^{-c}`` with ``z = w^{k+1} x^d``, i.e.
    ``(sum_j z^j/(L)_j)^c``, using ``sum_j (-1)^j L^{C(j,2)} z^j/(L)_j`` for
    the inverse.
    """
    sign = 1 if c >= 0 else -1
    terms = {}
    j = 0
    while j * d.total <= bound:
        num = HalfPoly.monomial((k + 1) * j + (2 * comb(j, 2) if sign < 0 else 0), (-1) ** j if sign < 0 else 1)
        terms[DimVector(j * x for x in d)] = HalfRat(num, {i: 1 for i in range(1, j + 1)}, reduce=False)
        j += 1
    base = SymSeries(q, bound, terms)
    out = SymSeries.one(q, bound)
    for _ in range(abs(c)):
        out = out * base
    return out


_PREFACTOR_INV = HalfRat(HalfPoly({-1: 1, 1: -1}))  # w^{-1} - w


def pleth_exp_dt(q: Quiver, bound: int, dt: Mapping) -> SymSeries:
    """``Exp(1/(w^{-1} - w) * sum DT_d x^d)`` for Laurent ``DT_d`` in ``w``."""
    out = SymSeries.one(q, bound)
    for d, p in dt.items():
        d = DimVector.of(q, d)
        if d.is_zero() or d.total > bound:
            continue
        for k, c in p.items():
            out = out * _qexp_factor(q, bound, d, k, int(c))
    return out


def _log_dt(f: SymSeries) -> dict:
    q, bound = f.quiver, f.bound
    cur = f
    out = {}
    for d in dim_vectors_upto(q.n, bound):
        if d.is_zero():
            continue
        g = cur[d]
        if not g:
            out[d] = HalfPoly.zero()
            continue
        dt = _laurent(g * _PREFACTOR_INV, f"DT coefficient at {tuple(d)}")
        out[d] = dt
        for k, c in dt.items():
            cur = cur * _qexp_factor(q, bound, d, k, -int(c))
    return out


def _series_log(f: SymSeries) -> SymSeries:
    """Ordinary logarithm ``sum (-1)^{n+1} (f-1)^n / n``."""
    q, bound = f.quiver, f.bound
    h = f - SymSeries.one(q, bound)
    out = SymSeries(q, bound, {})
    power = SymSeries.one(q, bound)
    for n in range(1, bound + 1):
        power = power * h
        out = out + power * HalfRat(HalfPoly.const(Fraction((-1) ** (n + 1), n)))
    return out


def _mobius(n: int) -> int:
    res, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            res = -res
        k += 1
    return -res if n > 1 else res


def pleth_log_adams(f: SymSeries) -> SymSeries:
    """``Log f = sum_k mu(k)/k psi_k(log f)``, with ``psi_k`` the Adams operation."""
    lg = _series_log(f)
    out = SymSeries(f.quiver, f.bound, {})
    for k in range(1, f.bound + 1):
        mu = _mobius(k)
        if mu:
            out = out + lg.adams(k) * HalfRat(HalfPoly.const(Fraction(mu, k)))
    return out


# ---------------------------------------------------------------------
# DT invariants


def _sign_power(d, q: Quiver) -> HalfPoly:
    e = euler_form(q, d, d)
    return HalfPoly.monomial(e, -1 if e % 2 else 1)


def rep_series(q: Quiver, bound: int) -> SymSeries:
    """``sum (-w)^{<d,d>} [R_d]/[G_d] x^d``."""
    _require_symmetric(q)
    coeffs = {}
    for d in dim_vectors_upto(q.n, bound):
        c = inv_group_motive(d).to_half() * HalfRat(_sign_power(d, q))
        coeffs[d] = c * HalfRat(HalfPoly.monomial(2 * rep_space_dim(q, d)))
    return SymSeries(q, bound, coeffs)


def nullcone_series(q: Quiver, bound: int) -> SymSeries:
    """``sum (-w)^{<d,d>} [N_d]/[G_d] x^d``."""
    from .nullcone import motive_recursive

    _require_symmetric(q)
    coeffs = {}
    for d in dim_vectors_upto(q.n, bound):
        n = HalfRat(HalfPoly.from_motive(motive_recursive(q, d)))
        coeffs[d] = n * inv_group_motive(d).to_half() * HalfRat(_sign_power(d, q))
    return SymSeries(q, bound, coeffs)


@dataclass(frozen=True)
class DTResult:
    quiver: Quiver
    bound: int
    dt: dict  # DimVector -> HalfPoly in w

    def __getitem__(self, d) -> HalfPoly:
        return self.dt.get(DimVector.of(self.quiver, d), HalfPoly.zero())

    def in_v(self, d) -> HalfPoly:
        """``DT_d`` rewritten in ``v = -w``."""
        return self[d].negate_var()

    def to_json(self) -> list:
        return [
            {"d": d.to_json(self.quiver), "dt": [[e, int(c)] for e, c in sorted(p.items())]}
            for d, p in sorted(self.dt.items(), key=lambda kv: (kv[0].total, tuple(-x for x in kv[0])))
        ]


def dt_invariants(q: Quiver, bound: int) -> DTResult:
    """Peel ``Exp(c w^k x^d/(w^{-1}-w))`` factors off the representation series."""
    _require_symmetric(q)
    f = rep_series(q, bound)
    if not dt_parity_ok(f):
        raise ArithmeticError("w-parity of the representation series is off")
    return DTResult(q, bound, _log_dt(f))


def dt_positive(res: DTResult) -> bool:
    """All coefficients of ``DT_d(v)``, ``v = -w``, are non-negative."""
    return all(c >= 0 for d in res.dt for _, c in res.in_v(d).items())


def dt_parity_ok(f: SymSeries) -> bool:
    """Exponents of ``w`` at ``x^d`` are congruent to ``<d,d>`` mod 2."""
    q = f.quiver
    for d, c in f.coeffs.items():
        par = euler_form(q, d, d) % 2
        if any((e - par) % 2 for e, _ in c.num.items()):
            return False
    return True


def nullcone_dt_check(q: Quiver, bound: int) -> bool:
    """Nullcone series equals ``Exp(1/(w^{-1}-w) sum DT_d(w^{-1}) x^d)``."""
    _require_symmetric(q)
    if bound == 0:
        return True
    res = dt_invariants(q, bound)
    inverted = {d: p.invert_var() for d, p in res.dt.items()}
    return pleth_exp_dt(q, bound, inverted) == nullcone_series(q, bound)
