"""Exact arithmetic in the localized ring of motives.

Elements of ``Z[L, L^-1]`` are :class:`LaurentPoly`; the localization at the
family ``1 - L^i`` is :class:`MotiveRat`, which keeps its denominator as a
factored product ``prod_i (1 - L^i)^{m_i}``.  The square-root extension
``w = L^(1/2)`` gets the same pair of classes, :class:`HalfPoly` and
:class:`HalfRat`.

Coefficients are Python ints (arbitrary precision).  ``Fraction``
coefficients are tolerated so that Adams-operation style computations can
pass through rational intermediates.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "HalfPoly",
    "MotiveRat",
    "HalfRat",
    "L",
    "W",
    "pochhammer",
    "pochhammer_dim",
    "gl_motive",
    "group_motive",
    "inv_gl_motive",
    "inv_group_motive",
    "gauss_binomial",
    "gauss_multinomial",
    "eval_at",
    "half_substitute",
    "rat_arith",
]


def _clean(coef):
    if isinstance(coef, Fraction) and coef.denominator == 1:
        return coef.numerator
    return coef


class LaurentPoly:
    """Laurent polynomial in ``L`` with exact coefficients.

    Immutable; the term map never stores zero coefficients.
    """

    __slots__ = ("_terms", "_hash")
    var = "L"

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = _clean(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # terms already free of zeros
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({0: 1})

    @classmethod
    def const(cls, c):
        return cls._raw({0: _clean(c)} if c else {})

    @classmethod
    def monomial(cls, exp: int, coef=1):
        return cls._raw({int(exp): _clean(coef)} if coef else {})

    @classmethod
    def gen(cls):
        return cls._raw({1: 1})

    @classmethod
    def from_coefficients(cls, coeffs: Iterable, start: int = 0):
        """Build from a dense list ``[c_start, c_start+1, ...]``."""
        return cls({start + k: c for k, c in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def coefficient(self, exp: int):
        return self._terms.get(exp, 0)

    def exponents(self) -> set:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self._terms)

    def leading_term(self) -> tuple:
        """(coefficient, exponent) of the top monomial."""
        d = self.degree
        return self._terms[d], d

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def as_int(self):
        """The constant value if this is a constant, else raise."""
        if not self._terms:
            return 0
        if set(self._terms) != {0}:
            raise ValueError(f"{self} is not constant")
        return self._terms[0]

    # -- ring operations ----------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if type(other) is not type(self):
                raise TypeError(
                    f"cannot combine {type(self).__name__} and {type(other).__name__}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        res = dict(self._terms)
        for e, c in other._terms.items():
            v = res.get(e, 0) + c
            if v:
                res[e] = _clean(v)
            else:
                res.pop(e, None)
        return type(self)._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return type(self).zero()
            return type(self)._raw({e: _clean(c * other) for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        res: dict = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = ea + eb
                res[e] = res.get(e, 0) + ca * cb
        return type(self)._raw({e: _clean(c) for e, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return type(self)._raw({e * n: c ** (-n)})
            raise ValueError("negative powers only for unit monomials")
        result = type(self).one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).const(other)
        if not isinstance(other, LaurentPoly) or type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def shift(self, k: int):
        """Multiply by ``var**k``."""
        if not k:
            return self
        return type(self)._raw({e + k: c for e, c in self._terms.items()})

    def scale_exponents(self, k: int):
        """Substitute ``var -> var**k`` (``k`` may be negative)."""
        return type(self)._raw({e * k: c for e, c in self._terms.items()})

    def divmod(self, other):
        """Polynomial long division after normalizing valuations.

        Returns ``(quotient, remainder)`` with ``self = q*other + r``.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return type(self).zero(), type(self).zero()
        cls = type(self)
        vb = other.valuation
        db = other.degree - vb
        b = {e - vb: c for e, c in other._terms.items()}
        lead = b[db]
        va = self.valuation
        rem = {e - va: c for e, c in self._terms.items()}
        quot: dict = {}
        while rem:
            top = max(rem)
            if top < db:
                break
            c = rem[top]
            if isinstance(c, int) and isinstance(lead, int):
                q, r = divmod(c, lead)
                if r:
                    q = Fraction(c, lead)
            else:
                q = Fraction(c) / lead
            q = _clean(q)
            k = top - db
            quot[k] = q
            for e, cb in b.items():
                v = rem.get(e + k, 0) - q * cb
                if v:
                    rem[e + k] = _clean(v)
                else:
                    rem.pop(e + k, None)
        return (
            cls._raw(quot).shift(va - vb),
            cls._raw(rem).shift(va),
        )

    def divexact(self, other):
        """Exact quotient; raises ``ArithmeticError`` on a non-zero remainder."""
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def divides(self, other) -> bool:
        """True if ``self`` divides ``other`` exactly (integer quotient)."""
        q, r = other.divmod(self)
        return not r and q.is_integral()

    # -- evaluation & substitution ------------------------------------
    def evaluate(self, x):
        """Exact value at ``var = x`` (``Fraction`` when negative powers occur)."""
        x = Fraction(x)
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * x ** e
        return _clean(total)

    def __call__(self, x):
        return self.evaluate(x)

    # -- serialization ------------------------------------------------
    def to_json(self) -> list:
        out = []
        for e, c in self.items():
            if isinstance(c, Fraction):
                out.append([e, f"{c.numerator}/{c.denominator}"])
            else:
                out.append([e, str(c)])
        return out

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict = {}
        for e, c in data:
            c = Fraction(c) if "/" in str(c) else int(c)
            terms[int(e)] = terms.get(int(e), 0) + c
        return cls(terms)

    def _format(self, power_fmt, latex: bool) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if e == 0:
                body = str(a)
            else:
                mono = power_fmt(e)
                if a == 1:
                    body = mono
                elif latex and isinstance(a, Fraction):
                    body = rf"\frac{{{a.numerator}}}{{{a.denominator}}}{mono}"
                else:
                    body = f"{a}{mono}" if latex else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __str__(self):
        v = self.var
        return self._format(lambda e: v if e == 1 else f"{v}^{e}", latex=False)

    def to_latex(self, symbol: str | None = None) -> str:
        sym = symbol or (r"\mathbb{L}" if self.var == "L" else r"\mathbb{L}^{1/2}")
        if self.var != "L" and symbol is None:
            sym = r"(\mathbb{L}^{1/2})"

        def fmt(e):
            return sym if e == 1 else f"{sym}^{{{e}}}"

        return self._format(fmt, latex=True)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class HalfPoly(LaurentPoly):
    """Laurent polynomial in ``w = L^(1/2)``."""

    __slots__ = ()
    var = "w"

    def negate_var(self) -> "HalfPoly":
        """``w -> -w``."""
        return HalfPoly._raw({e: (-c if e % 2 else c) for e, c in self._terms.items()})

    def invert_var(self) -> "HalfPoly":
        """``w -> w^-1``."""
        return self.scale_exponents(-1)

    def to_motive(self) -> LaurentPoly:
        """``w^2 -> L``; every exponent must be even."""
        odd = [e for e in self._terms if e % 2]
        if odd:
            raise ValueError(f"odd w-exponents {sorted(odd)} cannot be written in L")
        return LaurentPoly._raw({e // 2: c for e, c in self._terms.items()})

    @classmethod
    def from_motive(cls, p: LaurentPoly) -> "HalfPoly":
        """``L -> w^2``."""
        return cls._raw({2 * e: c for e, c in p._terms.items()})


L = LaurentPoly.gen()
W = HalfPoly.gen()


# ---------------------------------------------------------------------
# cyclotomic helpers (used only for inverting units)


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple:
    p = LaurentPoly({n: 1, 0: -1})
    for j in range(1, n):
        if n % j == 0:
            p = p.divexact(LaurentPoly(dict(_cyclotomic(j))))
    return tuple(sorted(p._terms.items()))


def _cyclo(cls, n: int):
    return cls(dict(_cyclotomic(n)))


@lru_cache(maxsize=None)
def _one_minus(cls, k: int):
    return cls({0: 1, k: -1})


class _Rational:
    """Numerator over ``prod_i (1 - X^(step*i))^{m_i}``.

    Every factor used for cancellation is monic with constant term 1, so
    exact division never introduces new coefficient denominators.
    """

    __slots__ = ("num", "den")
    _poly: type = LaurentPoly
    _step: int = 1

    def __init__(self, num=None, den: Mapping[int, int] | None = None, *, reduce: bool = True):
        if num is None:
            num = self._poly.zero()
        elif isinstance(num, (int, Fraction)):
            num = self._poly.const(num)
        elif type(num) is not self._poly:
            raise TypeError(f"numerator must be {self._poly.__name__}, got {type(num).__name__}")
        dd = {}
        for i, m in (den or {}).items():
            if i < 1 or m < 0:
                raise ValueError(f"bad denominator factor {(i, m)}")
            if m:
                dd[int(i)] = int(m)
        if not num:
            dd = {}
        self.num = num
        self.den = dd
        if reduce and dd:
            self._reduce()

    @classmethod
    def _factor(cls, i: int):
        return _one_minus(cls._poly, cls._step * i)

    def _reduce(self):
        num, den = self.num, self.den
        changed = True
        while changed and den:
            changed = False
            for i in sorted(den, reverse=True):
                f = self._factor(i)
                while den.get(i):
                    q, r = num.divmod(f)
                    if r:
                        break
                    num = q
                    den[i] -= 1
                    changed = True
                if not den.get(i):
                    den.pop(i, None)
                    continue
                # (1-X^{s i}) / (1-X^{s j}) for j | i is a polynomial
                for j in range(1, i):
                    if i % j:
                        continue
                    g = self._factor(i).divexact(self._factor(j))
                    q, r = num.divmod(g)
                    if not r:
                        num = q
                        den[i] -= 1
                        den[j] = den.get(j, 0) + 1
                        changed = True
                        break
                if not den.get(i):
                    den.pop(i, None)
                if changed:
                    break
        self.num = num
        self.den = {i: m for i, m in den.items() if m}

    # -- helpers ------------------------------------------------------
    @classmethod
    def from_poly(cls, p):
        return cls(p)

    @classmethod
    def zero(cls):
        return cls(cls._poly.zero())

    @classmethod
    def one(cls):
        return cls(cls._poly.one())

    def den_poly(self):
        p = self._poly.one()
        for i, m in self.den.items():
            p = p * self._factor(i) ** m
        return p

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        """True if the denominator is trivial."""
        return not self.den

    def to_poly(self):
        """The Laurent numerator; raises if a denominator remains."""
        if self.den:
            raise ArithmeticError(f"{self} has a non-trivial denominator")
        return self.num

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)(self._poly.const(other))
        if isinstance(other, LaurentPoly) and type(other) is self._poly:
            return type(self)(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        keys = set(self.den) | set(other.den)
        top = {i: max(self.den.get(i, 0), other.den.get(i, 0)) for i in keys}
        a = self.num
        b = other.num
        for i, m in top.items():
            da = m - self.den.get(i, 0)
            db = m - other.den.get(i, 0)
            if da:
                a = a * self._factor(i) ** da
            if db:
                b = b * self._factor(i) ** db
        return type(self)(a + b, top)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return type(self).zero()
        den = dict(self.den)
        for i, m in other.den.items():
            den[i] = den.get(i, 0) + m
        return type(self)(self.num * other.num, den)

    __rmul__ = __mul__

    def shift(self, k: int):
        return type(self)(self.num.shift(k), self.den, reduce=False)

    def inverse(self):
        """Inverse in the localized ring.

        The numerator must be a unit there: ``c * X^a`` times cyclotomic
        factors, each of which divides some ``1 - X^(step*n)``.
        """
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        poly = self._poly
        a = self.num.valuation
        num = self.num.shift(-a)
        new_num = self.den_poly().shift(-a)
        new_den: dict = {}
        limit = 2 * max(num.degree, 1) ** 2 + 2
        n = 1
        while num.degree > 0:
            if n > limit:
                raise ArithmeticError(f"{self.num} is not a unit of the localized ring")
            phi = _cyclo(poly, n)
            q, r = num.divmod(phi)
            if r:
                n += 1
                continue
            num = q
            new_num = new_num * self._factor(n).divexact(phi)
            new_den[n] = new_den.get(n, 0) + 1
        c = num.as_int()
        if c in (1, -1):
            new_num = new_num * c
        else:
            new_num = new_num * Fraction(1, c)
        return type(self)(new_num, new_den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by zero motive")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = type(self).one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den_poly() == other.num * self.den_poly()

    def __hash__(self):
        # equal values may carry different factored denominators; hash the
        # value after clearing to the full cyclotomic-free form is costly,
        # so hash only what is invariant: evaluation at a fixed point.
        return hash(self.evaluate(7))

    def evaluate(self, x):
        x = Fraction(x)
        d = self.den_poly().evaluate(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return _clean(Fraction(self.num.evaluate(x)) / d)

    def __str__(self):
        if not self.den:
            return str(self.num)
        var = self._poly.var
        step = self._step
        facs = []
        for i in sorted(self.den):
            e = step * i
            base = f"(1-{var})" if e == 1 else f"(1-{var}^{e})"
            m = self.den[i]
            facs.append(base if m == 1 else f"{base}^{m}")
        return f"({self.num})/({'*'.join(facs)})"

    def to_latex(self) -> str:
        if not self.den:
            return self.num.to_latex()
        sym = r"\mathbb{L}" if self._step == 1 else r"\mathbb{L}^{1/2}"
        facs = []
        for i in sorted(self.den):
            e = self._step * i
            base = f"(1-{sym})" if e == 1 else f"(1-{sym}^{{{e}}})"
            m = self.den[i]
            facs.append(base if m == 1 else f"{base}^{{{m}}}")
        return rf"\frac{{{self.num.to_latex()}}}{{{''.join(facs)}}}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": [[i, m] for i, m in sorted(self.den.items())]}

    @classmethod
    def from_json(cls, data):
        return cls(cls._poly.from_json(data["num"]), {int(i): int(m) for i, m in data["den"]})

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class MotiveRat(_Rational):
    """Element of ``Z[L^{+-1}, (1-L^i)^{-1}]``."""

    __slots__ = ()
    _poly = LaurentPoly
    _step = 1

    def to_half(self) -> "HalfRat":
        return HalfRat(HalfPoly.from_motive(self.num), self.den, reduce=False)


class HalfRat(_Rational):
    """Element of ``Z[w^{+-1}, (1-w^{2i})^{-1}]`` with ``w^2 = L``."""

    __slots__ = ()
    _poly = HalfPoly
    _step = 2

    def invert_var(self) -> "HalfRat":
        """``w -> w^-1`` applied to numerator and denominator factors."""
        # 1/(1-w^{-2i}) = -w^{2i}/(1-w^{2i})
        num = self.num.invert_var()
        shift = 0
        sign = 1
        for i, m in self.den.items():
            shift += 2 * i * m
            sign *= (-1) ** m
        return HalfRat(num.shift(shift) * sign, self.den)

    def negate_var(self) -> "HalfRat":
        return HalfRat(self.num.negate_var(), self.den, reduce=False)

    def adams(self, k: int) -> "HalfRat":
        """``w -> w^k`` (``k >= 1``)."""
        return HalfRat(self.num.scale_exponents(k), {i * k: m for i, m in self.den.items()})


# ---------------------------------------------------------------------
# q-combinatorics


@lru_cache(maxsize=None)
def pochhammer(n: int) -> LaurentPoly:
    """``(L)_n = (1-L)(1-L^2)...(1-L^n)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return LaurentPoly.one()
    return pochhammer(n - 1) * LaurentPoly({0: 1, n: -1})


def _entries(d) -> list:
    return list(d.values()) if isinstance(d, Mapping) else list(d)


def pochhammer_dim(d) -> LaurentPoly:
    """Product of ``(L)_{d_i}`` over the entries of a dimension vector."""
    p = LaurentPoly.one()
    for n in _entries(d):
        p = p * pochhammer(n)
    return p


@lru_cache(maxsize=None)
def gl_motive(n: int) -> LaurentPoly:
    """``[GL_n] = (-1)^n L^{n(n-1)/2} (L)_n``."""
    return (pochhammer(n) * (-1) ** n).shift(n * (n - 1) // 2)


def group_motive(d) -> LaurentPoly:
    p = LaurentPoly.one()
    for n in _entries(d):
        p = p * gl_motive(n)
    return p


@lru_cache(maxsize=None)
def inv_gl_motive(n: int) -> MotiveRat:
    """``1/[GL_n]`` as an element of the localized ring."""
    return MotiveRat(
        LaurentPoly.monomial(-comb(n, 2), (-1) ** n), {k: 1 for k in range(1, n + 1)}, reduce=False
    )


def inv_group_motive(d) -> MotiveRat:
    r = MotiveRat.one()
    for n in _entries(d):
        if n:
            r = r * inv_gl_motive(n)
    return r


@lru_cache(maxsize=None)
def gauss_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial ``[n choose k]_L``; zero outside ``0 <= k <= n``."""
    if k < 0 or k > n or n < 0:
        return LaurentPoly.zero()
    num = pochhammer(n)
    return num.divexact(pochhammer(k) * pochhammer(n - k))


def gauss_multinomial(d, parts) -> LaurentPoly:
    """``prod_i (L)_{d_i} / prod_k (L)_{d^k_i}`` by iterated exact division."""
    dv = _entries(d)
    pv = [_entries(p) for p in parts]
    for p in pv:
        if len(p) != len(dv):
            raise ValueError("part has wrong length")
    sums = [sum(col) for col in zip(*pv)] if pv else [0] * len(dv)
    if sums != dv:
        raise ValueError(f"parts {pv} do not sum to {dv}")
    result = LaurentPoly.one()
    for i, n in enumerate(dv):
        rest = n
        for p in pv:
            result = result * gauss_binomial(rest, p[i])
            rest -= p[i]
    return result


def eval_at(p, q):
    """Exact evaluation of a motive at ``L = q``."""
    if isinstance(p, (LaurentPoly, _Rational)):
        return p.evaluate(q)
    raise TypeError(f"cannot evaluate {type(p).__name__}")


def half_substitute(p: HalfPoly, mapping: str):
    """Formal substitutions on ``HalfPoly``.

    ``mapping`` is one of ``"w->-w"``, ``"w->1/w"``, ``"w^2->L"``.
    """
    if mapping == "w->-w":
        return p.negate_var()
    if mapping == "w->1/w":
        return p.invert_var()
    if mapping == "w^2->L":
        return p.to_motive()
    raise ValueError(f"unknown substitution {mapping!r}")


def rat_arith(a, b, op: str):
    """Dispatch ``add``/``mul``/``div``/``eq`` on localized motives."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")
