"""Hesselink strata of the nullcone and the ordered-product identity.

Vectors on the integral level quiver ``Q_Z`` (vertices ``(i, a)``, arrows
``(i, a) -> (j, a+1)`` with multiplicity ``r_ij``) are stored as
:class:`LeveledDimVector`.  The stability is ``theta(i, a) = -a`` and the
slope is ``theta / dim``.
"""

from __future__ import annotations

import itertools
import math
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .motive import LaurentPoly, MotiveRat, group_motive, inv_group_motive
from .quiver import DimVector, Quiver, sub_dim_vectors

__all__ = [
    "LeveledDimVector",
    "LevelQuiver",
    "Coweight",
    "Stratum",
    "stratum_from_coweight",
    "coweight_from_stratum",
    "enumerate_strata",
    "phi",
    "phi_coweight",
    "phi_shift",
    "phi_dimensions",
    "shift",
    "level_euler_form",
    "level_rep_dim",
    "semistable_motive",
    "rep_over_group",
    "hn_reconstruct",
    "stratum_contribution",
    "hesselink_motive",
    "strata_table",
    "star_mul",
    "wall_crossing_series",
    "wall_crossing_check",
]


class LeveledDimVector:
    """Finitely supported ``(vertex index, level) -> count``."""

    __slots__ = ("_items", "_hash")

    def __init__(self, data: Mapping | None = None):
        items = {}
        for (i, a), n in (data or {}).items():
            n = int(n)
            if n < 0:
                raise ValueError(f"negative entry at {(i, a)}")
            if n:
                items[(int(i), int(a))] = n
        self._items = tuple(sorted(items.items()))
        self._hash = hash(self._items)

    @classmethod
    def unit(cls, i: int, a: int, n: int = 1) -> "LeveledDimVector":
        return cls({(i, a): n})

    def as_dict(self) -> dict:
        return dict(self._items)

    def items(self):
        return self._items

    def get(self, i: int, a: int) -> int:
        return self.as_dict().get((i, a), 0)

    def __eq__(self, other):
        return isinstance(other, LeveledDimVector) and self._items == other._items

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._items < other._items

    def __bool__(self):
        return bool(self._items)

    def __add__(self, other):
        out = self.as_dict()
        for k, n in other._items:
            out[k] = out.get(k, 0) + n
        return LeveledDimVector(out)

    def __sub__(self, other):
        out = self.as_dict()
        for k, n in other._items:
            out[k] = out.get(k, 0) - n
        return LeveledDimVector(out)

    def leq(self, other) -> bool:
        od = other.as_dict()
        return all(n <= od.get(k, 0) for k, n in self._items)

    @property
    def dim(self) -> int:
        return sum(n for _, n in self._items)

    def theta(self) -> int:
        return -sum(a * n for (_, a), n in self._items)

    def slope(self) -> Fraction:
        if not self._items:
            raise ValueError("slope of the zero vector")
        return Fraction(self.theta(), self.dim)

    def levels(self) -> list:
        return sorted({a for (_, a), _ in self._items})

    def min_level(self) -> int:
        return min(a for (_, a), _ in self._items)

    def max_level(self) -> int:
        return max(a for (_, a), _ in self._items)

    def shift(self, k: int) -> "LeveledDimVector":
        """``(tau^k e)_{i,a} = e_{i,a+k}``: mass at level ``a`` moves to ``a - k``."""
        return LeveledDimVector({(i, a - k): n for (i, a), n in self._items})

    def normalized(self) -> tuple:
        """``(tau^m e, m)`` with the lowest occupied level moved to 0."""
        if not self._items:
            return self, 0
        m = self.min_level()
        return self.shift(m), m

    def projection(self, n: int) -> DimVector:
        v = [0] * n
        for (i, _), c in self._items:
            v[i] += c
        return DimVector(v)

    def runs(self) -> list:
        """Maximal pieces supported on consecutive occupied levels."""
        out, cur, last = [], {}, None
        for lev in self.levels():
            if last is not None and lev != last + 1:
                out.append(LeveledDimVector(cur))
                cur = {}
            cur.update({(i, a): n for (i, a), n in self._items if a == lev})
            last = lev
        if cur:
            out.append(LeveledDimVector(cur))
        return out

    def sub_vectors(self) -> Iterator["LeveledDimVector"]:
        keys = [k for k, _ in self._items]
        for vals in itertools.product(*(range(n + 1) for _, n in self._items)):
            yield LeveledDimVector(dict(zip(keys, vals)))

    def to_json(self, q: Quiver | None = None) -> list:
        name = (lambda i: q.vertices[i]) if q is not None else (lambda i: i)
        return [[name(i), a, n] for (i, a), n in self._items]

    def __repr__(self):
        body = ", ".join(f"({i},{a}):{n}" for (i, a), n in self._items)
        return f"LeveledDimVector({{{body}}})"


def shift(e: LeveledDimVector, k: int) -> LeveledDimVector:
    return e.shift(k)


def level_euler_form(q: Quiver, e: LeveledDimVector, f: LeveledDimVector) -> int:
    """Euler form of ``Q_Z``: ``sum e_{i,a} f_{i,a} - sum_{i->j} r_ij e_{i,a} f_{j,a+1}``."""
    fd = f.as_dict()
    val = 0
    for (i, a), n in e.items():
        val += n * fd.get((i, a), 0)
        row = q.arrows[i]
        for j in range(q.n):
            if row[j]:
                val -= row[j] * n * fd.get((j, a + 1), 0)
    return val


def level_rep_dim(q: Quiver, e: LeveledDimVector) -> int:
    ed = e.as_dict()
    return sum(
        q.arrows[i][j] * n * ed.get((j, a + 1), 0)
        for (i, a), n in e.items()
        for j in range(q.n)
        if q.arrows[i][j]
    )


@dataclass(frozen=True)
class LevelQuiver:
    """Finite window ``[lo, hi]`` of the integral level quiver as an ordinary quiver."""

    base: Quiver
    lo: int
    hi: int

    def vertices(self) -> list:
        return [(i, a) for a in range(self.lo, self.hi + 1) for i in range(self.base.n)]

    def arrow_multiplicity(self, src: tuple, tgt: tuple) -> int:
        (i, a), (j, b) = src, tgt
        return self.base.arrows[i][j] if b == a + 1 else 0

    def to_quiver(self) -> Quiver:
        verts = self.vertices()
        r = tuple(tuple(self.arrow_multiplicity(s, t) for t in verts) for s in verts)
        return Quiver(tuple(verts), r)

    def dim_vector(self, e: LeveledDimVector) -> DimVector:
        ed = e.as_dict()
        if any(not self.lo <= a <= self.hi for (_, a) in ed):
            raise ValueError("vector leaves the level window")
        return DimVector(ed.get(v, 0) for v in self.vertices())


# ---------------------------------------------------------------------
# coweights and strata


@dataclass(frozen=True)
class Coweight:
    """Rational entries grouped by the vertex intervals of ``d``."""

    d: DimVector
    entries: tuple

    def __post_init__(self):
        ents = tuple(Fraction(x) for x in self.entries)
        if len(ents) != self.d.total:
            raise ValueError(f"coweight has {len(ents)} entries, expected {self.d.total}")
        object.__setattr__(self, "entries", ents)

    def blocks(self) -> list:
        out, pos = [], 0
        for n in self.d:
            out.append(self.entries[pos : pos + n])
            pos += n
        return out

    def is_dominant(self) -> bool:
        return all(list(b) == sorted(b) for b in self.blocks())

    def segments(self) -> list:
        """Maximal runs of sorted entries with consecutive gaps 0 or 1."""
        classes: dict = {}
        for v in self.entries:
            classes.setdefault(v - math.floor(v), []).append(v)
        segs = []
        for mu in sorted(classes):
            vals = sorted(classes[mu])
            cur = [vals[0]]
            for v in vals[1:]:
                if v - cur[-1] > 1:
                    segs.append(tuple(cur))
                    cur = []
                cur.append(v)
            segs.append(tuple(cur))
        return segs

    def is_balanced(self) -> bool:
        return all(sum(s) == 0 for s in self.segments())

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class Stratum:
    """Parts ``(mu, e_mu)`` with strictly increasing ``mu`` in ``[0, 1)``."""

    quiver: Quiver
    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted(((Fraction(mu), e) for mu, e in self.parts), key=lambda p: p[0]))
        mus = [mu for mu, _ in parts]
        if len(set(mus)) != len(mus):
            raise ValueError("repeated slope in stratum")
        for mu, e in parts:
            if not e or not 0 <= mu < 1 or e.slope() != mu:
                raise ValueError(f"part {e} does not have slope {mu}")
        object.__setattr__(self, "parts", parts)

    @property
    def d(self) -> DimVector:
        total = DimVector.zero(self.quiver.n)
        for _, e in self.parts:
            total = total + e.projection(self.quiver.n)
        return total

    @property
    def phi(self) -> int:
        return phi(self)

    def to_json(self) -> dict:
        return {
            "parts": [{"mu": str(mu), "e": e.to_json(self.quiver)} for mu, e in self.parts],
        }


def stratum_from_coweight(q: Quiver, d, s) -> Stratum:
    """Entry ``v = a + mu`` with ``a = floor(v)`` adds one to ``e_mu`` at ``(vertex, a)``."""
    d = DimVector.of(q, d)
    cw = s if isinstance(s, Coweight) else Coweight(d, tuple(s))
    if cw.d != d:
        raise ValueError("coweight grouped for a different dimension vector")
    if not cw.is_dominant():
        raise ValueError(f"coweight {cw} is not dominant")
    if not cw.is_balanced():
        raise ValueError(f"coweight {cw} is not balanced")
    by_mu: dict = {}
    for i, block in enumerate(cw.blocks()):
        for v in block:
            a = math.floor(v)
            mu = v - a
            slot = by_mu.setdefault(mu, {})
            slot[(i, a)] = slot.get((i, a), 0) + 1
    return Stratum(q, tuple((mu, LeveledDimVector(e)) for mu, e in by_mu.items()))


def coweight_from_stratum(st: Stratum) -> Coweight:
    q = st.quiver
    blocks: list = [[] for _ in range(q.n)]
    for mu, e in st.parts:
        for (i, a), n in e.items():
            blocks[i].extend([a + mu] * n)
    return Coweight(st.d, tuple(x for b in blocks for x in sorted(b)))


# ---------------------------------------------------------------------
# enumeration


def _weak_compositions(n: int, k: int) -> Iterator[tuple]:
    if k == 0:
        if n == 0:
            yield ()
        return
    for c in itertools.combinations(range(n + k - 1), k - 1):
        prev, out = -1, []
        for x in c:
            out.append(x - prev - 1)
            prev = x
        out.append(n + k - 1 - prev - 1)
        yield tuple(out)


def _place(shape: LeveledDimVector) -> tuple:
    """Shift a shape so its slope lies in ``[0, 1)``; returns ``(mu, vector)``."""
    sigma = shape.slope()
    k = math.floor(sigma)
    # moving every level up by k lowers the slope by k
    placed = shape.shift(-k)
    return sigma - k, placed


def _runs_with_projection(p: DimVector) -> list:
    """All single-run shapes with projection ``p``, placed at slope in ``[0, 1)``."""
    out = []
    n = len(p)
    for length in range(1, p.total + 1):
        per_vertex = [list(_weak_compositions(x, length)) for x in p]
        for choice in itertools.product(*per_vertex):
            if any(sum(c[lev] for c in choice) == 0 for lev in range(length)):
                continue
            shape = LeveledDimVector(
                {(i, lev): choice[i][lev] for i in range(n) for lev in range(length)}
            )
            out.append(_place(shape))
    return out


def _aggregate_with_projection(p: DimVector, window: int) -> list:
    """Vectors in the level window ``[-window, window]`` with slope in ``[0, 1)``."""
    levels = list(range(-window, window + 1))
    per_vertex = [list(_weak_compositions(x, len(levels))) for x in p]
    out = []
    for choice in itertools.product(*per_vertex):
        e = LeveledDimVector(
            {(i, lev): c[k] for i, c in enumerate(choice) for k, lev in enumerate(levels)}
        )
        mu = e.slope()
        if 0 <= mu < 1:
            out.append((mu, e))
    return out


def enumerate_strata(q: Quiver, d, balance: str = "run") -> list:
    """Strata with ``sum |e_mu| = d``.

    ``balance="run"`` (default) requires each part to be a single balanced run,
    matching balanced dominant coweights one to one.  ``balance="aggregate"``
    only asks ``sigma(e_mu) = mu`` and is restricted to levels within
    ``dim d`` of zero, since that set is infinite.
    """
    d = DimVector.of(q, d)
    if d.is_zero():
        return [Stratum(q, ())]
    cands = []
    for p in sub_dim_vectors(d):
        if p.is_zero():
            continue
        if balance == "run":
            cands.extend(_runs_with_projection(p))
        elif balance == "aggregate":
            cands.extend(_aggregate_with_projection(p, d.total))
        else:
            raise ValueError(f"unknown balance mode {balance!r}")
    cands.sort(key=lambda c: (c[0], c[1]))
    n = q.n
    projs = [c[1].projection(n) for c in cands]
    out = []

    def extend(start: int, rest: DimVector, last_mu, chosen: list):
        if rest.is_zero():
            out.append(Stratum(q, tuple(chosen)))
            return
        for k in range(start, len(cands)):
            mu, e = cands[k]
            if last_mu is not None and mu <= last_mu:
                continue
            if not projs[k].leq(rest):
                continue
            chosen.append((mu, e))
            extend(k + 1, rest - projs[k], mu, chosen)
            chosen.pop()

    extend(0, d, None, [])
    out.sort(key=lambda st: (coweight_from_stratum(st).entries, st.parts))
    return out


# ---------------------------------------------------------------------
# phi


def phi(st: Stratum) -> int:
    """Exponent from the ``(e_mu)`` data."""
    q = st.quiver
    parts = st.parts
    val = 0
    for x, (mu, e) in enumerate(parts):
        for y, (nu, f) in enumerate(parts):
            for (i, a), n in e.items():
                for (j, b), m in f.items():
                    r = q.arrows[i][j]
                    if r and (a + 1 < b or (a + 1 == b and mu < nu)):
                        val += r * n * m
                    if i == j and (a < b or (a == b and mu < nu)):
                        val -= n * m
    return val


def phi_dimensions(q: Quiver, cw: Coweight) -> dict:
    """``dim V_s``, ``dim R``, ``dim P_s``, ``dim G`` counted on matrix positions."""
    blocks = cw.blocks()
    v = r = p = g = 0
    for i in range(q.n):
        for j in range(q.n):
            mult = q.arrows[i][j]
            if mult:
                for sk in blocks[i]:
                    for sl in blocks[j]:
                        if sl - sk >= 1:
                            v += mult
                        if sl - sk == 1:
                            r += mult
        for sk in blocks[i]:
            for sl in blocks[i]:
                if sl - sk >= 0:
                    p += 1
                if sl == sk:
                    g += 1
    return {"dim_V": v, "dim_R": r, "dim_P": p, "dim_G": g}


def phi_coweight(q: Quiver, cw: Coweight) -> int:
    """``dim V_s - dim R - (dim P_s - dim G)``."""
    dims = phi_dimensions(q, cw)
    return dims["dim_V"] - dims["dim_R"] - (dims["dim_P"] - dims["dim_G"])


def _shift_range(e: LeveledDimVector, f: LeveledDimVector) -> range:
    # <e, tau^k f> can only be nonzero while the shifted support of f meets
    # the levels of e or one above them
    if not e or not f:
        return range(0)
    return range(0, max(0, f.max_level() - e.min_level()) + 2)


def phi_shift(st: Stratum) -> int:
    """``-sum_{k>0} sum <e_mu, tau^k e_mu'> - sum_{mu<mu'} <e_mu, e_mu'>``."""
    q = st.quiver
    val = 0
    for x, (mu, e) in enumerate(st.parts):
        for y, (nu, f) in enumerate(st.parts):
            for k in _shift_range(e, f):
                if k > 0:
                    val -= level_euler_form(q, e, f.shift(k))
            if x < y:
                val -= level_euler_form(q, e, f)
    return val


# ---------------------------------------------------------------------
# semistable loci via the Harder-Narasimhan recursion


def rep_over_group(q: Quiver, e: LeveledDimVector) -> MotiveRat:
    """``[R_e]/[G_e]`` on the integral level quiver."""
    gv = DimVector(n for _, n in e.items())
    return MotiveRat(LaurentPoly.monomial(level_rep_dim(q, e))) * inv_group_motive(gv)


_sst_memo: dict = {}
_tail_memo: dict = {}
_memo_lock = threading.Lock()


def _store(memo: dict, key, val):
    with _memo_lock:
        memo.setdefault(key, val)
    return val


def semistable_motive(q: Quiver, e: LeveledDimVector) -> MotiveRat:
    """``[R^sst_e]/[G_e]`` for the slope stability on ``Q_Z``.

    ``[R_g]/[G_g] = sum L^{-sum_{k<l} <f^l, f^k>} prod_k sst(f^k)`` over
    tuples with strictly decreasing slopes, solved for the one-part term.
    This orientation gives ``L^m - 1`` for ``(i,-1) + (i,0)`` on ``m`` loops.
    """
    if not e:
        return MotiveRat.one()
    g, _ = e.normalized()
    key = (q.key(), g)
    hit = _sst_memo.get(key)
    if hit is not None:
        return hit
    total = rep_over_group(q, g)
    for f in g.sub_vectors():
        if not f or f == g:
            continue
        rest = g - f
        total = total - (
            semistable_motive(q, f) * _tail(q, rest, f.slope())
        ).shift(-level_euler_form(q, rest, f))
    return _store(_sst_memo, key, total)


def _tail(q: Quiver, g: LeveledDimVector, bound: Fraction) -> MotiveRat:
    """Sum over HN types of ``g`` whose slopes are all below ``bound``."""
    if not g:
        return MotiveRat.one()
    h, m = g.normalized()
    # shifting levels down by m raises every slope by m
    key = (q.key(), h, bound + m)
    hit = _tail_memo.get(key)
    if hit is not None:
        return hit
    total = MotiveRat.zero()
    for f in h.sub_vectors():
        if not f:
            continue
        sf = f.slope()
        if sf >= bound + m:
            continue
        rest = h - f
        total = total + (semistable_motive(q, f) * _tail(q, rest, sf)).shift(
            -level_euler_form(q, rest, f)
        )
    return _store(_tail_memo, key, total)


def hn_reconstruct(q: Quiver, e: LeveledDimVector) -> MotiveRat:
    """Sum over all HN types of ``e``; equals ``[R_e]/[G_e]``."""
    big = Fraction(e.max_level() + e.dim + 10) if e else Fraction(0)
    g, m = e.normalized()
    return _tail(q, g, big + m) if e else MotiveRat.one()


def clear_cache() -> None:
    with _memo_lock:
        _sst_memo.clear()
        _tail_memo.clear()


# ---------------------------------------------------------------------
# the stratified sum


def stratum_contribution(st: Stratum) -> tuple:
    """``(phi, prod_mu sst(e_mu), L^phi * prod)``."""
    prod = MotiveRat.one()
    for _, e in st.parts:
        prod = prod * semistable_motive(st.quiver, e)
        if not prod:
            break
    ph = phi(st)
    return ph, prod, prod.shift(ph)


def _contrib_worker(st: Stratum) -> MotiveRat:
    return stratum_contribution(st)[2]


def hesselink_motive(q: Quiver, d, jobs: int = 1, balance: str = "run") -> LaurentPoly:
    """``[G_d] * sum_strata L^phi prod sst``, checked to be a Laurent polynomial."""
    d = DimVector.of(q, d)
    strata = enumerate_strata(q, d, balance=balance)
    if jobs > 1 and len(strata) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_contrib_worker, strata, chunksize=max(1, len(strata) // (4 * jobs))))
    else:
        parts = [_contrib_worker(st) for st in strata]
    total = MotiveRat.zero()
    for c in parts:
        total = total + c
    total = total * MotiveRat(group_motive(d))
    if not total.is_polynomial():
        raise ArithmeticError(f"stratified sum is not a Laurent polynomial: {total}")
    return total.to_poly()


def _locus(st: Stratum) -> MotiveRat:
    """``prod_mu [R^sst_{e_mu}]`` without the group denominators."""
    out = MotiveRat.one()
    for _, e in st.parts:
        out = out * semistable_motive(st.quiver, e) * MotiveRat(group_motive([n for _, n in e.items()]))
    return out


def strata_table(q: Quiver, d, balance: str = "run", nonzero_only: bool = False) -> list:
    """Rows with coweight, parts, phi (both forms), semistable motive and contribution."""
    rows = []
    for st in enumerate_strata(q, d, balance=balance):
        ph, sst, contrib = stratum_contribution(st)
        if nonzero_only and not sst:
            continue
        row = {
            "parts": [{"mu": str(mu), "e": e.to_json(q)} for mu, e in st.parts],
            "phi": ph,
            "semistable": sst,
            "semistable_locus": _locus(st),
            "contribution": contrib,
        }
        try:
            cw = coweight_from_stratum(st)
            row["coweight"] = [str(x) for x in cw.entries]
            row["phi_coweight"] = phi_coweight(q, cw)
        except ValueError:
            row["coweight"] = None
        rows.append(row)
    return rows


# ---------------------------------------------------------------------
# wall-crossing


def star_mul(q: Quiver, e: LeveledDimVector, f: LeveledDimVector) -> int:
    """Exponent of ``L`` in ``u^e * u^f``."""
    val = 0
    for k in _shift_range(e, f):
        val -= level_euler_form(q, e, f.shift(k))
    for k in _shift_range(f, e):
        if k > 0:
            val -= level_euler_form(q, f, e.shift(k))
    return val


def _self_twist(q: Quiver, e: LeveledDimVector) -> int:
    return -sum(level_euler_form(q, e, e.shift(k)) for k in _shift_range(e, e) if k > 0)


def _factors(q: Quiver, bound: int) -> dict:
    """``mu -> {e: L^{-sum_{k>0}<e, tau^k e>} sst(e)}`` for ``dim e <= bound``."""
    out: dict = {}
    for p in _all_upto(q.n, bound):
        for mu, e in _runs_with_projection(p):
            sst = semistable_motive(q, e)
            if sst:
                out.setdefault(mu, {})[e] = sst.shift(_self_twist(q, e))
    return dict(sorted(out.items()))


def _all_upto(n: int, bound: int) -> Iterator[DimVector]:
    from .series import dim_vectors_upto

    for v in dim_vectors_upto(n, bound):
        if not v.is_zero():
            yield v


def wall_crossing_series(q: Quiver, bound: int) -> dict:
    """Ascending star product of the slope factors, specialized to ``t^{|e|}``."""
    acc = {LeveledDimVector(): MotiveRat.one()}
    for mu, factor in _factors(q, bound).items():
        new = dict(acc)
        for e, a in acc.items():
            for f, b in factor.items():
                if e.dim + f.dim > bound:
                    continue
                key = e + f
                term = (a * b).shift(star_mul(q, e, f))
                new[key] = new[key] + term if key in new else term
        acc = new
    out: dict = {}
    for e, c in acc.items():
        p = e.projection(q.n)
        out[p] = out[p] + c if p in out else c
    return {p: c for p, c in out.items() if c}


def wall_crossing_check(q: Quiver, bound: int, only=None) -> bool:
    """Compare with ``sum [N_d]/[G_d] t^d`` for ``dim d <= bound`` (or only at ``only``)."""
    from .nullcone import motive_recursive
    from .series import dim_vectors_upto

    lhs = wall_crossing_series(q, bound)
    targets = [DimVector.of(q, only)] if only is not None else list(dim_vectors_upto(q.n, bound))
    for d in targets:
        want = MotiveRat(motive_recursive(q, d)) * inv_group_motive(d)
        got = lhs.get(d, MotiveRat.zero())
        if got != want:
            return False
    return True
