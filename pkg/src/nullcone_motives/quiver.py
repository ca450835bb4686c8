"""Quivers, dimension vectors and the combinatorics of their decompositions."""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from math import prod
from typing import Iterator, Mapping, Sequence

__all__ = [
    "Quiver",
    "DimVector",
    "euler_form",
    "is_symmetric",
    "is_acyclic",
    "sub_dim_vectors",
    "ordered_decompositions",
    "rep_space_dim",
    "loop_quiver",
    "a2_quiver",
    "two_cycle_quiver",
    "atilde2_quiver",
]


@dataclass(frozen=True)
class Quiver:
    """Vertices in a fixed order plus the arrow-multiplicity matrix ``r``.

    ``arrows[i][j]`` is the number of arrows from ``vertices[i]`` to
    ``vertices[j]``.
    """

    vertices: tuple
    arrows: tuple
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError(f"duplicate vertex ids in {verts}")
        n = len(verts)
        rows = tuple(tuple(int(x) for x in row) for row in self.arrows)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ValueError("arrow matrix must be square of size |vertices|")
        if any(x < 0 for row in rows for x in row):
            raise ValueError("arrow multiplicities must be non-negative")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", rows)
        object.__setattr__(self, "_index", {v: k for k, v in enumerate(verts)})

    @classmethod
    def from_arrows(cls, vertices: Sequence, arrows) -> "Quiver":
        """Build from ``[(source, target, multiplicity), ...]``."""
        verts = tuple(vertices)
        idx = {v: k for k, v in enumerate(verts)}
        r = [[0] * len(verts) for _ in verts]
        for a in arrows:
            src, tgt = a[0], a[1]
            mult = a[2] if len(a) > 2 else 1
            if src not in idx or tgt not in idx:
                raise ValueError(f"arrow {a} uses an unknown vertex")
            r[idx[src]][idx[tgt]] += int(mult)
        return cls(verts, tuple(tuple(row) for row in r))

    @classmethod
    def from_json(cls, data) -> "Quiver":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_arrows(data["vertices"], data.get("arrows", []))

    def to_json(self) -> dict:
        arrows = []
        for i, src in enumerate(self.vertices):
            for j, tgt in enumerate(self.vertices):
                if self.arrows[i][j]:
                    arrows.append([src, tgt, self.arrows[i][j]])
        return {"vertices": list(self.vertices), "arrows": arrows}

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v) -> int:
        return self._index[v]

    def r(self, i: int, j: int) -> int:
        return self.arrows[i][j]

    def arrow_list(self) -> list:
        """Arrows as ``(i, j)`` index pairs, multiplicities expanded."""
        out = []
        for i in range(self.n):
            for j in range(self.n):
                out.extend([(i, j)] * self.arrows[i][j])
        return out

    def num_arrows(self) -> int:
        return sum(map(sum, self.arrows))

    def key(self) -> str:
        """Stable hash of the quiver, used for memo and cache keys."""
        blob = json.dumps(self.to_json(), sort_keys=True, default=str)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def permuted(self, order: Sequence) -> "Quiver":
        """Same quiver with the vertices listed in ``order``."""
        idx = [self.index(v) for v in order]
        r = tuple(tuple(self.arrows[a][b] for b in idx) for a in idx)
        return Quiver(tuple(order), r)

    def dim(self, data) -> "DimVector":
        """Coerce a mapping or sequence into a :class:`DimVector` on this quiver."""
        return DimVector.of(self, data)


class DimVector(tuple):
    """Dimension vector as a tuple of non-negative ints in vertex order."""

    __slots__ = ()

    def __new__(cls, entries=()):
        vals = tuple(int(x) for x in entries)
        if any(x < 0 for x in vals):
            raise ValueError(f"negative entry in dimension vector {vals}")
        return super().__new__(cls, vals)

    @classmethod
    def of(cls, q: Quiver, data) -> "DimVector":
        if isinstance(data, DimVector):
            if len(data) != q.n:
                raise ValueError(f"dimension vector {data} does not match {q.n} vertices")
            return data
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, Mapping):
            unknown = set(data) - set(q.vertices)
            if unknown:
                raise ValueError(f"unknown vertices {sorted(map(str, unknown))}")
            return cls(int(data.get(v, 0)) for v in q.vertices)
        vals = tuple(data)
        if len(vals) != q.n:
            raise ValueError(f"dimension vector {vals} does not match {q.n} vertices")
        return cls(vals)

    @classmethod
    def zero(cls, n: int) -> "DimVector":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "DimVector":
        return cls(1 if k == i else 0 for k in range(n))

    @property
    def total(self) -> int:
        return sum(self)

    def __add__(self, other):
        return DimVector(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other):
        return DimVector(a - b for a, b in zip(self, other, strict=True))

    def leq(self, other) -> bool:
        """Componentwise ``self <= other``."""
        return all(a <= b for a, b in zip(self, other, strict=True))

    def is_zero(self) -> bool:
        return not any(self)

    def to_json(self, q: Quiver) -> dict:
        return {str(v): x for v, x in zip(q.vertices, self)}

    def __repr__(self):
        return f"DimVector({tuple(self)})"


def _check(q: Quiver, *vs):
    for v in vs:
        if len(v) != q.n:
            raise ValueError(f"dimension vector {tuple(v)} does not match {q.n} vertices")


def euler_form(q: Quiver, d, e) -> int:
    """``<d, e> = sum_i d_i e_i - sum_{i->j} r_ij d_i e_j``."""
    _check(q, d, e)
    val = sum(a * b for a, b in zip(d, e))
    for i in range(q.n):
        if d[i]:
            row = q.arrows[i]
            val -= d[i] * sum(row[j] * e[j] for j in range(q.n))
    return val


def is_symmetric(q: Quiver) -> bool:
    return all(q.arrows[i][j] == q.arrows[j][i] for i in range(q.n) for j in range(i))


def is_acyclic(q: Quiver) -> bool:
    """True iff there is no oriented cycle; a loop counts as a cycle."""
    n = q.n
    indeg = [sum(q.arrows[i][j] for i in range(n)) for j in range(n)]
    if any(q.arrows[i][i] for i in range(n)):
        return False
    ready = [j for j in range(n) if indeg[j] == 0]
    seen = 0
    while ready:
        i = ready.pop()
        seen += 1
        for j in range(n):
            if q.arrows[i][j]:
                indeg[j] -= q.arrows[i][j]
                if indeg[j] == 0:
                    ready.append(j)
    return seen == n


def rep_space_dim(q: Quiver, d) -> int:
    """``dim R_d = sum_{i->j} r_ij d_i d_j``."""
    _check(q, d)
    return sum(
        q.arrows[i][j] * d[i] * d[j] for i in range(q.n) for j in range(q.n) if q.arrows[i][j]
    )


def sub_dim_vectors(d) -> Iterator[DimVector]:
    """All ``e`` with ``0 <= e <= d``, lexicographic in the vertex order."""
    for e in itertools.product(*(range(x + 1) for x in d)):
        yield DimVector(e)


def num_sub_dim_vectors(d) -> int:
    return prod(x + 1 for x in d)


def ordered_decompositions(d) -> Iterator[tuple]:
    """Ordered tuples of non-zero vectors summing to ``d``.

    Stack-based depth-first generation; each tuple appears exactly once.
    """
    d = DimVector(d)
    if d.is_zero():
        raise ValueError("the zero vector has no decomposition into non-zero parts")
    stack = [(d, ())]
    while stack:
        rest, parts = stack.pop()
        if rest.is_zero():
            yield parts
            continue
        # push in reverse so that the yield order is lexicographic in the first part
        children = [e for e in sub_dim_vectors(rest) if not e.is_zero()]
        for e in reversed(children):
            stack.append((rest - e, parts + (e,)))


# ---------------------------------------------------------------------
# fixtures used throughout the tests and the demos


def loop_quiver(m: int, name: str = "v") -> Quiver:
    """One vertex with ``m`` loops (``m = 0`` is the point quiver)."""
    return Quiver((name,), ((m,),))


def a2_quiver() -> Quiver:
    return Quiver.from_arrows(["i", "j"], [("i", "j", 1)])


def two_cycle_quiver(mult: int = 1) -> Quiver:
    """Two vertices with ``mult`` arrows in each direction."""
    return Quiver.from_arrows(["i", "j"], [("i", "j", mult), ("j", "i", mult)])


def atilde2_quiver() -> Quiver:
    """``i -> j -> k`` together with ``i -> k``."""
    return Quiver.from_arrows(["i", "j", "k"], [("i", "j"), ("j", "k"), ("i", "k")])
