"""Brute-force counts of nilpotent representations over prime fields.

These counts are the point counts of ``N_d`` and must agree with the
motives evaluated at ``L = q``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .quiver import DimVector, Quiver, rep_space_dim

__all__ = [
    "BudgetExceeded",
    "FqRep",
    "is_nilpotent",
    "count_nilpotent_fq",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 2**24


class BudgetExceeded(RuntimeError):
    """The brute-force search space is larger than the allowed budget."""


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q**0.5) + 1))


@dataclass(frozen=True)
class FqRep:
    """A representation over ``F_q`` (``q`` prime).

    ``matrices[k]`` is the ``d_j x d_i`` matrix of the ``k``-th arrow of
    ``quiver.arrow_list()``.
    """

    quiver: Quiver
    d: DimVector
    q: int
    matrices: tuple

    def __post_init__(self):
        if not _is_prime(self.q):
            raise ValueError(f"q={self.q} is not prime; only prime fields are supported")
        d = DimVector.of(self.quiver, self.d)
        arrows = self.quiver.arrow_list()
        if len(self.matrices) != len(arrows):
            raise ValueError(f"expected {len(arrows)} matrices, got {len(self.matrices)}")
        mats = []
        for (i, j), m in zip(arrows, self.matrices):
            a = np.asarray(m, dtype=np.int64).reshape(d[j], d[i]) % self.q
            mats.append(a)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "matrices", tuple(mats))

    @classmethod
    def zero(cls, quiver: Quiver, d, q: int) -> "FqRep":
        d = DimVector.of(quiver, d)
        return cls(quiver, d, q, tuple(np.zeros((d[j], d[i]), dtype=np.int64) for i, j in quiver.arrow_list()))


def _row_reduce(rows: list, p: int) -> list:
    """Reduced row basis of the span of ``rows`` over ``F_p``."""
    rows = [list(r) for r in rows]
    basis = []
    if not rows:
        return basis
    ncols = len(rows[0])
    col = 0
    while rows and col < ncols:
        pivot = next((r for r in rows if r[col] % p), None)
        if pivot is None:
            col += 1
            continue
        rows.remove(pivot)
        inv = pow(pivot[col], -1, p)
        pivot = [(x * inv) % p for x in pivot]
        new_rows = []
        for r in rows:
            f = r[col] % p
            if f:
                r = [(x - f * y) % p for x, y in zip(r, pivot)]
            if any(r):
                new_rows.append(r)
        rows = new_rows
        basis = [
            [(x - b[col] * y) % p for x, y in zip(b, pivot)] if b[col] % p else b for b in basis
        ]
        basis.append(pivot)
        col += 1
    return basis


def is_nilpotent(rep: FqRep) -> bool:
    """Ascending chain test for the existence of a filtration by simples.

    ``U_0 = 0`` and ``U_{k+1,i}`` is the intersection over arrows
    ``a: i -> j`` of the preimages ``V_a^{-1}(U_{k,j})``.  Subspaces are
    stored as annihilators: ``U = ker C``, so a preimage is ``ker(C A)``.
    """
    q, quiver, d = rep.q, rep.quiver, rep.d
    arrows = quiver.arrow_list()
    # annihilator of U_0 = 0 is the identity
    ann = [[[1 if r == c else 0 for c in range(d[i])] for r in range(d[i])] for i in range(quiver.n)]
    for _ in range(d.total + 1):
        if not any(ann):
            return True
        new = []
        for i in range(quiver.n):
            rows = []
            for (src, tgt), a in zip(arrows, rep.matrices):
                if src != i or not ann[tgt]:
                    continue
                c = np.asarray(ann[tgt], dtype=np.int64)
                rows.extend((c @ a % q).tolist())
            new.append(_row_reduce(rows, q) if d[i] else [])
        if [len(x) for x in new] == [len(x) for x in ann]:
            return False
        ann = new
    return not any(ann)


def _paths(quiver: Quiver, length: int) -> list:
    """Composable arrow-index words of the given length."""
    arrows = quiver.arrow_list()
    words = [((k,), arrows[k][0], arrows[k][1]) for k in range(len(arrows))]
    for _ in range(length - 1):
        words = [
            (w + (k,), src, arrows[k][1])
            for w, src, tgt in words
            for k in range(len(arrows))
            if arrows[k][0] == tgt
        ]
    return [w for w, _, _ in words]


def count_nilpotent_fq(
    quiver: Quiver,
    d,
    q: int,
    budget: int = DEFAULT_BUDGET,
    method: str = "paths",
    batch: int | None = None,
) -> int:
    """Number of nilpotent representations of dimension ``d`` over ``F_q``.

    ``method="paths"`` uses that a representation is nilpotent iff every
    path of length ``dim d`` acts by zero, vectorized over batches;
    ``method="chain"`` calls :func:`is_nilpotent` on each representation.
    """
    if not _is_prime(q):
        raise ValueError(f"q={q} is not prime")
    d = DimVector.of(quiver, d)
    n_entries = rep_space_dim(quiver, d)
    space = q**n_entries
    if space > budget:
        raise BudgetExceeded(f"search space {q}^{n_entries} = {space} exceeds budget {budget}")
    arrows = quiver.arrow_list()
    n = d.total
    if n_entries == 0:
        # the zero representation is the only one, and it is nilpotent
        return 1
    if method == "chain":
        return _count_chain(quiver, d, q, arrows)
    if method != "paths":
        raise ValueError(f"unknown method {method!r}")

    offs = np.cumsum([0] + list(d))
    # (arrow index, row, col) positions in the big n x n matrices
    slots = []
    for k, (i, j) in enumerate(arrows):
        for r in range(d[j]):
            for c in range(d[i]):
                slots.append((k, offs[j] + r, offs[i] + c))
    words = _paths(quiver, n)
    if not words:
        return space
    if batch is None:
        batch = max(1, min(space, 2**22 // max(1, len(words) * n * n)))
    powers = q ** np.arange(n_entries, dtype=np.int64)
    slot_k = np.array([s[0] for s in slots])
    slot_r = np.array([s[1] for s in slots])
    slot_c = np.array([s[2] for s in slots])
    count = 0
    for start in range(0, space, batch):
        idx = np.arange(start, min(space, start + batch), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % q
        mats = np.zeros((len(idx), len(arrows), n, n), dtype=np.int64)
        mats[:, slot_k, slot_r, slot_c] = digits
        nil = np.ones(len(idx), dtype=bool)
        # walk words as a prefix tree so shared prefixes are multiplied once
        cache = {(): None}
        for w in sorted(words):
            prod = None
            for t in range(1, len(w) + 1):
                pre = w[:t]
                if pre in cache:
                    prod = cache[pre]
                    continue
                a = mats[:, w[t - 1]]
                prod = a if prod is None else np.matmul(a, prod) % q
                cache[pre] = prod
            nil &= ~prod.reshape(len(idx), -1).any(axis=1)
            if len(cache) > 4096:
                cache = {(): None}
        count += int(nil.sum())
    return count


def _count_chain(quiver: Quiver, d: DimVector, q: int, arrows: list) -> int:
    shapes = [(d[j], d[i]) for i, j in arrows]
    sizes = [r * c for r, c in shapes]
    count = 0
    for entries in itertools.product(range(q), repeat=sum(sizes)):
        mats = []
        pos = 0
        for (r, c), s in zip(shapes, sizes):
            mats.append(np.array(entries[pos : pos + s], dtype=np.int64).reshape(r, c))
            pos += s
        if is_nilpotent(FqRep(quiver, d, q, tuple(mats))):
            count += 1
    return count
