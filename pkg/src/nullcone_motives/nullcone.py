"""Motives of nullcones ``[N_d]`` as polynomials in ``L``.

Two general routes are provided, the recursion over sub-dimension vectors and
the resolved sum over ordered decompositions, plus the closed forms for
acyclic quivers, the all-ones dimension vector and the leading term in the
symmetric case.
"""

from __future__ import annotations

import itertools
import json
import os
import threading
from concurrent.futures import ProcessPoolExecutor
from math import comb, factorial
from pathlib import Path

from .motive import LaurentPoly, gauss_binomial, gauss_multinomial
from .quiver import (
    DimVector,
    Quiver,
    euler_form,
    is_acyclic,
    is_symmetric,
    ordered_decompositions,
    rep_space_dim,
    sub_dim_vectors,
)

__all__ = [
    "motive_recursive",
    "motive_resolved",
    "motive_acyclic",
    "motive_dim_one",
    "leading_term_symmetric",
    "monomial_support_loop",
    "nullcone_motive",
    "clear_cache",
    "load_cache",
    "save_cache",
    "CACHE_ENV",
]

CACHE_ENV = "NULLCONE_MOTIVES_CACHE"

# (quiver key, d) -> LaurentPoly; inserts are idempotent so a plain dict
# guarded by a lock for writers is enough.
_memo: dict = {}
_memo_lock = threading.Lock()


def clear_cache() -> None:
    with _memo_lock:
        _memo.clear()


def _d(q: Quiver, d) -> DimVector:
    return DimVector.of(q, d)


def motive_recursive(q: Quiver, d) -> LaurentPoly:
    """``[N_d]`` from the recursion over ``e < d``.

    ``[N_d] = -sum_{e<d} (-1)^{dim d - dim e}
    L^{sum_i (C(d_i,2) - C(e_i,2)) - <e, d-e>} [d over e]_L [N_e]``.
    """
    d = _d(q, d)
    qk = q.key()
    return _recursive(q, qk, d)


def _recursive(q: Quiver, qk: str, d: DimVector) -> LaurentPoly:
    key = (qk, d)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    if d.is_zero():
        val = LaurentPoly.one()
    else:
        c_d = sum(comb(x, 2) for x in d)
        total: dict = {}
        for e in sub_dim_vectors(d):
            if e == d:
                continue
            n_e = _recursive(q, qk, e)
            rest = d - e
            exp = c_d - sum(comb(x, 2) for x in e) - euler_form(q, e, rest)
            sign = -1 if (d.total - e.total) % 2 else 1
            binom = LaurentPoly.one()
            for di, ei in zip(d, e):
                if ei and ei != di:
                    binom = binom * gauss_binomial(di, ei)
            term = (binom * n_e).shift(exp)
            for k, c in term._terms.items():
                total[k] = total.get(k, 0) - sign * c
        val = LaurentPoly(total)
    with _memo_lock:
        _memo.setdefault(key, val)
    return val


def _resolved_chunk(args) -> dict:
    q, d, parts_list = args
    acc: dict = {}
    for parts in parts_list:
        s = len(parts)
        twist = 0
        for k in range(s):
            for l in range(k + 1, s):
                twist += euler_form(q, parts[k], parts[l])
        term = gauss_multinomial(d, parts).shift(-twist)
        sign = -1 if s % 2 else 1
        for e, c in term._terms.items():
            acc[e] = acc.get(e, 0) + sign * c
    return acc


def motive_resolved(q: Quiver, d, jobs: int = 1, chunk: int = 2000) -> LaurentPoly:
    """``[N_d]`` from the sum over ordered decompositions ``d = d^1 + ... + d^s``.

    ``(-1)^{dim d} L^{sum C(d_i,2)} sum (-1)^s L^{-sum_{k<l} <d^k,d^l>}
    [d over d^1..d^s]_L``.  With ``jobs > 1`` the summands are split across
    worker processes and added back together.
    """
    d = _d(q, d)
    if d.is_zero():
        return LaurentPoly.one()
    decomps = ordered_decompositions(d)
    total: dict = {}
    if jobs > 1:
        batches = []
        while True:
            batch = list(itertools.islice(decomps, chunk))
            if not batch:
                break
            batches.append((q, d, batch))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_resolved_chunk, batches))
    else:
        parts = [_resolved_chunk((q, d, list(decomps)))]
    for acc in parts:
        for e, c in acc.items():
            total[e] = total.get(e, 0) + c
    sign = -1 if d.total % 2 else 1
    return (LaurentPoly(total) * sign).shift(sum(comb(x, 2) for x in d))


def motive_acyclic(q: Quiver, d) -> LaurentPoly:
    """``L^{dim R_d}``; every representation of an acyclic quiver is nilpotent."""
    if not is_acyclic(q):
        raise ValueError("quiver has an oriented cycle")
    return LaurentPoly.monomial(rep_space_dim(q, _d(q, d)))


def _subset_acyclic(n: int, arrows) -> bool:
    adj = [[] for _ in range(n)]
    for i, j in arrows:
        if i == j:
            return False
        adj[i].append(j)
    state = [0] * n
    for start in range(n):
        if state[start]:
            continue
        stack = [(start, iter(adj[start]))]
        state[start] = 1
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[v] = 2
                stack.pop()
            elif state[nxt] == 1:
                return False
            elif state[nxt] == 0:
                state[nxt] = 1
                stack.append((nxt, iter(adj[nxt])))
    return True


def motive_dim_one(q: Quiver, max_arrows: int = 20) -> LaurentPoly:
    """``[N_1] = sum over acyclic arrow subsets F of (L-1)^{|F|}``."""
    arrows = q.arrow_list()
    if len(arrows) > max_arrows:
        raise ValueError(f"{len(arrows)} arrows exceed the enumeration cap {max_arrows}")
    counts = [0] * (len(arrows) + 1)
    for mask in range(1 << len(arrows)):
        chosen = [a for b, a in enumerate(arrows) if mask >> b & 1]
        if _subset_acyclic(q.n, chosen):
            counts[len(chosen)] += 1
    lm1 = LaurentPoly({1: 1, 0: -1})
    total = LaurentPoly.zero()
    for k, c in enumerate(counts):
        if c:
            total = total + lm1 ** k * c
    return total


def leading_term_symmetric(q: Quiver, d) -> tuple:
    """(coefficient, exponent) of the top monomial of ``[N_d]`` for symmetric ``q``."""
    if not is_symmetric(q):
        raise ValueError("quiver is not symmetric")
    d = _d(q, d)
    coef = factorial(d.total)
    for x in d:
        coef //= factorial(x)
    exp = sum((q.arrows[i][i] + 1) * comb(d[i], 2) for i in range(q.n))
    exp += sum(q.arrows[i][j] * d[i] * d[j] for i in range(q.n) for j in range(i + 1, q.n))
    return coef, exp


def monomial_support_loop(m: int, d: int, *, literal: bool = False) -> set:
    """Predicted exponents of ``[N_d]`` for the ``m``-loop quiver.

    Exponents ``k*m + l`` with ``C(d,2) - k <= l <= C(d,2)`` and ``k`` in
    ``{0} | [d-1, C(d,2)]``.  The ``k = 0`` row contributes the single term
    ``L^{C(d,2)}`` (the ``-L`` of ``[N_2]``, the ``L^3`` of ``[N_3]``);
    ``literal=True`` drops it and returns only ``d-1 <= k <= C(d,2)``.
    """
    if d < 1:
        raise ValueError("d must be positive")
    c = comb(d, 2)
    ks = list(range(d - 1, c + 1))
    if not literal and 0 not in ks:
        ks.append(0)
    return {k * m + l for k in ks for l in range(c - k, c + 1)}


def nullcone_motive(q: Quiver, d, method: str = "recursive", jobs: int = 1) -> LaurentPoly:
    """Dispatch on ``method`` in ``recursive``, ``resolved``, ``hesselink``, ``auto``."""
    if method in ("recursive", "auto"):
        return motive_recursive(q, d)
    if method == "resolved":
        return motive_resolved(q, d, jobs=jobs)
    if method == "hesselink":
        from .hesselink import hesselink_motive

        return hesselink_motive(q, d, jobs=jobs)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------
# persistent cache of recursion results


def _cache_file(q: Quiver, directory) -> Path:
    return Path(directory) / f"nullcone-{q.key()}.json"


def load_cache(q: Quiver, directory=None) -> int:
    """Load persisted ``[N_e]`` values for ``q`` into the memo; returns the count."""
    directory = directory or os.environ.get(CACHE_ENV)
    if not directory:
        return 0
    path = _cache_file(q, directory)
    if not path.exists():
        return 0
    data = json.loads(path.read_text())
    if data.get("quiver") != q.to_json():
        return 0
    qk = q.key()
    with _memo_lock:
        for row in data["motives"]:
            _memo.setdefault((qk, DimVector(row["d"])), LaurentPoly.from_json(row["poly"]))
    return len(data["motives"])


def save_cache(q: Quiver, directory=None) -> Path | None:
    directory = directory or os.environ.get(CACHE_ENV)
    if not directory:
        return None
    qk = q.key()
    rows = [
        {"d": list(d), "poly": p.to_json()}
        for (k, d), p in sorted(_memo.items(), key=lambda kv: (kv[0][1].total, kv[0][1]))
        if k == qk
    ]
    Path(directory).mkdir(parents=True, exist_ok=True)
    path = _cache_file(q, directory)
    path.write_text(json.dumps({"quiver": q.to_json(), "motives": rows}, indent=1))
    return path
