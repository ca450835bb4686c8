"""Closed forms of ``[N_d]`` for the ``m``-loop quiver, ``d <= 4``.

Each entry ``(c, a, b)`` stands for ``c * L^{a*m + b}``.
"""

from __future__ import annotations

from .motive import LaurentPoly

LOOP_TERMS = {
    1: [(1, 0, 0)],
    2: [(1, 1, 1), (1, 1, 0), (-1, 0, 1)],
    3: [
        (1, 3, 3), (2, 3, 2), (2, 3, 1), (1, 3, 0),
        (-2, 2, 3), (-2, 2, 2), (-2, 2, 1),
        (1, 0, 3),
    ],
    4: [
        (1, 6, 6), (3, 6, 5), (5, 6, 4), (6, 6, 3), (5, 6, 2), (3, 6, 1), (1, 6, 0),
        (-3, 5, 6), (-6, 5, 5), (-9, 5, 4), (-9, 5, 3), (-6, 5, 2), (-3, 5, 1),
        (1, 4, 6), (1, 4, 5), (2, 4, 4), (1, 4, 3), (1, 4, 2),
        (2, 3, 6), (2, 3, 5), (2, 3, 4), (2, 3, 3),
        (-1, 0, 6),
    ],
}


def loop_reference(m: int, d: int) -> LaurentPoly:
    """The tabulated ``[N_d]`` of the ``m``-loop quiver instantiated at ``m``."""
    if d == 0:
        return LaurentPoly.one()
    if d not in LOOP_TERMS:
        raise KeyError(f"no closed form tabulated for d={d}")
    terms: dict = {}
    for c, a, b in LOOP_TERMS[d]:
        e = a * m + b
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(terms)
