import numpy as np
import pytest

from nullcone_motives.finite_field import (
    BudgetExceeded,
    FqRep,
    count_nilpotent_fq,
    is_nilpotent,
)
from nullcone_motives.motive import eval_at
from nullcone_motives.nullcone import motive_recursive
from nullcone_motives.quiver import (
    a2_quiver,
    atilde2_quiver,
    loop_quiver,
    rep_space_dim,
    two_cycle_quiver,
)
from nullcone_motives.series import dim_vectors_upto


def test_is_nilpotent_examples():
    q = loop_quiver(1)
    assert is_nilpotent(FqRep.zero(q, (2,), 2))
    assert is_nilpotent(FqRep(q, (2,), 2, ([[0, 1], [0, 0]],)))
    assert not is_nilpotent(FqRep(q, (2,), 2, (np.eye(2, dtype=int),)))


def test_two_cycle_rep():
    q = two_cycle_quiver()
    # i -> j -> i composes to 1 on the line: not nilpotent
    assert not is_nilpotent(FqRep(q, (1, 1), 3, ([[1]], [[2]])))
    assert is_nilpotent(FqRep(q, (1, 1), 3, ([[1]], [[0]])))


def test_rejects_prime_powers():
    with pytest.raises(ValueError):
        FqRep.zero(loop_quiver(1), (1,), 4)
    with pytest.raises(ValueError):
        count_nilpotent_fq(loop_quiver(1), (1,), 4)


def test_examples():
    assert count_nilpotent_fq(loop_quiver(1), (2,), 2) == 4
    assert count_nilpotent_fq(a2_quiver(), (1, 1), 3) == 3
    assert count_nilpotent_fq(loop_quiver(1), (3,), 2) == 64


def test_budget():
    with pytest.raises(BudgetExceeded):
        count_nilpotent_fq(loop_quiver(3), (4,), 3)
    with pytest.raises(BudgetExceeded):
        count_nilpotent_fq(loop_quiver(1), (3,), 2, budget=100)


@pytest.mark.parametrize(
    "q,d,p",
    [
        (loop_quiver(1), (2,), 3),
        (loop_quiver(2), (2,), 2),
        (two_cycle_quiver(), (1, 1), 3),
        (two_cycle_quiver(), (2, 1), 2),
        (atilde2_quiver(), (1, 1, 1), 2),
    ],
)
def test_chain_agrees_with_paths(q, d, p):
    assert count_nilpotent_fq(q, d, p, method="chain") == count_nilpotent_fq(q, d, p)


@pytest.mark.parametrize("q", [loop_quiver(1), loop_quiver(2), a2_quiver(), two_cycle_quiver()])
def test_oracle_matches_motive(q):
    for d in dim_vectors_upto(q.n, 3):
        for p in (2, 3):
            if p ** rep_space_dim(q, d) > 2**16:
                continue
            assert count_nilpotent_fq(q, d, p) == eval_at(motive_recursive(q, d), p)


def test_small_batches():
    assert count_nilpotent_fq(loop_quiver(1), (2,), 3, batch=7) == 9
