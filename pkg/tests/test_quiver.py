import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_quiver
from nullcone_motives.quiver import (
    DimVector,
    Quiver,
    a2_quiver,
    atilde2_quiver,
    euler_form,
    is_acyclic,
    is_symmetric,
    loop_quiver,
    ordered_decompositions,
    rep_space_dim,
    sub_dim_vectors,
    two_cycle_quiver,
)


def test_euler_form_examples():
    assert euler_form(loop_quiver(1), (1,), (1,)) == 0
    assert euler_form(a2_quiver(), (1, 0), (0, 1)) == -1
    for m in range(4):
        for k in range(4):
            assert euler_form(loop_quiver(m), (k,), (k,)) == k * k - m * k * k


def test_euler_form_vertex_mismatch():
    with pytest.raises(ValueError):
        euler_form(a2_quiver(), (1,), (1, 0))


def test_predicates():
    assert is_symmetric(loop_quiver(3))
    assert not is_symmetric(a2_quiver())
    assert is_symmetric(two_cycle_quiver())
    assert is_acyclic(a2_quiver())
    assert not is_acyclic(loop_quiver(1))
    assert is_acyclic(atilde2_quiver())
    assert not is_acyclic(two_cycle_quiver())


def test_sub_dim_vectors():
    assert list(sub_dim_vectors((2,))) == [(0,), (1,), (2,)]
    assert len(list(sub_dim_vectors((1, 1)))) == 4
    assert len(list(sub_dim_vectors((2, 1)))) == 6
    vs = list(sub_dim_vectors((2, 0, 3)))
    assert len(vs) == len(set(vs)) == 12


def test_ordered_decompositions_small():
    assert sorted(ordered_decompositions((2,))) == [((1,), (1,)), ((2,),)]
    dec = list(ordered_decompositions((1, 1)))
    assert sorted(dec) == sorted([((1, 1),), ((1, 0), (0, 1)), ((0, 1), (1, 0))])
    assert len(list(ordered_decompositions((1, 1, 1)))) == 13
    with pytest.raises(ValueError):
        list(ordered_decompositions((0, 0)))


def _brute_decompositions(d):
    """Compositions by recursion on the first part, no stack."""
    d = DimVector(d)
    if d.is_zero():
        return [()]
    out = []
    for e in sub_dim_vectors(d):
        if not e.is_zero():
            out += [(e,) + rest for rest in _brute_decompositions(d - e)]
    return out


@pytest.mark.parametrize("d", [(3,), (2, 1), (1, 1, 1), (2, 2), (1, 2, 1)])
def test_ordered_decompositions_brute(d):
    got = list(ordered_decompositions(d))
    assert len(got) == len(set(got))
    assert set(got) == set(_brute_decompositions(d))
    for parts in got:
        total = DimVector.zero(len(d))
        for p in parts:
            assert not p.is_zero()
            total = total + p
        assert total == d


def test_rep_space_dim():
    assert rep_space_dim(loop_quiver(1), (3,)) == 9
    assert rep_space_dim(a2_quiver(), (2, 3)) == 6
    for m in range(4):
        assert rep_space_dim(loop_quiver(m), (5,)) == 25 * m


def test_json_roundtrip():
    q = Quiver.from_json('{"vertices":["i","j"],"arrows":[["i","j",2]]}')
    assert q.arrows == ((0, 2), (0, 0))
    assert Quiver.from_json(q.to_json()) == q
    assert DimVector.of(q, '{"i":1,"j":2}') == (1, 2)
    assert DimVector.of(q, {"j": 2}) == (0, 2)
    assert DimVector(( 1, 2)).to_json(q) == {"i": 1, "j": 2}
    with pytest.raises(ValueError):
        DimVector.of(q, {"k": 1})
    with pytest.raises(ValueError):
        Quiver(("a", "a"), ((0, 0), (0, 0)))


def test_symmetric_iff_euler_symmetric():
    rng = random.Random(5)
    for _ in range(20):
        q = random_quiver(rng, 3, 2)
        units = [DimVector.unit(3, i) for i in range(3)]
        sym = all(euler_form(q, a, b) == euler_form(q, b, a) for a in units for b in units)
        assert sym == is_symmetric(q)


vec3 = st.lists(st.integers(0, 4), min_size=3, max_size=3)


@settings(max_examples=60, deadline=None)
@given(vec3, vec3, vec3)
def test_euler_bilinear(d, d2, e):
    q = atilde2_quiver()
    s = [a + b for a, b in zip(d, d2)]
    assert euler_form(q, s, e) == euler_form(q, d, e) + euler_form(q, d2, e)
    assert euler_form(q, e, s) == euler_form(q, e, d) + euler_form(q, e, d2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_sub_dim_cardinality(d):
    n = 1
    for x in d:
        n *= x + 1
    assert len(list(sub_dim_vectors(d))) == n


def test_vertex_order_independence():
    from nullcone_motives.nullcone import motive_recursive

    q = atilde2_quiver()
    for order in itertools.permutations(q.vertices):
        p = q.permuted(order)
        d = {"i": 1, "j": 2, "k": 1}
        assert motive_recursive(p, p.dim(d)) == motive_recursive(q, q.dim(d))
