import random
from fractions import Fraction

import pytest

from toricarr import beta_delres, beta_poset, chambers, make_arrangement, restrict
from toricarr.arrangement import NotEssential, is_primitive, rank
from toricarr.delres import DelResTrace
from toricarr.randomgen import RandomConfig, random_arrangement

from conftest import points


def test_restrict_coordinate():
    arr = make_arrangement(2, [((1, 0), 0), ((0, 1), 0)])
    res = restrict(arr, 0)
    out = res.restricted_arrangement
    assert out.dimension == 1
    assert [(h.chi, h.angle) for h in out.hypertori] == [((1,), 0)]
    assert res.component_multiplicity == {1: 1}


def test_restrict_splits(cross):
    res = restrict(cross, 0)
    out = res.restricted_arrangement
    assert sorted(h.angle for h in out.hypertori) == [0, Fraction(1, 2)]
    assert res.component_multiplicity == {1: 2}


def test_restrict_drops_parallel():
    arr = make_arrangement(2, [((1, 1), 0), ((1, 1), "1/3"), ((0, 1), 0)])
    res = restrict(arr, 0)
    assert res.dropped == (1,)
    assert len(res.restricted_arrangement.hypertori) == 1


def test_restrict_out_of_range(cross):
    with pytest.raises(IndexError):
        restrict(cross, 5)


def test_restrict_points_lie_on_both():
    """Points of the restricted arrangement map to points of H ∩ H'."""
    rng = random.Random(4)
    for _ in range(20):
        arr = random_arrangement(rng, RandomConfig(dimensions=(2, 3), max_entry=3))
        idx = rng.randrange(len(arr.hypertori))
        res = restrict(arr, idx)
        x0, B = res.parametrization
        H = arr.hypertori[idx]
        for h in res.restricted_arrangement.hypertori:
            assert is_primitive(h.chi)
            # a point on h in the parameter torus, pushed to T, lies on H and on some H'
            j = next(k for k, a in enumerate(h.chi) if a in (1, -1)) if any(a in (1, -1) for a in h.chi) else None
            if j is None:
                continue
            s = [Fraction(0)] * len(h.chi)
            s[j] = h.angle * h.chi[j]
            x = [c + sum(s[k] * B[k][i] for k in range(len(B))) for i, c in enumerate(x0)]
            assert H.contains(x)
            assert any(g.contains(x) for i, g in enumerate(arr.hypertori) if i != idx)


def test_beta_examples(coord_diag, cross):
    assert beta_delres(points(1)) == 1
    t = DelResTrace()
    assert beta_delres(coord_diag, trace=t) == 2
    assert t.case1 >= 1
    t = DelResTrace()
    assert beta_delres(cross, trace=t) == 2
    # first deletion leaves a rank-one arrangement: Case 2
    assert t.case2 >= 1


def test_beta_not_essential():
    with pytest.raises(NotEssential):
        beta_delres(make_arrangement(2, [((1, 0), 0)]))


def test_pivot_independence_and_agreement():
    rng = random.Random(8)
    for _ in range(40):
        arr = random_arrangement(rng)
        b = beta_poset(arr)
        assert {beta_delres(arr, p) for p in range(len(arr.hypertori))} == {b}
        assert chambers(arr)[0] == b


def test_case1_monotone():
    rng = random.Random(12)
    for _ in range(40):
        arr = random_arrangement(rng)
        n = arr.dimension
        for i in range(len(arr.hypertori)):
            deleted = arr.without(i)
            if rank(deleted) == n:
                b, b_del = beta_delres(arr), beta_delres(deleted)
                b_res = beta_delres(restrict(arr, i).restricted_arrangement)
                assert b - b_del == b_res >= 0


def test_case2_splitting_recorded(cross):
    t = DelResTrace()
    beta_delres(cross, trace=t)
    assert len(t.splittings) == t.case2
    h, B = t.splittings[0]
    # the parametrization basis spans the kernel of the removed character
    assert all(sum(a * b for a, b in zip(h.chi, row)) == 0 for row in B)
