import random
from fractions import Fraction as F

import pytest

import laytrop as lt
from conftest import ALL_SORTS, rand_layer

T4 = lt.truncated(4)


def test_layer_add_examples():
    assert lt.layer_add(2, 3, lt.NAT) == 5
    assert lt.layer_add(3, 3, T4) == 4  # capped at the truncation bound
    assert lt.layer_add(1, 1, lt.UNIT) == 1
    assert lt.layer_add(1, 1, lt.SUPER) == lt.INF


def test_layer_mul_examples():
    assert lt.layer_mul(F(1, 2), 4, lt.POSQ) == 2
    assert lt.layer_mul(1, lt.INF, lt.SUPER) == lt.INF
    assert lt.layer_mul(0, 7, lt.RAT) == 0
    assert lt.layer_mul(3, 2, T4) == 4


def test_layer_cmp():
    assert lt.layer_cmp(2, 3) == -1
    assert lt.layer_cmp(lt.INF, 5) == 1
    assert lt.layer_cmp(1, 1) == 0


def test_invalid_layers_rejected():
    with pytest.raises(lt.InvalidLayer):
        lt.layer_add(F(1, 2), 1, lt.NAT)
    with pytest.raises(lt.InvalidLayer):
        lt.layer_mul(5, 1, T4)
    with pytest.raises(lt.InvalidLayer):
        lt.layer_add(2, 1, lt.SUPER)
    with pytest.raises(lt.InvalidLayer):
        lt.layer_add(-1, 1, lt.POSQ)


def test_zero_layer_is_formally_tolerated():
    # inessential full-form coefficients carry layer 0 under every sort
    assert lt.layer_add(0, 3, lt.NAT) == 3
    assert lt.layer_mul(0, 3, lt.NAT) == 0
    assert lt.layer_mul(0, 1, lt.UNIT) == 0
    assert lt.layer_add(0, lt.INF, lt.SUPER) == lt.INF


def test_is_ghost_sort():
    assert lt.is_ghost_sort(3, 1, lt.NAT)
    assert lt.is_ghost_sort(lt.INF, lt.INF, lt.SUPER)  # self-ghost
    assert not lt.is_ghost_sort(1, 1, lt.NAT)
    assert lt.is_ghost_sort(1, 1, lt.UNIT)  # 1 is infinite under unit
    assert lt.is_ghost_sort(4, 4, T4)  # the cap is infinite


def test_truncate_layer():
    assert lt.truncate_layer(5, 2) == 2
    assert lt.truncate_layer(1, 2) == 1
    assert lt.truncate_layer(lt.INF, 3) == 3


@pytest.mark.parametrize("sort", ALL_SORTS)
def test_layer_semiring_laws(sort):
    rng = random.Random(1234)
    for _ in range(300):
        k, l, m = (rand_layer(rng, sort) for _ in range(3))
        assert lt.layer_add(k, l, sort) == lt.layer_add(l, k, sort)
        assert lt.layer_mul(k, l, sort) == lt.layer_mul(l, k, sort)
        assert lt.layer_add(lt.layer_add(k, l, sort), m, sort) == lt.layer_add(
            k, lt.layer_add(l, m, sort), sort
        )
        assert lt.layer_mul(lt.layer_mul(k, l, sort), m, sort) == lt.layer_mul(
            k, lt.layer_mul(l, m, sort), sort
        )
        assert lt.layer_mul(k, lt.layer_add(l, m, sort), sort) == lt.layer_add(
            lt.layer_mul(k, l, sort), lt.layer_mul(k, m, sort), sort
        )


def test_truncation_is_a_homomorphism():
    rng = random.Random(99)
    q = 4
    tr = lt.truncated(q)
    for _ in range(500):
        k, l = F(rng.randint(1, 12)), F(rng.randint(1, 12))
        tk, tl = lt.truncate_layer(k, q), lt.truncate_layer(l, q)
        assert lt.truncate_layer(k + l, q) == lt.layer_add(tk, tl, tr)
        assert lt.truncate_layer(k * l, q) == lt.layer_mul(tk, tl, tr)


@pytest.mark.parametrize("sort", [lt.NAT, lt.POSQ, lt.truncated(3)])
def test_monotonicity(sort):
    rng = random.Random(7)
    for _ in range(300):
        k, l, m = (rand_layer(rng, sort) for _ in range(3))
        if lt.layer_cmp(k, l) > 0:
            k, l = l, k
        assert lt.layer_cmp(lt.layer_add(k, m, sort), lt.layer_add(l, m, sort)) <= 0
        assert lt.layer_cmp(lt.layer_mul(k, m, sort), lt.layer_mul(l, m, sort)) <= 0


def test_nmul_ndiv_roundtrip():
    rng = random.Random(3)
    for sort in [lt.NAT, lt.POSQ, lt.RAT, lt.truncated(4)]:
        for _ in range(200):
            l = rand_layer(rng, sort)
            n = rng.randint(1, 5)
            product = lt.layer_nmul(n, l, sort)
            try:
                half = lt.layer_ndiv(n, product, sort)
            except lt.LayerNotDivisible:
                continue
            assert lt.layer_nmul(n, half, sort) == product
    with pytest.raises(lt.LayerNotDivisible):
        lt.layer_ndiv(3, F(1), lt.NAT)


def test_parse_format_sort():
    for text in ["unit", "super", "trunc:5", "nat", "posq", "q"]:
        assert str(lt.parse_sort(text)) == text
    with pytest.raises(lt.InvalidLayer):
        lt.parse_sort("bogus")
