from __future__ import annotations

import random

import pytest

from seqmatsym.modring import (
    EvenModulusError,
    Modulus,
    ModulusError,
    ModulusMismatchError,
    Residue,
    gcd,
    is_unit,
    mul,
    power,
    reduce,
)


def test_modulus():
    assert Modulus(2).m == 2
    assert Modulus(17).is_odd
    assert not Modulus(10).is_odd

    with pytest.raises(ModulusError):
        Modulus(1)
    with pytest.raises(ModulusError):
        Modulus(0)
    with pytest.raises(TypeError):
        Modulus(3.0)

    with pytest.raises(EvenModulusError, match="modulus even"):
        Modulus(10).require_odd()
    Modulus(9).require_odd()


def test_reduce():
    assert reduce(17, 17).value == 0
    assert reduce(-1, 17).value == 16
    assert reduce(37, 17).value == 3
    assert reduce(-37, 17).value == 14
    assert reduce(5, Modulus(7)) == Residue(5, Modulus(7))

    for x in range(-50, 50):
        for k in range(-5, 6):
            assert reduce(x + k * 17, 17) == reduce(x, 17)


def test_residue_is_canonical():
    with pytest.raises(ValueError):
        Residue(17, Modulus(17))
    with pytest.raises(ValueError):
        Residue(-1, Modulus(17))


def test_mul():
    assert mul(reduce(4, 17), reduce(13, 17)).value == 1
    assert mul(reduce(0, 17), reduce(9, 17)).value == 0
    assert mul(reduce(16, 17), reduce(16, 17)).value == 1

    # no overflow near 2**31
    m = 46340**2 + 1
    a = reduce(m - 1, m)
    assert mul(a, a).value == 1

    with pytest.raises(ModulusMismatchError):
        mul(reduce(1, 17), reduce(1, 19))


def test_ring_laws():
    rng = random.Random(4)
    for m in (2, 5, 17, 65, 1001):
        for _ in range(50):
            a, b, c = (reduce(rng.randrange(-(10**6), 10**6), m) for _ in range(3))
            assert mul(a, mul(b, c)) == mul(mul(a, b), c)
            assert mul(a, b) == mul(b, a)
            assert mul(a, reduce(1, m)) == a


def test_operators():
    a = reduce(3, 17)
    assert (a * 6).value == 1
    assert (6 * a).value == 1
    assert (-a).value == 14
    assert (a - 5).value == 15
    assert (a + reduce(14, 17)).value == 0
    assert (a**8).value == 16

    with pytest.raises(ModulusMismatchError):
        a + reduce(1, 19)


def test_gcd():
    assert gcd(5, 65) == 5
    assert gcd(1, 65) == 1
    assert gcd(36, 65) == 1
    assert gcd(7, 0) == 7
    assert gcd(0, 7) == 7

    with pytest.raises(ValueError):
        gcd(0, 0)
    with pytest.raises(ValueError):
        gcd(-3, 6)


def test_power():
    assert power(reduce(3, 17), 8).value == 16
    assert power(reduce(2, 17), 8).value == 1
    assert power(reduce(0, 17), 0).value == 1
    assert power(reduce(9, 17), 1).value == 9

    with pytest.raises(ValueError):
        power(reduce(3, 17), -1)

    rng = random.Random(7)
    for m in (5, 17, 65, 97, 10001):
        for _ in range(20):
            a = reduce(rng.randrange(m), m)
            e1, e2 = rng.randrange(200), rng.randrange(200)
            assert power(a, e1 + e2) == mul(power(a, e1), power(a, e2))
            assert power(a, e1).value == pow(a.value, e1, m)


def test_is_unit():
    assert is_unit(36, 65)
    assert not is_unit(13, 65)
    assert not is_unit(0, 17)
    assert is_unit(-1, 17)
