from __future__ import annotations

import numpy as np
import pytest

from seqmatsym.modring import EvenModulusError, ModulusError, NotCoprimeError
from seqmatsym.multfunc import jacobi
from seqmatsym.zolotarev import (
    Permutation,
    check_cycle_structure,
    check_lemma,
    check_zolotarev,
    check_zolotarev_range,
    cycles,
    mult_perm,
    signature,
    signature_by_inversions,
)


def test_permutation():
    p = Permutation([2, 0, 1])
    assert p(0) == 2
    assert p.m == 3
    assert p.inverse() == Permutation([1, 2, 0])
    assert p * p.inverse() == Permutation.identity(3)
    assert p**3 == Permutation.identity(3)
    assert p**-1 == p.inverse()
    assert p.order() == 3

    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([])
    with pytest.raises(ValueError):
        p * Permutation.identity(4)


def test_product_reads_left_to_right():
    p = Permutation([1, 0, 2])
    q = Permutation([0, 2, 1])
    assert (p * q)(0) == q(p(0)) == 2
    for x in range(3):
        assert (p * q)(x) == q(p(x))


def test_mult_perm():
    assert mult_perm(1, 17) == Permutation.identity(17)

    f = mult_perm(4, 17)
    assert [f(1), f(4), f(16), f(13)] == [4, 16, 13, 1]

    for a, b in ((2, 5), (3, 7), (4, 13)):
        assert mult_perm(a, 17) * mult_perm(b, 17) == mult_perm(a * b % 17, 17)

    with pytest.raises(NotCoprimeError):
        mult_perm(3, 9)
    with pytest.raises(NotCoprimeError):
        mult_perm(0, 5)
    with pytest.raises(NotCoprimeError):
        mult_perm(-13, 65)

    # units are taken modulo m
    assert mult_perm(-1, 9) == mult_perm(8, 9)
    assert mult_perm(11, 9) == mult_perm(2, 9)


def test_cycles():
    assert cycles(Permutation.identity(5)).lengths == [1] * 5

    decomposition = cycles(mult_perm(2, 9))
    assert str(decomposition) == "(0)(1 2 4 8 7 5)(3 6)"
    assert decomposition.lengths == [1, 6, 2]
    assert decomposition.counts() == {1: 1, 2: 1, 6: 1}
    assert len(decomposition) == 3
    assert mult_perm(2, 9).cycle_type() == [1, 2, 6]
    assert mult_perm(2, 9).order() == 6

    decomposition = cycles(mult_perm(4, 17))
    assert decomposition.counts() == {1: 1, 4: 4}
    assert decomposition.cycles[1] == (1, 4, 16, 13)

    # every cycle starts at its minimum, cycles sorted by minimum
    rng = np.random.default_rng(11)
    p = Permutation(rng.permutation(40))
    decomposition = cycles(p)
    assert all(c[0] == min(c) for c in decomposition.cycles)
    assert [c[0] for c in decomposition.cycles] == sorted(c[0] for c in decomposition.cycles)
    assert sorted(x for c in decomposition.cycles for x in c) == list(range(40))


def test_signature():
    assert signature(Permutation.identity(5)) == 1
    assert signature(mult_perm(2, 9)) == 1
    assert signature(mult_perm(4, 17)) == 1
    assert signature(mult_perm(3, 17)) == -1
    assert signature(Permutation([1, 0])) == -1


def test_signature_oracle_and_homomorphism():
    rng = np.random.default_rng(99)
    for m in range(1, 51):
        for _ in range(5):
            p = Permutation(rng.permutation(m))
            q = Permutation(rng.permutation(m))
            assert signature(p) == signature_by_inversions(p)
            assert signature(p * q) == signature(p) * signature(q)


def test_zolotarev():
    assert check_zolotarev(2, 9)
    assert check_zolotarev(1, 15)
    assert check_zolotarev(3, 17)
    assert jacobi(3, 17) == signature(mult_perm(3, 17)) == -1
    assert check_zolotarev(-1, 7)

    with pytest.raises(EvenModulusError, match="modulus even"):
        check_zolotarev(3, 8)
    with pytest.raises(NotCoprimeError):
        check_zolotarev(3, 9)
    with pytest.raises(ModulusError):
        check_zolotarev(1, 1)


def test_zolotarev_range():
    assert check_zolotarev_range(9) == (6, [])
    assert check_zolotarev_range(65) == (48, [])
    for m in range(3, 102, 2):
        units, failing = check_zolotarev_range(m)
        assert failing == []
        assert units == sum(1 for a in range(1, m) if np.gcd(a, m) == 1)


def test_cycle_structure():
    assert check_cycle_structure(2)
    assert str(cycles(mult_perm(2, 5))) == "(0)(1 2 4 3)"
    assert check_cycle_structure(4)
    for n in range(2, 41, 2):
        assert check_cycle_structure(n)

    with pytest.raises(EvenModulusError, match="modulus even"):
        check_cycle_structure(3)


def test_lemma():
    assert check_lemma(2)
    assert jacobi(2, 5) == -1
    assert check_lemma(4)
    assert jacobi(4, 17) == 1
    assert check_lemma(6)
    assert jacobi(6, 37) == -1
    assert check_lemma(8)
    assert jacobi(8, 65) == 1
    for n in range(2, 101, 2):
        assert check_lemma(n)

    with pytest.raises(EvenModulusError):
        check_lemma(7)
