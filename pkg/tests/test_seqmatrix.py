from __future__ import annotations

import itertools

import numpy as np
import pytest

from seqmatsym.modring import EvenModulusError, ModulusMismatchError, reduce
from seqmatsym.seqmatrix import (
    ELEMENTS,
    DihedralElement,
    ResidueMatrix,
    apply,
    check_theorem1,
    check_value_table,
    compose,
    exchange_matrix,
    expected_value,
    induced_permutation,
    inverse,
    is_centro_symmetric,
    is_hankel_symmetric,
    is_symmetric,
    random_matrix,
    realize_by_products,
    require_even,
    scalar_mul,
    sequential,
    stabilizer,
    transpose,
)
from seqmatsym.zolotarev import Permutation, mult_perm

E = DihedralElement


def test_sequential():
    assert sequential(1).rows() == [[1]]
    assert sequential(1).m == 2
    assert sequential(2).rows() == [[1, 2], [3, 4]]
    assert sequential(2).m == 5
    assert sequential(3).rows() == [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert sequential(3).m == 10

    q = sequential(4)
    assert q.entry(1, 1).value == 1
    assert q.entry(4, 4).value == 16
    for i, j in itertools.product(range(1, 5), repeat=2):
        assert q.entry(i, j).value == j + (i - 1) * 4

    q = sequential(30)
    assert 0 not in q.entries
    assert sorted(q.entries.ravel().tolist()) == list(range(1, 901))

    with pytest.raises(ValueError):
        sequential(0)
    with pytest.raises(IndexError):
        q.entry(0, 1)


def test_matrix_is_immutable():
    q = sequential(3)
    with pytest.raises(ValueError):
        q.entries[0, 0] = 5


def test_residue_matrix_reduces():
    a = ResidueMatrix([[-1, 5], [17, 3]], 5)
    assert a.rows() == [[4, 0], [2, 3]]
    assert a != ResidueMatrix([[4, 0], [2, 3]], 7)
    assert a == ResidueMatrix([[4, 0], [2, 3]], 5)

    with pytest.raises(ValueError):
        ResidueMatrix([[1, 2, 3]], 5)


def test_from_name():
    assert E.from_name("tau_rho2") is E.TAU_RHO2
    assert E.from_name("TAU-RHO") is E.TAU_RHO
    with pytest.raises(ValueError, match="unknown dihedral element"):
        E.from_name("rho4")


def test_group_relations():
    assert len(ELEMENTS) == 8

    def power(sigma, k):
        out = E.IDENTITY
        for _ in range(k):
            out = compose(sigma, out)
        return out

    assert power(E.RHO, 4) is E.IDENTITY
    assert power(E.RHO, 2) is E.RHO2
    assert power(E.TAU, 2) is E.IDENTITY
    assert compose(E.TAU, compose(E.RHO, E.TAU)) is E.RHO3
    assert compose(E.TAU, E.RHO) is E.TAU_RHO
    assert compose(E.TAU, E.RHO3) is E.TAU_RHO3

    # closure and inverses
    for sigma, pi in itertools.product(ELEMENTS, repeat=2):
        assert compose(sigma, pi) in ELEMENTS
    for sigma in ELEMENTS:
        assert compose(sigma, inverse(sigma)) is E.IDENTITY
        assert compose(inverse(sigma), sigma) is E.IDENTITY


def test_generators():
    a = ResidueMatrix([[1, 2], [3, 4]], 5)
    assert apply(E.TAU, a).rows() == [[1, 3], [2, 4]]
    assert apply(E.IDENTITY, a) == a

    # rho(A)[i, j] = a[j, n - i + 1] in 1-indexed positions
    q = sequential(4)
    rotated = apply(E.RHO, q)
    assert rotated.entry(1, 1).value == 4
    for i, j in itertools.product(range(1, 5), repeat=2):
        assert rotated.entry(i, j) == q.entry(j, 4 - i + 1)


def test_action_is_a_group_action():
    rng = np.random.default_rng(1234)
    for n in (1, 2, 3, 5, 6):
        a = random_matrix(n, 101, rng)
        assert apply(E.RHO2, a) == apply(E.RHO, apply(E.RHO, a))
        for sigma, pi in itertools.product(ELEMENTS, repeat=2):
            assert apply(compose(sigma, pi), a) == apply(sigma, apply(pi, a))
        for sigma in ELEMENTS:
            assert apply(inverse(sigma), apply(sigma, a)) == a


def test_realize_by_products():
    j = exchange_matrix(3)
    assert j.tolist() == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]

    rng = np.random.default_rng(42)
    for n in (1, 2, 4, 5, 7):
        a = random_matrix(n, 97, rng)
        jj = exchange_matrix(n)
        assert realize_by_products(E.IDENTITY, a) == a
        assert realize_by_products(E.RHO2, a) == a.replace(jj @ a.entries @ jj)
        for sigma in ELEMENTS:
            assert realize_by_products(sigma, a) == apply(sigma, a)

    q = sequential(4)
    assert realize_by_products(E.RHO, q) == apply(E.RHO, q)


def test_scalar_mul():
    q = sequential(4)
    assert scalar_mul(4, q).rows()[0] == [4, 8, 12, 16]
    assert scalar_mul(reduce(1, 17), q) == q
    assert scalar_mul(16, scalar_mul(16, q)) == q
    assert scalar_mul(-1, q) == scalar_mul(16, q)

    with pytest.raises(ModulusMismatchError):
        scalar_mul(reduce(2, 19), q)

    # multiplication by a scalar commutes with the action
    rng = np.random.default_rng(5)
    a = random_matrix(5, 26, rng)
    for sigma in ELEMENTS:
        for c in (0, 3, 5, 25):
            assert apply(sigma, scalar_mul(c, a)) == scalar_mul(c, apply(sigma, a))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 17, 100])
def test_theorem1(n):
    assert check_theorem1(n)
    q = sequential(n)
    assert apply(E.RHO2, q) == scalar_mul(-1, q)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 9, 32])
def test_value_table(n):
    assert check_value_table(n)


def test_value_table_rows():
    q = sequential(6)
    assert apply(E.RHO2, q) == scalar_mul(q.m - 1, q)

    q = sequential(5)
    assert apply(E.TAU_RHO3, q) == scalar_mul(reduce(-5, q.m), transpose(q))
    assert expected_value(E.TAU_RHO, 5) == scalar_mul(5, transpose(q))


def test_induced_permutation():
    assert induced_permutation(E.IDENTITY, 4) == Permutation.identity(17)
    assert induced_permutation(E.RHO, 4)(1) == 4
    assert induced_permutation(E.RHO, 4)(0) == 0

    for n in (1, 2, 3, 4, 6, 8, 10):
        assert induced_permutation(E.RHO, n) == mult_perm(n, n * n + 1)


def test_induced_permutation_is_a_homomorphism():
    # permutation products read left to right, see Permutation
    for n in (2, 3, 4):
        for sigma, pi in itertools.product(ELEMENTS, repeat=2):
            lhs = induced_permutation(compose(sigma, pi), n)
            assert lhs == induced_permutation(sigma, n) * induced_permutation(pi, n)


def test_symmetry_predicates():
    a = ResidueMatrix([[1, 2], [2, 1]], 5)
    assert is_symmetric(a)
    assert is_centro_symmetric(a)
    assert is_hankel_symmetric(a)
    assert set(stabilizer(a)) == {E.IDENTITY, E.RHO2, E.TAU, E.TAU_RHO2}

    q = sequential(3)
    assert not is_symmetric(q)
    assert not is_centro_symmetric(q)
    assert stabilizer(q) == [E.IDENTITY]

    # every element acts trivially on 1x1 matrices
    assert stabilizer(sequential(1)) == list(ELEMENTS)


def test_require_even():
    require_even(2)
    require_even(100)
    for n in (0, 1, 3, 7):
        with pytest.raises(EvenModulusError, match="modulus even"):
            require_even(n)
