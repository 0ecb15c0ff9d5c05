"""Completely multiplicative sign maps on :math:`\\mathbb{Z}/m\\mathbb{Z}`.

The central map is the Jacobi symbol :math:`(a/m)`, computed with the binary
reciprocity algorithm (no factorization of ``m``). Two independent oracles
(Euler's criterion for primes and brute-force enumeration of squares) exist to
cross-check it.

A :class:`MultiplicativeMap` is any function :math:`\\varphi:\\mathbb{Z}/m\\mathbb{Z}
\\to \\{-1, 0, 1\\}` with :math:`\\varphi(ab) = \\varphi(a)\\varphi(b)`. It acts on
matrices entrywise, :math:`\\varphi(A) = (\\varphi(a_{i,j}))`, producing a
:class:`SignMatrix`.
"""

from __future__ import annotations

import logging
import math
from abc import ABC, abstractmethod
from collections.abc import Callable
from functools import cached_property

import numpy as np
from numpy.typing import ArrayLike, NDArray

from seqmatsym.modring import (
    EvenModulusError,
    Modulus,
    ModulusError,
    ModulusMismatchError,
    Residue,
    as_modulus,
    gcd,
    power,
    reduce,
)
from seqmatsym.seqmatrix import (
    ELEMENTS,
    DihedralElement,
    ResidueMatrix,
    SquareMatrix,
    apply,
    require_even,
    sequential,
)

log = logging.getLogger(__name__)

SIGN_VALUES = (-1, 0, 1)


class SignMatrix(SquareMatrix):
    """Square matrix with entries in :math:`\\{-1, 0, +1\\}`."""

    _dtype = np.int8

    __slots__ = ()

    def __init__(self, entries: ArrayLike) -> None:
        # checked before the int8 cast, which wraps 255 to -1
        raw = np.asarray(entries)
        if not np.isin(raw, SIGN_VALUES).all():
            msg = "sign matrix entries must be -1, 0 or +1"
            raise ValueError(msg)
        super().__init__(raw)

    def __neg__(self) -> SignMatrix:
        return SignMatrix(-self.entries)

    def scaled(self, s: int) -> SignMatrix:
        """The matrix multiplied by the sign ``s``."""
        if s not in SIGN_VALUES:
            msg = f"{s} is not a sign value"
            raise ValueError(msg)
        return SignMatrix(self.entries * np.int8(s))


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol :math:`(a/m)` for odd ``m >= 3``.

    Factors of two are stripped with the supplementary law (:math:`(2/m) = 1`
    iff :math:`m \\equiv \\pm 1 \\bmod 8`) and the arguments are swapped with
    quadratic reciprocity (the sign flips iff both are :math:`\\equiv 3 \\bmod 4`).
    The result is ``0`` iff :math:`\\gcd(a, m) > 1`.

    Examples
    --------
    >>> jacobi(3, 17)
    -1
    >>> jacobi(5, 65)
    0
    """
    if m < 3:
        msg = f"the Jacobi symbol needs m >= 3, got {m}"
        raise ModulusError(msg)
    if m % 2 == 0:
        msg = f"modulus even: m = {m}, the Jacobi symbol needs an odd modulus"
        raise EvenModulusError(msg)

    sign = 1
    a %= m
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                sign = -sign
        if a % 4 == 3 and m % 4 == 3:
            sign = -sign
        a, m = m % a, a
    return sign if m == 1 else 0


def is_prime(p: int) -> bool:
    """Trial division, fine for desk-scale ``p``."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % d != 0 for d in range(3, math.isqrt(p) + 1, 2))


def odd_primes(limit: int) -> list[int]:
    """All odd primes ``p <= limit``."""
    return [p for p in range(3, limit + 1, 2) if is_prime(p)]


def legendre_euler(a: int, p: int) -> int:
    """Legendre symbol :math:`(a/p)` by Euler's criterion, :math:`a^{(p-1)/2} \\bmod p`."""
    if p < 3 or p % 2 == 0:
        msg = f"Euler's criterion needs an odd prime, got p = {p}"
        raise ModulusError(msg)
    if not is_prime(p):
        msg = f"p = {p} is not prime"
        raise ModulusError(msg)

    r = power(reduce(a, p), (p - 1) // 2).value
    if r == 0:
        return 0
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    msg = f"Euler's criterion gave {r} for a = {a}, p = {p}"
    raise ArithmeticError(msg)


def qr_bruteforce(a: Residue | int, m: int | Modulus) -> bool:
    """Whether :math:`x^2 \\equiv a \\pmod m` has a solution, by exhaustive search."""
    m = as_modulus(m)
    if isinstance(a, Residue):
        if a.modulus != m:
            msg = f"modulus mismatch: residue mod {a.modulus.m}, m = {m.m}"
            raise ModulusMismatchError(msg)
        a = a.value
    x = np.arange(m.m, dtype=np.int64)
    return bool(np.any(x * x % m.m == a % m.m))


class MultiplicativeMap(ABC):
    """Completely multiplicative map :math:`\\mathbb{Z}/m\\mathbb{Z} \\to \\{-1, 0, 1\\}`."""

    def __init__(self, modulus: int | Modulus) -> None:
        self._modulus = as_modulus(modulus)

    @property
    def modulus(self) -> Modulus:
        return self._modulus

    @property
    def name(self) -> str:
        return type(self).__name__

    @abstractmethod
    def evaluate(self, a: int) -> int:
        """Sign value of the residue class of ``a``."""

    def __call__(self, a: Residue | int) -> int:
        if isinstance(a, Residue):
            if a.modulus != self._modulus:
                msg = f"modulus mismatch: residue mod {a.modulus.m}, map mod {self._modulus.m}"
                raise ModulusMismatchError(msg)
            a = a.value
        return self.evaluate(a % self._modulus.m)

    @cached_property
    def values(self) -> NDArray[np.int8]:
        """The map tabulated on ``0, ..., m - 1``."""
        table = np.fromiter((self.evaluate(a) for a in range(self._modulus.m)), dtype=np.int8)
        table.flags.writeable = False
        return table

    def __repr__(self) -> str:
        return f"{self.name}(m={self._modulus.m})"


class JacobiMap(MultiplicativeMap):
    """:math:`a \\mapsto (a/m)` for odd ``m >= 3``."""

    def __init__(self, modulus: int | Modulus) -> None:
        super().__init__(modulus)
        self._modulus.require_odd()

    def evaluate(self, a: int) -> int:
        return jacobi(a, self._modulus.m)


class LegendreMap(MultiplicativeMap):
    """Legendre symbol modulo an odd prime, evaluated by Euler's criterion."""

    def __init__(self, modulus: int | Modulus) -> None:
        super().__init__(modulus)
        if not is_prime(self._modulus.m) or self._modulus.m == 2:
            msg = f"the Legendre symbol needs an odd prime modulus, got {self._modulus.m}"
            raise ModulusError(msg)

    def evaluate(self, a: int) -> int:
        return legendre_euler(a, self._modulus.m)

    @cached_property
    def values(self) -> NDArray[np.int8]:
        """Euler's criterion evaluated on all residues at once."""
        p = self._modulus.m
        if p >= 2**31:
            return super().values

        # p < 2**31 keeps every product below 2**62
        base = np.arange(p, dtype=np.int64)
        r = np.ones(p, dtype=np.int64)
        e = (p - 1) // 2
        while e > 0:
            if e & 1:
                r = r * base % p
            base = base * base % p
            e >>= 1

        table = np.where(r == p - 1, -1, r).astype(np.int8)
        table.flags.writeable = False
        return table


class UnitIndicatorMap(MultiplicativeMap):
    """``1`` on units, ``0`` on everything sharing a factor with ``m``."""

    def evaluate(self, a: int) -> int:
        return 1 if math.gcd(a, self._modulus.m) == 1 else 0


class FunctionMap(MultiplicativeMap):
    """Wrap a user callable. Multiplicativity is the caller's promise, see :func:`check_multiplicative`."""

    def __init__(self, modulus: int | Modulus, func: Callable[[int], int], name: str | None = None) -> None:
        super().__init__(modulus)
        self._func = func
        self._name = name

    @property
    def name(self) -> str:
        return self._name or getattr(self._func, "__name__", "FunctionMap")

    def evaluate(self, a: int) -> int:
        value = int(self._func(a))
        if value not in SIGN_VALUES:
            msg = f"{self.name}({a}) = {value} is not a sign value"
            raise ValueError(msg)
        return value


def apply_map(phi: MultiplicativeMap, a: ResidueMatrix) -> SignMatrix:
    """Entrywise image :math:`\\varphi(A)`."""
    if phi.modulus != a.modulus:
        msg = f"modulus mismatch: map mod {phi.modulus.m}, matrix mod {a.m}"
        raise ModulusMismatchError(msg)
    return SignMatrix(phi.values[a.entries])


def check_multiplicative(phi: MultiplicativeMap) -> bool:
    """Exhaustively check :math:`\\varphi(ab) = \\varphi(a)\\varphi(b)` on :math:`\\mathbb{Z}/m\\mathbb{Z}`."""
    m = phi.modulus.m
    x = np.arange(m, dtype=np.int64)
    values = phi.values.astype(np.int64)
    lhs = values[np.outer(x, x) % m]
    return bool(np.array_equal(lhs, np.outer(values, values)))


def _sequential_modulus(n: int) -> Modulus:
    return Modulus(n * n + 1)


def check_corollary(phi: MultiplicativeMap, n: int) -> bool:
    """Check :math:`\\varphi(\\rho(Q_n)) = \\varphi(n)\\varphi(Q_n)` and its consequences.

    Also checks, for the same ``phi`` and ``n``:

    - :math:`\\sigma(\\varphi(Q_n)) = \\varphi(\\sigma(Q_n))` for all eight :math:`\\sigma`,
    - :math:`\\varphi(\\rho^2(Q_n)) = \\varphi(-1)\\varphi(Q_n)`,
    - :math:`\\varphi(\\rho^3(Q_n)) = \\varphi(-1)\\varphi(n)\\varphi(Q_n)`.
    """
    if phi.modulus != _sequential_modulus(n):
        msg = f"modulus mismatch: map mod {phi.modulus.m}, Q_{n} mod {n * n + 1}"
        raise ModulusMismatchError(msg)

    q = sequential(n)
    phi_q = apply_map(phi, q)
    phi_n = phi(n)
    phi_minus_one = phi(-1)

    rotated = {
        DihedralElement.RHO: phi_n,
        DihedralElement.RHO2: phi_minus_one,
        DihedralElement.RHO3: phi_minus_one * phi_n,
    }
    for sigma, s in rotated.items():
        if apply_map(phi, apply(sigma, q)) != phi_q.scaled(s):
            log.debug("%s: rotation %s fails for n = %d", phi.name, sigma.value, n)
            return False

    for sigma in ELEMENTS:
        if apply(sigma, phi_q) != apply_map(phi, apply(sigma, q)):
            log.debug("%s: does not commute with %s for n = %d", phi.name, sigma.value, n)
            return False
    return True


def jacobi_theorem_sign(n: int) -> int:
    """Rotation sign of :math:`(Q_n/m)`: ``+1`` if :math:`n \\equiv 0 \\bmod 4`, ``-1`` if :math:`n \\equiv 2`."""
    require_even(n)
    return 1 if n % 4 == 0 else -1


def check_jacobi_theorem(n: int) -> bool:
    """Check :math:`(\\rho(Q_n)/m) = \\pm(Q_n/m)` with the sign of :func:`jacobi_theorem_sign`."""
    s = jacobi_theorem_sign(n)
    phi = JacobiMap(_sequential_modulus(n))
    q = sequential(n)
    return apply_map(phi, apply(DihedralElement.RHO, q)) == apply_map(phi, q).scaled(s)


def check_basic_symmetry(n: int) -> bool:
    """Check :math:`(a/m) = (-a/m)` for all ``a`` and :math:`(-1/m) = 1`, with :math:`m = n^2 + 1`.

    If ``m`` is prime the Jacobi values must also equal the Legendre symbol.
    """
    require_even(n)
    m = n * n + 1
    values = JacobiMap(m).values
    a = np.arange(1, m)
    if not (np.array_equal(values[a], values[m - a]) and jacobi(-1, m) == 1):
        return False
    if is_prime(m) and not np.array_equal(values, LegendreMap(m).values):
        log.debug("n = %d: Jacobi and Legendre symbols modulo the prime %d differ", n, m)
        return False
    return True


def check_centro_symmetry(n: int) -> bool:
    """Check that :math:`(Q_n/m)` is fixed by :math:`\\rho^2`."""
    require_even(n)
    phi_q = apply_map(JacobiMap(_sequential_modulus(n)), sequential(n))
    return apply(DihedralElement.RHO2, phi_q) == phi_q


def check_oracles(p: int) -> list[int]:
    """Compare :func:`jacobi` with both oracles for every ``a`` in ``[0, p)``.

    Returns the values of ``a`` where any of them disagree.
    """
    disagree = []
    for a in range(p):
        j = jacobi(a, p)
        bruteforce = 0 if a == 0 else (1 if qr_bruteforce(a, p) else -1)
        if j != legendre_euler(a, p) or j != bruteforce:
            disagree.append(a)
    return disagree


def check_factored(a: int, p: int, q: int) -> bool:
    """Check :math:`(a/pq) = (a/p)(a/q)` for odd primes ``p``, ``q``."""
    return jacobi(a, p * q) == legendre_euler(a, p) * legendre_euler(a, q)


def check_zero_locus(m: int) -> bool:
    """Check that :math:`(a/m) = 0` exactly when :math:`\\gcd(a, m) > 1`."""
    values = JacobiMap(m).values
    return all((values[a] == 0) == (gcd(a, m) > 1) for a in range(m))
