"""Exact modular arithmetic over :math:`\\mathbb{Z}/m\\mathbb{Z}`.

Residues are always stored by their canonical representative in ``[0, m)``, so
equality is plain value comparison. Mixing residues of different moduli is an
error, never a silent coercion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class ModulusError(ValueError):
    """The modulus is outside the domain of an operation."""


class EvenModulusError(ModulusError):
    """An operation that needs an odd modulus (the Jacobi symbol) got an even one."""


class ModulusMismatchError(ArithmeticError):
    """Two operands live in different residue rings."""


class NotCoprimeError(ArithmeticError):
    """An element that must be a unit shares a factor with the modulus."""


@dataclass(frozen=True, slots=True)
class Modulus:
    """The modulus ``m >= 2`` of a residue ring. Both parities are allowed."""

    m: int

    def __post_init__(self) -> None:
        if isinstance(self.m, bool) or not isinstance(self.m, int):
            msg = f"modulus must be an integer, got {self.m!r}"
            raise TypeError(msg)
        if self.m < 2:
            msg = f"modulus must be at least 2, got {self.m}"
            raise ModulusError(msg)

    def __int__(self) -> int:
        return self.m

    @property
    def is_odd(self) -> bool:
        return self.m % 2 == 1

    def require_odd(self) -> None:
        """Raise :class:`EvenModulusError` unless the modulus is odd and at least 3."""
        if not self.is_odd:
            msg = f"modulus even: m = {self.m}, the Jacobi symbol needs an odd modulus"
            raise EvenModulusError(msg)

    def residue(self, x: int) -> Residue:
        return reduce(x, self)


def as_modulus(m: int | Modulus) -> Modulus:
    return m if isinstance(m, Modulus) else Modulus(m)


@dataclass(frozen=True, slots=True)
class Residue:
    """Canonical element of :math:`\\mathbb{Z}/m\\mathbb{Z}`.

    Use :func:`reduce` (or :meth:`Modulus.residue`) to build one from an
    arbitrary integer.
    """

    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.m:
            msg = f"{self.value} is not a canonical residue modulo {self.modulus.m}"
            raise ValueError(msg)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.modulus.m})"

    def _coerce(self, other: Residue | int) -> Residue:
        if isinstance(other, Residue):
            _check_same_modulus(self.modulus, other.modulus)
            return other
        if isinstance(other, int):
            return reduce(other, self.modulus)
        return NotImplemented

    def __add__(self, other: Residue | int) -> Residue:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return reduce(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Residue | int) -> Residue:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return reduce(self.value - other.value, self.modulus)

    def __neg__(self) -> Residue:
        return reduce(-self.value, self.modulus)

    def __mul__(self, other: Residue | int) -> Residue:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Residue:
        return power(self, e)


def _check_same_modulus(a: Modulus, b: Modulus) -> None:
    if a != b:
        msg = f"modulus mismatch: {a.m} != {b.m}"
        raise ModulusMismatchError(msg)


def reduce(x: int, m: int | Modulus) -> Residue:
    """Return the unique ``r`` with ``0 <= r < m`` and ``r ≡ x (mod m)``.

    Negative ``x`` is allowed.
    """
    m = as_modulus(m)
    return Residue(x % m.m, m)


def mul(a: Residue, b: Residue) -> Residue:
    """Product of two residues of the same modulus."""
    _check_same_modulus(a.modulus, b.modulus)
    return Residue(a.value * b.value % a.modulus.m, a.modulus)


def gcd(x: int, y: int) -> int:
    """Greatest common divisor of two non-negative integers, not both zero."""
    if x < 0 or y < 0:
        msg = f"gcd arguments must be non-negative, got ({x}, {y})"
        raise ValueError(msg)
    if x == 0 and y == 0:
        msg = "gcd(0, 0) is undefined"
        raise ValueError(msg)
    return math.gcd(x, y)


def power(a: Residue, e: int) -> Residue:
    """Compute ``a**e`` by square-and-multiply.

    ``power(a, 0)`` is ``1`` for every ``a``, including zero (empty product).
    """
    if e < 0:
        msg = f"exponent must be non-negative, got {e}"
        raise ValueError(msg)

    m = a.modulus.m
    result = 1
    base = a.value
    while e > 0:
        if e & 1:
            result = result * base % m
        base = base * base % m
        e >>= 1
    return Residue(result, a.modulus)


def is_unit(x: int, m: int | Modulus) -> bool:
    m = as_modulus(m)
    return gcd(x % m.m, m.m) == 1
