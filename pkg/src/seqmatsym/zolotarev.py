"""Multiplication permutations of :math:`\\mathbb{Z}/m\\mathbb{Z}` and their signature.

For a unit ``a`` modulo an odd ``m``, Zolotarev's lemma identifies the Jacobi
symbol :math:`(a/m)` with the signature of :math:`x \\mapsto ax`. For
:math:`m = n^2 + 1` and even ``n``, multiplication by ``n`` rotates
:math:`Q_n`, so it splits into the fixed point ``0`` and :math:`n^2/4`
four-cycles, which gives :math:`(n/m) = (-1)^{n^2/4}`.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from seqmatsym.modring import EvenModulusError, ModulusError, NotCoprimeError, is_unit
from seqmatsym.multfunc import jacobi
from seqmatsym.seqmatrix import require_even

log = logging.getLogger(__name__)


class Permutation:
    """Bijection of ``{0, ..., m - 1}`` stored as its image array.

    Products read left to right, like cycle notation: ``(p * q)(x) = q(p(x))``.
    """

    __slots__ = ("_image",)

    def __init__(self, image: ArrayLike) -> None:
        arr = np.array(image, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            msg = "a permutation needs a non-empty one-dimensional image"
            raise ValueError(msg)
        if not np.array_equal(np.sort(arr), np.arange(arr.size)):
            msg = f"image is not a bijection of {{0, ..., {arr.size - 1}}}"
            raise ValueError(msg)
        arr.flags.writeable = False
        self._image = arr

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls(np.arange(m))

    @property
    def m(self) -> int:
        return self._image.size

    @property
    def image(self) -> NDArray[np.int64]:
        return self._image

    def __call__(self, x: int) -> int:
        return int(self._image[x])

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.m != self.m:
            msg = f"cannot compose permutations of {self.m} and {other.m} points"
            raise ValueError(msg)
        return Permutation(other._image[self._image])

    def inverse(self) -> Permutation:
        inv = np.empty_like(self._image)
        inv[self._image] = np.arange(self.m)
        return Permutation(inv)

    def __pow__(self, k: int) -> Permutation:
        result = np.arange(self.m)
        base = self._image if k >= 0 else self.inverse()._image
        for _ in range(abs(k)):
            result = base[result]
        return Permutation(result)

    def cycle_type(self) -> list[int]:
        """Sorted cycle lengths, fixed points included."""
        return sorted(cycles(self).lengths)

    def order(self) -> int:
        return math.lcm(*cycles(self).lengths)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return np.array_equal(self._image, other._image)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Permutation({self._image.tolist()})"


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles, each starting at its minimum, sorted by that minimum."""

    cycles: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def counts(self) -> dict[int, int]:
        """Number of cycles per length, ordered by length."""
        return dict(sorted(Counter(self.lengths).items()))

    def __len__(self) -> int:
        return len(self.cycles)

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


def mult_perm(a: int, m: int) -> Permutation:
    """The permutation :math:`x \\mapsto ax \\bmod m`; ``a`` must be a unit."""
    if m < 2:
        msg = f"modulus must be at least 2, got {m}"
        raise ValueError(msg)
    if not is_unit(a, m):
        msg = f"gcd({a}, {m}) > 1, multiplication by {a} is not a bijection"
        raise NotCoprimeError(msg)
    return Permutation(np.arange(m, dtype=np.int64) * (a % m) % m)


def cycles(p: Permutation) -> CycleDecomposition:
    """Canonical disjoint cycle decomposition of ``p``.

    Scanning starting points in increasing order makes every cycle start at its
    minimum and yields the cycles sorted by minimum.
    """
    image = p.image.tolist()
    seen = bytearray(p.m)
    out = []
    for start in range(p.m):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = 1
            cycle.append(x)
            x = image[x]
        out.append(tuple(cycle))
    return CycleDecomposition(tuple(out))


def _count_cycles(p: Permutation) -> int:
    image = p.image.tolist()
    seen = bytearray(p.m)
    count = 0
    for start in range(p.m):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = 1
            x = image[x]
    return count


def signature(p: Permutation) -> int:
    """Signature :math:`(-1)^{m - c}` where ``c`` counts cycles (fixed points included)."""
    return -1 if (p.m - _count_cycles(p)) % 2 else 1


def signature_by_inversions(p: Permutation) -> int:
    """Signature from the parity of the number of inversions.

    Quadratic in ``m``; this is the independent cross-check for :func:`signature`.
    """
    image = p.image
    inversions = int(np.count_nonzero(np.triu(image[:, None] > image[None, :], k=1)))
    return -1 if inversions % 2 else 1


def _require_odd_modulus(m: int) -> None:
    if m % 2 == 0:
        msg = f"modulus even: m = {m}, Zolotarev's lemma needs an odd m >= 3"
        raise EvenModulusError(msg)
    if m < 3:
        msg = f"Zolotarev's lemma needs an odd m >= 3, got {m}"
        raise ModulusError(msg)


def check_zolotarev(a: int, m: int) -> bool:
    """Check :math:`(a/m) = \\operatorname{sgn}(x \\mapsto ax)`."""
    _require_odd_modulus(m)
    if not is_unit(a, m):
        msg = f"gcd({a}, {m}) > 1, the Zolotarev identity needs a unit"
        raise NotCoprimeError(msg)
    return jacobi(a, m) == signature(mult_perm(a, m))


def check_zolotarev_range(m: int) -> tuple[int, list[int]]:
    """Check the Zolotarev identity for every unit modulo ``m``.

    Returns the number of units checked and the failing ones.
    """
    _require_odd_modulus(m)
    units = [a for a in range(1, m) if is_unit(a, m)]
    failures = [a for a in units if not check_zolotarev(a, m)]
    return len(units), failures


def check_cycle_structure(n: int) -> bool:
    """Check that :math:`f(a) = na` on :math:`\\mathbb{Z}/(n^2+1)\\mathbb{Z}` is ``(0)`` times :math:`n^2/4` four-cycles.

    Also checks :math:`f^4(a) = a` and :math:`f^k(a) \\ne a` for :math:`0 < k < 4`
    on every non-zero ``a``.
    """
    require_even(n)
    m = n * n + 1
    f = mult_perm(n, m)

    decomposition = cycles(f)
    if decomposition.cycles[0] != (0,) or decomposition.counts() != {1: 1, 4: n * n // 4}:
        log.debug("n = %d: unexpected cycle type %s", n, decomposition.counts())
        return False

    a = np.arange(1, m)
    image = f.image
    f1 = image[a]
    f2 = image[f1]
    f3 = image[f2]
    f4 = image[f3]
    return bool(np.array_equal(f4, a) and np.all((f1 != a) & (f2 != a) & (f3 != a)))


def check_lemma(n: int) -> bool:
    """Check :math:`(n/(n^2+1)) = (-1)^{n^2/4}` for even ``n``.

    Also checks the parity step behind the rotation sign: :math:`n^2/4` is odd
    exactly when :math:`n \\equiv 2 \\bmod 4`.
    """
    require_even(n)
    quarter = n * n // 4
    expected = -1 if quarter % 2 else 1
    parity_ok = (quarter % 2 == 1) == (n % 4 == 2)
    return parity_ok and jacobi(n, n * n + 1) == expected
