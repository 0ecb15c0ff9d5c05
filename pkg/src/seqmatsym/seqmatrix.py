"""Sequential matrices and the action of the dihedral group :math:`D_4`.

The :math:`n \\times n` sequential matrix :math:`Q_n` has entries
:math:`a_{i,j} = j + (i-1)n` in :math:`\\mathbb{Z}/(n^2+1)\\mathbb{Z}`.

The generators act on a square matrix :math:`A = (a_{i,j})` by

.. math::

    \\tau(A) = (a_{j,i}), \\qquad \\rho(A) = (a_{j,n-i+1}),

and the remaining six elements by composition, with :math:`(\\sigma\\pi)(A) =
\\sigma(\\pi(A))`. With this convention the elements are realized by the
exchange matrix :math:`J` as follows:

=============  ===================
element        product realization
=============  ===================
``identity``   :math:`A`
``rho``        :math:`JA^T`
``rho2``       :math:`JAJ`
``rho3``       :math:`A^TJ`
``tau``        :math:`A^T`
``tau_rho``    :math:`AJ`
``tau_rho2``   :math:`JA^TJ`
``tau_rho3``   :math:`JA`
=============  ===================

Note that :math:`\\rho` here takes the top-right corner to position
:math:`(1, 1)`, i.e. it turns the matrix counter-clockwise when drawn.

Positions are 1-indexed :math:`(i, j)` in the docs and in
:meth:`ResidueMatrix.entry`; storage is a row-major :class:`numpy.ndarray`.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from enum import Enum
from typing import TYPE_CHECKING, Self, TypeVar

import numpy as np
from numpy.typing import ArrayLike, NDArray

from seqmatsym.modring import EvenModulusError, Modulus, ModulusMismatchError, Residue, as_modulus, reduce

if TYPE_CHECKING:
    from seqmatsym.zolotarev import Permutation

log = logging.getLogger(__name__)


class DihedralElement(Enum):
    """The eight elements :math:`\\tau^s\\rho^r` of :math:`D_4`."""

    IDENTITY = "identity"
    RHO = "rho"
    RHO2 = "rho2"
    RHO3 = "rho3"
    TAU = "tau"
    TAU_RHO = "tau_rho"
    TAU_RHO2 = "tau_rho2"
    TAU_RHO3 = "tau_rho3"

    @classmethod
    def from_name(cls, name: str) -> DihedralElement:
        try:
            return cls(name.lower().replace("-", "_"))
        except ValueError:
            valid = ", ".join(e.value for e in cls)
            msg = f"unknown dihedral element {name!r}, must be one of {valid}"
            raise ValueError(msg) from None

    @classmethod
    def from_word(cls, reflections: int, rotations: int) -> DihedralElement:
        """Element :math:`\\tau^s\\rho^r` from the exponents ``s`` and ``r``."""
        return _FROM_WORD[(reflections % 2, rotations % 4)]

    @property
    def reflections(self) -> int:
        """Exponent ``s`` of :math:`\\tau` (0 or 1)."""
        return _WORDS[self][0]

    @property
    def rotations(self) -> int:
        """Exponent ``r`` of :math:`\\rho` (0 to 3)."""
        return _WORDS[self][1]


_WORDS = {
    DihedralElement.IDENTITY: (0, 0),
    DihedralElement.RHO: (0, 1),
    DihedralElement.RHO2: (0, 2),
    DihedralElement.RHO3: (0, 3),
    DihedralElement.TAU: (1, 0),
    DihedralElement.TAU_RHO: (1, 1),
    DihedralElement.TAU_RHO2: (1, 2),
    DihedralElement.TAU_RHO3: (1, 3),
}
_FROM_WORD = {word: element for element, word in _WORDS.items()}

ELEMENTS: tuple[DihedralElement, ...] = tuple(DihedralElement)


def compose(sigma: DihedralElement, pi: DihedralElement) -> DihedralElement:
    """Return :math:`\\sigma\\pi`, the element acting as ``sigma`` after ``pi``.

    Uses :math:`\\rho^r\\tau = \\tau\\rho^{-r}`.
    """
    rotations = -sigma.rotations if pi.reflections else sigma.rotations
    return DihedralElement.from_word(
        sigma.reflections + pi.reflections,
        rotations + pi.rotations,
    )


def inverse(sigma: DihedralElement) -> DihedralElement:
    if sigma.reflections:
        return sigma
    return DihedralElement.from_word(0, -sigma.rotations)


class SquareMatrix:
    """Immutable square grid of integers.

    Subclasses fix the entry type and the meaning of the entries; the dihedral
    action only permutes positions and is shared by all of them.
    """

    _dtype: type = np.int64

    __slots__ = ("_entries",)

    def __init__(self, entries: ArrayLike) -> None:
        arr = np.array(entries, dtype=self._dtype)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            msg = f"expected a non-empty square matrix, got shape {arr.shape}"
            raise ValueError(msg)
        arr.flags.writeable = False
        self._entries = arr

    @property
    def n(self) -> int:
        """Side length."""
        return self._entries.shape[0]

    @property
    def entries(self) -> NDArray:
        """Read-only row-major entry array (0-indexed)."""
        return self._entries

    def rows(self) -> list[list[int]]:
        return self._entries.tolist()

    def replace(self, entries: ArrayLike) -> Self:
        """Matrix of the same kind (and modulus) with new entries."""
        return type(self)(entries)

    def _same_kind(self, other: object) -> bool:
        return type(other) is type(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SquareMatrix) or not self._same_kind(other):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.rows()})"


class ResidueMatrix(SquareMatrix):
    """Square matrix over :math:`\\mathbb{Z}/m\\mathbb{Z}`.

    Entries are reduced to ``[0, m)`` on construction.
    """

    __slots__ = ("_modulus",)

    def __init__(self, entries: ArrayLike, modulus: int | Modulus) -> None:
        self._modulus = as_modulus(modulus)
        super().__init__(np.mod(np.asarray(entries, dtype=np.int64), self._modulus.m))

    @property
    def modulus(self) -> Modulus:
        return self._modulus

    @property
    def m(self) -> int:
        return self._modulus.m

    def entry(self, i: int, j: int) -> Residue:
        """Entry at the 1-indexed position ``(i, j)``."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            msg = f"position ({i}, {j}) outside a {self.n}x{self.n} matrix"
            raise IndexError(msg)
        return Residue(int(self._entries[i - 1, j - 1]), self._modulus)

    def replace(self, entries: ArrayLike) -> ResidueMatrix:
        return ResidueMatrix(entries, self._modulus)

    def _same_kind(self, other: object) -> bool:
        return super()._same_kind(other) and other.modulus == self.modulus

    def __repr__(self) -> str:
        return f"ResidueMatrix({self.rows()}, m={self.m})"


M = TypeVar("M", bound=SquareMatrix)


def sequential(n: int) -> ResidueMatrix:
    """Construct the sequential matrix :math:`Q_n` over :math:`\\mathbb{Z}/(n^2+1)\\mathbb{Z}`.

    Examples
    --------
    >>> sequential(2).rows()
    [[1, 2], [3, 4]]
    """
    if n < 1:
        msg = f"sequential matrices need n >= 1, got {n}"
        raise ValueError(msg)
    return ResidueMatrix(np.arange(1, n * n + 1, dtype=np.int64).reshape(n, n), n * n + 1)


def random_matrix(n: int, m: int | Modulus, rng: np.random.Generator) -> ResidueMatrix:
    """Uniformly random ``n`` x ``n`` matrix over :math:`\\mathbb{Z}/m\\mathbb{Z}`."""
    m = as_modulus(m)
    return ResidueMatrix(rng.integers(0, m.m, size=(n, n)), m)


def exchange_matrix(n: int) -> NDArray[np.int64]:
    """The exchange matrix :math:`J` (ones on the anti-diagonal)."""
    return np.eye(n, dtype=np.int64)[::-1]


def _rho(a: NDArray) -> NDArray:
    n = a.shape[0]
    i, j = np.indices((n, n))
    return a[j, n - 1 - i]


def _tau(a: NDArray) -> NDArray:
    i, j = np.indices(a.shape)
    return a[j, i]


def apply(sigma: DihedralElement, a: M) -> M:
    """Apply ``sigma`` to a square matrix using the index formulas.

    :math:`\\tau^s\\rho^r` is evaluated as ``r`` applications of :math:`\\rho`
    followed by ``s`` applications of :math:`\\tau`.
    """
    arr = a.entries
    for _ in range(sigma.rotations):
        arr = _rho(arr)
    if sigma.reflections:
        arr = _tau(arr)
    return a.replace(arr)


_PRODUCTS: dict[DihedralElement, Callable[[NDArray, NDArray], NDArray]] = {
    DihedralElement.IDENTITY: lambda a, _: a,
    DihedralElement.RHO: lambda a, j: j @ a.T,
    DihedralElement.RHO2: lambda a, j: j @ a @ j,
    DihedralElement.RHO3: lambda a, j: a.T @ j,
    DihedralElement.TAU: lambda a, _: a.T,
    DihedralElement.TAU_RHO: lambda a, j: a @ j,
    DihedralElement.TAU_RHO2: lambda a, j: j @ a.T @ j,
    DihedralElement.TAU_RHO3: lambda a, j: j @ a,
}


def realize_by_products(sigma: DihedralElement, a: M) -> M:
    """Compute ``sigma(a)`` from transposition and products with :math:`J` only.

    Must agree with :func:`apply` for every element, see the module docs for
    the table.
    """
    arr = a.entries.astype(np.int64)
    return a.replace(_PRODUCTS[sigma](arr, exchange_matrix(a.n)))


def transpose(a: M) -> M:
    return apply(DihedralElement.TAU, a)


def scalar_mul(c: Residue | int, a: ResidueMatrix) -> ResidueMatrix:
    """Entrywise product ``c * a[i, j]``.

    Plain integers are reduced into the matrix ring; residues must share its modulus.
    """
    if isinstance(c, Residue):
        if c.modulus != a.modulus:
            msg = f"modulus mismatch: scalar mod {c.modulus.m}, matrix mod {a.m}"
            raise ModulusMismatchError(msg)
    else:
        c = reduce(c, a.modulus)

    # both factors are < m <= 2**31, so the product fits in int64
    return a.replace(a.entries * np.int64(c.value) % a.m)


def induced_permutation(sigma: DihedralElement, n: int) -> Permutation:
    """Permutation of :math:`\\mathbb{Z}/m\\mathbb{Z}` induced by ``sigma`` on :math:`Q_n`.

    The entry at each position of :math:`Q_n` is sent to the entry at the same
    position of :math:`\\sigma(Q_n)`; ``0`` (absent from :math:`Q_n`) is fixed.
    """
    from seqmatsym.zolotarev import Permutation

    q = sequential(n)
    image = np.arange(q.m, dtype=np.int64)
    image[q.entries.ravel()] = apply(sigma, q).entries.ravel()
    return Permutation(image)


# the value of sigma(Q_n) in terms of n: (sign, times n, transposed)
VALUE_TABLE: dict[DihedralElement, tuple[int, bool, bool]] = {
    DihedralElement.IDENTITY: (1, False, False),
    DihedralElement.RHO: (1, True, False),
    DihedralElement.RHO2: (-1, False, False),
    DihedralElement.RHO3: (-1, True, False),
    DihedralElement.TAU: (1, False, True),
    DihedralElement.TAU_RHO: (1, True, True),
    DihedralElement.TAU_RHO2: (-1, False, True),
    DihedralElement.TAU_RHO3: (-1, True, True),
}


def expected_value(sigma: DihedralElement, n: int) -> ResidueMatrix:
    """:math:`\\sigma(Q_n)` as predicted by the table of values, e.g. :math:`-nQ_n^T`."""
    sign, times_n, transposed = VALUE_TABLE[sigma]
    q = sequential(n)
    if transposed:
        q = transpose(q)
    return scalar_mul(sign * n if times_n else sign, q)


def check_theorem1(n: int) -> bool:
    """Check :math:`\\rho(Q_n) = nQ_n` entrywise."""
    q = sequential(n)
    return apply(DihedralElement.RHO, q) == scalar_mul(n, q)


def check_value_table(n: int) -> bool:
    """Check all eight rows of the table of values of :math:`\\sigma(Q_n)`."""
    q = sequential(n)
    for sigma in ELEMENTS:
        if apply(sigma, q) != expected_value(sigma, n):
            log.debug("value table row %s fails for n = %d", sigma.value, n)
            return False
    return True


def stabilizer(a: SquareMatrix) -> list[DihedralElement]:
    """All elements of :math:`D_4` fixing ``a``."""
    return [sigma for sigma in ELEMENTS if apply(sigma, a) == a]


def is_symmetric(a: SquareMatrix) -> bool:
    return apply(DihedralElement.TAU, a) == a


def is_centro_symmetric(a: SquareMatrix) -> bool:
    return apply(DihedralElement.RHO2, a) == a


def is_hankel_symmetric(a: SquareMatrix) -> bool:
    return apply(DihedralElement.TAU_RHO2, a) == a


def require_even(n: int) -> None:
    """Reject odd ``n``: then :math:`m = n^2 + 1` is even and Jacobi symbols modulo ``m`` are undefined."""
    if n < 2 or n % 2 != 0:
        msg = f"modulus even: n = {n} gives m = n^2 + 1 = {n * n + 1}, a positive even n is required"
        raise EvenModulusError(msg)
