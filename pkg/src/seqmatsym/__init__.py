from __future__ import annotations

from seqmatsym._version import version as __version__
from seqmatsym.modring import Modulus, Residue, reduce
from seqmatsym.multfunc import JacobiMap, SignMatrix, apply_map, jacobi
from seqmatsym.seqmatrix import DihedralElement, ResidueMatrix, apply, sequential
from seqmatsym.zolotarev import Permutation, mult_perm, signature

__all__ = [
    "DihedralElement",
    "JacobiMap",
    "Modulus",
    "Permutation",
    "Residue",
    "ResidueMatrix",
    "SignMatrix",
    "__version__",
    "apply",
    "apply_map",
    "jacobi",
    "mult_perm",
    "reduce",
    "sequential",
    "signature",
]
