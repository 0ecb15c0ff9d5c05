"""Text serialization of residue and sign matrices.

Supported formats:

``text``
    Whitespace-aligned rows, as the matrices are displayed in print. Sign
    entries are written ``+1``, ``-1`` and `` 0``.
``csv``
    Comma-separated integers, one row per line.
``json``
    ``{"n": int, "m": int, "kind": "residue" | "sign", "rows": [[int, ...], ...]}``.
``pgm``
    Plain (``P2``) graymap. Sign matrices use maxval 255 with ``+1 -> 255``,
    ``-1 -> 0`` and ``0 -> 128``; residue matrices use maxval ``m - 1``.

Only ``json`` stores the modulus; the other formats default to
:math:`m = n^2 + 1` when parsing a residue matrix unless it is given.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from enum import StrEnum

import numpy as np

from seqmatsym.modring import Modulus
from seqmatsym.multfunc import SignMatrix
from seqmatsym.seqmatrix import ResidueMatrix, SquareMatrix

log = logging.getLogger(__name__)

PGM_MAXVAL = 255
PGM_MAX_RESIDUE_MODULUS = 65536

_SIGN_TO_GRAY = {1: 255, -1: 0, 0: 128}
_GRAY_TO_SIGN = {v: k for k, v in _SIGN_TO_GRAY.items()}
_SIGN_TO_TEXT = {1: "+1", -1: "-1", 0: " 0"}


class RenderFormat(StrEnum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"
    PGM = "pgm"


class MatrixKind(StrEnum):
    RESIDUE = "residue"
    SIGN = "sign"


def kind_of(matrix: SquareMatrix) -> MatrixKind:
    if isinstance(matrix, SignMatrix):
        return MatrixKind.SIGN
    if isinstance(matrix, ResidueMatrix):
        return MatrixKind.RESIDUE
    msg = f"cannot render {type(matrix).__name__}"
    raise TypeError(msg)


def render(matrix: SquareMatrix, fmt: str | RenderFormat) -> str:
    """Serialize ``matrix`` in the format ``fmt``."""
    fmt = RenderFormat(fmt)
    kind = kind_of(matrix)
    rows = matrix.rows()

    if fmt is RenderFormat.TEXT:
        if kind is MatrixKind.SIGN:
            lines = [" ".join(_SIGN_TO_TEXT[v] for v in row) for row in rows]
        else:
            width = len(str(int(matrix.entries.max())))
            lines = [" ".join(str(v).rjust(width) for v in row) for row in rows]
        return "".join(line + "\n" for line in lines)

    if fmt is RenderFormat.CSV:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()

    if fmt is RenderFormat.JSON:
        m = matrix.m if kind is MatrixKind.RESIDUE else matrix.n**2 + 1
        return json.dumps({"n": matrix.n, "m": m, "kind": kind.value, "rows": rows}) + "\n"

    if kind is MatrixKind.SIGN:
        maxval = PGM_MAXVAL
        rows = [[_SIGN_TO_GRAY[v] for v in row] for row in rows]
    else:
        if matrix.m > PGM_MAX_RESIDUE_MODULUS:
            msg = f"PGM cannot hold residues modulo {matrix.m} (at most {PGM_MAX_RESIDUE_MODULUS})"
            raise ValueError(msg)
        maxval = matrix.m - 1

    header = f"P2\n{matrix.n} {matrix.n}\n{maxval}\n"
    return header + "".join(" ".join(map(str, row)) + "\n" for row in rows)


def _build(rows: list[list[int]], kind: MatrixKind, modulus: int | Modulus | None) -> SquareMatrix:
    if kind is MatrixKind.SIGN:
        return SignMatrix(rows)
    n = len(rows)
    if modulus is None:
        modulus = n * n + 1

    # a residue outside [0, m) would be silently reduced otherwise
    arr = np.asarray(rows, dtype=np.int64)
    m = int(modulus)
    if arr.size and (arr.min() < 0 or arr.max() >= m):
        msg = f"entries outside [0, {m}) in a residue matrix"
        raise ValueError(msg)
    return ResidueMatrix(arr, modulus)


def _parse_rows(text: str) -> list[list[int]]:
    return [[int(tok) for tok in line.split()] for line in text.splitlines() if line.strip()]


def _parse_pgm(text: str, kind: MatrixKind, modulus: int | Modulus | None) -> SquareMatrix:
    tokens = []
    for line in text.splitlines():
        tokens.extend(line.split("#", 1)[0].split())

    if not tokens or tokens[0] != "P2":
        msg = "not a plain PGM (P2) file"
        raise ValueError(msg)
    width, height, maxval = (int(t) for t in tokens[1:4])
    values = [int(t) for t in tokens[4:]]
    if width != height or len(values) != width * height:
        msg = f"expected a square {width}x{height} image with {width * height} values, got {len(values)}"
        raise ValueError(msg)

    rows = [values[i * width : (i + 1) * width] for i in range(height)]
    if kind is MatrixKind.SIGN:
        if maxval != PGM_MAXVAL:
            msg = f"sign matrices are stored with maxval {PGM_MAXVAL}, got {maxval}"
            raise ValueError(msg)
        try:
            rows = [[_GRAY_TO_SIGN[v] for v in row] for row in rows]
        except KeyError as e:
            msg = f"gray level {e.args[0]} does not encode a sign"
            raise ValueError(msg) from e
        return SignMatrix(rows)

    return _build(rows, kind, maxval + 1 if modulus is None else modulus)


def parse(
    text: str,
    fmt: str | RenderFormat,
    kind: str | MatrixKind = MatrixKind.RESIDUE,
    modulus: int | Modulus | None = None,
) -> SquareMatrix:
    """Inverse of :func:`render`.

    Parameters
    ----------
    text
        serialized matrix.
    fmt
        format of ``text``.
    kind
        ``residue`` or ``sign``. Ignored for ``json``, which records the kind.
    modulus
        modulus of a residue matrix, for formats that do not store it.
        Defaults to :math:`n^2 + 1` (or ``maxval + 1`` for ``pgm``).
    """
    fmt = RenderFormat(fmt)
    kind = MatrixKind(kind)

    if fmt is RenderFormat.JSON:
        doc = json.loads(text)
        kind = MatrixKind(doc["kind"])
        rows = doc["rows"]
        if len(rows) != doc["n"]:
            msg = f"JSON matrix declares n = {doc['n']} but has {len(rows)} rows"
            raise ValueError(msg)
        return _build(rows, kind, doc["m"])

    if fmt is RenderFormat.CSV:
        rows = [[int(v) for v in row] for row in csv.reader(io.StringIO(text)) if row]
        return _build(rows, kind, modulus)

    if fmt is RenderFormat.TEXT:
        return _build(_parse_rows(text), kind, modulus)

    return _parse_pgm(text, kind, modulus)
