"""Sliding (truncated block-Toeplitz) generator matrices.

For a code with row-reduced coefficient matrices G_0 .. G_{delta1}, the
plain window matrix at index j stacks block rows [G_0 G_1 ... ] shifted one
block per message stage, truncated to j+1 output blocks; the primed variant
keeps the full memory tail, so block row s spans output blocks s .. s+delta1
and nothing is cut off.  Rows are indexed by (stage s, row i) = s*k + i and
columns by (output block t, coordinate c) = t*n + c.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvinvError
from .poly import PolyVector
from .structure import ConvCode


@dataclass(frozen=True)
class SlidingMatrix:
    """A dense window matrix over GF(q) encodings (dtype uint16)."""

    code: ConvCode
    variant: str  # "plain" | "primed"
    j: int
    data: np.ndarray

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def to_lists(self) -> list[list[int]]:
        return self.data.astype(int).tolist()


def coefficient_blocks(code: ConvCode) -> list[np.ndarray]:
    """G_0 .. G_{delta1} of the row-reduced generator as uint16 arrays."""

    def build():
        return [
            np.array(code.rowred.coefficient_matrix(d), dtype=np.uint16)
            for d in range(code.delta1 + 1)
        ]

    return code.cached(("coeff_blocks",), build)


def sliding(code: ConvCode, j: int, variant: str = "plain") -> SlidingMatrix:
    """Assemble the window matrix at index j (j >= 0)."""
    if j < 0:
        raise ConvinvError("window index must be >= 0")
    if variant not in ("plain", "primed"):
        raise ConvinvError(f"unknown sliding variant {variant!r}")

    def build():
        k, n, d1 = code.k, code.n, code.delta1
        blocks = coefficient_blocks(code)
        out_blocks = j + 1 + (d1 if variant == "primed" else 0)
        data = np.zeros((k * (j + 1), n * out_blocks), dtype=np.uint16)
        for s in range(j + 1):
            for d in range(d1 + 1):
                t = s + d
                if t >= out_blocks:
                    break
                data[s * k : (s + 1) * k, t * n : (t + 1) * n] = blocks[d]
        return SlidingMatrix(code, variant, j, data)

    return code.cached(("sliding", variant, j), build)


def truncated_word(code: ConvCode, message, j: int | None = None) -> np.ndarray:
    """The window image of a flat message vector.

    ``message`` has length k(j+1); entry s*k+i is the degree-s coefficient
    of the message polynomial for row-reduced basis row i.  Returns the
    n(j+1)-vector of the truncated codeword, flat index t*n+c.
    """
    msg = np.asarray(message, dtype=np.int64)
    k = code.k
    if msg.ndim != 1 or msg.size == 0 or msg.size % k:
        raise ConvinvError("message length must be a positive multiple of k")
    jj = msg.size // k - 1
    if j is not None and j != jj:
        raise ConvinvError("message length does not match the window index")
    mat = sliding(code, jj, "plain").data
    f = code.field
    if f.add_table is not None:
        out = np.zeros(mat.shape[1], dtype=np.uint16)
        for m, v in enumerate(msg):
            if v:
                out = f.add_table[out, f.mul_table[int(v), mat[m]]]
        return out
    out = [0] * mat.shape[1]
    for m, v in enumerate(msg):
        if v:
            row = mat[m]
            for c in range(len(out)):
                if row[c]:
                    out[c] = f.add(out[c], f.mul(int(v), int(row[c])))
    return np.array(out, dtype=np.uint16)


def window_support_size(code: ConvCode, messages, variant: str = "plain") -> int:
    """Union support size of the window images of several flat messages."""
    if not messages:
        return 0
    first = np.asarray(messages[0])
    j = first.size // code.k - 1
    mat = sliding(code, j, variant).data
    mask = None
    f = code.field
    for msg in messages:
        msg = np.asarray(msg, dtype=np.int64)
        out = np.zeros(mat.shape[1], dtype=np.uint16)
        for m, v in enumerate(msg):
            if v:
                out = f.add_table[out, f.mul_table[int(v), mat[m]]]
        nz = out != 0
        mask = nz if mask is None else (mask | nz)
    return int(mask.sum())


def truncation_of_word(word: PolyVector, j: int) -> np.ndarray:
    """Flatten the [0, j] window of a codeword to a GF(q) vector."""
    n = word.n
    out = np.zeros(n * (j + 1), dtype=np.uint16)
    for t in range(j + 1):
        out[t * n : (t + 1) * n] = word.coefficient_slice(t)
    return out
