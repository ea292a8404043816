"""Vectorised arithmetic on stacks of matrices, for the brute-force oracles.

This shares no arithmetic with :mod:`matlift.matrix` or :mod:`matlift.ring`:
ring elements are numpy vectors of length ``w`` (``w = 1`` for Z/p^l,
``w = l`` for F_p[u]/(u^l), lowest coefficient first) and every product is a
truncated convolution along the last axis.
"""

from __future__ import annotations

import numpy as np

from .matrix import Matrix
from .ring import RingSpec


class BatchRing:
    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.w = spec.ell if spec.is_series else 1
        self.mod = spec.p if spec.is_series else spec.modulus
        self.q = spec.order

    # ---------------------------------------------------------- conversions
    def encode(self, raw) -> np.ndarray:
        vals = list(raw) if self.spec.is_series else [raw]
        return np.array(vals, dtype=np.int64)

    def encode_matrix(self, M: Matrix) -> np.ndarray:
        return np.array([[self.encode(x) for x in row] for row in M.rows], dtype=np.int64)

    def decode_matrix(self, arr: np.ndarray) -> Matrix:
        if self.spec.is_series:
            rows = tuple(tuple(tuple(int(c) for c in x) for x in row) for row in arr)
        else:
            rows = tuple(tuple(int(x[0]) for x in row) for row in arr)
        return Matrix(self.spec, rows)

    def elements_from_index(self, idx: np.ndarray) -> np.ndarray:
        """Element arrays (..., w) for element indices in the order of RingSpec.elements()."""
        if not self.spec.is_series:
            return idx[..., None]
        p, w = self.spec.p, self.w
        out = np.empty(idx.shape + (w,), dtype=np.int64)
        rest = idx.copy()
        for k in range(w - 1, -1, -1):
            out[..., k] = rest % p
            rest //= p
        return out

    # ----------------------------------------------------------- arithmetic
    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.w == 1:
            return (a * b) % self.mod
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        w = self.w
        for s in range(w):
            out[..., s:] += a[..., s:s + 1] * b[..., :w - s]
        return out % self.mod

    def matmul(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Batched product of (..., n, n, w) stacks."""
        n = X.shape[-2]
        out = None
        for j in range(n):
            term = self.mul(X[..., :, j:j + 1, :], Y[..., j:j + 1, :, :])
            out = term if out is None else out + term
        return out % self.mod

    def identity(self, n: int) -> np.ndarray:
        out = np.zeros((n, n, self.w), dtype=np.int64)
        for i in range(n):
            out[i, i, 0] = 1
        return out

    def eval_poly(self, terms, Xs: list, n: int) -> np.ndarray:
        """Evaluate a polynomial (list of (exps, raw coeff)) at batched matrices Xs[i] of shape (N, n, n, w)."""
        N = Xs[0].shape[0]
        powers = [[None, X] for X in Xs]

        def power(i, k):
            pw = powers[i]
            while len(pw) <= k:
                pw.append(self.matmul(pw[-1], Xs[i]))
            return pw[k]

        total = np.zeros((N, n, n, self.w), dtype=np.int64)
        ident = self.identity(n)
        for exps, c in terms:
            mono = None
            for i, k in enumerate(exps):
                if k:
                    mono = power(i, k) if mono is None else self.matmul(mono, power(i, k))
            if mono is None:
                mono = np.broadcast_to(ident, total.shape)
            total = total + self.mul(self.encode(c), mono)
        return total % self.mod
