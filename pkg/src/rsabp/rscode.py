"""Reed-Solomon code definition, evaluation encoder, and parity-check matrices.

The code is the full-length (n = q-1) RS code whose codewords are the
evaluations of data polynomials of degree < k on the support set
(alpha^0, alpha^1, ..., alpha^(n-1)). With that support ordering the
codeword polynomial U(x) has alpha, alpha^2, ..., alpha^(n-k) as zeros,
which makes H[i, j] = alpha^(i*j) (rows i = 1..n-k) a parity-check matrix.
The binary image replaces alpha^e by the companion-matrix power C^e.
"""

from __future__ import annotations

import numpy as np

from .galois import GF, companion_powers


class RsCode:
    """An (n, k) Reed-Solomon code over GF(2^m) with its binary image."""

    def __init__(self, n: int, k: int, gf: GF | None = None, primpoly: int | None = None):
        if gf is None:
            m = (n + 1).bit_length() - 1
            if (1 << m) - 1 != n:
                raise ValueError(f"full-length code requires n = 2^m - 1, got n={n}")
            gf = GF(m, primpoly)
        if n != gf.q - 1:
            raise ValueError(f"n={n} does not match field size q={gf.q}")
        if not 1 <= k < n:
            raise ValueError(f"dimension k={k} out of range for n={n}")
        self.n = n
        self.k = k
        self.gf = gf
        self.support = np.array([gf.exp(i) for i in range(n)], dtype=np.int64)
        self.t = (n - k) // 2

        # Vandermonde power table: powers[j, i] = support[i]^j, used by the
        # encoder (rows 0..k-1) and by syndrome computation (any row).
        logs = np.arange(n, dtype=np.int64)  # log of support[i] is i
        exps = (np.arange(n)[:, None] * logs[None, :]) % (gf.q - 1)
        self._power = gf._antilog[exps]

        self._h_symbol: np.ndarray | None = None
        self._h_binary: np.ndarray | None = None

    @property
    def nbits(self) -> int:
        return self.gf.m * self.n

    @property
    def kbits(self) -> int:
        return self.gf.m * self.k

    @property
    def rbits(self) -> int:
        return self.nbits - self.kbits

    @property
    def rate(self) -> float:
        return self.k / self.n

    def __repr__(self) -> str:
        return f"RsCode({self.n},{self.k}) over {self.gf!r}"

    def encode(self, data) -> np.ndarray:
        """Evaluate D(x) = sum(d_i x^i) on the support set."""
        data = np.asarray(data, dtype=np.int64)
        if data.shape != (self.k,):
            raise ValueError(f"data length {data.shape} != k={self.k}")
        terms = self.gf.mul_arr(data[:, None], self._power[: self.k])
        return np.bitwise_xor.reduce(terms, axis=0)

    def random_codeword(self, rng: np.random.Generator) -> np.ndarray:
        return self.encode(rng.integers(0, self.gf.q, size=self.k))

    def symbol_parity_matrix(self) -> np.ndarray:
        """(n-k) x n matrix over the field, entry (i, j) = alpha^((i+1)*j)."""
        if self._h_symbol is None:
            self._h_symbol = self._power[1 : self.n - self.k + 1].copy()
        return self._h_symbol

    def binary_parity_matrix(self) -> np.ndarray:
        """Binary image of the symbol parity-check matrix, shape rbits x nbits."""
        if self._h_binary is None:
            m, q = self.gf.m, self.gf.q
            cpow = companion_powers(self.gf)
            h = np.zeros((self.rbits, self.nbits), dtype=np.uint8)
            for i in range(self.n - self.k):
                for j in range(self.n):
                    e = ((i + 1) * j) % (q - 1)
                    h[i * m : (i + 1) * m, j * m : (j + 1) * m] = cpow[e]
            rank = _gf2_rank(h)
            if rank != self.rbits:
                raise ValueError(f"binary parity matrix rank {rank} != {self.rbits}")
            self._h_binary = h
        return self._h_binary

    def binary_image(self, symbols) -> np.ndarray:
        return self.gf.symbols_to_bits(symbols)

    def symbols_from_bits(self, bits) -> np.ndarray:
        return self.gf.bits_to_symbols(bits)

    def symbol_syndromes(self, received) -> np.ndarray:
        """S_j = Y(alpha^j) for j = 1..n-k; all zero iff received is a codeword."""
        received = np.asarray(received, dtype=np.int64)
        terms = self.gf.mul_arr(self.symbol_parity_matrix(), received[None, :])
        return np.bitwise_xor.reduce(terms, axis=1)

    def is_codeword(self, symbols) -> bool:
        return not self.symbol_syndromes(symbols).any()


def syndrome_check(bits, h_binary: np.ndarray) -> bool:
    """True iff all parity checks of the binary matrix are satisfied."""
    bits = np.asarray(bits, dtype=np.int64)
    if bits.shape[0] != h_binary.shape[1]:
        raise ValueError(f"bit vector length {bits.shape[0]} != {h_binary.shape[1]}")
    return not ((h_binary.astype(np.int64) @ bits) & 1).any()


def _gf2_rank(mat: np.ndarray) -> int:
    work = mat.copy()
    rank = 0
    rows, cols = work.shape
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(work[rank:, col])[0]
        if pivots.size == 0:
            continue
        piv = rank + pivots[0]
        if piv != rank:
            work[[rank, piv]] = work[[piv, rank]]
        below = np.nonzero(work[rank + 1 :, col])[0] + rank + 1
        work[below] ^= work[rank]
        rank += 1
    return rank
