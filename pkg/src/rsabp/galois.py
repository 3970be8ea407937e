"""GF(2^m) arithmetic with log/antilog tables and the companion-matrix binary image.

Elements are integers in [0, 2^m) interpreted as bit patterns in the
polynomial basis (1, alpha, ..., alpha^(m-1)), least significant bit first.
"""

from __future__ import annotations

import numpy as np

# Conventional primitive polynomials, bit pattern LSB = constant term.
# m=4: x^4+x+1, m=5: x^5+x^2+1, m=8: x^8+x^4+x^3+x^2+1.
DEFAULT_PRIMPOLY = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


class GF:
    """The field GF(2^m) built from a primitive polynomial.

    Addition is bitwise xor; multiplication and inversion go through the
    discrete log tables of the primitive element alpha. Immutable after
    construction, safe to share across workers.
    """

    def __init__(self, m: int, primpoly: int | list[int] | None = None):
        if not 2 <= m <= 16:
            raise ValueError(f"extension degree m={m} out of supported range [2, 16]")
        if primpoly is None:
            primpoly = DEFAULT_PRIMPOLY[m]
        elif not isinstance(primpoly, int):
            primpoly = sum(int(b) << i for i, b in enumerate(primpoly))
        if primpoly >> m != 1:
            raise ValueError(f"primitive polynomial 0x{primpoly:x} does not have degree {m}")

        self.m = m
        self.q = 1 << m
        self.primpoly = primpoly

        # Walk powers of alpha = x mod p(x). If the walk revisits 1 before
        # exhausting the q-1 nonzero elements, p(x) is not primitive.
        antilog = np.zeros(self.q - 1, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        x = 1
        for i in range(self.q - 1):
            if log[x] >= 0:
                raise ValueError(f"polynomial 0x{primpoly:x} is not primitive over GF(2)")
            antilog[i] = x
            log[x] = i
            x <<= 1
            if x & self.q:
                x ^= primpoly
        if x != 1:
            raise ValueError(f"polynomial 0x{primpoly:x} is not primitive over GF(2)")
        self._antilog = antilog
        self._log = log
        # Doubled antilog table: index with log[a] + log[b] without a modulo.
        self._antilog2 = np.concatenate([antilog, antilog])

    def __repr__(self) -> str:
        return f"GF(2^{self.m}, primpoly=0x{self.primpoly:x})"

    @property
    def alpha(self) -> int:
        return self._antilog[1]

    def exp(self, i: int) -> int:
        """alpha^i for any integer i."""
        return int(self._antilog[i % (self.q - 1)])

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero element")
        return int(self._log[a])

    @staticmethod
    def add(a, b):
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._antilog2[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero element")
        return int(self._antilog[(self.q - 1 - self._log[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero element")
            return 0
        return int(self._antilog[(self._log[a] * e) % (self.q - 1)])

    def mul_arr(self, a, b):
        """Elementwise product of integer arrays over the field."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._antilog2[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def dot(self, a, b) -> int:
        """Inner product over the field (xor-accumulated)."""
        prod = self.mul_arr(a, b)
        return int(np.bitwise_xor.reduce(prod))

    def poly_eval(self, coeffs, x: int) -> int:
        """Evaluate sum(coeffs[i] * x^i) by Horner's rule; coeffs[0] is the constant."""
        acc = 0
        for c in reversed(list(coeffs)):
            acc = self.mul(acc, x) ^ int(c)
        return acc

    # Binary image helpers: coordinate u_{j,0} (the constant term) comes first.

    def element_bits(self, a: int) -> np.ndarray:
        """Basis coordinates of an element, length m, LSB first."""
        return (a >> np.arange(self.m)) & 1

    def bits_to_element(self, bits) -> int:
        bits = np.asarray(bits, dtype=np.int64)
        return int((bits << np.arange(self.m)).sum())

    def symbols_to_bits(self, symbols) -> np.ndarray:
        """Concatenated basis coordinates, symbol 0 first."""
        symbols = np.asarray(symbols, dtype=np.int64)
        return ((symbols[:, None] >> np.arange(self.m)[None, :]) & 1).reshape(-1).astype(np.uint8)

    def bits_to_symbols(self, bits) -> np.ndarray:
        bits = np.asarray(bits, dtype=np.int64).reshape(-1, self.m)
        return (bits << np.arange(self.m)[None, :]).sum(axis=1)


def companion_matrix(gf: GF) -> np.ndarray:
    """Companion matrix C of the field's primitive polynomial.

    C acts on basis-coordinate columns as multiplication by alpha, so the
    map alpha^i <-> C^i is a field isomorphism on the nonzero elements.
    """
    m = gf.m
    c = np.zeros((m, m), dtype=np.uint8)
    for j in range(m - 1):
        c[j + 1, j] = 1
    c[:, m - 1] = (gf.primpoly >> np.arange(m)) & 1
    return c


def companion_powers(gf: GF) -> np.ndarray:
    """Stacked powers C^0 .. C^(q-2); C^(q-1) would wrap to the identity."""
    c = companion_matrix(gf)
    powers = np.zeros((gf.q - 1, gf.m, gf.m), dtype=np.uint8)
    powers[0] = np.eye(gf.m, dtype=np.uint8)
    for i in range(1, gf.q - 1):
        powers[i] = (c @ powers[i - 1]) & 1
    return powers
