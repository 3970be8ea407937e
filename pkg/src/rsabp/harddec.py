"""Hard-decision decoders pluggable into the adaptive loop.

HD simply re-checks the syndrome of the hard decisions; BM is classical
errors-only Berlekamp-Massey with Chien search and Forney's formula.
"""

from __future__ import annotations

import numpy as np

from .channel import hard_symbol_decisions
from .rscode import RsCode


def hard_bits(llr) -> np.ndarray:
    """(1 - sign(LLR)) / 2 with zero mapping to bit 0."""
    return (np.asarray(llr) < 0).astype(np.uint8)


def bm_decode_symbols(code: RsCode, received) -> np.ndarray | None:
    """Bounded-distance decoding of a symbol vector; None on failure.

    Syndromes S_j = Y(alpha^j) for j = 1..n-k feed Berlekamp-Massey, the
    error locator's roots come from a Chien search, and magnitudes from
    Forney's formula. The corrected word is re-verified by syndrome check,
    so a non-codeword is never returned.
    """
    gf = code.gf
    received = np.asarray(received, dtype=np.int64)
    synd = code.symbol_syndromes(received)
    if not synd.any():
        return received.copy()
    nsyn = synd.shape[0]

    # Berlekamp-Massey for the error locator sigma(x), constant term 1.
    sigma = [1]
    prevb = [1]
    length = 0
    shift = 1
    b = 1
    for i in range(nsyn):
        d = int(synd[i])
        for j in range(1, length + 1):
            if j < len(sigma):
                d ^= gf.mul(sigma[j], int(synd[i - j]))
        if d == 0:
            shift += 1
            continue
        coef = gf.div(d, b)
        cand = sigma + [0] * max(0, shift + len(prevb) - len(sigma))
        for j, v in enumerate(prevb):
            cand[shift + j] ^= gf.mul(coef, v)
        if 2 * length <= i:
            prevb = sigma
            length = i + 1 - length
            b = d
            shift = 1
        else:
            shift += 1
        sigma = cand
    while len(sigma) > 1 and sigma[-1] == 0:
        sigma.pop()
    nerr = len(sigma) - 1
    if nerr != length or nerr == 0 or nerr > code.t:
        return None

    # Chien search: position i is in error iff sigma(support[i]^-1) = 0.
    positions = [i for i in range(code.n) if gf.poly_eval(sigma, gf.inv(int(code.support[i]))) == 0]
    if len(positions) != nerr:
        return None

    # Forney with first consecutive root alpha^1: omega = S(x) sigma(x) mod x^nsyn,
    # e_i = omega(Xi^-1) / sigma'(Xi^-1).
    omega = [0] * nsyn
    for a in range(min(len(sigma), nsyn)):
        for bidx in range(nsyn - a):
            omega[a + bidx] ^= gf.mul(sigma[a], int(synd[bidx]))
    sigma_deriv = [sigma[j] if j % 2 == 1 else 0 for j in range(1, len(sigma))]

    corrected = received.copy()
    for i in positions:
        xinv = gf.inv(int(code.support[i]))
        denom = gf.poly_eval(sigma_deriv, xinv)
        if denom == 0:
            return None
        corrected[i] ^= gf.mul(gf.poly_eval(omega, xinv), gf.inv(denom))
    if not code.is_codeword(corrected):
        return None
    return corrected


class HdDecoder:
    """Signal success iff the hard decisions already form a codeword."""

    name = "hd"

    def __init__(self, code: RsCode):
        self.code = code

    def decode(self, llr) -> list[np.ndarray]:
        symbols = hard_symbol_decisions(llr, self.code.gf.m)
        if self.code.is_codeword(symbols):
            return [symbols]
        return []


class BmDecoder:
    """Berlekamp-Massey bounded-distance decoding of the hard decisions."""

    name = "bm"

    def __init__(self, code: RsCode):
        self.code = code

    def decode(self, llr) -> list[np.ndarray]:
        symbols = hard_symbol_decisions(llr, self.code.gf.m)
        word = bm_decode_symbols(self.code, symbols)
        return [word] if word is not None else []
