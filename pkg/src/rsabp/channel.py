"""BPSK modulation, AWGN and Rayleigh-fading channels, bit LLRs, symbol posteriors.

Sign convention: LLR > 0 means bit 0 is more likely. Eb/N0 is normalized by
the binary code rate k/n, so the per-dimension noise variance is
sigma^2 = 1 / (2 * rate * 10^(snr_db/10)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

JAKES_OSCILLATORS = 16
_LAGUERRE_NODES = 64


@dataclass(frozen=True)
class ChannelObservation:
    """Received samples plus the channel state they were drawn with."""

    y: np.ndarray
    noise_var: float
    snr_db: float
    fade: np.ndarray | None = None  # per-bit Rayleigh amplitudes, None for AWGN


def noise_variance(snr_db: float, rate: float) -> float:
    return 1.0 / (2.0 * rate * 10.0 ** (snr_db / 10.0))


def bpsk_modulate(bits) -> np.ndarray:
    return 1.0 - 2.0 * np.asarray(bits, dtype=np.float64)


def bpsk_awgn(bits, snr_db: float, rate: float, rng: np.random.Generator) -> ChannelObservation:
    """Transmit the bit vector over BPSK/AWGN at the given Eb/N0."""
    if not np.isfinite(snr_db):
        raise ValueError("snr_db must be finite")
    x = bpsk_modulate(bits)
    var = noise_variance(snr_db, rate)
    y = x + rng.normal(0.0, np.sqrt(var), size=x.shape)
    return ChannelObservation(y=y, noise_var=var, snr_db=snr_db)


def jakes_fade(nbits: int, doppler_hz: float, duration_s: float, rng: np.random.Generator,
               oscillators: int = JAKES_OSCILLATORS) -> np.ndarray:
    """Rayleigh amplitudes with Jakes-spectrum correlation, E[a^2] = 1.

    Sum-of-sinusoids simulator: a complex gain built from `oscillators`
    unit phasors with random arrival angles and phases; the autocorrelation
    approaches J0(2 pi f_d tau). doppler_hz = 0 gives a single static fade
    across the codeword.
    """
    if doppler_hz < 0:
        raise ValueError("doppler_hz must be nonnegative")
    t = np.arange(nbits) * (duration_s / nbits)
    theta = rng.uniform(0.0, 2.0 * np.pi, size=oscillators)
    phi = rng.uniform(0.0, 2.0 * np.pi, size=oscillators)
    arg = 2.0 * np.pi * doppler_hz * np.cos(theta)[None, :] * t[:, None] + phi[None, :]
    g = (np.exp(1j * arg)).sum(axis=1) / np.sqrt(oscillators)
    return np.abs(g)


def bpsk_rayleigh(bits, snr_db: float, rate: float, doppler_hz: float, duration_s: float,
                  rng: np.random.Generator) -> ChannelObservation:
    """Transmit over a correlated Rayleigh fading channel with AWGN.

    Coherent reception of the faded amplitude: y_i = a_i x_i + noise.
    """
    if not np.isfinite(snr_db):
        raise ValueError("snr_db must be finite")
    x = bpsk_modulate(bits)
    var = noise_variance(snr_db, rate)
    a = jakes_fade(x.shape[0], doppler_hz, duration_s, rng)
    y = a * x + rng.normal(0.0, np.sqrt(var), size=x.shape)
    return ChannelObservation(y=y, noise_var=var, snr_db=snr_db, fade=a)


@lru_cache(maxsize=32)
def _laguerre_rule(nodes: int) -> tuple[np.ndarray, np.ndarray]:
    u, w = np.polynomial.laguerre.laggauss(nodes)
    return u, np.log(w)


def _rayleigh_marginal_llr(y: np.ndarray, noise_var: float) -> np.ndarray:
    # Marginalize the unknown unit-mean-square Rayleigh amplitude:
    # p(y | bit) = int_0^inf 2a exp(-a^2) N(y; -+a, sigma^2) da.
    # Substituting u = a^2 turns this into a Gauss-Laguerre quadrature.
    u, logw = _laguerre_rule(_LAGUERRE_NODES)
    a = np.sqrt(u)
    scale = 1.0 / (2.0 * noise_var)
    lp0 = logw[None, :] - (y[:, None] - a[None, :]) ** 2 * scale
    lp1 = logw[None, :] - (y[:, None] + a[None, :]) ** 2 * scale
    m0 = lp0.max(axis=1)
    m1 = lp1.max(axis=1)
    llr0 = m0 + np.log(np.exp(lp0 - m0[:, None]).sum(axis=1))
    llr1 = m1 + np.log(np.exp(lp1 - m1[:, None]).sum(axis=1))
    return llr0 - llr1


def bit_llrs(obs: ChannelObservation, csi_known: bool = True) -> np.ndarray:
    """Channel LLRs for each transmitted bit.

    AWGN: 2y/sigma^2. Rayleigh with known CSI: 2ay/sigma^2. Rayleigh with
    unknown CSI: exact marginal over the amplitude density by quadrature.
    """
    if obs.noise_var <= 0:
        raise ValueError("noise variance must be positive")
    if obs.fade is None:
        return 2.0 * obs.y / obs.noise_var
    if csi_known:
        return 2.0 * obs.fade * obs.y / obs.noise_var
    return _rayleigh_marginal_llr(obs.y, obs.noise_var)


def symbol_posteriors(llr, m: int) -> np.ndarray:
    """Column-stochastic q x n matrix of symbol posteriors from bit LLRs.

    Column i is the product of the per-bit probabilities of symbol i's m
    bits (bit l of symbol beta is (beta >> l) & 1), normalized to sum to 1.
    """
    llr = np.asarray(llr, dtype=np.float64)
    if llr.shape[0] % m:
        raise ValueError(f"LLR length {llr.shape[0]} not a multiple of m={m}")
    n = llr.shape[0] // m
    q = 1 << m
    lam = llr.reshape(n, m)
    # sign +1 where the symbol bit is 1: log p(bit = b) = -log(1 + exp(s * lam))
    sign = 2.0 * (((np.arange(q)[:, None] >> np.arange(m)[None, :]) & 1)) - 1.0
    logp = -np.logaddexp(0.0, sign[None, :, :] * lam[:, None, :]).sum(axis=2)  # (n, q)
    logp -= logp.max(axis=1, keepdims=True)
    p = np.exp(logp)
    p /= p.sum(axis=1, keepdims=True)
    return p.T.copy()


def hard_symbol_decisions(llr, m: int) -> np.ndarray:
    """Per-bit sign decisions packed into symbols (zero LLR maps to bit 0)."""
    bits = (np.asarray(llr) < 0).astype(np.int64).reshape(-1, m)
    return (bits << np.arange(m)[None, :]).sum(axis=1)
