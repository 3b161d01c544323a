"""SNDR, ENOB and SFDR straight from a transition-level INL profile.

No time-domain record and no FFT: the noise power is integrated code by
code and the harmonics come from the Fourier series of a full-scale sine
passed through the static transfer curve.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .inl import InlProfile

_BLOCK = 64
_ROW_CHUNK = 256
_TINY = 1e-300


def default_harmonics(n_bits: int) -> int:
    """Harmonic count that covers the quantization spur cluster near k = pi 2^N."""
    return 2 ** (n_bits + 2)


@dataclass(frozen=True, eq=False)
class SpectralMetrics:
    sndr_db: float
    enob_bits: float
    sfdr_dbc: float
    harmonics: np.ndarray
    worst_k: int


def code_mse(q: float, inl_hi, inl_lo):
    """Mean-square conversion error of one code, ramp input.

    ``inl_hi``/``inl_lo`` are the displacements (normalized units, not LSB)
    of the code's upper and lower transitions.
    """
    a = np.asarray(inl_hi, dtype=float)
    b = np.asarray(inl_lo, dtype=float)
    return q * q / 12.0 + q / 4.0 * (a - b) + 0.5 * (a * a + b * b) + (a**3 - b**3) / (3.0 * q)


def sndr_from_inl(profile: InlProfile) -> float:
    q = profile.q
    shift = np.concatenate(([0.0], profile.inl * q, [0.0]))
    total = np.sum(code_mse(q, shift[1:], shift[:-1]))
    mse = total / 2**profile.resolution
    return float(10.0 * np.log10(0.5 / mse))


def enob(sndr_db: float) -> float:
    return (sndr_db - 1.76) / 6.02


def _powers(z: np.ndarray, count: int) -> np.ndarray:
    """Rows z^0 .. z^(count-1), filled by doubling so rounding error grows with log(count)."""
    rows = np.empty((count, z.size), dtype=complex)
    rows[0] = 1.0
    filled, step = 1, z
    while filled < count:
        take = min(filled, count - filled)
        np.multiply(rows[:take], step, out=rows[filled : filled + take])
        filled += take
        step = step * step
    return rows


def _block_size(k_max: int) -> int:
    # about sqrt(k_max): balances the inner table against the outer rows
    return int(min(_BLOCK, 2 ** math.ceil(math.log2(math.sqrt(k_max + 1)))))


def _sine_sums(theta: np.ndarray, weights: np.ndarray, k_max: int) -> np.ndarray:
    """``sum_i weights[i] * sin(k * theta[i])`` for k = 1..k_max.

    k is split as ``block * m + b`` so that ``sin(k t) = Im(e^{i block m t} e^{i b t})``
    becomes one real matrix product per chunk of m.
    """
    block = _block_size(k_max)
    n_outer = k_max // block + 1
    inner = _powers(np.exp(1j * theta), block)
    # interleaved to pair with the (re, im) float view of the outer rows:
    # Im(o * z) = o.re * z.im + o.im * z.re
    paired = np.empty((block, 2 * theta.size))
    paired[:, 0::2] = inner.imag * weights
    paired[:, 1::2] = inner.real * weights
    step = np.exp(1j * block * theta)
    out = np.empty(n_outer * block)
    for start in range(0, n_outer, _ROW_CHUNK):
        rows = min(_ROW_CHUNK, n_outer - start)
        outer = _powers(step, rows)
        if start:
            outer *= np.exp(1j * start * block * theta)
        prod = outer.view(np.float64) @ paired.T
        out[start * block : (start + rows) * block] = prod.ravel()
    return out[1 : k_max + 1]


def harmonic_coefficients(profile: InlProfile, k_max: int | None = None) -> np.ndarray:
    """Cosine-series amplitudes a_1..a_K of a full-scale sine through the converter.

    Output levels stay at the ideal code centres; only the transitions move.
    The series over codes, ``2/(pi k) sum_i y_i [sin(k acos x_i) - sin(k acos x_{i+1})]``
    with end sentinels x = -1 and +1, is summed by parts: the sentinel terms
    vanish and each interior transition enters once with weight
    ``y_i - y_{i-1}``.
    """
    if k_max is None:
        k_max = default_harmonics(profile.resolution)
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    t = profile.transitions
    if np.any(np.diff(t) < 0):
        warnings.warn("transition levels are non-monotonic", RuntimeWarning, stacklevel=2)
    if np.any(np.abs(t) > 1):
        warnings.warn("transition levels clamped to full scale", RuntimeWarning, stacklevel=2)
        t = np.clip(t, -1.0, 1.0)
    q = profile.q
    centres = -1.0 + (np.arange(2**profile.resolution) + 0.5) * q
    theta = np.arccos(t)
    k = np.arange(1, k_max + 1)
    return 2.0 / (np.pi * k) * _sine_sums(theta, np.diff(centres), k_max)


def sfdr_from_harmonics(harmonics: np.ndarray) -> tuple[float, int]:
    """(SFDR in dBc, index k of the dominant spur)."""
    mag = np.maximum(np.abs(harmonics), _TINY)
    spur = int(np.argmax(mag[1:])) + 1
    return float(20.0 * np.log10(mag[0] / mag[spur])), spur + 1


def sfdr_from_inl(profile: InlProfile, k_max: int | None = None) -> float:
    return sfdr_from_harmonics(harmonic_coefficients(profile, k_max))[0]


def spectral_metrics(profile: InlProfile, k_max: int | None = None) -> SpectralMetrics:
    sndr = sndr_from_inl(profile)
    a = harmonic_coefficients(profile, k_max)
    sfdr, worst = sfdr_from_harmonics(a)
    return SpectralMetrics(sndr, enob(sndr), sfdr, a, worst)
