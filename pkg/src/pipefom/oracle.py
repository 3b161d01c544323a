"""Behavioral reference: run samples through the impaired stage chain.

This is the slow path the analytic engine is checked against.  Every sample
goes through each sub-ADC decision, the impaired residue amplifier and the
final flash; the output code is rebuilt by RSD digital correction.  INL is
read off the measured code transitions, SNDR/SFDR off a quantized sine via
direct per-harmonic sums (no FFT).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arch import Architecture, _contribution, flash_step, sub_adcs
from .impair import ImpairmentParams, impaired_residue
from .inl import InlProfile
from .spectral import SpectralMetrics, enob

_BISECT_STEPS = 64
_HARM_BLOCK = 64


@dataclass(frozen=True, eq=False)
class TransferCurve:
    resolution: int
    transitions: np.ndarray
    monotonic: bool
    overrange: int = 0
    missing_codes: int = 0

    @property
    def q(self) -> float:
        return 2.0 / 2**self.resolution


def convert(a: Architecture, p: ImpairmentParams, u) -> tuple[np.ndarray, int]:
    """Output codes for inputs ``u`` in [-1, 1], plus the count of clamped residues."""
    n_bits = a.bits
    v = np.asarray(u, dtype=float)
    code = np.full(v.shape, 2 ** (n_bits - 1), dtype=np.int64)
    resolved = 0
    overrange = 0
    for j, (stage, adc) in enumerate(zip(a.stages[:-1], sub_adcs(a))):
        resolved += _contribution(stage, first=(j == 0))
        d = adc.decide(v)
        r = impaired_residue(adc.gain * v - d, p)
        clipped = np.abs(r) > 1.0
        overrange += int(np.count_nonzero(clipped))
        v = np.clip(r, -1.0, 1.0)
        code += d.astype(np.int64) << (n_bits - resolved - 1)
    last = a.stages[-1]
    half = 2 ** (last.n - 1)
    flash = np.clip(np.floor(v / flash_step(last)).astype(np.int64) + half, 0, 2 * half - 1)
    code += flash - half
    return np.clip(code, 0, 2**n_bits - 1), overrange


def simulate_transfer(a: Architecture, p: ImpairmentParams, points: int | None = None) -> TransferCurve:
    """Locate every code transition of the simulated converter.

    A linear sweep brackets the first input at which each code (or any
    higher one) appears; bisection then narrows each bracket to float
    resolution.  Codes that never appear before a higher one count as
    missing and share that code's transition.
    """
    n_bits = a.bits
    if points is None:
        points = 2 ** (n_bits + 6)
    if points < 2 ** (n_bits + 4):
        raise ValueError(f"sweep needs at least 2^(N+4) = {2 ** (n_bits + 4)} points")
    u = np.linspace(-1.0, 1.0, points + 1)
    codes, overrange = convert(a, p, u)
    reached = np.maximum.accumulate(codes)
    targets = np.arange(1, 2**n_bits)
    idx = np.searchsorted(reached, targets, side="left")

    lo = u[np.clip(idx - 1, 0, points)]
    hi = u[np.clip(idx, 0, points)]
    never = idx > points
    hi[never] = 1.0
    lo[never] = 1.0
    at_start = idx == 0
    lo[at_start] = hi[at_start] = -1.0
    active = ~(never | at_start)
    t_act = targets[active]
    lo_a, hi_a = lo[active], hi[active]
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (lo_a + hi_a)
        up = convert(a, p, mid)[0] >= t_act
        hi_a = np.where(up, mid, hi_a)
        lo_a = np.where(up, lo_a, mid)
    hi[active] = hi_a

    widths = np.diff(hi)
    missing = int(np.count_nonzero(widths <= 0)) + int(np.count_nonzero(never))
    monotonic = bool(np.all(np.diff(codes) >= 0))
    return TransferCurve(n_bits, hi, monotonic, overrange, missing)


def measured_inl(curve: TransferCurve) -> InlProfile:
    ideal = -1.0 + np.arange(1, 2**curve.resolution) * curve.q
    return InlProfile(curve.resolution, (curve.transitions - ideal) / curve.q)


def _cosine_sums(theta: np.ndarray, y: np.ndarray, k_max: int) -> np.ndarray:
    """``sum_m y[m] cos(k theta[m])`` for k = 0..k_max."""
    inner = np.exp(1j * np.outer(np.arange(_HARM_BLOCK), theta))
    inner_re, inner_im = np.ascontiguousarray(inner.real), np.ascontiguousarray(inner.imag)
    out = np.empty((k_max // _HARM_BLOCK + 1) * _HARM_BLOCK)
    for m in range(k_max // _HARM_BLOCK + 1):
        outer = y * np.exp(1j * m * _HARM_BLOCK * theta)
        # Re(o z) = o.re z.re - o.im z.im
        out[m * _HARM_BLOCK : (m + 1) * _HARM_BLOCK] = inner_re @ outer.real - inner_im @ outer.imag
    return out[: k_max + 1]


def measure_sine_metrics(
    a: Architecture, p: ImpairmentParams, samples: int | None = None, k_max: int | None = None
) -> SpectralMetrics:
    """Quantize one period of a full-scale cosine and measure it.

    Samples sit at the midpoints of ``samples`` equal phase steps, so the
    record is coherent and even-symmetric; only the half period is
    converted.  SNDR is fundamental power over everything else (DC aside).
    """
    n_bits = a.bits
    if samples is None:
        samples = 2 ** (n_bits + 8)
    if samples < 2 ** (n_bits + 6):
        raise ValueError(f"need at least 2^(N+6) = {2 ** (n_bits + 6)} samples")
    if k_max is None:
        k_max = 2 ** (n_bits + 2)
    half = samples // 2
    theta = (np.arange(half) + 0.5) * (2.0 * np.pi / samples)
    codes, _ = convert(a, p, np.cos(theta))
    q = 2.0 / 2**n_bits
    y = -1.0 + (codes + 0.5) * q
    sums = _cosine_sums(theta, y, k_max)
    # the other half period mirrors this one: a_k = (2/M) * 2 * sum over half
    harm = 4.0 * sums[1:] / samples
    dc = 2.0 * sums[0] / samples
    power = np.mean(y * y) - dc * dc
    signal = 0.5 * harm[0] ** 2
    sndr = float(10.0 * np.log10(signal / (power - signal)))
    mag = np.maximum(np.abs(harm), 1e-300)
    spur = int(np.argmax(mag[1:])) + 1
    sfdr = float(20.0 * np.log10(mag[0] / mag[spur]))
    return SpectralMetrics(sndr, enob(sndr), sfdr, harm, spur + 1)
