"""Global INL/DNL of a pipeline from its per-stage residue errors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arch import Architecture, gain_ledger, sub_adcs
from .impair import ImpairmentParams, stage_error

MAX_INL_BITS = 14


@dataclass(frozen=True, eq=False)
class InlProfile:
    """Transition-level INL of an N-bit converter, in LSB.

    ``inl[i - 1]`` belongs to the transition between codes i - 1 and i,
    i = 1 .. 2^N - 1.  Full scale is [-1, 1], so ``q = 2 / 2^N``.
    """

    resolution: int
    inl: np.ndarray

    def __post_init__(self):
        inl = np.asarray(self.inl, dtype=float)
        if inl.shape != (2**self.resolution - 1,):
            raise ValueError(
                f"expected {2**self.resolution - 1} INL entries for N={self.resolution}, got {inl.shape}"
            )
        inl.setflags(write=False)
        object.__setattr__(self, "inl", inl)

    @property
    def q(self) -> float:
        return 2.0 / 2**self.resolution

    @property
    def dnl(self) -> np.ndarray:
        return dnl_from_inl(self)

    @property
    def ideal_transitions(self) -> np.ndarray:
        return -1.0 + np.arange(1, 2**self.resolution) * self.q

    @property
    def transitions(self) -> np.ndarray:
        """Actual transition levels in normalized input units."""
        return self.ideal_transitions + self.inl * self.q

    @property
    def monotonic(self) -> bool:
        return bool(np.all(self.dnl >= -1.0))

    @classmethod
    def zeros(cls, resolution: int) -> InlProfile:
        return cls(resolution, np.zeros(2**resolution - 1))


def dnl_from_inl(profile: InlProfile) -> np.ndarray:
    """``dnl[i] = inl[i + 1] - inl[i]``; any entry below -1 LSB marks a non-monotonic transfer."""
    return np.diff(profile.inl)


def stage_contributions(a: Architecture, p: ImpairmentParams) -> np.ndarray:
    """Input-referred transition displacement (LSB) caused by each residue stage.

    A residue error ``e`` at the output of stage j shifts the reconstructed
    output up by ``e / P[j+1]``, which moves the code transitions down by the
    same amount, so row j holds ``-e / (P[j+1] q)`` along the ideal residue
    trajectory of every global transition.  Where a transition sits exactly
    on a sub-ADC threshold the two one-sided trajectories differ; the mean of
    both is used, which keeps the profile odd.  The final flash has no
    residue amplifier and contributes nothing.
    """
    n_bits = a.bits
    if n_bits > MAX_INL_BITS:
        raise ValueError(f"resolution {n_bits} exceeds the INL array guard of {MAX_INL_BITS} bits")
    q = 2.0 / 2**n_bits
    x = -1.0 + np.arange(1, 2**n_bits) * q
    ledger = gain_ledger(a)
    rows = np.empty((len(a) - 1, x.size))
    v_lo = v_hi = x
    for j, adc in enumerate(sub_adcs(a)):
        r_lo = adc.residue(v_lo, strict=True)
        r_hi = adc.residue(v_hi, strict=False)
        e = 0.5 * (stage_error(r_lo, p) + stage_error(r_hi, p))
        rows[j] = -e / (ledger.referral[j + 1] * q)
        v_lo, v_hi = r_lo, r_hi
    return rows


def global_inl(a: Architecture, p: ImpairmentParams) -> InlProfile:
    rows = stage_contributions(a, p)
    return InlProfile(a.bits, rows.sum(axis=0))
