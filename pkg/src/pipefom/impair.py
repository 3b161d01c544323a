"""Residue-amplifier impairments: relative gain error and tanh-shaped compression."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# below this the tanh model is replaced by its limit (identity) to dodge 0/0
_ALPHA_EPS = 1e-12


@dataclass(frozen=True)
class ImpairmentParams:
    eps_gain: float = -0.015
    alpha_nl: float = 0.2

    def __post_init__(self):
        if not abs(self.eps_gain) < 1:
            raise ValueError(f"|eps_gain| must be < 1, got {self.eps_gain}")
        if not self.alpha_nl >= 0:
            raise ValueError(f"alpha_nl must be >= 0, got {self.alpha_nl}")

    @property
    def ideal(self) -> bool:
        return self.eps_gain == 0 and self.alpha_nl == 0


IDEAL = ImpairmentParams(0.0, 0.0)


def nonlinear_tf(u, alpha_nl: float):
    """Compressive amplifier curve ``atanh(tanh(a) u) / a`` on [-1, 1].

    Maps +-1 onto +-1 exactly; ``alpha_nl -> 0`` tends to the identity.
    """
    u = np.asarray(u, dtype=float)
    if alpha_nl < _ALPHA_EPS:
        return u.copy() if u.ndim else u[()]
    out = np.arctanh(np.tanh(alpha_nl) * u) / alpha_nl
    # pin the normalization points, atanh(tanh(a)) / a may be off by an ulp
    out = np.where(np.abs(u) == 1.0, u, out)
    return out if out.ndim else out[()]


def gain_tf(u, eps_gain: float):
    return (1.0 + eps_gain) * np.asarray(u, dtype=float)


def impaired_residue(u, p: ImpairmentParams):
    """Actual residue for an ideal residue ``u``: compression first, then gain."""
    return gain_tf(nonlinear_tf(u, p.alpha_nl), p.eps_gain)


def stage_error(u, p: ImpairmentParams):
    """Output-referred residue error ``(1 + eps) NL(u) - u`` of one stage."""
    u = np.asarray(u, dtype=float)
    nl = nonlinear_tf(u, p.alpha_nl)
    # grouped so that stage_error(1) == eps_gain exactly
    return (nl - u) + p.eps_gain * nl
