"""Pipeline stage decompositions: parsing, RSD bit accounting, enumeration.

A stage is either the 1.5-bit RSD stage (``HALF``) or an n-bit stage
(``FULL(n)``).  The first stage contributes its full n bits, every later
1.5-bit stage one bit and every later n-bit stage (the final flash included)
n - 1 bits.

Stage strings use the row-label grammar ``stage ("/" stage)*`` with
``stage := "1.5" | integer >= 2``, e.g. ``"3/1.5/1.5/2"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_STAGE_BITS = 16
MIN_BITS = 3
MAX_BITS = 16

_STAGE_RE = re.compile(r"^(?:1\.5|[0-9]+)$")


class ArchitectureError(ValueError):
    """Invalid stage string or violated pipeline construction rule.

    ``rule`` names the violated rule (``"syntax"``, ``"first-stage"``,
    ``"last-stage"``, ``"min-stages"``, ``"stage-range"``, ``"min-bits"``).
    """

    def __init__(self, rule: str, message: str):
        super().__init__(f"{rule}: {message}")
        self.rule = rule


@dataclass(frozen=True)
class StageSpec:
    """One pipeline stage.  ``n == 0`` encodes the 1.5-bit stage."""

    n: int

    def __post_init__(self):
        if self.n != 0 and not 2 <= self.n <= MAX_STAGE_BITS:
            raise ArchitectureError(
                "stage-range",
                f"stage resolution must be 1.5 or an integer in 2..{MAX_STAGE_BITS}, got {self.n}",
            )

    @classmethod
    def half(cls) -> StageSpec:
        return cls(0)

    @classmethod
    def full(cls, n: int) -> StageSpec:
        if n < 2:
            raise ArchitectureError("stage-range", f"FULL stage needs n >= 2, got {n}")
        return cls(n)

    @property
    def is_half(self) -> bool:
        return self.n == 0

    @property
    def comparators(self) -> int:
        return 2 if self.is_half else 2**self.n - 1

    @property
    def sort_key(self) -> int:
        # HALF sorts before FULL(2); FULL ascending
        return self.n

    def __str__(self) -> str:
        return "1.5" if self.is_half else str(self.n)


HALF = StageSpec.half()


def _contribution(stage: StageSpec, first: bool) -> int:
    if stage.is_half:
        return 1
    return stage.n if first else stage.n - 1


@dataclass(frozen=True)
class Architecture:
    stages: tuple[StageSpec, ...]

    def __post_init__(self):
        stages = tuple(self.stages)
        object.__setattr__(self, "stages", stages)
        if len(stages) < 2:
            raise ArchitectureError("min-stages", "a pipeline needs at least two stages")
        if stages[0].is_half:
            raise ArchitectureError(
                "first-stage", "first stage must be FULL (digital correction is ineffective there)"
            )
        if stages[-1].is_half:
            raise ArchitectureError("last-stage", "last stage must be FULL (it is a plain flash)")
        if self.bits < MIN_BITS:
            raise ArchitectureError("min-bits", f"resolution {self.bits} < {MIN_BITS}")

    @property
    def bits(self) -> int:
        return sum(_contribution(s, j == 0) for j, s in enumerate(self.stages))

    @property
    def comparators(self) -> int:
        return sum(s.comparators for s in self.stages)

    @property
    def sort_key(self) -> tuple[int, ...]:
        return tuple(s.sort_key for s in self.stages)

    def __str__(self) -> str:
        return format_architecture(self)

    def __len__(self) -> int:
        return len(self.stages)


def parse_architecture(text: str) -> Architecture:
    """Parse a stage string such as ``"2/1.5/1.5/2"``.

    Raises
    ------
    ArchitectureError
        On malformed text or a violated construction rule; ``err.rule`` names it.
    """
    if not isinstance(text, str) or not text:
        raise ArchitectureError("syntax", "empty stage string")
    stages = []
    for token in text.split("/"):
        if not _STAGE_RE.match(token):
            raise ArchitectureError("syntax", f"bad stage token {token!r} in {text!r}")
        if token == "1.5":
            stages.append(HALF)
        else:
            n = int(token)
            if n < 2:
                raise ArchitectureError("stage-range", f"stage resolution must be >= 2, got {token!r}")
            stages.append(StageSpec(n))
    return Architecture(tuple(stages))


def format_architecture(a: Architecture) -> str:
    return "/".join(str(s) for s in a.stages)


def effective_bits(a: Architecture) -> int:
    return a.bits


def comparator_count(a: Architecture) -> int:
    return a.comparators


def _check_bits(n_bits: int) -> None:
    if not isinstance(n_bits, (int, np.integer)) or not MIN_BITS <= n_bits <= MAX_BITS:
        raise ValueError(f"target resolution must be an integer in {MIN_BITS}..{MAX_BITS}, got {n_bits!r}")


@lru_cache(maxsize=None)
def _tails(remaining: int) -> tuple[tuple[StageSpec, ...], ...]:
    """All stage tails (middle stages + final flash) resolving ``remaining`` bits."""
    out = []
    if remaining + 1 <= MAX_STAGE_BITS:
        out.append((StageSpec(remaining + 1),))
    middle = [HALF] + [StageSpec(n) for n in range(2, MAX_STAGE_BITS + 1)]
    for s in middle:
        c = _contribution(s, first=False)
        if c < remaining:
            out.extend((s,) + rest for rest in _tails(remaining - c))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_architectures(n_bits: int) -> tuple[Architecture, ...]:
    """Every valid architecture with ``effective_bits == n_bits``, canonically ordered.

    The order is lexicographic over stage sequences with 1.5 before 2 and
    n-bit stages ascending.
    """
    _check_bits(n_bits)
    found = []
    for n1 in range(2, min(n_bits - 1, MAX_STAGE_BITS) + 1):
        head = StageSpec(n1)
        found.extend(Architecture((head,) + tail) for tail in _tails(n_bits - n1))
    found.sort(key=lambda a: a.sort_key)
    return tuple(found)


def architecture_count(n_bits: int) -> int:
    """Size of the design space, counted without materialising it."""
    _check_bits(n_bits)

    @lru_cache(maxsize=None)
    def tails(r: int) -> int:
        total = 1 if r + 1 <= MAX_STAGE_BITS else 0
        # HALF and FULL(2) both resolve one bit; FULL(k) resolves k - 1
        for c in range(1, r):
            ways = 2 if c == 1 else (1 if c + 1 <= MAX_STAGE_BITS else 0)
            total += ways * tails(r - c)
        return total

    return sum(tails(n_bits - n1) for n1 in range(2, min(n_bits - 1, MAX_STAGE_BITS) + 1))


def comparator_extrema(n_bits: int) -> tuple[int, int]:
    """(min, max) comparator count over the whole N-bit design space."""
    counts = [a.comparators for a in enumerate_architectures(n_bits)]
    return min(counts), max(counts)


@dataclass(frozen=True)
class StageGainLedger:
    """Interstage gains ``G_j`` (non-final stages) and input referral ``P_j``.

    ``referral[j]`` is the product of the gains ahead of stage j, so
    ``referral[0] == 1`` and an error at the output of stage j is divided by
    ``referral[j + 1]`` when referred to the converter input.
    """

    gains: tuple[float, ...]
    referral: tuple[float, ...]


def stage_gain(stage: StageSpec, first: bool) -> int:
    if stage.is_half:
        return 2
    return 2**stage.n if first else 2 ** (stage.n - 1)


def gain_ledger(a: Architecture) -> StageGainLedger:
    gains = tuple(float(stage_gain(s, j == 0)) for j, s in enumerate(a.stages[:-1]))
    referral = [1.0]
    for g in gains:
        referral.append(referral[-1] * g)
    return StageGainLedger(gains, tuple(referral))


@dataclass(frozen=True)
class SubAdc:
    """Ideal decision rule of a non-final stage in normalized units.

    A sample ``v`` gets level ``levels[k]`` where ``k`` counts the thresholds
    at or below ``v``; the ideal residue is ``gain * v - level``.
    """

    thresholds: np.ndarray
    levels: np.ndarray
    gain: float

    def decide(self, v, strict: bool = False):
        """Decision level for ``v``.

        ``strict=True`` treats a sample sitting exactly on a threshold as
        below it, i.e. the limit from the lower side.
        """
        side = "left" if strict else "right"
        return self.levels[np.searchsorted(self.thresholds, v, side=side)]

    def residue(self, v, strict: bool = False):
        v = np.asarray(v, dtype=float)
        return self.gain * v - self.decide(v, strict)


def sub_adc(stage: StageSpec, first: bool) -> SubAdc:
    """Decision sets chosen so a zero-impairment pipeline is an ideal quantizer.

    First n-bit stage: 2^n - 1 uniform thresholds, odd-integer levels, gain
    2^n, residue over the full [-1, 1].  1.5-bit stage: thresholds at +-1/4,
    levels {-1, 0, 1}, gain 2.  Later n-bit stage: gain G = 2^(n-1), integer
    levels -G..G with thresholds halfway between, residue within [-1/2, 1/2].
    """
    g = stage_gain(stage, first)
    if stage.is_half:
        thresholds = np.array([-0.25, 0.25])
        levels = np.array([-1.0, 0.0, 1.0])
    elif first:
        k = np.arange(1, g)
        thresholds = (-g + 2.0 * k) / g
        levels = -g + 1.0 + 2.0 * np.arange(g)
    else:
        levels = np.arange(-g, g + 1, dtype=float)
        thresholds = (levels[:-1] + 0.5) / g
    return SubAdc(thresholds, levels, float(g))


def sub_adcs(a: Architecture) -> list[SubAdc]:
    return [sub_adc(s, j == 0) for j, s in enumerate(a.stages[:-1])]


def flash_step(stage: StageSpec) -> float:
    """Comparator spacing of the final flash, which spans [-2, 2]."""
    return 4.0 / 2**stage.n
