"""Figure of merit and the exhaustive ranking of an N-bit design space."""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arch import Architecture, comparator_extrema, enumerate_architectures, parse_architecture
from .impair import ImpairmentParams
from .inl import InlProfile, global_inl
from .spectral import default_harmonics, enob, sfdr_from_harmonics, harmonic_coefficients, sndr_from_inl

PREFILTER_HARMONICS = 64
RESCORE_FRACTION = 0.10


@dataclass(frozen=True)
class FomLimits:
    """Targets the converter should meet: minimum SNDR/SFDR, maximum comparator count."""

    sndr_lim_db: float = 56.0
    sfdr_lim_db: float = 75.0
    comp_lim: float = 60.0

    def __post_init__(self):
        if min(self.sndr_lim_db, self.sfdr_lim_db, self.comp_lim) <= 0:
            raise ValueError("FOM limits must be positive")


@dataclass(frozen=True)
class FomWeights:
    alpha: float
    beta: float
    gamma: float
    delta: float
    sndr_max_db: float
    sfdr_max_dbc: float
    comp_min: int


@dataclass(frozen=True)
class ScoredConfig:
    config: str
    comparators: int
    sndr_db: float
    enob_bits: float
    sfdr_dbc: float
    fom: float
    worst_k: int = 0
    rescored: bool = True


def weights_from_maxima(
    sndr_max_db: float, sfdr_max_dbc: float, comp_min: int, limits: FomLimits
) -> FomWeights:
    alpha = limits.sndr_lim_db / sndr_max_db
    beta = limits.sfdr_lim_db / sfdr_max_dbc
    gamma = comp_min / limits.comp_lim
    if alpha > 1:
        warnings.warn(f"SNDR limit {limits.sndr_lim_db} dB exceeds the ideal {sndr_max_db:.2f} dB", stacklevel=2)
    if beta > 1:
        warnings.warn(f"SFDR limit {limits.sfdr_lim_db} dBc exceeds the ideal {sfdr_max_dbc:.2f} dBc", stacklevel=2)
    if gamma > 1:
        warnings.warn(f"comparator limit {limits.comp_lim} is below the minimum {comp_min}", stacklevel=2)
    delta = 1.0 / (alpha + beta + gamma)
    return FomWeights(alpha, beta, gamma, delta, sndr_max_db, sfdr_max_dbc, comp_min)


def ideal_maxima(n_bits: int, k_max: int | None = None) -> tuple[float, float]:
    """(SNDR_max, SFDR_max) of the ideal N-bit quantizer."""
    ideal = InlProfile.zeros(n_bits)
    sfdr, _ = sfdr_from_harmonics(harmonic_coefficients(ideal, k_max))
    return sndr_from_inl(ideal), sfdr


def compute_weights(
    n_bits: int, limits: FomLimits, comp_min: int | None = None, k_max: int | None = None
) -> FomWeights:
    if comp_min is None:
        comp_min = comparator_extrema(n_bits)[0]
    sndr_max, sfdr_max = ideal_maxima(n_bits, k_max)
    return weights_from_maxima(sndr_max, sfdr_max, comp_min, limits)


def fom_score(sndr_db: float, sfdr_dbc: float, comparators: int, w: FomWeights) -> float:
    """Weighted, normalized score; equals 1 at (SNDR_max, SFDR_max, Comp_min).

    Ratios are not clamped, so an impaired SFDR above the ideal can push the
    score slightly past 1.
    """
    return w.delta * (
        w.alpha * sndr_db / w.sndr_max_db
        + w.beta * sfdr_dbc / w.sfdr_max_dbc
        + w.gamma * w.comp_min / comparators
    )


def evaluate(a: Architecture | str, p: ImpairmentParams, k_max: int | None = None) -> tuple[float, float, int]:
    """(SNDR dB, SFDR dBc, worst harmonic) of one architecture."""
    if isinstance(a, str):
        a = parse_architecture(a)
    profile = global_inl(a, p)
    sfdr, worst = sfdr_from_harmonics(harmonic_coefficients(profile, k_max))
    return sndr_from_inl(profile), sfdr, worst


def score(a: Architecture | str, p: ImpairmentParams, w: FomWeights, k_max: int | None = None) -> ScoredConfig:
    if isinstance(a, str):
        a = parse_architecture(a)
    sndr, sfdr, worst = evaluate(a, p, k_max)
    return ScoredConfig(str(a), a.comparators, sndr, enob(sndr), sfdr, fom_score(sndr, sfdr, a.comparators, w), worst)


def _evaluate_job(job):
    config, p, k_max = job
    # clamped / non-monotonic transitions are expected for bad configs in a sweep
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        return evaluate(config, p, k_max)


def _evaluate_all(archs, p, k_max, workers):
    jobs = [(str(a), p, k_max) for a in archs]
    if workers <= 1 or len(jobs) < 2:
        return [_evaluate_job(j) for j in jobs]
    chunk = max(1, len(jobs) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_evaluate_job, jobs, chunksize=chunk))


@dataclass(frozen=True)
class ExploreOptions:
    k_max: int | None = None
    # None: two-phase ranking only above 10 bits
    prefilter: bool | None = None
    prefilter_harmonics: int = PREFILTER_HARMONICS
    rescore_fraction: float = RESCORE_FRACTION
    workers: int = 1


@dataclass(frozen=True)
class Exploration:
    n_bits: int
    params: ImpairmentParams
    limits: FomLimits
    weights: FomWeights
    k_max: int
    comp_max: int
    rows: tuple[ScoredConfig, ...]
    prefilter: bool = False
    rescored: int = field(default=0)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def by_config(self) -> dict[str, ScoredConfig]:
        return {r.config: r for r in self.rows}


def _rank(archs, metrics, w):
    scored = []
    for a, (sndr, sfdr, worst) in zip(archs, metrics):
        fom = fom_score(sndr, sfdr, a.comparators, w)
        scored.append((a, ScoredConfig(str(a), a.comparators, sndr, enob(sndr), sfdr, fom, worst)))
    scored.sort(key=lambda t: (-t[1].fom, t[1].comparators, t[0].sort_key))
    return scored


def explore(
    n_bits: int,
    p: ImpairmentParams,
    limits: FomLimits = FomLimits(),
    options: ExploreOptions = ExploreOptions(),
) -> Exploration:
    """Score every N-bit architecture and rank by FOM.

    Order: FOM descending, then comparators ascending, then canonical stage
    order.  With the prefilter on, everything is first ranked with a short
    harmonic series and only the top ``rescore_fraction`` is rescored with
    the full one; the rest keep their prefilter metrics and rank below.
    """
    archs = enumerate_architectures(n_bits)
    comp_min, comp_max = comparator_extrema(n_bits)
    k_max = options.k_max or default_harmonics(n_bits)
    weights = compute_weights(n_bits, limits, comp_min, k_max)
    prefilter = options.prefilter if options.prefilter is not None else n_bits > 10
    prefilter = prefilter and options.prefilter_harmonics < k_max

    if not prefilter:
        ranked = _rank(archs, _evaluate_all(archs, p, k_max, options.workers), weights)
        return Exploration(n_bits, p, limits, weights, k_max, comp_max, tuple(r for _, r in ranked))

    k_pre = options.prefilter_harmonics
    w_pre = compute_weights(n_bits, limits, comp_min, k_pre)
    first = _rank(archs, _evaluate_all(archs, p, k_pre, options.workers), w_pre)
    n_top = max(1, math.ceil(options.rescore_fraction * len(first)))
    top = [a for a, _ in first[:n_top]]
    final = _rank(top, _evaluate_all(top, p, k_max, options.workers), weights)
    rest = [
        ScoredConfig(r.config, r.comparators, r.sndr_db, r.enob_bits, r.sfdr_dbc,
                     fom_score(r.sndr_db, r.sfdr_dbc, r.comparators, weights), r.worst_k, rescored=False)
        for _, r in first[n_top:]
    ]
    rows = tuple(r for _, r in final) + tuple(rest)
    return Exploration(n_bits, p, limits, weights, k_max, comp_max, rows, prefilter=True, rescored=n_top)
