"""Pipeline ADC architecture exploration with an analytic INL/SNDR/SFDR model."""

from .arch import Architecture, ArchitectureError, StageSpec, enumerate_architectures, parse_architecture
from .fom import ExploreOptions, FomLimits, FomWeights, ScoredConfig, explore, score
from .impair import IDEAL, ImpairmentParams
from .inl import InlProfile, global_inl
from .spectral import SpectralMetrics, spectral_metrics

__all__ = [
    "Architecture",
    "ArchitectureError",
    "ExploreOptions",
    "FomLimits",
    "FomWeights",
    "IDEAL",
    "ImpairmentParams",
    "InlProfile",
    "ScoredConfig",
    "SpectralMetrics",
    "StageSpec",
    "enumerate_architectures",
    "explore",
    "global_inl",
    "parse_architecture",
    "score",
    "spectral_metrics",
]
