"""Command-line front end: ``explore``, ``eval``, ``verify``, ``count``.

Exit status: 0 success, 1 usage or validation error, 2 verification outside
tolerance, 3 output could not be written.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from dataclasses import dataclass

import numpy as np

from .arch import ArchitectureError, architecture_count, comparator_extrema, parse_architecture
from .fom import Exploration, ExploreOptions, FomLimits, compute_weights, explore, score
from .impair import ImpairmentParams
from .inl import global_inl
from .oracle import measure_sine_metrics, measured_inl, simulate_transfer
from .report import RENDERERS, Report, params_dict, report_from_exploration, weights_dict
from .spectral import default_harmonics, spectral_metrics

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TOLERANCE = 2
EXIT_IO = 3

VERIFY_MAX_BITS = 10
INL_TOL_LSB = 0.25
SNDR_TOL_DB = 1.0
SFDR_TOL_DB = 3.0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for verify failures here
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class RunOptions:
    bits: int = 10
    eps_gain: float = -0.015
    alpha_nl: float = 0.2
    sndr_lim_db: float = 56.0
    sfdr_lim_db: float = 75.0
    comp_lim: float = 60.0
    top: int | None = None
    fmt: str = "table"
    out: str | None = None
    harmonics: int | None = None
    prefilter: bool | None = None
    workers: int = 1

    @property
    def params(self) -> ImpairmentParams:
        return ImpairmentParams(self.eps_gain, self.alpha_nl)

    @property
    def limits(self) -> FomLimits:
        return FomLimits(self.sndr_lim_db, self.sfdr_lim_db, self.comp_lim)


def _common(bits: bool) -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    if bits:
        p.add_argument("--bits", type=int, default=10, help="target resolution N (default 10)")
    p.add_argument("--eps-gain", type=float, default=-0.015, help="relative residue gain error")
    p.add_argument("--alpha-nl", type=float, default=0.2, help="tanh nonlinearity coefficient")
    p.add_argument("--sndr-lim-db", type=float, default=56.0)
    p.add_argument("--sfdr-lim-db", type=float, default=75.0)
    p.add_argument("--comp-lim", type=float, default=60.0)
    p.add_argument("--top", type=int, default=None, help="keep only the best K rows")
    p.add_argument("--format", dest="fmt", choices=sorted(RENDERERS), default="table")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--harmonics", type=int, default=None, help="K_max (default 2^(N+2))")
    p.add_argument("--no-prefilter", dest="prefilter", action="store_false", default=None,
                   help="always rank in a single full-K_max pass")
    p.add_argument("--workers", type=int, default=1, help="worker processes for explore")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pipefom", description="Pipeline ADC architecture ranking by figure of merit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("explore", parents=[_common(bits=True)], help="rank every N-bit architecture")
    for name, text in (("eval", "score one architecture"), ("verify", "check analytic metrics against simulation")):
        sp = sub.add_parser(name, parents=[_common(bits=False)], help=text)
        sp.add_argument("config", help="stage string, e.g. 3/1.5/1.5/2")
    cp = sub.add_parser("count", help="size of the N-bit design space")
    cp.add_argument("--bits", type=int, default=10)
    return parser


def _options(ns: argparse.Namespace) -> RunOptions:
    fields = RunOptions.__dataclass_fields__
    opts = RunOptions(**{k: v for k, v in vars(ns).items() if k in fields})
    if opts.top is not None and opts.top < 1:
        raise ValueError("--top must be >= 1")
    if opts.harmonics is not None and opts.harmonics < 2:
        raise ValueError("--harmonics must be >= 2")
    if opts.workers < 1:
        raise ValueError("--workers must be >= 1")
    _ = opts.params, opts.limits  # constructors validate
    return opts


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def cmd_explore(opts: RunOptions) -> str:
    ex = explore(
        opts.bits, opts.params, opts.limits,
        ExploreOptions(k_max=opts.harmonics, prefilter=opts.prefilter, workers=opts.workers),
    )
    return RENDERERS[opts.fmt](report_from_exploration(ex, opts.top))


def cmd_eval(config: str, opts: RunOptions) -> str:
    a = parse_architecture(config)
    n_bits = a.bits
    k_max = opts.harmonics or default_harmonics(n_bits)
    comp_min, comp_max = comparator_extrema(n_bits)
    w = compute_weights(n_bits, opts.limits, comp_min, k_max)
    row = score(a, opts.params, w, k_max)
    ex = Exploration(n_bits, opts.params, opts.limits, w, k_max, comp_max, (row,))
    return RENDERERS[opts.fmt](Report(params_dict(ex), weights_dict(w, comp_max), (row,)))


@dataclass(frozen=True)
class Verification:
    config: str
    inl_dev_lsb: float
    sndr_analytic: float
    sndr_oracle: float
    sfdr_analytic: float
    sfdr_oracle: float
    overrange: int
    monotonic: bool

    @property
    def sndr_delta(self) -> float:
        return abs(self.sndr_analytic - self.sndr_oracle)

    @property
    def sfdr_delta(self) -> float:
        return abs(self.sfdr_analytic - self.sfdr_oracle)

    @property
    def passed(self) -> bool:
        return self.inl_dev_lsb <= INL_TOL_LSB and self.sndr_delta <= SNDR_TOL_DB and self.sfdr_delta <= SFDR_TOL_DB


def verify(config: str, p: ImpairmentParams, k_max: int | None = None) -> Verification:
    a = parse_architecture(config)
    if a.bits > VERIFY_MAX_BITS:
        raise ValueError(f"verify is limited to N <= {VERIFY_MAX_BITS} (got {a.bits}); the sweep grows as 2^N")
    profile = global_inl(a, p)
    curve = simulate_transfer(a, p)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        analytic = spectral_metrics(profile, k_max)
    oracle = measure_sine_metrics(a, p, k_max=k_max)
    dev = float(np.max(np.abs(profile.inl - measured_inl(curve).inl)))
    return Verification(str(a), dev, analytic.sndr_db, oracle.sndr_db, analytic.sfdr_dbc, oracle.sfdr_dbc,
                        curve.overrange, curve.monotonic)


def render_verification(v: Verification) -> str:
    mark = "PASS" if v.passed else "FAIL"
    return (
        f"config            {v.config}\n"
        f"INL max deviation {v.inl_dev_lsb:.4f} LSB   (tol {INL_TOL_LSB})\n"
        f"SNDR analytic     {v.sndr_analytic:.3f} dB  oracle {v.sndr_oracle:.3f} dB  "
        f"delta {v.sndr_delta:.3f}  (tol {SNDR_TOL_DB})\n"
        f"SFDR analytic     {v.sfdr_analytic:.3f} dBc oracle {v.sfdr_oracle:.3f} dBc "
        f"delta {v.sfdr_delta:.3f}  (tol {SFDR_TOL_DB})\n"
        f"residue overrange {v.overrange}\n"
        f"monotonic         {'yes' if v.monotonic else 'no'}\n"
        f"{mark}\n"
    )


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"pipefom: warning: {message}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    with warnings.catch_warnings():
        warnings.showwarning = _show_warning
        return _run(argv)


def _run(argv: list[str] | None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        if ns.command == "count":
            text, status = f"{architecture_count(ns.bits)}\n", EXIT_OK
            out = None
        else:
            opts = _options(ns)
            out = opts.out
            if ns.command == "explore":
                text, status = cmd_explore(opts), EXIT_OK
            elif ns.command == "eval":
                text, status = cmd_eval(ns.config, opts), EXIT_OK
            else:
                v = verify(ns.config, opts.params, opts.harmonics)
                text, status = render_verification(v), EXIT_OK if v.passed else EXIT_TOLERANCE
    except ArchitectureError as exc:
        print(f"pipefom: invalid architecture, {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"pipefom: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _emit(text, out)
    except OSError as exc:
        print(f"pipefom: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    return status


if __name__ == "__main__":
    sys.exit(main())
