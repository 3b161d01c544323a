"""Score the reference 10-bit rows and print them next to the published metrics.

Deviations are reported, not asserted; see tests/test_acceptance.py for the
gating checks.
"""

import argparse
import warnings

from pipefom.arch import parse_architecture
from pipefom.fom import FomLimits, compute_weights, score
from pipefom.impair import ImpairmentParams

# config -> (SNDR dB, SFDR dBc, FOM) as published; two labels corrected to 10-bit forms
PUBLISHED = {
    "2/2/2/7": (49.7, 81.7, 0.77),
    "2/9": (53.0, 84.5, 0.79),
    "2/2/2/2/2/2/2/2/2": (49.4, 79.7, 0.85),
    "9/2": (62.0, 84.6, 0.85),
    "2/1.5/2/2/2/2/2/1.5/2": (51.0, 79.1, 0.87),
    "2/1.5/1.5/1.5/1.5/1.5/1.5/1.5/2": (52.9, 84.9, 0.94),
    "4/1.5/1.5/2/1.5/1.5/2": (60.0, 86.7, 0.95),
    "3/1.5/1.5/1.5/1.5/1.5/1.5/2": (57.5, 85.9, 0.96),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--eps-gain", type=float, default=-0.015)
    ap.add_argument("--alpha-nl", type=float, default=0.2)
    args = ap.parse_args()
    p = ImpairmentParams(args.eps_gain, args.alpha_nl)
    w = compute_weights(10, FomLimits())

    print(f"{'config':<34}{'Comp':>5}  {'SNDR':>6} {'pub':>5} {'d':>6}  {'SFDR':>6} {'pub':>5} {'d':>6}  {'FOM':>5} {'pub':>5}")
    for config, (sndr, sfdr, fom) in PUBLISHED.items():
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            r = score(parse_architecture(config), p, w)
        print(
            f"{config:<34}{r.comparators:>5}  {r.sndr_db:>6.1f} {sndr:>5.1f} {r.sndr_db - sndr:>+6.1f}  "
            f"{r.sfdr_dbc:>6.1f} {sfdr:>5.1f} {r.sfdr_dbc - sfdr:>+6.1f}  {r.fom:>5.2f} {fom:>5.2f}"
        )


if __name__ == "__main__":
    main()
