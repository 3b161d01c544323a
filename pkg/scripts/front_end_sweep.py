"""Track the top-FOM architecture as the residue impairments are scaled down.

Prints, per impairment scale, the winning configuration, its first-stage
resolution and the rank of a fixed reference configuration.
"""

import argparse

from pipefom.fom import ExploreOptions, FomLimits, explore
from pipefom.impair import ImpairmentParams


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bits", type=int, default=10)
    ap.add_argument("--eps-gain", type=float, default=-0.015)
    ap.add_argument("--alpha-nl", type=float, default=0.2)
    ap.add_argument("--scales", type=float, nargs="+", default=[1.0, 0.5, 0.25, 0.1, 0.05, 0.02, 0.01])
    ap.add_argument("--reference", default="3/1.5/1.5/1.5/1.5/1.5/1.5/2")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print(f"{'scale':>6}  {'eps_gain':>9}  {'alpha_nl':>8}  {'top config':<32}  {'FOM':>6}  ref rank")
    for s in args.scales:
        p = ImpairmentParams(args.eps_gain * s, args.alpha_nl * s)
        ex = explore(args.bits, p, FomLimits(), ExploreOptions(workers=args.workers))
        names = [r.config for r in ex]
        rank = names.index(args.reference) + 1 if args.reference in names else None
        print(f"{s:>6g}  {p.eps_gain:>9.5f}  {p.alpha_nl:>8.4f}  {ex[0].config:<32}  {ex[0].fom:>6.4f}  {rank}")


if __name__ == "__main__":
    main()
