"""BER-versus-Eb/N0 sweeps for the 8-antenna QPSK and 64-antenna scenarios.

A full-depth run of either figure takes hours on one core; lower
``--max-bits`` for a quick look or raise ``--workers`` on a bigger machine.
"""

import argparse
import csv
from pathlib import Path

from smas.figures import Budget, run_figure_recipe


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("figure", choices=["fig3", "fig4"])
    ap.add_argument("--outdir", type=Path, default=Path("results"))
    ap.add_argument("--min-errors", type=int, default=200)
    ap.add_argument("--max-bits", type=int, default=10**7)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    budget = Budget(args.min_errors, args.max_bits, args.seed, args.workers)
    ber_path, cross_path = run_figure_recipe(args.figure, args.outdir, budget)
    print("wrote", ber_path)
    with open(cross_path, newline="") as fh:
        for row in csv.DictReader(fh):
            print(f"n_r={row['n_r']:>3}  crossover {row['crossover_db'] or 'none'} dB")


if __name__ == "__main__":
    main()
