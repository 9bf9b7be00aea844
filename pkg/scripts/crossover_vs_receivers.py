"""Where SM overtakes AS (8 transmit antennas, QPSK) as receive antennas grow."""

import argparse

import numpy as np

from smas.harness import LinkConfig, find_crossover, run_sweep

# each grid brackets the crossing; points far past it would only burn budget
GRIDS = {
    16: np.arange(-15.0, -2.0, 2.0),
    32: np.arange(-19.0, -8.0, 2.0),
    64: np.arange(-23.0, -12.0, 2.0),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-errors", type=int, default=200)
    ap.add_argument("--max-bits", type=int, default=2 * 10**7)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    for n_r, grid in GRIDS.items():
        kw = dict(ebn0_db_grid=tuple(grid), min_errors=args.min_errors, max_bits=args.max_bits)
        sm = run_sweep(LinkConfig("sm", 8, n_r, **kw), args.workers)
        as_ = run_sweep(LinkConfig("as", 8, n_r, **kw), args.workers)
        x = find_crossover(sm, as_)
        print(f"n_r={n_r:>3}  crossover {'none' if x is None else f'{x:.2f}'} dB")


if __name__ == "__main__":
    main()
