"""Spectral efficiency of AS and SM as the antenna switching time grows.

Symbol rate 25 MSymb/s, QPSK, roll-off 0.4, Slepian pulses with zeta=2.5 for
SM and a 1 ms coherence time for AS.
"""

import argparse

import numpy as np

from smas.efficiency import EfficiencyParams, gamma_as_switching, gamma_sm_switching


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nt", type=int, nargs="+", default=[8, 64])
    ap.add_argument("--tc", type=float, default=1e-3)
    args = ap.parse_args()

    t_0 = 1 / 25e6
    switch_times = np.concatenate([[0.0], np.logspace(-9, -6, 7)])
    print(f"{'t_s [s]':>10}" + "".join(f"  AS n_t={n:<3} SM n_t={n:<3}" for n in args.nt))
    for t_s in switch_times:
        cells = []
        for n_t in args.nt:
            p = EfficiencyParams(2, 0.4, 2.5, n_t, args.tc, t_s, t_0)
            cells.append(f"  {gamma_as_switching(p):10.4f} {gamma_sm_switching(p):10.4f}")
        print(f"{t_s:10.2e}" + "".join(cells))


if __name__ == "__main__":
    main()
