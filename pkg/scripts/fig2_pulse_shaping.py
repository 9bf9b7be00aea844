"""Spectra of the Slepian (L=10) and truncated RRC (L=37) pulses against the -35 dBr mask."""

import argparse
from pathlib import Path

from smas.figures import fig2
from smas.pulse import default_mask, mask_margin, psd, rrc_taps, slepian_taps


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", type=Path, default=Path("results"))
    args = ap.parse_args()

    for path in fig2(args.outdir):
        print("wrote", path)

    # shortest filter of each kind that still clears the mask
    mask = default_mask()
    for name, make, lengths in (
        ("slepian", lambda n: slepian_taps(n, 0.65), range(4, 40)),
        ("rrc", lambda n: rrc_taps(n, 0.4), range(5, 81, 2)),
    ):
        shortest = next(n for n in lengths if mask_margin(psd(make(n)), mask) >= 0)
        print(f"{name}: shortest compliant length {shortest}")


if __name__ == "__main__":
    main()
