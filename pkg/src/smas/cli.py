"""Command-line front end.

    smas ber --scheme sm --nt 8 --nr 32 --mod qpsk --ebn0 -25:2:5
    smas filter --kind slepian --length 10 --alpha 0.65
    smas efficiency --nt 8,64 --ts 0,1e-8,1e-7
    smas crossover --nt 8 --nr 16,32,64
    smas figure fig3 --outdir out/

Tables go to ``--out`` (stdout if omitted) as CSV or JSON. ``figure``
writes into ``--outdir``, defaulting to ``$SMAS_OUTPUT_DIR`` or the current
directory.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import efficiency, pulse
from .figures import (
    BER_FIELDS,
    FIGURE_NR,
    Budget,
    curve_rows,
    dump_rows,
    filter_report,
    run_figure_recipe,
    spectrum_rows,
    write_rows,
)
from .harness import LinkConfig, find_crossover, run_sweep
from .transceiver import is_power_of_two

OUTPUT_DIR_ENV = "SMAS_OUTPUT_DIR"


@dataclass
class ExperimentSpec:
    subcommand: str
    parameters: dict = field(default_factory=dict)
    output_path: Optional[Path] = None
    format: str = "csv"


def parse_grid(text: str) -> tuple[float, ...]:
    """``start:step:stop`` (inclusive) or a single value, in dB."""
    parts = text.split(":")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad Eb/N0 grid {text!r}") from None
    if len(values) == 1:
        return (values[0],)
    if len(values) != 3 or values[1] == 0:
        raise argparse.ArgumentTypeError(f"grid must be start:step:stop, got {text!r}")
    start, step, stop = values
    n = int(np.floor((stop - start) / step + 1e-9)) + 1
    if n < 1:
        raise argparse.ArgumentTypeError(f"empty grid {text!r}")
    return tuple(round(start + i * step, 10) for i in range(n))


def _list_of(kind):
    def parse(text: str):
        try:
            return tuple(kind(v) for v in text.split(",") if v.strip())
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad list {text!r}") from None

    return parse


def _positive_int(text: str) -> int:
    try:
        value = int(float(text)) if "e" in text.lower() else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _add_budget(p: argparse.ArgumentParser, max_bits: int) -> None:
    p.add_argument("--min-errors", type=_positive_int, default=100, help="stop a point after this many bit errors")
    p.add_argument("--max-bits", type=_positive_int, default=max_bits, help="or after this many simulated bits")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--workers", type=_positive_int, default=1, help="processes for Eb/N0 points")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smas", description="Antenna selection vs spatial modulation link simulator."
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("ber", help="BER curve of one AS or SM link")
    p.add_argument("--scheme", choices=("as", "sm"), required=True)
    p.add_argument("--nt", type=_positive_int, required=True, help="transmit antennas")
    p.add_argument("--nr", type=_positive_int, required=True, help="receive antennas")
    p.add_argument("--mod", choices=("qpsk", "8qam"), default="qpsk")
    p.add_argument("--ebn0", type=parse_grid, default=parse_grid("-25:2:5"), help="Eb/N0 grid in dB, start:step:stop inclusive")
    p.add_argument("--symbols-per-block", type=_positive_int, default=1)
    _add_budget(p, 10**6)
    _add_output(p)

    p = sub.add_parser("filter", help="pulse-shaping taps, spectrum and mask margin")
    p.add_argument("--kind", choices=("slepian", "rrc"), required=True)
    p.add_argument("--length", type=_positive_int, required=True)
    p.add_argument("--alpha", type=float, default=0.65, help="Slepian main-lobe parameter")
    p.add_argument("--rolloff", type=float, default=0.4)
    p.add_argument("--oversampling", type=_positive_int, default=4)
    p.add_argument("--nfft", type=_positive_int, default=8192)
    p.add_argument("--mask-level", type=float, default=-35.0)
    p.add_argument("--transition", type=float, default=0.05,
                   help="stopband start above the RRC band edge, in symbol rates")
    p.add_argument("--taps-out", type=Path, default=None)
    _add_output(p)

    p = sub.add_parser("efficiency", help="spectral efficiency over switching time")
    p.add_argument("--gamma-mod", type=float, default=2.0)
    p.add_argument("--rolloff", type=float, default=0.4)
    p.add_argument("--zeta", type=float, default=2.5, help="SM rate-reduction factor")
    p.add_argument("--t0", type=float, default=40e-9, help="symbol period in seconds")
    p.add_argument("--tc", type=float, default=1e-3, help="coherence time in seconds")
    p.add_argument("--ts", type=_list_of(float), default=(0.0, 1e-8, 2.5e-8, 5e-8, 1e-7, 2e-7),
                   help="comma-separated switching times in seconds")
    p.add_argument("--nt", type=_list_of(int), default=(8,), help="comma-separated antenna counts")
    _add_output(p)

    p = sub.add_parser("crossover", help="Eb/N0 where SM overtakes AS")
    p.add_argument("--nt", type=_positive_int, default=8)
    p.add_argument("--nr", type=_list_of(int), default=(16, 32, 64), help="comma-separated receive antenna counts")
    p.add_argument("--mod-as", choices=("qpsk", "8qam"), default="qpsk")
    p.add_argument("--mod-sm", choices=("qpsk", "8qam"), default="qpsk")
    p.add_argument("--ebn0", type=parse_grid, default=parse_grid("-25:2:5"), help="Eb/N0 grid in dB, start:step:stop inclusive")
    _add_budget(p, 10**6)
    _add_output(p)

    p = sub.add_parser("figure", help="write the data behind a figure")
    p.add_argument("name", choices=("fig2", "fig3", "fig4"))
    p.add_argument("--outdir", type=Path, default=None, help="default: $SMAS_OUTPUT_DIR or the current directory")
    p.add_argument("--nr", type=_list_of(int), default=FIGURE_NR, help="comma-separated receive antenna counts")
    p.add_argument("--ebn0", type=parse_grid, default=parse_grid("-25:2:5"), help="Eb/N0 grid in dB, start:step:stop inclusive")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_budget(p, 2 * 10**6)
    return parser


def _attach_negative_values(argv: Sequence[str]) -> list:
    """Glue ``--ebn0 -25:2:5`` into ``--ebn0=-25:2:5`` so argparse does not read it as a flag."""
    out = []
    tokens = list(argv)
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok == "--ebn0" and i + 1 < len(tokens) and tokens[i + 1].startswith("-"):
            out.append(f"{tok}={tokens[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def parse_args(argv: Sequence[str]) -> ExperimentSpec:
    parser = build_parser()
    if not argv:
        parser.print_usage(sys.stderr)
        parser.exit(2, "smas: error: a subcommand is required\n")
    ns = vars(parser.parse_args(_attach_negative_values(argv)))
    sub = ns.pop("subcommand")
    fmt = ns.pop("format")
    out = ns.pop("out", None)

    if sub == "ber" and ns["scheme"] == "sm" and not is_power_of_two(ns["nt"]):
        parser.error(f"--nt {ns['nt']}: spatial modulation needs a power of two")
    if sub == "crossover" and not is_power_of_two(ns["nt"]):
        parser.error(f"--nt {ns['nt']}: spatial modulation needs a power of two")
    if sub in ("crossover", "figure") and any(n < 1 for n in ns["nr"]):
        parser.error("--nr values must be positive")
    if sub == "efficiency" and not all(is_power_of_two(n) for n in ns["nt"]):
        parser.error("--nt values must be powers of two")
    if sub == "figure":
        out = ns.pop("outdir") or Path(os.environ.get(OUTPUT_DIR_ENV, "."))
    return ExperimentSpec(sub, ns, out, fmt)


def _emit(spec: ExperimentSpec, fields, rows) -> None:
    if spec.output_path is None:
        dump_rows(sys.stdout, fields, rows, spec.format)
    else:
        write_rows(spec.output_path, fields, rows, spec.format)


def _budget(p: dict) -> Budget:
    return Budget(p["min_errors"], p["max_bits"], p["seed"], p["workers"])


def run(spec: ExperimentSpec) -> int:
    p = spec.parameters
    if spec.subcommand == "ber":
        cfg = LinkConfig(
            p["scheme"], p["nt"], p["nr"], p["mod"], p["ebn0"],
            max_bits=p["max_bits"], min_errors=p["min_errors"], seed=p["seed"],
            symbols_per_block=p["symbols_per_block"],
        )
        _emit(spec, BER_FIELDS, curve_rows(run_sweep(cfg, workers=p["workers"])))

    elif spec.subcommand == "filter":
        if p["kind"] == "slepian":
            f = pulse.slepian_taps(p["length"], p["alpha"], p["oversampling"])
        else:
            f = pulse.rrc_taps(p["length"], p["rolloff"], p["oversampling"])
        mask = pulse.default_mask(p["rolloff"], p["oversampling"], p["transition"], p["mask_level"])
        report = filter_report(f, mask, p["nfft"])
        print(
            f"{report['kind']} L={report['length']}: mask margin {report['margin_db']:.2f} dB, "
            f"zeta={report['zeta']:g}",
            file=sys.stderr,
        )
        if p["taps_out"] is not None:
            taps = [{"index": i, "tap": float(t)} for i, t in enumerate(f.taps)]
            write_rows(p["taps_out"], ("index", "tap"), taps, spec.format)
        _emit(spec, ("freq", "level_dbr"), spectrum_rows(f, p["nfft"]))

    elif spec.subcommand == "efficiency":
        rows = []
        for n_t in p["nt"]:
            for t_s in p["ts"]:
                params = efficiency.EfficiencyParams(
                    p["gamma_mod"], p["rolloff"], p["zeta"], n_t, p["tc"], t_s, p["t0"]
                )
                rows.append({
                    "n_t": n_t,
                    "t_s": float(t_s),
                    "gamma_as": efficiency.gamma_as_switching(params),
                    "gamma_sm": efficiency.gamma_sm_switching(params),
                })
        _emit(spec, ("n_t", "t_s", "gamma_as", "gamma_sm"), rows)

    elif spec.subcommand == "crossover":
        rows = []
        for n_r in p["nr"]:
            kw = dict(max_bits=p["max_bits"], min_errors=p["min_errors"], seed=p["seed"])
            sm = run_sweep(LinkConfig("sm", p["nt"], n_r, p["mod_sm"], p["ebn0"], **kw), p["workers"])
            as_ = run_sweep(LinkConfig("as", p["nt"], n_r, p["mod_as"], p["ebn0"], **kw), p["workers"])
            rows.append({"n_r": n_r, "crossover_db": find_crossover(sm, as_)})
        _emit(spec, ("n_r", "crossover_db"), rows)

    elif spec.subcommand == "figure":
        kwargs = {} if p["name"] == "fig2" else {"n_r_values": p["nr"], "grid": p["ebn0"]}
        for path in run_figure_recipe(p["name"], spec.output_path, _budget(p), spec.format, **kwargs):
            print(path, file=sys.stderr)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    spec = parse_args(sys.argv[1:] if argv is None else argv)
    try:
        return run(spec)
    except (ValueError, OSError) as exc:
        print(f"smas: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
