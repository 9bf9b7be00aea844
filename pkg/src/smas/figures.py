"""Reproduction recipes for the pulse-shaping and BER figures.

Each recipe writes data files only (CSV or JSON); plotting is left to any
external tool.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence, TextIO

from . import pulse
from .harness import BerCurve, LinkConfig, find_crossover, run_sweep

BER_FIELDS = ("ebn0_db", "ber", "bits", "errors", "ci_low", "ci_high")
SERIES_FIELDS = ("series", "scheme", "n_t", "n_r", "constellation")
FIGURE_GRID = tuple(float(x) for x in range(-25, 6, 2))
FIGURE_NR = (4, 8, 16, 32, 64)


@dataclass(frozen=True)
class Budget:
    min_errors: int = 100
    max_bits: int = 2 * 10**6
    seed: int = 1
    workers: int = 1


def dump_rows(fh: TextIO, fields: Sequence[str], rows: Iterable[dict], fmt: str = "csv") -> None:
    """CSV with a header row, comma separator and LF endings, or a JSON list."""
    rows = [{f: row[f] for f in fields} for row in rows]
    if fmt == "json":
        json.dump(rows, fh, indent=1)
        fh.write("\n")
        return
    writer = csv.DictWriter(fh, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(v) for k, v in row.items()})


def write_rows(path: Path, fields: Sequence[str], rows: Iterable[dict], fmt: str = "csv") -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as fh:
            dump_rows(fh, fields, rows, fmt)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return v


def curve_rows(curve: BerCurve, series: Optional[str] = None) -> list[dict]:
    cfg = curve.config
    rows = []
    for p in curve.points:
        row = {
            "ebn0_db": p.ebn0_db,
            "ber": p.ber,
            "bits": p.bits_simulated,
            "errors": p.bit_errors,
            "ci_low": p.ci95_low,
            "ci_high": p.ci95_high,
        }
        if series is not None:
            row.update(
                series=series,
                scheme=cfg.scheme.value,
                n_t=cfg.n_t,
                n_r=cfg.n_r,
                constellation=cfg.constellation,
            )
        rows.append(row)
    return rows


def filter_report(f: pulse.FilterTaps, mask: pulse.SpectralMask, n_fft: int = 8192) -> dict:
    spectrum = pulse.psd(f, n_fft)
    return {
        "kind": f.kind.value,
        "length": len(f),
        "parameter": f.parameter,
        "oversampling": f.oversampling,
        "mask_edge": mask.stopband_edge,
        "mask_level_dbr": mask.stopband_level_dbr,
        "margin_db": pulse.mask_margin(spectrum, mask),
        "zeta": pulse.rate_reduction(len(f), f.oversampling),
    }


def spectrum_rows(f: pulse.FilterTaps, n_fft: int = 8192) -> list[dict]:
    s = pulse.psd(f, n_fft)
    return [{"freq": float(a), "level_dbr": float(b)} for a, b in zip(s.freqs, s.level_dbr)]


def fig2(outdir: Path, fmt: str = "csv", n_fft: int = 8192) -> list[Path]:
    """Slepian (10 taps, alpha 0.65) against truncated RRC (37 taps, roll-off 0.4)."""
    mask = pulse.default_mask()
    filters = {
        "slepian": pulse.slepian_taps(10, 0.65, 4),
        "rrc": pulse.rrc_taps(37, 0.4, 4),
    }
    paths = []
    for name, f in filters.items():
        paths.append(
            write_rows(outdir / f"fig2_{name}.{fmt}", ("freq", "level_dbr"), spectrum_rows(f, n_fft), fmt)
        )
        taps = [{"index": i, "tap": float(t)} for i, t in enumerate(f.taps)]
        paths.append(write_rows(outdir / f"fig2_{name}_taps.{fmt}", ("index", "tap"), taps, fmt))
    reports = [filter_report(f, mask, n_fft) for f in filters.values()]
    paths.append(write_rows(outdir / f"fig2_mask.{fmt}", tuple(reports[0]), reports, fmt))
    return paths


def ber_figure(
    name: str,
    n_t: int,
    as_mod: str,
    sm_mod: str,
    outdir: Path,
    budget: Budget = Budget(),
    fmt: str = "csv",
    n_r_values: Sequence[int] = FIGURE_NR,
    grid: Sequence[float] = FIGURE_GRID,
) -> list[Path]:
    rows, crossings = [], []
    for n_r in n_r_values:
        curves = {}
        for scheme, mod in (("sm", sm_mod), ("as", as_mod)):
            cfg = LinkConfig(
                scheme, n_t, n_r, mod, tuple(grid),
                max_bits=budget.max_bits, min_errors=budget.min_errors, seed=budget.seed,
            )
            curves[scheme] = run_sweep(cfg, workers=budget.workers)
            rows += curve_rows(curves[scheme], f"{scheme.upper()} {mod} n_r={n_r}")
        crossings.append({"n_r": n_r, "crossover_db": find_crossover(curves["sm"], curves["as"])})
    return [
        write_rows(outdir / f"{name}_ber.{fmt}", SERIES_FIELDS + BER_FIELDS, rows, fmt),
        write_rows(outdir / f"{name}_crossover.{fmt}", ("n_r", "crossover_db"), crossings, fmt),
    ]


def run_figure_recipe(
    name: str, outdir: Path, budget: Budget = Budget(), fmt: str = "csv", **kwargs
) -> list[Path]:
    outdir = Path(outdir)
    if name == "fig2":
        return fig2(outdir, fmt)
    if name == "fig3":
        return ber_figure("fig3", 8, "qpsk", "qpsk", outdir, budget, fmt, **kwargs)
    if name == "fig4":
        return ber_figure("fig4", 64, "8qam", "qpsk", outdir, budget, fmt, **kwargs)
    raise ValueError(f"unknown figure {name!r}; choose fig2, fig3 or fig4")
