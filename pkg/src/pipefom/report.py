"""Ranked-report rendering: aligned table, CSV and JSON.

CSV and JSON carry floats at full precision (``repr``) so that both parse
back to identical values; the table rounds the way a printed results table
would.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .fom import Exploration, FomWeights, ScoredConfig

CSV_FIELDS = ("config", "comparators", "sndr_db", "enob_bits", "sfdr_dbc", "fom")


@dataclass(frozen=True)
class Report:
    params: dict
    weights: dict
    rows: tuple[ScoredConfig, ...]


def weights_dict(w: FomWeights, comp_max: int) -> dict:
    return {
        "alpha": w.alpha,
        "beta": w.beta,
        "gamma": w.gamma,
        "delta": w.delta,
        "sndr_max_db": w.sndr_max_db,
        "sfdr_max_dbc": w.sfdr_max_dbc,
        "comp_min": w.comp_min,
        "comp_max": comp_max,
        "ratios_clamped": False,
    }


def params_dict(ex: Exploration) -> dict:
    return {
        "bits": ex.n_bits,
        "eps_gain": ex.params.eps_gain,
        "alpha_nl": ex.params.alpha_nl,
        "sndr_lim_db": ex.limits.sndr_lim_db,
        "sfdr_lim_db": ex.limits.sfdr_lim_db,
        "comp_lim": ex.limits.comp_lim,
        "harmonics": ex.k_max,
        "prefilter": ex.prefilter,
        "rescored": ex.rescored if ex.prefilter else len(ex.rows),
        "configs": len(ex.rows),
    }


def report_from_exploration(ex: Exploration, top: int | None = None) -> Report:
    rows = ex.rows if top is None else ex.rows[:top]
    return Report(params_dict(ex), weights_dict(ex.weights, ex.comp_max), tuple(rows))


def row_dict(r: ScoredConfig) -> dict:
    return {name: getattr(r, name) for name in CSV_FIELDS}


def render_table(rep: Report) -> str:
    p, w = rep.params, rep.weights
    lines = [
        f"N={p['bits']}  eps_gain={p['eps_gain']:g}  alpha_nl={p['alpha_nl']:g}  "
        f"K_max={p['harmonics']}  prefilter={'on' if p['prefilter'] else 'off'}",
        f"limits: SNDR {p['sndr_lim_db']:g} dB  SFDR {p['sfdr_lim_db']:g} dBc  Comp {p['comp_lim']:g}",
        f"weights: alpha={w['alpha']:.4f}  beta={w['beta']:.4f}  gamma={w['gamma']:.4f}  delta={w['delta']:.4f}",
        f"SNDR_max={w['sndr_max_db']:.2f} dB  SFDR_max={w['sfdr_max_dbc']:.2f} dBc  "
        f"Comp_min={w['comp_min']}  Comp_max={w['comp_max']}",
        "FOM ratios are not clamped to 1",
        "",
    ]
    width = max([len("config")] + [len(r.config) for r in rep.rows])
    lines.append(f"{'config':<{width}}  {'Comp':>5}  {'SNDR(dB)':>8}  {'ENOB':>5}  {'SFDR(dBc)':>9}  {'FOM':>5}")
    for r in rep.rows:
        lines.append(
            f"{r.config:<{width}}  {r.comparators:>5d}  {r.sndr_db:>8.1f}  {r.enob_bits:>5.2f}  "
            f"{r.sfdr_dbc:>9.1f}  {r.fom:>5.2f}"
        )
    return "\n".join(lines) + "\n"


def render_csv(rep: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in rep.rows:
        writer.writerow([r.config, r.comparators, repr(r.sndr_db), repr(r.enob_bits), repr(r.sfdr_dbc), repr(r.fom)])
    return buf.getvalue()


def render_json(rep: Report) -> str:
    doc = {"params": rep.params, "weights": rep.weights, "rows": [row_dict(r) for r in rep.rows]}
    return json.dumps(doc, indent=2) + "\n"


RENDERERS = {"table": render_table, "csv": render_csv, "json": render_json}


def parse_csv_rows(text: str) -> list[dict]:
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        row = {"config": rec["config"], "comparators": int(rec["comparators"])}
        row.update({k: float(rec[k]) for k in CSV_FIELDS[2:]})
        rows.append(row)
    return rows


def parse_json_rows(text: str) -> list[dict]:
    return json.loads(text)["rows"]
