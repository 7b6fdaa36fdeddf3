"""Rendering of experiment results: summary table plus matplotlib figures.

Consumes the trial CSV emitted by the harness and writes, next to it, a
per-experiment summary CSV and PNG figures. Kept separate from the harness
so the experiment output contract stays plain delimited text.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import pandas as pd

from .errors import EmptyInputError


def load_trials(path: str) -> pd.DataFrame:
    """Read a harness trial CSV (comment lines start with '#')."""
    df = pd.read_csv(path, comment="#")
    if df.empty:
        raise EmptyInputError(f"no trial rows in {path}")
    return df


def write_summary_csv(df: pd.DataFrame, path: str) -> None:
    ok = df[df["status"] == "ok"]
    rows = {
        "trials": len(df),
        "completed": len(ok),
        "mean_kept_fraction": ok["kept_fraction"].mean(),
        "mean_cycle_length": ok["cycle_length"].mean(),
        "min_cycle_length": ok["cycle_length"].min(),
        "max_cycle_length": ok["cycle_length"].max(),
        "mean_scc_bound": ok["scc_bound"].mean(),
        "mean_predicted_length": ok["predicted_length"].mean(),
    }
    pd.DataFrame([rows]).to_csv(path, index=False)


def render_figures(df: pd.DataFrame, outdir: str, stem: str = "experiment") -> list[str]:
    """Write the standard figures; returns the file paths created."""
    os.makedirs(outdir, exist_ok=True)
    ok = df[df["status"] == "ok"]
    paths: list[str] = []

    fig, ax = plt.subplots(figsize=(7, 4.2))
    if ok["cycle_length"].notna().any():
        ax.plot(ok["seed"], ok["cycle_length"], "o", ms=4, label="longest cycle found")
    if ok["scc_bound"].notna().any():
        ax.plot(ok["seed"], ok["scc_bound"], "s", ms=4, mfc="none", label="SCC upper bound")
    if ok["predicted_length"].notna().any():
        ax.plot(
            ok["seed"], ok["predicted_length"], "-", lw=1.2,
            label="curve prediction (1-alpha)n",
        )
    ax.set_xlabel("seed")
    ax.set_ylabel("cycle length")
    ax.legend(loc="best", fontsize=8)
    ax.set_title("Observed cycles vs. resilience-curve prediction")
    fig.tight_layout()
    path = os.path.join(outdir, f"{stem}_cycles.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(5.5, 4))
    ax.hist(ok["kept_fraction"].dropna(), bins=20, edgecolor="black")
    ax.set_xlabel("kept edge fraction")
    ax.set_ylabel("trials")
    ax.set_title("Adversary kept fraction")
    fig.tight_layout()
    path = os.path.join(outdir, f"{stem}_kept_fraction.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)
    return paths


def render_report(csv_path: str, outdir: str) -> list[str]:
    """Summary CSV + figures for one trial file; returns written paths."""
    df = load_trials(csv_path)
    os.makedirs(outdir, exist_ok=True)
    stem = os.path.splitext(os.path.basename(csv_path))[0]
    summary_path = os.path.join(outdir, f"{stem}_summary.csv")
    write_summary_csv(df, summary_path)
    return [summary_path] + render_figures(df, outdir, stem)
