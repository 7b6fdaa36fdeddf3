"""Seeded end-to-end experiments.

Pipeline per trial: generate a random digraph, measure its density and a
sampled jumbledness witness, apply the configured adversary, run the
configured finder, and compare against the resilience-curve prediction at
the gamma measured from the kept edge fraction.

The CSV output is the contract: one row per trial, sorted by seed, with a
versioned header comment. Wall-clock durations are logged, not serialized,
so repeated runs of the same config are byte-identical.
"""

from __future__ import annotations

import configparser
import io
import json
import logging
import random
import time
from dataclasses import dataclass, field
from typing import Optional

from .constructions import acyclic_split, layered_subgraph, random_delete
from .errors import ConfigError, EmptyInputError
from .finders import dfs_long_cycle, exact_longest_cycle, scc_cycle_upper_bound
from .graph import Digraph, density, generate_random
from .pseudorandom import witnessed_r
from .thresholds import predicted_cycle_length

log = logging.getLogger(__name__)

SCHEMA_HEADER = "# dicycles experiment schema v1"
CSV_COLUMNS = [
    "seed",
    "status",
    "density",
    "witnessed_r",
    "r_over_sqrt_np",
    "kept_fraction",
    "finder",
    "cycle_length",
    "scc_bound",
    "adversary_bound",
    "measured_gamma",
    "predicted_length",
]

ADVERSARIES = ("acyclic-split", "layered", "random")
FINDERS = ("exact", "dfs", "scc-bound")
DEFAULT_R_TRIALS = 200
EXACT_FINDER_LIMIT = 20


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    p: float
    seeds: tuple[int, ...]
    adversary: str
    finder: str
    alpha: Optional[float] = None  # layered
    keep: Optional[float] = None  # random
    gamma: Optional[float] = None  # informational override
    restarts: int = 8  # dfs
    fraction_tol: float = 0.02
    length_tol: int = 0
    r_trials: int = DEFAULT_R_TRIALS
    time_cap_s: Optional[float] = None

    def validate(self) -> None:
        if self.n < 2:
            raise ConfigError(f"n must be >= 2, got {self.n}")
        if not (0 < self.p <= 1):
            raise ConfigError(f"p must lie in (0, 1], got {self.p}")
        if not self.seeds:
            raise ConfigError("at least one seed is required")
        if self.adversary not in ADVERSARIES:
            raise ConfigError(f"unknown adversary {self.adversary!r}")
        if self.finder not in FINDERS:
            raise ConfigError(f"unknown finder {self.finder!r}")
        if self.adversary == "layered" and self.alpha is None:
            raise ConfigError("layered adversary requires alpha")
        if self.adversary == "random" and self.keep is None:
            raise ConfigError("random adversary requires keep")
        if self.finder == "exact" and self.n > EXACT_FINDER_LIMIT:
            raise ConfigError(
                f"exact finder limited to n <= {EXACT_FINDER_LIMIT}, got n={self.n}"
            )
        if self.finder == "dfs" and self.restarts < 1:
            raise ConfigError("dfs finder requires restarts >= 1")


@dataclass(frozen=True)
class TrialRecord:
    seed: int
    status: str  # "ok" | "skipped" | "error"
    density: float
    witnessed_r: float
    r_over_sqrt_np: float
    kept_fraction: float
    finder: str
    cycle_length: Optional[int]
    scc_bound: Optional[int]
    adversary_bound: Optional[int]  # layered: max class size
    measured_gamma: Optional[float]
    predicted_length: Optional[int]
    duration_s: float = field(compare=False, default=0.0)


def _apply_adversary(
    config: ExperimentConfig, G: Digraph, seed: int
) -> tuple[Digraph, Optional[int]]:
    """Returns the thinned graph and the adversary's own cycle bound."""
    if config.adversary == "acyclic-split":
        rng_sigma = list(range(G.n))
        random.Random(seed ^ 0x5F5E0FF).shuffle(rng_sigma)
        g1, g2 = acyclic_split(G, rng_sigma)
        return (g1 if g1.m >= g2.m else g2), 1
    if config.adversary == "layered":
        gp, partition = layered_subgraph(G, config.alpha)
        return gp, partition.max_class_size
    gp = random_delete(G, config.keep, seed ^ 0x9E3779B9)
    return gp, None


def run_trial(config: ExperimentConfig, seed: int) -> TrialRecord:
    t0 = time.perf_counter()
    G = generate_random(config.n, config.p, seed)
    dens = density(G)
    report = witnessed_r(
        G, mode="sampled", trials=config.r_trials, seed=seed ^ 0xA5A5A5
    )
    ratio = (
        report.r_witnessed / (config.n * dens) ** 0.5 if dens > 0 else 0.0
    )
    Gp, adversary_bound = _apply_adversary(config, G, seed)
    kept = Gp.m / G.m if G.m else 1.0

    cycle_length: Optional[int] = None
    scc_bound = scc_cycle_upper_bound(Gp)
    if config.finder == "exact":
        cycle_length, _w = exact_longest_cycle(Gp, exact_limit=EXACT_FINDER_LIMIT)
    elif config.finder == "dfs":
        cycle_length, _w = dfs_long_cycle(Gp, seed ^ 0xC0FFEE, config.restarts)

    gamma_m = kept - 0.5
    predicted: Optional[int] = None
    if 0 < gamma_m < 0.5:
        predicted = predicted_cycle_length(config.n, gamma_m)
    duration = time.perf_counter() - t0
    return TrialRecord(
        seed=seed,
        status="ok",
        density=dens,
        witnessed_r=report.r_witnessed,
        r_over_sqrt_np=ratio,
        kept_fraction=kept,
        finder=config.finder,
        cycle_length=cycle_length,
        scc_bound=scc_bound,
        adversary_bound=adversary_bound,
        measured_gamma=round(gamma_m, 12),
        predicted_length=predicted,
        duration_s=duration,
    )


def run_experiment(config: ExperimentConfig) -> list[TrialRecord]:
    """One record per seed, sorted by seed; per-trial failures are recorded
    (status "error"/"skipped"), never abort the batch."""
    config.validate()
    records: list[TrialRecord] = []
    budget_exceeded = False
    spent = 0.0
    for seed in sorted(config.seeds):
        if budget_exceeded:
            records.append(_blank_record(seed, config.finder, "skipped"))
            continue
        try:
            rec = run_trial(config, seed)
        except Exception:
            log.exception("trial with seed %d failed", seed)
            rec = _blank_record(seed, config.finder, "error")
        records.append(rec)
        spent += rec.duration_s
        if config.time_cap_s is not None and spent > config.time_cap_s:
            budget_exceeded = True
    return records


def _blank_record(seed: int, finder: str, status: str) -> TrialRecord:
    return TrialRecord(
        seed=seed, status=status, density=0.0, witnessed_r=0.0,
        r_over_sqrt_np=0.0, kept_fraction=0.0, finder=finder,
        cycle_length=None, scc_bound=None, adversary_bound=None,
        measured_gamma=None, predicted_length=None,
    )


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".10g")
    return str(value)


def records_to_csv(records: list[TrialRecord]) -> str:
    """Serialize trial records; byte-identical for identical configs
    (durations are deliberately not included)."""
    out = io.StringIO()
    out.write(SCHEMA_HEADER + "\n")
    out.write(",".join(CSV_COLUMNS) + "\n")
    for rec in sorted(records, key=lambda r: r.seed):
        row = [_fmt(getattr(rec, col.replace("-", "_"))) for col in CSV_COLUMNS]
        out.write(",".join(row) + "\n")
    return out.getvalue()


def summarize(records: list[TrialRecord]) -> dict:
    """Aggregate statistics over completed trials."""
    if not records:
        raise EmptyInputError("no records to summarize")
    ok = [r for r in records if r.status == "ok"]
    lengths = [r.cycle_length for r in ok if r.cycle_length is not None]
    summary: dict = {
        "trials": len(records),
        "completed": len(ok),
        "errors": sum(1 for r in records if r.status == "error"),
        "skipped": sum(1 for r in records if r.status == "skipped"),
    }
    if lengths:
        summary["cycle_length"] = {
            "mean": sum(lengths) / len(lengths),
            "min": min(lengths),
            "max": max(lengths),
        }
    ratios = [
        r.cycle_length / r.predicted_length
        for r in ok
        if r.cycle_length is not None and r.predicted_length
    ]
    if ratios:
        summary["ratio_to_predicted"] = {
            "mean": sum(ratios) / len(ratios),
            "min": min(ratios),
            "max": max(ratios),
        }
    summary["bound_violations"] = sum(
        1
        for r in ok
        if r.cycle_length is not None
        and r.adversary_bound is not None
        and r.cycle_length > r.adversary_bound
    )
    summary["kept_fraction"] = {
        "mean": sum(r.kept_fraction for r in ok) / len(ok) if ok else None,
    }
    return summary


def check_invariants(records: list[TrialRecord]) -> list[str]:
    """Cross-trial sanity assertions; returns human-readable violations."""
    problems = []
    for r in records:
        if r.status != "ok":
            continue
        if not (0 <= r.kept_fraction <= 1):
            problems.append(f"seed {r.seed}: kept fraction {r.kept_fraction} outside [0,1]")
        if (
            r.cycle_length is not None
            and r.scc_bound is not None
            and r.cycle_length > r.scc_bound
        ):
            problems.append(
                f"seed {r.seed}: cycle {r.cycle_length} exceeds SCC bound {r.scc_bound}"
            )
        if (
            r.cycle_length is not None
            and r.adversary_bound is not None
            and r.cycle_length > r.adversary_bound
        ):
            problems.append(
                f"seed {r.seed}: cycle {r.cycle_length} exceeds adversary bound "
                f"{r.adversary_bound}"
            )
    return problems


def parse_seed_spec(spec: str) -> tuple[int, ...]:
    """Seed lists: comma-separated integers and/or inclusive 'a..b' ranges."""
    seeds: list[int] = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            seeds.extend(range(int(lo), int(hi) + 1))
        else:
            seeds.append(int(part))
    if not seeds:
        raise ConfigError(f"no seeds in spec {spec!r}")
    return tuple(seeds)


def load_config(path: str) -> ExperimentConfig:
    """Read a key = value config file with an [experiment] section."""
    cp = configparser.ConfigParser()
    read = cp.read(path)
    if not read:
        raise ConfigError(f"cannot read config file {path}")
    if "experiment" not in cp:
        raise ConfigError("config must contain an [experiment] section")
    sec = cp["experiment"]
    try:
        config = ExperimentConfig(
            n=sec.getint("n"),
            p=sec.getfloat("p"),
            seeds=parse_seed_spec(sec.get("seeds", "0")),
            adversary=sec.get("adversary", "random"),
            finder=sec.get("finder", "exact"),
            alpha=sec.getfloat("alpha", fallback=None),
            keep=sec.getfloat("keep", fallback=None),
            gamma=sec.getfloat("gamma", fallback=None),
            restarts=sec.getint("restarts", fallback=8),
            fraction_tol=sec.getfloat("fraction_tol", fallback=0.02),
            length_tol=sec.getint("length_tol", fallback=0),
            r_trials=sec.getint("r_trials", fallback=DEFAULT_R_TRIALS),
            time_cap_s=sec.getfloat("time_cap_s", fallback=None),
        )
        config.validate()
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"bad config value: {exc}") from exc
    return config


def summary_to_json(summary: dict) -> str:
    return json.dumps(summary, indent=2, sort_keys=True) + "\n"
