"""Deterministic, seedable Monte Carlo trial engine.

Every trial draws from its own counter-based substream (Philox keyed by
(master_seed, trial_index)), so results are a pure function of the scenario
configuration: independent of execution order, chunking and worker count.
Within a trial the draw order is fixed: sensor positions first (when the
layout is resampled), then ignition points.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .analytic import AnalyticLaw
from .errors import EstimatorError, ParameterError
from .geometry import Point, RectRegion, burned_union_area
from .placement import GridPlacement, RandomPlacement, build_layout
from .propagation import SpreadModel

__all__ = [
    "ScenarioConfig",
    "TrialOutcome",
    "SummaryStats",
    "run_trials",
    "detection_time",
    "summarize",
    "ks_distance",
    "ks_critical",
    "outcomes_to_csv",
    "summary_to_json",
]

_MASK64 = 0xFFFFFFFFFFFFFFFF
_MAX_TRIAL_INDEX = 1 << 62


class TrialOutcome(NamedTuple):
    """One Monte Carlo sample: detection time (s) and burned area (m^2)."""

    t_d: float
    a_d: float


@dataclass(frozen=True)
class ScenarioConfig:
    """A fully specified simulation experiment.

    ``resample_layout_each_trial`` and ``clip_to_region`` default by
    placement kind when left as None: random placement resamples sensors
    every trial (each trial is an i.i.d. draw of sensors and ignitions) and
    clips the burned area to the region; grid placement keeps the fixed
    lattice and reports the unclipped burned area F(t_d).  With multiple
    ignition points the burned area is always the union of the fronts
    clipped to the region, whatever ``clip_to_region`` says.
    """

    region: RectRegion
    placement: GridPlacement | RandomPlacement
    model: SpreadModel
    trials: int
    master_seed: int
    ignition_count: int = 1
    resample_layout_each_trial: Optional[bool] = None
    clip_to_region: Optional[bool] = None
    area_tol: float = 1e-3

    def __post_init__(self):
        if self.trials < 1:
            raise ParameterError(f"trials must be >= 1, got {self.trials}")
        if self.trials > _MAX_TRIAL_INDEX:
            raise ParameterError(f"trials must be <= {_MAX_TRIAL_INDEX}")
        if self.ignition_count < 1:
            raise ParameterError(f"ignition count must be >= 1, got {self.ignition_count}")
        if not isinstance(self.master_seed, int) or self.master_seed < 0:
            raise ParameterError(f"master seed must be a nonnegative integer, got {self.master_seed}")
        if not self.area_tol > 0:
            raise ParameterError(f"area tolerance must be positive, got {self.area_tol}")
        is_random = isinstance(self.placement, RandomPlacement)
        if self.resample_layout_each_trial is None:
            object.__setattr__(self, "resample_layout_each_trial", is_random)
        if self.resample_layout_each_trial and not is_random:
            raise ParameterError("grid layouts have nothing to resample")
        if self.clip_to_region is None:
            object.__setattr__(self, "clip_to_region", is_random)


class _TrialStreams:
    """Reusable Philox generator rebased per trial.

    Resetting the key/counter through the state dict is bit-identical to
    constructing ``Philox(key=[master_seed, index])`` afresh, but an order
    of magnitude cheaper.
    """

    def __init__(self, master_seed: int):
        key = np.array([master_seed & _MASK64, 0], dtype=np.uint64)
        self._bitgen = np.random.Philox(key=key)
        self.generator = np.random.Generator(self._bitgen)
        self._template = self._bitgen.state

    def trial(self, index: int) -> np.random.Generator:
        state = self._template
        state["state"]["key"][1] = index
        state["state"]["counter"][:] = 0
        self._bitgen.state = state
        return self.generator


def _splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _area_seed(master_seed: int, trial_index: int) -> int:
    # Hash-derived key for the union-area jitter stream of one trial.
    return _splitmix64((master_seed & _MASK64) ^ _splitmix64(trial_index))


def detection_time(model: SpreadModel, positions: np.ndarray, ignitions: np.ndarray) -> float:
    """Minimum reach time over all (ignition, sensor) pairs."""
    positions = np.asarray(positions, dtype=float)
    ignitions = np.atleast_2d(np.asarray(ignitions, dtype=float))
    if positions.size == 0:
        raise ParameterError("sensor layout is empty")
    best = math.inf
    for ix, iy in ignitions:
        t = model.reach_times(Point(float(ix), float(iy)), positions[:, 0], positions[:, 1])
        best = min(best, float(np.min(t)))
    return best


def _simulate_range(config: ScenarioConfig, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    region = config.region
    model = config.model
    k = config.ignition_count
    scale = np.array([region.width, region.height])
    resample = config.resample_layout_each_trial
    if resample:
        n_sensors = config.placement.count
        fixed = None
    else:
        fixed = build_layout(config.placement, region, seed=config.master_seed).positions

    streams = _TrialStreams(config.master_seed)
    t_out = np.empty(hi - lo)
    a_out = np.empty(hi - lo)
    for i in range(lo, hi):
        rng = streams.trial(i)
        positions = rng.random((n_sensors, 2)) * scale if resample else fixed
        ignitions = rng.random((k, 2)) * scale
        t_d = detection_time(model, positions, ignitions)
        if k == 1 and not config.clip_to_region:
            a_d = model.area(t_d)
        else:
            fronts = [(Point(float(x), float(y)), model, t_d) for x, y in ignitions]
            a_d = burned_union_area(
                fronts, region, tol=config.area_tol, seed=_area_seed(config.master_seed, i)
            )
        t_out[i - lo] = t_d
        a_out[i - lo] = a_d
    return t_out, a_out


def run_trials(config: ScenarioConfig, workers: int = 1) -> list[TrialOutcome]:
    """Run all trials of ``config`` and return outcomes in trial order.

    ``workers`` only controls the process count; the per-trial substreams
    make the output bit-identical for any value.
    """
    if workers < 1:
        raise ParameterError(f"workers must be >= 1, got {workers}")
    # Validate the layout up front so configuration errors surface before
    # any worker is spawned.
    build_layout(config.placement, config.region, seed=config.master_seed)

    trials = config.trials
    workers = min(workers, trials)
    if workers == 1:
        t_all, a_all = _simulate_range(config, 0, trials)
    else:
        bounds = np.linspace(0, trials, workers + 1, dtype=int)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(_simulate_range, [config] * workers, bounds[:-1], bounds[1:])
            )
        t_all = np.concatenate([p[0] for p in parts])
        a_all = np.concatenate([p[1] for p in parts])
    return [TrialOutcome(float(t), float(a)) for t, a in zip(t_all, a_all)]


@dataclass(frozen=True)
class SummaryStats:
    """Sample statistics of a batch of trial outcomes."""

    n: int
    mean_td: float
    var_td: float
    se_td: float
    mean_ad: float
    var_ad: float
    se_ad: float
    ecdf_td: np.ndarray
    ecdf_ad: np.ndarray


def summarize(outcomes: Sequence[TrialOutcome]) -> SummaryStats:
    """Unbiased means/variances, standard errors and sorted ECDF samples."""
    n = len(outcomes)
    if n < 2:
        raise EstimatorError(f"need at least 2 outcomes to summarize, got {n}")
    t = np.fromiter((o.t_d for o in outcomes), dtype=float, count=n)
    a = np.fromiter((o.a_d for o in outcomes), dtype=float, count=n)
    var_t = float(np.var(t, ddof=1))
    var_a = float(np.var(a, ddof=1))
    return SummaryStats(
        n=n,
        mean_td=float(t.mean()),
        var_td=var_t,
        se_td=math.sqrt(var_t / n),
        mean_ad=float(a.mean()),
        var_ad=var_a,
        se_ad=math.sqrt(var_a / n),
        ecdf_td=np.sort(t),
        ecdf_ad=np.sort(a),
    )


def ks_distance(sample: np.ndarray, law: AnalyticLaw) -> float:
    """Two-sided Kolmogorov-Smirnov distance of a sorted sample to a law."""
    s = np.asarray(sample, dtype=float)
    if s.size == 0:
        raise EstimatorError("sample is empty")
    if np.any(np.diff(s) < 0):
        raise EstimatorError("sample must be sorted ascending")
    n = s.size
    cdf = 1.0 - np.asarray(law.survival(s), dtype=float)
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - cdf)
    d_minus = np.max(cdf - (i - 1) / n)
    return float(max(d_plus, d_minus))


def ks_critical(n: int, alpha: float = 0.01) -> float:
    """Asymptotic two-sided KS critical value at significance ``alpha``."""
    if n < 1:
        raise EstimatorError(f"sample size must be >= 1, got {n}")
    if not 0 < alpha < 1:
        raise ParameterError(f"alpha must lie in (0, 1), got {alpha}")
    return math.sqrt(-math.log(alpha / 2.0) / (2.0 * n))


def outcomes_to_csv(outcomes: Sequence[TrialOutcome], fileobj) -> None:
    """Dump outcomes as CSV with header ``trial,t_d,a_d``."""
    fileobj.write("trial,t_d,a_d\n")
    for i, o in enumerate(outcomes):
        fileobj.write(f"{i},{o.t_d!r},{o.a_d!r}\n")


def summary_to_json(
    stats: SummaryStats,
    ks_td: Optional[float] = None,
    ks_ad: Optional[float] = None,
) -> str:
    """Serialize a summary to the stable JSON wire format."""
    payload = {
        "n": stats.n,
        "mean_td": stats.mean_td,
        "se_td": stats.se_td,
        "var_td": stats.var_td,
        "mean_ad": stats.mean_ad,
        "se_ad": stats.se_ad,
        "var_ad": stats.var_ad,
        "ks_td": ks_td,
        "ks_ad": ks_ad,
    }
    return json.dumps(payload, indent=2)
