"""Synthetic case and post series with a known lag kernel.

Noise generation is fixed so output is bit-identical across platforms:

* uniforms come from the Philox-4x64 counter generator keyed with
  ``(seed, stream)``; each raw 64-bit word ``r`` maps to
  ``u = ((r >> 11) + 0.5) * 2**-53``, which lies strictly inside (0, 1);
* normals are ``ndtri(u)`` (inverse standard normal CDF).

Streams: 0 post-rate shocks, 1 case shocks, 2 daily totals, 3 other posts.
The corpus materializer uses stream 4 through a standard ``Generator``.

The model run forward is, for every simulated day t,

    dS_t = post_base_rate + noise_sd_posts * z_t
    dC_t = sum_i ar_i dC_{t-i} + sum_j kernel_j dS_{t-j} + pulse_t + noise_sd_cases * e_t

after ``burn_in`` discarded days. Sick-post counts are the per-million level
times the day's total, rounded; the case equation is driven by the
differences of the *realized* normalized series, so regressions on the
emitted files see the kernel exactly.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass, field
from datetime import date, datetime, timedelta
from pathlib import Path
from typing import Iterator, Mapping

import numpy as np
from scipy.special import ndtri

from . import kernels
from .csvio import atomic_write_text
from .errors import ConfigError
from .retrieval import CsvSink, POST_COLUMNS, Post, post_row
from .series import DailySeries, normalize_per_million

CLAMP_WARN_FRACTION = 0.05
_U53 = 2.0 ** -53
_STREAM_POSTS, _STREAM_CASES, _STREAM_TOTALS, _STREAM_OTHER, _STREAM_CORPUS = range(5)


def uniforms(seed: int, stream: int, n: int) -> np.ndarray:
    bg = np.random.Philox(key=np.array([seed, stream], dtype=np.uint64))
    raw = bg.random_raw(n).astype(np.uint64)
    return ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * _U53


def normals(seed: int, stream: int, n: int) -> np.ndarray:
    return ndtri(uniforms(seed, stream, n))


def ar_is_stable(ar) -> bool:
    """True when every root of 1 - a_1 z - ... - a_p z^p lies outside the unit circle."""
    ar = np.asarray(ar, dtype=np.float64)
    if ar.size == 0 or not np.any(ar):
        return True
    # roots of z^p - a_1 z^{p-1} - ... - a_p are the inverses; all must be inside
    comp = np.roots(np.concatenate(([1.0], -ar)))
    return bool(np.all(np.abs(comp) < 1.0 - 1e-12))


@dataclass(frozen=True)
class PulseConfig:
    date: date
    magnitude: float


@dataclass(frozen=True)
class SynthConfig:
    days: int = 150
    kernel: Mapping[int, float] = field(default_factory=dict)
    ar: tuple[float, ...] = ()
    pulse: PulseConfig | None = None
    noise_sd_cases: float = 10.0
    noise_sd_posts: float = 20.0
    post_base_rate: float = 2.0
    seed: int = 0
    start_date: date = date(2019, 12, 1)
    burn_in: int = 60
    total_posts_mean: float = 1e6
    total_posts_cv: float = 0.05
    other_rate: float = 3.0
    other_sd: float = 40.0
    initial_cases: float | None = None
    initial_posts: float | None = None
    ingroup_share: float = 0.8

    def __post_init__(self):
        kernel = {int(k): float(v) for k, v in dict(self.kernel).items()}
        object.__setattr__(self, "kernel", dict(sorted(kernel.items())))
        object.__setattr__(self, "ar", tuple(float(a) for a in self.ar))
        if self.days < 2:
            raise ConfigError("days must be at least 2")
        if any(k < 1 for k in kernel):
            raise ConfigError("kernel lags must be >= 1")
        if self.burn_in < 0:
            raise ConfigError("burn_in must be non-negative")
        for name in ("noise_sd_cases", "noise_sd_posts", "post_base_rate", "total_posts_mean"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"{name} must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        if not 0.0 <= self.ingroup_share <= 1.0:
            raise ConfigError("ingroup_share must lie in [0, 1]")
        if not ar_is_stable(self.ar):
            raise ConfigError(f"AR coefficients {self.ar} are not stationary")
        if self.pulse is not None and not (
                self.start_date <= self.pulse.date < self.start_date + timedelta(days=self.days)):
            raise ConfigError(f"pulse date {self.pulse.date} outside the simulated range")

    def to_json(self) -> dict:
        d = asdict(self)
        d["kernel"] = {str(k): v for k, v in self.kernel.items()}
        d["start_date"] = self.start_date.isoformat()
        if self.pulse is not None:
            d["pulse"] = {"date": self.pulse.date.isoformat(), "magnitude": self.pulse.magnitude}
        return d


@dataclass(frozen=True, eq=False)
class SynthTruth:
    config: SynthConfig
    cases: DailySeries
    sick_posts: DailySeries
    other_posts: DailySeries
    totals: DailySeries
    clamped_days: int

    @property
    def sick_normalized(self) -> DailySeries:
        return normalize_per_million(self.sick_posts, self.totals)

    @property
    def other_normalized(self) -> DailySeries:
        return normalize_per_million(self.other_posts, self.totals)


def _level_offset(steps: np.ndarray, margin: float) -> float:
    return float(max(0.0, -np.min(np.cumsum(steps)))) + margin


def _clamp(levels: np.ndarray) -> tuple[np.ndarray, int]:
    neg = levels < 0
    return np.where(neg, 0.0, levels), int(neg.sum())


def generate(config: SynthConfig) -> SynthTruth:
    c = config
    n, burn = c.days, c.burn_in
    total_n = n + burn
    seed = int(c.seed)

    totals = np.maximum(1.0, np.round(c.total_posts_mean * (1.0 + c.total_posts_cv *
                                                               normals(seed, _STREAM_TOTALS, n))))

    # sick posts: latent per-million level, then rounded counts
    ds_latent = c.post_base_rate + c.noise_sd_posts * normals(seed, _STREAM_POSTS, total_n)
    obs_steps = ds_latent[burn:]
    s0 = c.initial_posts if c.initial_posts is not None else _level_offset(obs_steps, 5 * c.noise_sd_posts)
    s_level, clamp_s = _clamp(s0 + np.cumsum(obs_steps))
    sick = np.round(s_level * totals / 1e6)
    s_real = sick / totals * 1e6

    drive_x = ds_latent.copy()
    drive_x[burn + 1:] = np.diff(s_real)

    conv = np.zeros(total_n)
    for j, b in c.kernel.items():
        if j < total_n:
            conv[j:] += b * drive_x[:total_n - j]
    pulse = np.zeros(total_n)
    if c.pulse is not None:
        pulse[burn + (c.pulse.date - c.start_date).days] = c.pulse.magnitude
    drive = conv + pulse + c.noise_sd_cases * normals(seed, _STREAM_CASES, total_n)
    dc = kernels.ar_filter(drive, np.asarray(c.ar, dtype=np.float64))[burn:]
    c0 = c.initial_cases if c.initial_cases is not None else _level_offset(dc, 5 * c.noise_sd_cases)
    cases, clamp_c = _clamp(c0 + np.cumsum(dc))

    do = c.other_rate + c.other_sd * normals(seed, _STREAM_OTHER, n)
    o_level, clamp_o = _clamp(_level_offset(do, 5 * c.other_sd) + np.cumsum(do))
    other = np.round(o_level * totals / 1e6)

    clamped = clamp_s + clamp_c + clamp_o
    if clamped > CLAMP_WARN_FRACTION * 3 * n:
        warnings.warn(f"{clamped} of {3 * n} simulated levels were clamped at zero", RuntimeWarning,
                      stacklevel=2)
    start = c.start_date
    return SynthTruth(
        config=c,
        cases=DailySeries(start, cases, "cases"),
        sick_posts=DailySeries(start, sick, "sick"),
        other_posts=DailySeries(start, other, "other"),
        totals=DailySeries(start, totals, "totals"),
        clamped_days=clamped,
    )


def write_truth_json(path, truth: SynthTruth) -> None:
    body = {"config": truth.config.to_json(), "clamped_days": truth.clamped_days,
            "generator": "philox4x64 raw>>11 to (0,1), ndtri"}
    atomic_write_text(path, json.dumps(body, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def read_truth_json(path) -> SynthConfig:
    d = json.loads(Path(path).read_text(encoding="utf-8"))["config"]
    d["kernel"] = {int(k): v for k, v in d["kernel"].items()}
    d["ar"] = tuple(d["ar"])
    d["start_date"] = date.fromisoformat(d["start_date"])
    if d.get("pulse"):
        d["pulse"] = PulseConfig(date.fromisoformat(d["pulse"]["date"]), d["pulse"]["magnitude"])
    return SynthConfig(**d)


# ---------------------------------------------------------------------------
# Post corpus

INGROUP_TEXTS = (
    "武汉肺炎 太可怕了，我发烧两天了还在咳嗽",
    "新型冠状病毒肺炎 家里人体温一直下不来",
    "My mom and I both have a fever, 肺炎疫情 is close to home",
)
OUTGROUP_TEXTS = (
    "邻村有个男的发烧到38度，新型冠状病毒肺炎 太吓人",
    "听说楼下那家老人咳嗽很厉害，肺炎疫情 越来越近",
    "A neighbour has a cough and a high temperature, 武汉肺炎 again",
)
OTHER_TEXTS = (
    "肺炎疫情 最新通报，大家出门戴口罩",
    "新型冠状病毒肺炎 防控知识汇总",
    "武汉肺炎 捐款渠道整理",
)
UNRELATED_TEXTS = (
    "今天天气不错，去公园散步",
    "周末做了红烧肉",
)
REGIONS = ("HB", "HB", "BJ", "SH", "GD", "")


def iter_corpus(truth: SynthTruth, unrelated_per_day: int = 2,
                repost_share: float = 0.1) -> Iterator[Post]:
    """Posts whose sick/other counts per day reproduce the truth series.

    Reposts of sick posts and unrelated posts are mixed in to exercise
    deduplication and retrieval; neither changes the aggregated counts.
    """
    rng = np.random.Generator(np.random.Philox(key=np.array([truth.config.seed, _STREAM_CORPUS],
                                                            dtype=np.uint64)))
    share = truth.config.ingroup_share
    for i, day in enumerate(truth.sick_posts.dates):
        n_sick = int(truth.sick_posts.values[i])
        n_other = int(truth.other_posts.values[i])
        n_in = int(round(n_sick * share))
        kinds = (["in"] * n_in + ["out"] * (n_sick - n_in) + ["other"] * n_other
                 + ["unrelated"] * unrelated_per_day)
        n_rep = int(rng.binomial(n_sick, repost_share)) if n_sick else 0
        kinds += ["repost"] * n_rep
        order = rng.permutation(len(kinds))
        minutes = np.sort(rng.integers(0, 24 * 60, len(kinds)))
        regions = rng.integers(0, len(REGIONS), len(kinds))
        base = datetime(day.year, day.month, day.day)
        for seq, (k, minute, r) in enumerate(zip((kinds[o] for o in order), minutes, regions)):
            pool = {"in": INGROUP_TEXTS, "out": OUTGROUP_TEXTS, "other": OTHER_TEXTS,
                    "unrelated": UNRELATED_TEXTS, "repost": INGROUP_TEXTS}[k]
            text = pool[(i + seq) % len(pool)]
            yield Post(f"d{i:04d}n{seq:06d}", base + timedelta(minutes=int(minute)), text,
                       REGIONS[r] or None, k == "repost")


def write_corpus_csv(path, truth: SynthTruth, **kwargs) -> int:
    with CsvSink(path, POST_COLUMNS) as sink:
        for post in iter_corpus(truth, **kwargs):
            sink.write(post_row(post))
    return sink.count


def fold_kernel_text(text: str) -> dict[int, float]:
    """Parse ``3:2.0,6:1.5`` into {3: 2.0, 6: 1.5}."""
    out: dict[int, float] = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        lag_s, sep, coef_s = part.partition(":")
        if not sep:
            raise ConfigError(f"kernel entry {part!r} is not lag:coef")
        try:
            lag_i, coef = int(lag_s), float(coef_s)
        except ValueError:
            raise ConfigError(f"kernel entry {part!r} is not lag:coef") from None
        if lag_i in out:
            raise ConfigError(f"kernel lag {lag_i} given twice")
        if not math.isfinite(coef):
            raise ConfigError(f"kernel coefficient {coef_s!r} is not finite")
        out[lag_i] = coef
    return out
