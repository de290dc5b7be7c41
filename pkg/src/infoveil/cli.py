"""Command-line front end.

Every command prints one summary line on stdout; diagnostics go to stderr.
Exit status: 0 success, 1 usage error, 2 data or domain error.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
import warnings
from datetime import date
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np

from . import classification as cls_mod
from . import granger as gr
from . import retrieval as rt
from . import synth
from .csvio import fmt, parse_date, read_series_csv, write_csv, write_series_csv, write_wide_csv
from .econometrics import unitroot
from .econometrics.ols import ROBUST_FLAVORS
from .errors import ConfigError, DataFormatError, InfoveilError
from .series import DailySeries, difference, normalize_per_million

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2
VARIANT_ALIASES = {"dfgls": "dfgls_demeaned", "adf": "adf_no_trend",
                   "dfgls_demeaned": "dfgls_demeaned", "adf_no_trend": "adf_no_trend"}
LABEL_SETS = {
    "sick": {cls_mod.PostLabel.INGROUP_SICK, cls_mod.PostLabel.OUTGROUP_SICK},
    "ingroup": {cls_mod.PostLabel.INGROUP_SICK},
    "outgroup": {cls_mod.PostLabel.OUTGROUP_SICK},
    "other": {cls_mod.PostLabel.OTHER},
    "all": set(cls_mod.PostLabel),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def _diag(message: str) -> None:
    tag = "error:"
    if sys.stderr.isatty() and "NO_COLOR" not in os.environ:
        tag = "\033[31merror:\033[0m"
    print(f"{tag} {message}", file=sys.stderr)


def _warn(message, category, filename, lineno, file=None, line=None):
    tag = "warning:"
    if sys.stderr.isatty() and "NO_COLOR" not in os.environ:
        tag = "\033[33mwarning:\033[0m"
    print(f"{tag} {message}", file=sys.stderr)


# ---------------------------------------------------------------------------
# argument helpers


def _date(text: str) -> date:
    try:
        return date.fromisoformat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected YYYY-MM-DD, got {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _pulse(text: str) -> synth.PulseConfig:
    d, sep, m = text.partition(":")
    try:
        return synth.PulseConfig(date.fromisoformat(d), float(m))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected DATE:MAGNITUDE, got {text!r}") from None


def _codes(text: str) -> frozenset[str]:
    return frozenset(c.strip() for c in text.split(",") if c.strip())


def read_config(path) -> dict[str, str]:
    """``key = value`` lines; ``#`` starts a comment line."""
    out = {}
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{path}: line {lineno}: expected key=value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _apply_config(parser: argparse.ArgumentParser, argv, args: argparse.Namespace,
                  cfg: dict[str, str]) -> argparse.Namespace:
    """Install config values as subcommand defaults and parse again, so flags still win."""
    sub = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    sp = sub.choices[args.command]
    actions = {a.dest: a for a in sp._actions}
    defaults = {}
    for key, value in cfg.items():
        action = actions.get(key)
        if action is None or key in ("help", "config"):
            raise ConfigError(f"config key {key!r} is not an option of {args.command}")
        if action.nargs == 0:  # on/off switch
            if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
                raise ConfigError(f"config key {key!r} expects true or false, got {value!r}")
            defaults[key] = value.lower() in ("true", "1", "yes")
        else:
            try:
                converted = action.type(value) if action.type else value
            except (argparse.ArgumentTypeError, ValueError) as exc:
                raise ConfigError(f"config key {key!r}: {exc}") from None
            if action.choices is not None and converted not in action.choices:
                raise ConfigError(f"config key {key!r}: {value!r} is not one of "
                                  + ", ".join(map(str, action.choices)))
            defaults[key] = converted
    sp.set_defaults(**defaults)
    return parser.parse_args(argv)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) in (None, "")]
    if missing:
        raise UsageError(f"{args.command}: missing required option(s): "
                         + ", ".join("--" + m.replace("_", "-") for m in missing))


def _hubei(args) -> rt.RegionScheme:
    codes = args.hubei_codes
    if isinstance(codes, str):
        codes = _codes(codes)
    return rt.RegionScheme(codes) if codes else rt.RegionScheme()


def _spec(args, max_lag: int) -> gr.GrangerSpec:
    intervention = None
    if args.intervention is not None:
        when = args.intervention if isinstance(args.intervention, date) else parse_date(args.intervention)
        intervention = gr.InterventionSpec(when, int(args.decay))
    return gr.GrangerSpec(max_lag, intervention, predictor_label=Path(args.signal).stem,
                          presample_cases=args.presample)


def _load_pair(args) -> tuple:
    cases = read_series_csv(args.cases, args.cases_column, fill_zero=args.fill_zero)
    signal = read_series_csv(args.signal, args.signal_column, fill_zero=args.fill_zero)
    return difference(cases), difference(signal)


# ---------------------------------------------------------------------------
# commands


def cmd_retrieve(args) -> str:
    _need(args, "corpus", "out")
    queries = _keywords(args)
    seen = 0

    def counted():
        nonlocal seen
        for p in rt.read_posts_csv(args.corpus):
            seen += 1
            yield p

    posts = rt.retrieve(counted(), queries)
    if args.dedupe:
        posts = rt.dedupe(posts)
    n = rt.write_posts_csv(args.out, posts)
    return f"retrieved {n} of {seen} posts with {len(queries)} queries -> {args.out}"


def _keywords(args) -> rt.QuerySet:
    if args.keywords:
        return rt.load_keywords(args.keywords)
    return rt.parse_keywords(resources.files("infoveil.data").joinpath("keywords.txt")
                             .read_text(encoding="utf-8"))


def cmd_classify(args) -> str:
    _need(args, "corpus", "out")
    clf = cls_mod.RuleClassifier(cls_mod.load_lexicon(args.lexicon), int(args.window))
    tally = dict.fromkeys(cls_mod.LABEL_ORDER, 0)
    with rt.CsvSink(args.out, (*rt.POST_COLUMNS, "label")) as sink:
        for post in rt.read_posts_csv(args.corpus):
            label = clf.classify(post)
            tally[label] += 1
            sink.write([*rt.post_row(post), label.value])
    msg = "labelled " + ", ".join(f"{k.value}={v}" for k, v in tally.items())
    if args.gold:
        truth, pred = [], []
        for post, label in cls_mod.read_labeled_csv(args.gold):
            truth.append(label)
            pred.append(clf.classify(post))
        m = cls_mod.evaluate(cls_mod.ConfusionMatrix.from_labels(truth, pred))
        if args.metrics_out:
            write_csv(args.metrics_out, ("precision", "recall", "f1", "accuracy", "n"),
                      [(m.precision, m.recall, m.f1, m.accuracy, len(truth))])
        msg += f"; vs gold f1={m.f1:.3f} accuracy={m.accuracy:.3f}"
    return msg + f" -> {args.out}"


def cmd_aggregate(args) -> str:
    _need(args, "corpus", "out")
    queries = None if args.no_retrieve else _keywords(args)
    clf = cls_mod.RuleClassifier(cls_mod.load_lexicon(args.lexicon), int(args.window))
    wanted = LABEL_SETS[args.labels]
    region = _hubei(args).predicate(args.region)
    totals = read_series_csv(args.totals, fill_zero=args.fill_zero) if args.totals else None
    start = args.start or (totals.start_date if totals else None)
    end = args.end or (totals.end_date if totals else None)
    if start is None or end is None:
        raise UsageError("aggregate: --start and --end are required without --totals")

    posts = rt.read_posts_csv(args.corpus)
    if queries is not None:
        posts = rt.retrieve(posts, queries)
    if not args.keep_reposts:
        posts = rt.dedupe(posts)
    posts = (p for p in posts if clf.classify(p) in wanted)
    counts = rt.aggregate_daily(posts, start, end, region, label=args.labels)
    if totals is not None:
        totals = totals.window(start, end)
        series = normalize_per_million(counts, totals)
        unit = "per million"
    else:
        series, unit = counts, "posts"
    write_series_csv(args.out, series)
    return (f"aggregated {int(counts.values.sum())} {args.labels} posts over {len(series)} days "
            f"({unit}, region={args.region}) -> {args.out}")


def cmd_unitroot(args) -> str:
    _need(args, "input", "out")
    s = read_series_csv(args.input, args.column, fill_zero=args.fill_zero)
    y = s.values
    for _ in range(int(args.diff)):
        y = np.diff(y)
    variant = VARIANT_ALIASES[args.variant]
    results = unitroot.unit_root_table(y, int(args.max_lags), variant)
    write_csv(args.out, ("lags", "t_stat", "cv_1pct", "cv_5pct", "cv_10pct", "nobs", "reject_5pct"),
              [(r.lags, r.t_stat, *r.critical_values, r.nobs, r.rejects(0.05)) for r in results])
    n_rej = sum(r.rejects(0.05) for r in results)
    return (f"{variant} on {args.column} (diff {args.diff}, n={y.size}): unit root rejected at 5% "
            f"for {n_rej} of {len(results)} lag orders -> {args.out}")


def cmd_granger(args) -> str:
    _need(args, "cases", "signal", "out_dir")
    dc, ds = _load_pair(args)
    spec = _spec(args, int(args.max_lag))
    report = gr.fit_granger(dc, ds, spec, args.robust)
    out = Path(args.out_dir)
    gr.write_effects_csv(out / "effects.csv", report)
    gr.write_summary_csv(out / "summary.csv", report)
    msg = ""
    if args.compare_decays:
        rows = gr.compare_decays(dc, ds, spec, args.compare_decays, args.robust)
        gr.write_decay_csv(out / "decays.csv", rows)
        msg = f"; best decay {next(r.decay_days for r in rows if r.best)}"
    sig = ",".join(map(str, report.significant_lags(0.05))) or "none"
    f = report.fit
    return (f"n={f.n} k={f.k} adj_r2={fmt(f.adj_r2)} delta_adj_r2={fmt(report.delta_adj_r2)} "
            f"joint_F_p={fmt(report.joint_f.pvalue)} significant_lags={sig}{msg} -> {out}")


def cmd_scan(args) -> str:
    _need(args, "cases", "signal", "out")
    dc, ds = _load_pair(args)
    lo, hi = int(args.min_lag), int(args.max_lag)
    if lo > hi:
        raise UsageError("scan: --min-lag exceeds --max-lag")
    scan = gr.scan_lags(dc, ds, _spec(args, hi), range(lo, hi + 1), float(args.threshold), args.robust)
    gr.write_scan_csv(args.out, scan)
    return f"scanned m={lo}..{hi} on n={scan.rows[0].n} rows; recommended m={scan.recommended} -> {args.out}"


def cmd_synth(args) -> str:
    _need(args, "out_dir")
    cfg = synth.SynthConfig(
        days=int(args.days), kernel=synth.fold_kernel_text(args.kernel), ar=args.ar,
        pulse=args.pulse, noise_sd_cases=float(args.noise_cases),
        noise_sd_posts=float(args.noise_posts), post_base_rate=float(args.base_rate),
        seed=int(args.seed), start_date=args.start)
    truth = synth.generate(cfg)
    out = Path(args.out_dir)
    write_series_csv(out / "cases.csv", truth.cases)
    write_series_csv(out / "sick.csv", truth.sick_normalized)
    write_series_csv(out / "other.csv", truth.other_normalized)
    write_series_csv(out / "sick_counts.csv", truth.sick_posts)
    write_series_csv(out / "other_counts.csv", truth.other_posts)
    write_series_csv(out / "totals.csv", truth.totals)
    synth.write_truth_json(out / "truth.json", truth)
    extra = ""
    if args.corpus:
        n = synth.write_corpus_csv(out / "corpus.csv", truth)
        extra = f", {n} corpus posts"
    return (f"synthesized {cfg.days} days from {cfg.start_date} (seed {cfg.seed}, "
            f"{truth.clamped_days} clamped{extra}) -> {out}")


def cmd_figdata(args) -> str:
    _need(args, "cases", "signal", "out_dir")
    out = Path(args.out_dir)
    cols: dict[str, DailySeries] = {"cases": read_series_csv(args.cases, args.cases_column,
                                                             fill_zero=args.fill_zero),
                                    "signal": read_series_csv(args.signal, args.signal_column,
                                                              fill_zero=args.fill_zero)}
    if args.other:
        cols["other"] = read_series_csv(args.other, fill_zero=args.fill_zero)
    write_wide_csv(out / "fig3_daily.csv", cols)
    msg = f"fig3 {len(cols)} series"
    if args.effects:
        rows = _std_effects(args.effects)
        write_csv(out / "fig4_effects.csv", ("lag", "std_coef", "std_ci_lo", "std_ci_hi", "p",
                                             "significant"), rows)
        msg += f", fig4 {len(rows)} lags"
    return f"{msg} -> {out}"


def _std_effects(path) -> list[tuple]:
    rows = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != list(gr.EFFECT_COLUMNS):
            raise DataFormatError(f"header must be {','.join(gr.EFFECT_COLUMNS)}", path, 1)
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise DataFormatError(f"expected {len(header)} fields", path, lineno)
            try:
                lag, coef, std, _, lo, hi, p = int(row[0]), *map(float, row[1:])
            except ValueError:
                raise DataFormatError("non-numeric field", path, lineno) from None
            scale = std / coef if coef != 0 else 0.0
            rows.append((lag, std, lo * scale, hi * scale, p, p < 0.05))
    return rows


def cmd_agreement(args) -> str:
    _need(args, "annotations")
    ann = cls_mod.read_annotations_csv(args.annotations)
    alpha = cls_mod.krippendorff_alpha(ann)
    if args.out:
        write_csv(args.out, ("alpha", "n_labels"), [(alpha, len(ann.units))])
    return f"krippendorff_alpha={alpha:.4f} over {len(ann.units)} labels"


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="infoveil", description="Infoveillance pipeline: retrieval, labelling, "
                                            "daily series and lagged-regression tests.")
    p.add_argument("--config", help="key=value file supplying option values; flags win")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def common_series(sp):
        sp.add_argument("--cases", help="case-count CSV (date,value)")
        sp.add_argument("--signal", help="predictor CSV, e.g. sick posts per million")
        sp.add_argument("--cases-column", default="value")
        sp.add_argument("--signal-column", default="value")
        sp.add_argument("--fill-zero", action="store_true", help="impute 0 for missing days")

    def model_opts(sp):
        sp.add_argument("--intervention", type=_date, help="pulse date (YYYY-MM-DD)")
        sp.add_argument("--decay", type=int, default=1, help="linear decay length in days (1 = instant)")
        sp.add_argument("--robust", choices=ROBUST_FLAVORS, default="HC1")
        sp.add_argument("--presample", choices=gr.PRESAMPLE_MODES, default="require",
                        help="'zero' treats case changes before the first day as 0")

    sp = sub.add_parser("retrieve", help="keep posts matching the keyword list")
    sp.add_argument("--corpus")
    sp.add_argument("--keywords", help="keyword file (default: bundled list)")
    sp.add_argument("--out")
    sp.add_argument("--dedupe", action="store_true", help="drop reposts")
    sp.set_defaults(func=cmd_retrieve)

    sp = sub.add_parser("classify", help="label posts with the lexicon rule")
    sp.add_argument("--corpus")
    sp.add_argument("--lexicon")
    sp.add_argument("--window", type=int, default=cls_mod.DEFAULT_NEGATION_WINDOW)
    sp.add_argument("--out")
    sp.add_argument("--gold", help="labelled CSV to evaluate the rule against")
    sp.add_argument("--metrics-out")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("aggregate", help="daily counts of matching, labelled posts")
    sp.add_argument("--corpus")
    sp.add_argument("--keywords")
    sp.add_argument("--no-retrieve", action="store_true", help="corpus is already retrieved")
    sp.add_argument("--keep-reposts", action="store_true")
    sp.add_argument("--lexicon")
    sp.add_argument("--window", type=int, default=cls_mod.DEFAULT_NEGATION_WINDOW)
    sp.add_argument("--labels", choices=sorted(LABEL_SETS), default="sick")
    sp.add_argument("--region", choices=("all", "hubei", "elsewhere", "geotagged"), default="all")
    sp.add_argument("--hubei-codes", type=_codes)
    sp.add_argument("--totals", help="daily total posts CSV; output becomes per million")
    sp.add_argument("--start", type=_date)
    sp.add_argument("--end", type=_date)
    sp.add_argument("--fill-zero", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_aggregate)

    sp = sub.add_parser("unitroot", help="Dickey-Fuller tests for each lag order")
    sp.add_argument("--input")
    sp.add_argument("--column", default="value")
    sp.add_argument("--diff", type=int, choices=(0, 1, 2), default=0)
    sp.add_argument("--max-lags", type=int, default=29)
    sp.add_argument("--variant", choices=sorted(VARIANT_ALIASES), default="dfgls")
    sp.add_argument("--fill-zero", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_unitroot)

    sp = sub.add_parser("granger", help="fit the lagged model and report per-lag effects")
    common_series(sp)
    model_opts(sp)
    sp.add_argument("--max-lag", type=int, default=20)
    sp.add_argument("--compare-decays", type=_int_list, help="e.g. 1,2,3,4,5")
    sp.add_argument("--out-dir")
    sp.set_defaults(func=cmd_granger)

    sp = sub.add_parser("scan", help="compare lag orders on a common sample")
    common_series(sp)
    model_opts(sp)
    sp.add_argument("--min-lag", type=int, default=1)
    sp.add_argument("--max-lag", type=int, default=29)
    sp.add_argument("--threshold", type=float, default=0.005)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("synth", help="generate synthetic series with a known kernel")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--days", type=int, default=150)
    sp.add_argument("--start", type=_date, default=date(2019, 12, 1))
    sp.add_argument("--kernel", default="", help="lag:coef list, e.g. 3:2.0,6:1.5")
    sp.add_argument("--ar", type=_float_list, default=())
    sp.add_argument("--pulse", type=_pulse, help="DATE:MAGNITUDE")
    sp.add_argument("--noise-cases", type=float, default=10.0)
    sp.add_argument("--noise-posts", type=float, default=20.0)
    sp.add_argument("--base-rate", type=float, default=2.0)
    sp.add_argument("--corpus", action="store_true", help="also write a post corpus")
    sp.add_argument("--out-dir")
    sp.set_defaults(func=cmd_synth)

    sp = sub.add_parser("figdata", help="plot-ready tables for the daily and effect figures")
    common_series(sp)
    sp.add_argument("--other", help="second post series for the daily figure")
    sp.add_argument("--effects", help="effects.csv from granger")
    sp.add_argument("--out-dir")
    sp.set_defaults(func=cmd_figdata)

    sp = sub.add_parser("agreement", help="Krippendorff's alpha for an annotation CSV")
    sp.add_argument("--annotations")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_agreement)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.config:
            args = _apply_config(parser, argv, args, read_config(args.config))
        with warnings.catch_warnings():
            warnings.showwarning = _warn
            summary = args.func(args)
    except UsageError as exc:
        _diag(str(exc))
        return EXIT_USAGE
    except InfoveilError as exc:
        _diag(str(exc))
        return EXIT_DATA
    except OSError as exc:
        _diag(f"{exc.filename or ''}: {exc.strerror}")
        return EXIT_DATA
    print(summary)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
