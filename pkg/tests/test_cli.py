import subprocess
import sys

import numpy as np
import pytest

from infoveil.cli import EXIT_DATA, EXIT_OK, EXIT_USAGE, main
from infoveil.csvio import read_series_csv
from infoveil.granger import EFFECT_COLUMNS


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(scope="module")
def synth_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("synth")
    assert main(["synth", "--seed", "7", "--days", "150", "--kernel", "3:2.0,6:1.5",
                 "--pulse", "2020-02-12:300", "--corpus", "--out-dir", str(d)]) == 0
    return d


def test_synth_outputs(synth_dir):
    names = {p.name for p in synth_dir.iterdir()}
    assert {"cases.csv", "sick.csv", "other.csv", "sick_counts.csv", "other_counts.csv",
            "totals.csv", "truth.json", "corpus.csv"} <= names
    assert len(read_series_csv(synth_dir / "cases.csv")) == 150


def test_granger_recovers_synthetic_kernel(synth_dir, tmp_path, capsys):
    code, out, err = run(capsys, "granger", "--cases", synth_dir / "cases.csv", "--signal",
                         synth_dir / "sick.csv", "--max-lag", 20, "--intervention", "2020-02-12",
                         "--decay", 1, "--compare-decays", "1,2,3", "--out-dir", tmp_path)
    assert code == EXIT_OK, err
    assert out.count("\n") == 1 and "significant_lags=" in out
    lags = out.split("significant_lags=")[1].split()[0].split(",")
    assert {"3", "6"} <= set(lags)
    effects = (tmp_path / "effects.csv").read_text().splitlines()
    assert effects[0] == ",".join(EFFECT_COLUMNS) and len(effects) == 21
    assert (tmp_path / "summary.csv").exists()
    assert len((tmp_path / "decays.csv").read_text().splitlines()) == 4


def test_retrieve_classify_aggregate_chain(synth_dir, tmp_path, capsys):
    corpus = synth_dir / "corpus.csv"
    code, out, _ = run(capsys, "retrieve", "--corpus", corpus, "--dedupe", "--out", tmp_path / "r.csv")
    assert code == 0 and out.startswith("retrieved ")
    code, out, _ = run(capsys, "classify", "--corpus", tmp_path / "r.csv", "--out", tmp_path / "c.csv")
    assert code == 0 and "ingroup=" in out
    assert tmp_path.joinpath("c.csv").read_text().splitlines()[0].endswith(",label")
    code, out, _ = run(capsys, "aggregate", "--corpus", corpus, "--totals", synth_dir / "totals.csv",
                       "--out", tmp_path / "agg.csv")
    assert code == 0, out
    got = read_series_csv(tmp_path / "agg.csv")
    want = read_series_csv(synth_dir / "sick.csv")
    np.testing.assert_allclose(got.values, want.values, rtol=1e-8)
    code, _, _ = run(capsys, "aggregate", "--corpus", corpus, "--start", "2019-12-01",
                     "--end", "2020-04-28", "--out", tmp_path / "raw.csv")
    assert code == 0
    np.testing.assert_array_equal(read_series_csv(tmp_path / "raw.csv").values,
                                  read_series_csv(synth_dir / "sick_counts.csv").values)


def test_unitroot_table_layout(synth_dir, tmp_path, capsys):
    code, out, _ = run(capsys, "unitroot", "--input", synth_dir / "cases.csv", "--diff", 1,
                       "--max-lags", 29, "--out", tmp_path / "u.csv")
    assert code == 0
    lines = (tmp_path / "u.csv").read_text().splitlines()
    assert lines[0] == "lags,t_stat,cv_1pct,cv_5pct,cv_10pct,nobs,reject_5pct"
    assert len(lines) == 30
    assert [int(l.split(",")[0]) for l in lines[1:]] == list(range(29, 0, -1))


def test_scan_and_figdata(synth_dir, tmp_path, capsys):
    code, out, _ = run(capsys, "scan", "--cases", synth_dir / "cases.csv", "--signal",
                       synth_dir / "sick.csv", "--min-lag", 1, "--max-lag", 8, "--out", tmp_path / "s.csv")
    assert code == 0 and "recommended m=" in out
    assert len((tmp_path / "s.csv").read_text().splitlines()) == 9
    run(capsys, "granger", "--cases", synth_dir / "cases.csv", "--signal", synth_dir / "sick.csv",
        "--max-lag", 8, "--out-dir", tmp_path)
    code, out, _ = run(capsys, "figdata", "--cases", synth_dir / "cases.csv", "--signal",
                       synth_dir / "sick.csv", "--other", synth_dir / "other.csv",
                       "--effects", tmp_path / "effects.csv", "--out-dir", tmp_path)
    assert code == 0
    daily = (tmp_path / "fig3_daily.csv").read_text().splitlines()
    assert daily[0] == "date,cases,signal,other" and len(daily) == 151
    fig4 = (tmp_path / "fig4_effects.csv").read_text().splitlines()
    assert fig4[0] == "lag,std_coef,std_ci_lo,std_ci_hi,p,significant" and len(fig4) == 9


def test_agreement(tmp_path, capsys):
    p = tmp_path / "a.csv"
    rows = [("u1", "ingroup", "ingroup"), ("u2", "other", "other"), ("u3", "ingroup", "other"),
            ("u4", "other", "ingroup")]
    p.write_text("unit_id,rater_id,label\n"
                 + "".join(f"{u},r1,{a}\n{u},r2,{b}\n" for u, a, b in rows))
    code, out, _ = run(capsys, "agreement", "--annotations", p, "--out", tmp_path / "k.csv")
    assert code == 0 and out.strip() == "krippendorff_alpha=0.1250 over 8 labels"


def test_usage_errors(capsys):
    code, out, err = run(capsys, "granger", "--bogus")
    assert code == EXIT_USAGE and out == "" and "usage:" in err
    code, _, err = run(capsys, "granger", "--cases", "x.csv")
    assert code == EXIT_USAGE and "--signal" in err
    code, _, err = run(capsys, "synth", "--pulse", "Feb12", "--out-dir", ".")
    assert code == EXIT_USAGE and "DATE:MAGNITUDE" in err
    assert run(capsys)[0] == EXIT_USAGE


def test_data_errors_name_location(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("date,value\n2020-01-01,1\n2020-01-02,abc\n")
    code, out, err = run(capsys, "unitroot", "--input", bad, "--out", tmp_path / "u.csv")
    assert code == EXIT_DATA and out == ""
    assert "bad.csv" in err and "line 3" in err and "'value'" in err
    code, _, err = run(capsys, "unitroot", "--input", tmp_path / "missing.csv", "--out", tmp_path / "u.csv")
    assert code == EXIT_DATA and "missing.csv" in err
    code, _, _ = run(capsys, "synth", "--ar", "1.2", "--out-dir", tmp_path)
    assert code == EXIT_DATA


def test_config_file_and_flag_precedence(synth_dir, tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(f"# paths\ncases = {synth_dir / 'cases.csv'}\nsignal = {synth_dir / 'sick.csv'}\n"
                   f"max-lag = 5\nout_dir = {tmp_path}\n")
    code, out, err = run(capsys, "--config", cfg, "granger")
    assert code == 0, err
    assert len((tmp_path / "effects.csv").read_text().splitlines()) == 6
    code, out, _ = run(capsys, "--config", cfg, "granger", "--max-lag", 7)
    assert code == 0
    assert len((tmp_path / "effects.csv").read_text().splitlines()) == 8
    cfg.write_text("nonsense = 1\n")
    assert run(capsys, "--config", cfg, "granger")[0] == EXIT_DATA
    cfg.write_text("robust = HC9\n")
    assert run(capsys, "--config", cfg, "granger")[0] == EXIT_DATA


def test_commands_are_idempotent(synth_dir, tmp_path, capsys):
    outputs = []
    for i in range(2):
        d = tmp_path / str(i)
        run(capsys, "synth", "--seed", 3, "--days", 80, "--kernel", "2:1.0", "--corpus", "--out-dir", d)
        run(capsys, "granger", "--cases", d / "cases.csv", "--signal", d / "sick.csv",
            "--max-lag", 5, "--out-dir", d)
        outputs.append({p.name: p.read_bytes() for p in d.iterdir()})
    assert outputs[0] == outputs[1]


def test_no_color_and_console_script(tmp_path):
    env = {"NO_COLOR": "1", "PATH": ""}
    r = subprocess.run([sys.executable, "-m", "infoveil.cli", "unitroot", "--input",
                        str(tmp_path / "nope.csv"), "--out", str(tmp_path / "u.csv")],
                       capture_output=True, text=True, env=env)
    assert r.returncode == EXIT_DATA
    assert r.stdout == "" and r.stderr.startswith("error:") and "\033[" not in r.stderr
