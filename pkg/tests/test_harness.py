import math

import pytest

from zetalab.cli import main as cli_main
from zetalab.errors import ConfigError
from zetalab.gram import GramKind
from zetalab.harness import (CSV_HEADER, ConvergenceRow, ExperimentConfig,
                             build_config, emit_plot_data, format_row,
                             parse_config_text, rows_to_csv, run,
                             strip_timing)


def test_config_validation():
    with pytest.raises(ConfigError):
        ExperimentConfig(experiment="nope")
    with pytest.raises(ConfigError):
        ExperimentConfig(experiment="gram", T_ladder=())
    with pytest.raises(ConfigError):
        ExperimentConfig(experiment="gram", T_ladder=(1e4, 1e3))
    with pytest.raises(ConfigError):
        ExperimentConfig(experiment="gram", shards=0)
    with pytest.raises(ConfigError):
        ExperimentConfig(experiment="gram", kind="full")  # untyped kind


def test_parse_config_text():
    text = """
    # a comment
    experiment = titchmarsh
    T_ladder = 1e3,2e3   # trailing comment
    shards = 4
    """
    raw = parse_config_text(text)
    assert raw == {"experiment": "titchmarsh", "T_ladder": "1e3,2e3",
                   "shards": "4"}
    with pytest.raises(ConfigError):
        parse_config_text("unknown_key = 1")
    with pytest.raises(ConfigError):
        parse_config_text("experiment titchmarsh")


def test_build_config_coercions():
    cfg = build_config({"experiment": "autocorr", "T_ladder": "1e3, 2e3",
                        "k": "0", "l": "2", "kind": "half", "shards": "2"})
    assert cfg.T_ladder == (1e3, 2e3)
    assert cfg.l == 2
    assert cfg.kind is GramKind.HALF
    with pytest.raises(ConfigError):
        build_config({"experiment": "autocorr", "k": "zero"})
    with pytest.raises(ConfigError):
        build_config({"experiment": "autocorr", "kind": "diagonal"})
    with pytest.raises(ConfigError):
        build_config({"T_ladder": "1e3"})


def test_row_formatting_round_trips():
    row = ConvergenceRow("titchmarsh", 1e3, 868, 1.0 / 3.0, 2.0 / 7.0,
                         7.0 / 6.0, 0.5)
    text = format_row(row)
    fields = text.split(",")
    assert fields[0] == "titchmarsh"
    assert float(fields[3]) == 1.0 / 3.0  # 17 significant digits round-trip
    assert float(fields[5]) == 7.0 / 6.0


def test_strip_timing_drops_last_column():
    csv = CSV_HEADER + "\ngram,1000,10,1,2,0.5,0.123\n"
    out = strip_timing(csv)
    assert out.splitlines()[0] == CSV_HEADER.rsplit(",", 1)[0]
    assert out.splitlines()[1] == "gram,1000,10,1,2,0.5"


def test_run_writes_csv(tmp_path):
    out = tmp_path / "rows.csv"
    cfg = ExperimentConfig(experiment="gram", T_ladder=(1e3,),
                           out_path=str(out))
    rows = run(cfg, progress=None)
    assert len(rows) == 1
    lines = out.read_text().strip().splitlines()
    assert lines[0] == CSV_HEADER
    assert lines[1] == format_row(rows[0])


def test_run_deterministic_minus_timing():
    cfg = ExperimentConfig(experiment="titchmarsh", T_ladder=(1e3,))
    a = strip_timing(rows_to_csv(run(cfg, progress=None)))
    b = strip_timing(rows_to_csv(run(cfg, progress=None)))
    assert a == b


def test_acceptance_not_a_ladder():
    with pytest.raises(ConfigError):
        run(ExperimentConfig(experiment="acceptance"), progress=None)


def test_emit_plot_data(tmp_path):
    rows = [ConvergenceRow("gram", T, 5, 1.0, 1.0, r, 0.1)
            for T, r in ((1e4, 0.9), (1e3, 0.8))]
    path = tmp_path / "plot.dat"
    emit_plot_data(rows, str(path))
    lines = path.read_text().strip().splitlines()
    assert len(lines) == 2
    lns = [float(ln.split()[0]) for ln in lines]
    assert lns == sorted(lns)  # ascending in ln T
    with pytest.raises(ConfigError):
        emit_plot_data([], str(tmp_path / "empty.dat"))


def test_emit_plot_data_one_file_per_experiment(tmp_path):
    rows = [ConvergenceRow("gram", 1e3, 5, 1.0, 1.0, 0.9, 0.1),
            ConvergenceRow("euler", 1e3, 5, 1.0, 1.0, 1.1, 0.1)]
    base = tmp_path / "mixed.dat"
    names = emit_plot_data(rows, str(base))
    assert len(names) == 2
    import os
    assert all(os.path.exists(n) for n in names)


def test_cli_exit_codes(tmp_path, capsys):
    assert cli_main(["gram", "--T", "1e3", "--stdout"]) == 0
    out = capsys.readouterr().out
    assert out.startswith(CSV_HEADER)
    assert cli_main(["gram", "--T", "1e4,1e3"]) == 2
    # module-level precondition violations surface as compute errors
    assert cli_main(["autocorr", "--T", "1e3", "--l", "99"]) == 3


def test_cli_config_file(tmp_path, capsys):
    cfgfile = tmp_path / "run.cfg"
    cfgfile.write_text("experiment = gram\nT_ladder = 1e3\n")
    assert cli_main(["gram", "--config", str(cfgfile), "--stdout"]) == 0
    assert cli_main(["gram", "--config", str(tmp_path / "absent.cfg")]) == 2
