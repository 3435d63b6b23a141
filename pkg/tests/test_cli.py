"""
Command-line surface: flags, exit codes and agreement with library calls
"""
import json
import shutil
from pathlib import Path

import pytest

from src.analytics.metrics import evaluate_simplification
from src.analytics.sweep import BASELINE_COLUMNS, SWEEP_COLUMNS, sweep_gamma
from src.analytics.synthetic import smooth_hand_trajectory
from src.cli import parse_run_config, run
from src.cli.commands import EXIT_INVALID, EXIT_IO, EXIT_OK, load_trajectory
from src.core.errors import ConfigError
from src.core.trajectory import CoefficientKind, SimplifyParams
from src.ingest.csv_reader import ColumnSpec, format_csv, parse_csv
from src.utils.config import Config

SAMPLE_PLT = Path(__file__).resolve().parent.parent / 'data' / 'sample_geolife.plt'


@pytest.fixture
def hand_csv(clean_env):
    path = clean_env / 'hand.csv'
    path.write_text(format_csv(smooth_hand_trajectory(300, seed=11)))
    return path


@pytest.fixture
def plt_file(clean_env):
    path = clean_env / 'track.plt'
    shutil.copy(SAMPLE_PLT, path)
    return path


class TestParseRunConfig:

    def test_flags_override_config(self, clean_env):
        config = parse_run_config(
            ['simplify', '--input', 'a.csv', '--gamma', '4', '--coefficient', 'direction'], Config(None)
        )
        assert config.params == SimplifyParams(alpha=1, beta=2, gamma=4, coefficient=CoefficientKind.DIRECTION)
        assert not config.beta_given

    def test_config_file_defaults(self, clean_env):
        (clean_env / 'config.env').write_text("GAMMA=3\nSAMPLE_COUNT=12\n")
        config = parse_run_config(['simplify', '--input', 'a.csv'])
        assert config.params.gamma == 3
        assert config.sample_count == 12

    def test_columns(self, clean_env):
        config = parse_run_config(['simplify', '--input', 'a.csv', '--columns', '0:1:2:3'], Config(None))
        assert config.columns == ColumnSpec(0, 1, 2, 3)

    def test_config_coefficient_used_without_flag(self, clean_env, monkeypatch):
        monkeypatch.setenv('COEFFICIENT', 'direction')
        monkeypatch.setenv('BETA', '4')
        config = parse_run_config(['simplify', '--input', 'a.csv', '--alpha', '0'], Config(None))
        assert config.params == SimplifyParams(alpha=0, beta=4, gamma=2, coefficient=CoefficientKind.DIRECTION)

    def test_beta_one_needs_direction(self, clean_env):
        with pytest.raises(ConfigError, match='beta=1'):
            parse_run_config(['simplify', '--input', 'a.csv', '--beta', '1'], Config(None))
        with pytest.raises(ConfigError, match='beta=1'):
            parse_run_config(['bench', '--beta', '1', '--coefficient', 'direction'], Config(None))
        config = parse_run_config(['simplify', '--input', 'a.csv', '--beta', '1', '--coefficient', 'direction'],
                                  Config(None))
        assert config.params.beta == 1

    def test_sweep_list(self, clean_env):
        config = parse_run_config(['sweep', '--input', 'a.csv', '--sweep', '1,2,3'], Config(None))
        assert config.sweep == [1, 2, 3]

    @pytest.mark.parametrize('argv', [
        ['simplify'],
        ['sweep', '--input', 'a.csv', '--sweep', ''],
        ['simplify', '--input', 'a.csv', '--gamma', 'wide'],
        ['simplify', '--input', 'a.csv', '--alpha', '-1'],
        ['frobnicate'],
        [],
    ])
    def test_invalid(self, clean_env, argv):
        with pytest.raises(ConfigError):
            parse_run_config(argv, Config(None))


class TestSimplifyCommand:

    def test_matches_library_call(self, hand_csv):
        out = hand_csv.parent / 'result.json'
        code = run(['simplify', '--input', str(hand_csv), '--columns', '0:1:2:3', '--output', str(out)])
        assert code == EXIT_OK

        document = json.loads(out.read_text(encoding='utf-8'))
        trajectory = parse_csv(hand_csv.read_text(), ColumnSpec(0, 1, 2, 3))
        result, _, report = evaluate_simplification(trajectory, SimplifyParams())
        assert document['kept_indices'] == [int(i) for i in result.kept_indices]
        assert document['simplified_count'] == report.simplified_count
        assert document['metrics']['synchronous_error'] == pytest.approx(report.synchronous_error, rel=1e-8)
        assert 'samples' not in document

    def test_samples_and_plot_data(self, hand_csv):
        out = hand_csv.parent / 'result.json'
        plot_data = hand_csv.parent / 'plot.txt'
        code = run(['simplify', '--input', str(hand_csv), '--columns', '0:1:2:3', '--output', str(out),
                    '--samples', '5', '--plot-data', str(plot_data)])
        assert code == EXIT_OK
        document = json.loads(out.read_text(encoding='utf-8'))
        assert len(document['samples']['t']) == 5
        lines = plot_data.read_text().splitlines()
        assert lines[0] == '# t x y z spline_x spline_y spline_z'
        assert len(lines) == 301

    def test_writes_stdout_without_output(self, hand_csv, capsys):
        assert run(['simplify', '--input', str(hand_csv), '--columns', '0:1:2:3', '--gamma', '3']) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document['parameters']['gamma'] == 3

    def test_plt_input(self, plt_file):
        out = plt_file.parent / 'result.json'
        code = run(['simplify', '--input', str(plt_file), '--format', 'plt',
                    '--coefficient', 'direction', '--output', str(out)])
        assert code == EXIT_OK
        document = json.loads(out.read_text(encoding='utf-8'))
        assert document['original_count'] == 59
        assert len(document['kept_points']['positions'][0]) == 2

    def test_missing_file(self, clean_env):
        assert run(['simplify', '--input', str(clean_env / 'missing.csv')]) == EXIT_IO

    def test_malformed_file(self, clean_env):
        path = clean_env / 'bad.csv'
        path.write_text("0,0,0\n1,abc,0\n")
        assert run(['simplify', '--input', str(path)]) == EXIT_INVALID

    def test_single_point(self, clean_env):
        path = clean_env / 'one.csv'
        path.write_text("0,0,0\n")
        assert run(['simplify', '--input', str(path)]) == EXIT_INVALID

    def test_beta_one_rejected_before_reading_input(self, clean_env):
        missing = str(clean_env / 'missing.csv')
        assert run(['simplify', '--input', missing, '--beta', '1']) == EXIT_INVALID

    def test_bad_flag(self, clean_env):
        assert run(['simplify', '--input', 'a.csv', '--gamma', '0']) == EXIT_INVALID
        assert run(['simplify', '--no-such-flag']) == EXIT_INVALID


class TestSweepCommand:

    def test_rows_match_library(self, plt_file):
        out = plt_file.parent / 'sweep.csv'
        code = run(['sweep', '--input', str(plt_file), '--format', 'plt', '--coefficient', 'direction',
                    '--sweep', '1,2,3,4,5,6', '--output', str(out)])
        assert code == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == ','.join(SWEEP_COLUMNS)
        assert len(lines) == 7

        config = parse_run_config(['sweep', '--input', str(plt_file), '--format', 'plt',
                                   '--coefficient', 'direction', '--sweep', '1,2,3,4,5,6'], Config(None))
        reports = sweep_gamma(load_trajectory(config), config.params, config.sweep)
        column = SWEEP_COLUMNS.index('simplified_count')
        assert [int(line.split(',')[column]) for line in lines[1:]] == [r.simplified_count for r in reports]

    def test_baseline_columns(self, plt_file):
        out = plt_file.parent / 'sweep.csv'
        code = run(['sweep', '--input', str(plt_file), '--format', 'plt', '--coefficient', 'direction',
                    '--sweep', '2,3', '--baseline-epsilon', '5', '--workers', '2', '--output', str(out)])
        assert code == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == ','.join(SWEEP_COLUMNS + BASELINE_COLUMNS)
        assert len(lines) == 3

    def test_empty_sweep(self, plt_file):
        assert run(['sweep', '--input', str(plt_file), '--format', 'plt', '--sweep', '']) == EXIT_INVALID

    def test_zero_gamma_in_sweep(self, plt_file):
        assert run(['sweep', '--input', str(plt_file), '--format', 'plt', '--sweep', '1,0']) == EXIT_INVALID


class TestBenchCommand:

    def test_single_size_has_no_exponent(self, clean_env):
        out = clean_env / 'bench.csv'
        code = run(['bench', '--bench-sizes', '200', '--repeats', '1', '--output', str(out)])
        assert code == EXIT_OK
        text = out.read_text()
        assert text.splitlines()[0] == 'n,direction_seconds,correlation_seconds'
        assert '# growth_exponent_direction,n/a' in text

    def test_prefixes_of_input(self, hand_csv):
        out = hand_csv.parent / 'bench.csv'
        code = run(['bench', '--input', str(hand_csv), '--columns', '0:1:2:3',
                    '--bench-sizes', '100,200', '--repeats', '1', '--output', str(out)])
        assert code == EXIT_OK
        assert len(out.read_text().splitlines()) == 5

    def test_sizes_beyond_input(self, hand_csv):
        code = run(['bench', '--input', str(hand_csv), '--columns', '0:1:2:3', '--bench-sizes', '1000'])
        assert code == EXIT_INVALID

    def test_tiny_size(self, clean_env):
        assert run(['bench', '--bench-sizes', '2']) == EXIT_INVALID
