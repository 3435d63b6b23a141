import pytest

CONFIG_DEFAULTS = {
    'ALPHA': '1',
    'BETA': '2',
    'GAMMA': '2',
    'COEFFICIENT': 'correlation',
    'CORRELATION_CLAMP': '1e-8',
    'VARIANCE_TOLERANCE': '1e-12',
    'DIRECTION_CLAMP': '1e-8',
    'PIVOT_TOLERANCE': '1e-14',
    'SAMPLE_COUNT': '0',
    'SWEEP_WORKERS': '1',
    'DIAMETER_EXACT_LIMIT': '20000',
    'BENCH_SIZES': '10000,20000,40000,80000',
    'BENCH_REPEATS': '3',
    'LOG_LEVEL': 'INFO',
    'LOG_FILE': '',
}


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """Default settings in the environment, restored after the test; cwd is tmp_path"""
    for key, value in CONFIG_DEFAULTS.items():
        monkeypatch.setenv(key, value)
    monkeypatch.chdir(tmp_path)
    return tmp_path
