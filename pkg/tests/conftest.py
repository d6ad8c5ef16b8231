import pytest

from subblock_bounds import BoundsConfig, BoundsLogger, BoundsMetrics
from subblock_bounds.config import MAX_DESK_ENV


@pytest.fixture(autouse=True)
def clean_desk_env(monkeypatch):
    """Keep a developer's desk-cap override out of the tests"""
    monkeypatch.delenv(MAX_DESK_ENV, raising=False)


@pytest.fixture
def bounds_config():
    """Quiet config with plain logging"""
    return BoundsConfig(verbose=0, use_rich_logging=False)


@pytest.fixture
def log_records():
    """Structured records captured through the external logger hook"""
    return []


@pytest.fixture
def capturing_logger(log_records):
    """Debug-level logger that hands every record to ``log_records``"""
    return BoundsLogger(verbose=2, external_logger=log_records.append)


@pytest.fixture
def bounds_metrics():
    return BoundsMetrics()


@pytest.fixture
def small_desk_config():
    """Config with caps small enough to trip on desk-scale instances"""
    return BoundsConfig(
        verbose=0,
        use_rich_logging=False,
        max_full_lp_length=4,
        max_enumeration_length=6,
        max_ball_length=6,
        max_clique_vertices=8,
    )
