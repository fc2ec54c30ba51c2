import time
from pathlib import Path

import pytest
from pydantic import ValidationError

from src.core import (
    ComputationCache,
    DataFileError,
    DeskError,
    DomainError,
    ExactZeroDivisionError,
    PrecisionError,
    UsageError,
    ordered_map,
)
from src.core.config import CliConfig, Settings


def test_exit_codes():
    assert DeskError.exit_code == 1
    assert DomainError("x").exit_code == 2
    assert DataFileError("x").exit_code == 2
    assert PrecisionError("x").exit_code == 3
    assert UsageError("x").exit_code == 64
    assert issubclass(ExactZeroDivisionError, ZeroDivisionError)


def test_cache_hits_and_misses():
    cache = ComputationCache()
    calls = []

    def compute():
        calls.append(1)
        return (1, 2, 3)

    assert cache.get_or_compute("dwork", {"p": 5, "n": 3}, compute) == (1, 2, 3)
    assert cache.get_or_compute("dwork", {"n": 3, "p": 5}, compute) == (1, 2, 3)
    assert len(calls) == 1
    stats = cache.get_stats()
    assert (stats["hits"], stats["misses"], stats["dwork_cache_size"]) == (1, 1, 1)


def test_cache_kinds_are_separate():
    cache = ComputationCache()
    cache.set("gamma", (5, 4), "table")
    assert cache.get("modulus", (5, 4)) is None
    with pytest.raises(KeyError):
        cache.get("series", (5, 4))


def test_cache_expiry_and_eviction():
    cache = ComputationCache(max_entries=2)
    cache.set("gamma", 1, "old", ttl=-1)
    assert cache.get("gamma", 1) is None
    cache.set("gamma", 2, "a")
    cache.set("gamma", 3, "b")
    cache.get("gamma", 3)
    cache.set("gamma", 4, "c")
    assert cache.get("gamma", 2) is None
    assert cache.get("gamma", 3) == "b"
    assert cache.get_stats()["evictions"] >= 1
    cache.clear_all()
    assert cache.get_stats()["total_entries"] == 0


def test_ordered_map_keeps_order():
    def slow_square(n):
        time.sleep(0.001 * (5 - n))
        return n * n

    assert ordered_map(slow_square, range(5), threads=4) == [0, 1, 4, 9, 16]
    assert ordered_map(slow_square, range(5)) == [0, 1, 4, 9, 16]
    assert ordered_map(slow_square, []) == []


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("PADIC_DESK_DEFAULT_PRIME", "7")
    monkeypatch.setenv("PADIC_DESK_OUTPUT_FORMAT", "yaml")
    monkeypatch.setenv("PADIC_DESK_REPORT_TIMING", "no")
    s = Settings(_env_file=None)
    assert s.default_prime == 7
    assert s.output_format == "text"
    assert s.report_timing is False


def test_settings_reject_nonpositive_precision(monkeypatch):
    monkeypatch.setenv("PADIC_DESK_PRECISION", "0")
    with pytest.raises(ValidationError):
        Settings(_env_file=None)


def test_cli_config_overrides(data_dir):
    base = Settings(_env_file=None)
    config = CliConfig.from_settings(base, p=3, prec=None, data_dir=str(data_dir))
    assert config.p == 3
    assert config.prec == base.precision
    assert config.data_dir == Path(data_dir)


@pytest.mark.parametrize("override", [{"p": 9}, {"prec": 0}, {"output_format": "xml"}, {"threads": 0}])
def test_cli_config_validation(data_dir, override):
    with pytest.raises(ValidationError):
        CliConfig.from_settings(Settings(_env_file=None), data_dir=str(data_dir), **override)


def test_cli_config_needs_data_dir(tmp_path):
    with pytest.raises(ValidationError):
        CliConfig.from_settings(Settings(_env_file=None), data_dir=str(tmp_path / "missing"))
