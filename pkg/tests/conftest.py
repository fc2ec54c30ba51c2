import random
import shutil
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

SEED = 20240501


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def tmp_data_dir(tmp_path: Path) -> Path:
    """A writable copy of the shipped data files."""
    target = tmp_path / "data"
    shutil.copytree(DATA_DIR, target)
    return target


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR
