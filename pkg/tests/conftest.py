import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # makes `import oracles` work

from conceptgraph import build_index, build_transactions, ingest, pair_counts

DATA_DIR = Path(__file__).parent / "data"
F12_PATH = DATA_DIR / "f12.jsonl"
GOLDEN_DIR = DATA_DIR / "golden"


@pytest.fixture(scope="session")
def f12_docs():
    return ingest(F12_PATH, "jsonl")


@pytest.fixture(scope="session")
def f12_index(f12_docs):
    return build_index(f12_docs)


@pytest.fixture(scope="session")
def f12_tx(f12_index):
    return build_transactions(f12_index)


@pytest.fixture(scope="session")
def f12_pairs(f12_tx):
    return pair_counts(f12_tx)
