import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import brute_counts  # noqa: E402


@pytest.fixture(scope="session")
def brute_counts_n2():
    return brute_counts(2)


@pytest.fixture(scope="session")
def brute_counts_n3():
    return brute_counts(3)
