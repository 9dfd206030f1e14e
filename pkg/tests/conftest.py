import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lcgroups.constructors import build_group  # noqa: E402


@pytest.fixture(scope="session")
def group():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = build_group(spec)
        return cache[spec]

    return get
