import sys
from pathlib import Path

import hypothesis.strategies as st
import pytest

sys.path.insert(0, str(Path(__file__).parent))

weak_compositions = st.lists(st.integers(0, 7), max_size=7).map(tuple)
compositions = st.lists(st.integers(1, 5), max_size=5).map(tuple)


@pytest.fixture(scope="session")
def weak_universe():
    from compdual.compositions import enumerate_weak
    return enumerate_weak(6, 5)
