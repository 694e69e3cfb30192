import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from circrank import backend


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile/jit the hot kernels once so timed tests see steady state."""
    backend.warm_up()
