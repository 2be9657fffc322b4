import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from triarray import _backend


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile jit kernels once so timed criteria measure the work, not the JIT."""
    _backend.warmup()
