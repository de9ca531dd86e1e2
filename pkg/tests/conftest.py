import json
import os
from pathlib import Path

import pytest

# share one long-lived cache across runs so expensive exact computations
# (traces of singular moduli, Kloosterman sums) are reused
os.environ.setdefault("ONAN_CACHE_DIR", "/tmp/onancache")

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def published_multiplicities():
    """The 18 x 30 table of irreducible multiplicities of W_m for
    m <= 36, transcribed from the published tables."""
    raw = json.loads((DATA / "multiplicities.json").read_text())
    return {int(m): row for m, row in raw.items()}
