import json
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def table1_rows():
    """Reference rows for the biquadratic survey: params, h, and for the
    eligible rows the polynomial coefficients and the witness pair."""
    return json.loads((DATA / "table1_reference.json").read_text())


@pytest.fixture(scope="session")
def table2_rows():
    return json.loads((DATA / "table2_reference.json").read_text())
