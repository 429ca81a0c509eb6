from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent.parent / "src" / "manylogic" / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES
