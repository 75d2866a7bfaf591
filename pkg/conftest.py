import pytest

from src.CoeffTable import CoeffTable


@pytest.fixture
def table():
    """A fresh, empty coefficient table."""
    return CoeffTable()
