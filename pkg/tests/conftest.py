import pytest

from lineclip import ClipWindow


@pytest.fixture
def win10() -> ClipWindow:
    """The (0,0,10,10) window every hand-derived example uses."""
    return ClipWindow(0.0, 0.0, 10.0, 10.0)


@pytest.fixture
def unit_win() -> ClipWindow:
    """Default benchmark window."""
    return ClipWindow(-1.0, -1.0, 1.0, 1.0)
