import pytest

from lieportrait.portrait import portrait_data

RANK2 = ["A2", "C2", "G2"]
ALL = ["A1", "A2", "C2", "G2"]


@pytest.fixture(params=RANK2)
def rank2(request):
    """(root system, fundamental reps) for each rank-2 group."""
    return portrait_data(request.param)


@pytest.fixture(params=ALL)
def any_group(request):
    return portrait_data(request.param)
