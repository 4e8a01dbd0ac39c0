import math

import pytest


def rel_err(got, want):
    return abs(got - want) / abs(want)


@pytest.fixture
def beta_grid_64():
    return [2.0 * math.pi * k / 64 for k in range(64)]
