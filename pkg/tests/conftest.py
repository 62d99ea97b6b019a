import math
import random

import pytest

from ckgeom import metric as mt
from ckgeom.projective import affine_point


@pytest.fixture(scope="session")
def hyp():
    return mt.hyperbolic_model()


@pytest.fixture(scope="session")
def ell():
    return mt.elliptic_model()


@pytest.fixture()
def rng():
    return random.Random(20260810)


def interior_point(rng, radius=0.85):
    while True:
        x = rng.uniform(-radius, radius)
        y = rng.uniform(-radius, radius)
        if x * x + y * y < radius * radius:
            return affine_point(x, y)


def exterior_point(rng, rmin=1.15, rmax=2.8):
    ang = rng.uniform(0, 2 * math.pi)
    r = rng.uniform(rmin, rmax)
    return affine_point(r * math.cos(ang), r * math.sin(ang))
