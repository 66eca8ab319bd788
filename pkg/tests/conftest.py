from fractions import Fraction

import pytest

from k3arith.grouplaw import MarkedFiber
from k3arith.surface import FiberPoint, SurfaceForm, fiber_at, singular_locus


@pytest.fixture(scope="session")
def surface():
    return SurfaceForm.default()


@pytest.fixture(scope="session")
def fiber0(surface):
    return MarkedFiber(fiber_at(surface, Fraction(0)), FiberPoint(Fraction(0), Fraction(0)))


@pytest.fixture(scope="session")
def locus(surface):
    # the most expensive computation in the suite; shared by every test that needs it
    return singular_locus(surface, primes=(13, 11), seed=0)
