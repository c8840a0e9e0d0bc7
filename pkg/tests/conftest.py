import random
from fractions import Fraction

import pytest

from qmcert.domains.certify.entities import d8_pair, d24_pair
from qmcert.domains.qm1 import entities as level1
from qmcert.domains.qm2 import entities as theta
from qmcert.domains.qseries import QSeries
from qmcert.domains.rqm import RqmElem


@pytest.fixture
def prec():
    # small enough to keep exact expansions fast
    return 41


@pytest.fixture(scope="session")
def d8():
    return d8_pair()


@pytest.fixture(scope="session")
def d24():
    return d24_pair()


@pytest.fixture
def gens1():
    return level1.E2, level1.E4, level1.E6


@pytest.fixture
def gens2():
    return theta.H2, theta.H4, theta.E2


@pytest.fixture
def rng():
    return random.Random(1729)


def _nonzero(rng):
    return Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 4))


def _monomials(ring, weight):
    top = weight // min(ring.WEIGHTS)
    return [
        (a, b, c)
        for a in range(top + 1)
        for b in range(top + 1)
        for c in range(top + 1)
        if ring.monomial_weight((a, b, c)) == weight
    ]


@pytest.fixture
def random_poly(rng):
    """Factory: random element of a graded ring, homogeneous when a weight is given."""

    def make(ring, weight=None, terms=4):
        if weight is None:
            pool = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
        else:
            pool = _monomials(ring, weight)
        chosen = rng.sample(pool, min(terms, len(pool)))
        return ring({mono: _nonzero(rng) for mono in chosen})

    return make


@pytest.fixture
def random_series(rng):
    """Factory: random series with a nonzero constant term."""

    def make(prec=16):
        coeffs = {n: Fraction(rng.randint(-20, 20), rng.randint(1, 3)) for n in range(1, prec)}
        coeffs[0] = _nonzero(rng)
        return QSeries(coeffs, prec)

    return make


@pytest.fixture
def random_rqm(rng, random_poly):
    """Factory: random level-1 element of QM[P, T] with small P and T powers."""

    def make(groups=3):
        out = RqmElem({}, 1)
        for _ in range(groups):
            p, u = rng.randint(0, 2), rng.randint(0, 2)
            out = out + RqmElem.from_poly(random_poly(level1.QmPoly1, terms=2), p, u)
        return out

    return make
