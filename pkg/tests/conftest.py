from fractions import Fraction

import pytest

from jack4.exact import make_context

# Parameter values used to certify rational identities exactly: four distinct
# kappa values (enough to pin any rational identity of the degrees that occur
# at desk scale) and two kappa_prime values.
KAPPAS = (Fraction(1, 2), Fraction(1), Fraction(3), Fraction(5, 7))
KAPPA_PRIMES = (Fraction(1, 2), Fraction(2))
PARAM_PAIRS = tuple((k, kp) for k in (Fraction(1, 2), Fraction(1)) for kp in KAPPA_PRIMES)


@pytest.fixture(params=KAPPAS, ids=lambda k: f"kappa={k}")
def ctx_each_kappa(request):
    return make_context(request.param, Fraction(1, 2), 3)


@pytest.fixture(params=PARAM_PAIRS, ids=lambda p: f"kappa={p[0]},kp={p[1]}")
def ctx_each_pair(request):
    k, kp = request.param
    return make_context(k, kp, 3)


@pytest.fixture
def ctx(_k=Fraction(1, 2), _kp=Fraction(2)):
    return make_context(_k, _kp, 3)
