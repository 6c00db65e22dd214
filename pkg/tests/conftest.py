import pytest

from chaincodes.rings import ChainRing


@pytest.fixture(scope="session")
def ring_gal():
    """Z_4[w][x]/<x^2+2, 2x> with w a root of X^2+X+1: p=2 n=2 r=2 k=2 t=1."""
    return ChainRing(2, 2, 2, 2, 1, [1, 0], f=[1, 1, 1])


@pytest.fixture(scope="session")
def ring_eis():
    """Z_4[x]/<x^2+2, 2x>: p=2 n=2 r=1 k=2 t=1 (the 8-element chain ring)."""
    return ChainRing(2, 2, 1, 2, 1, [1, 0])


@pytest.fixture(scope="session")
def ring_m4():
    """Z_4[x]/<x^2+2>: t=k=2 so m=4 (even, admits self-dual codes)."""
    return ChainRing(2, 2, 1, 2, 2, [1, 0])


@pytest.fixture(scope="session")
def ring_quasi():
    """F_2[x]/<x^3>: the n=1 quasi-Galois case."""
    return ChainRing(2, 1, 1, 3, 3, [1, 0, 0])


@pytest.fixture(scope="session")
def ring_z4():
    """Z_4 itself: k=t=1, m=n=2."""
    return ChainRing(2, 2, 1, 1, 1, [1])


@pytest.fixture(scope="session")
def ring_f4():
    """F_4 = GR(2,2): n=1, k=t=1, r=2."""
    return ChainRing(2, 1, 2, 1, 1, [1], f=[1, 1, 1])


@pytest.fixture(scope="session")
def ring_gr42():
    """GR(4,2) as a chain ring with k=1: the Galois-ring special case."""
    return ChainRing(2, 2, 2, 1, 1, [1], f=[1, 1, 1])


@pytest.fixture(scope="session")
def ring_p3():
    """Z_9[x]/<x^2+3, 3x>: an odd-characteristic Eisenstein ring."""
    return ChainRing(3, 2, 1, 2, 1, [1, 0])
