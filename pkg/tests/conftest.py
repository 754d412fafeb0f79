import pytest

from etastrings import PrecisionSpec, Strategy

# high-precision accelerated spec used wherever tests need reference-grade values
ACCEL10 = PrecisionSpec(p=10.0, strategy=Strategy.ACCELERATED)
ACCEL12 = PrecisionSpec(p=12.0, strategy=Strategy.ACCELERATED)
TRUNC3 = PrecisionSpec(p=3.0, strategy=Strategy.TRUNCATED)


@pytest.fixture(scope="session")
def mp():
    """mpmath context, used as an independent cross-check oracle."""
    import mpmath
    mpmath.mp.dps = 30
    return mpmath
