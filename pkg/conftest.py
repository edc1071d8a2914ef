"""
Shared fixtures: built analogue sets are cached for the whole session
"""

from fractions import Fraction

import pytest

from config import Config
from src.analogue import ModulusParams, build


@pytest.fixture(scope="session")
def analogue_set():
    """Factory returning the AnalogueSet for (a, kappa, order), built once"""
    cache = {}

    def _get(a, kappa, order=Config.SERIES_ORDER):
        key = (Fraction(a), float(kappa), order)
        if key not in cache:
            cache[key] = build(ModulusParams(Fraction(a), float(kappa)), order)
        return cache[key]

    return _get


@pytest.fixture(scope="session")
def sig4_set(analogue_set):
    return analogue_set('1/4', 0.8)


@pytest.fixture(scope="session")
def sig3_set(analogue_set):
    return analogue_set('1/6', 0.8)


@pytest.fixture(scope="session")
def odd_set(analogue_set):
    return analogue_set('1/3', 0.6)
