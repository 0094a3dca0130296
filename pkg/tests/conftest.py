"""Shared fixtures: published generator polynomials used as regression anchors.

Each entry pins the defining polynomial of the field (ascending
coefficients, leading 1 included) together with the exponent e and the
expected generator polynomial of the resulting code.  These ten codes
all have parameters [p^m - 1, p^m - 2m - 2, 4].
"""

from dataclasses import dataclass

import pytest

from cyclopt.extfield import get_field


@dataclass(frozen=True)
class Golden:
    p: int
    m: int
    e: int
    pi: tuple
    g: tuple  # ascending coefficients of the generator polynomial
    n: int
    k: int


GOLDEN_CODES = (
    Golden(7, 4, 2399, (3, 4, 5, 0, 1),
           (1, 0, 1, 1, 2, 2, 1, 1, 0, 1), 2400, 2391),
    Golden(11, 2, 119, (2, 7, 1),
           (1, 6, 10, 10, 6, 1), 120, 115),
    Golden(7, 4, 1544, (3, 4, 5, 0, 1),
           (6, 1, 2, 4, 3, 0, 3, 6, 5, 1), 2400, 2391),
    Golden(11, 2, 62, (2, 7, 1),
           (8, 5, 10, 10, 9, 1), 120, 115),
    Golden(5, 4, 315, (2, 4, 4, 0, 1),
           (1, 2, 2, 2, 0, 2, 0, 0, 4, 1), 624, 615),
    Golden(5, 4, 375, (2, 4, 4, 0, 1),
           (1, 4, 3, 3, 3, 0, 2, 4, 3, 1), 624, 615),
    Golden(5, 4, 311, (2, 4, 4, 0, 1),
           (1, 3, 3, 0, 4, 1, 2, 4, 4, 1), 624, 615),
    Golden(7, 3, 170, (4, 0, 6, 1),
           (6, 5, 1, 6, 2, 4, 0, 1), 342, 335),
    Golden(5, 5, 2503, (3, 4, 0, 0, 0, 1),
           (1, 3, 0, 2, 1, 4, 4, 4, 4, 0, 4, 1), 3124, 3113),
    Golden(5, 5, 1559, (3, 4, 0, 0, 0, 1),
           (1, 4, 3, 1, 3, 4, 1, 4, 2, 0, 4, 1), 3124, 3113),
)


def golden_field(gold):
    """Field for a golden entry; get_field memoizes, so repeated use is cheap."""
    return get_field(gold.p, gold.m, pi=gold.pi)


@pytest.fixture(params=GOLDEN_CODES, ids=lambda g: f"p{g.p}m{g.m}e{g.e}")
def golden(request):
    return request.param
