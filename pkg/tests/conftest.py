import random
from fractions import Fraction

import pytest

from derham import LaurentPolynomial


def random_polynomial(rng: random.Random, nvars: int, max_degree: int = 3,
                      max_terms: int = 4, divisor=(), min_exp: int = 0
                      ) -> LaurentPolynomial:
    """Small random Laurent polynomial; negative exponents only on `divisor`."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(
            rng.randint(min_exp if i in divisor else 0, max_degree)
            for i in range(nvars))
        terms[exps] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return LaurentPolynomial(nvars, terms, divisor)


@pytest.fixture
def rng():
    return random.Random(20240817)


# populated by the acceptance tests; echoed after the run so the
# per-criterion verdict lines survive output capture
acceptance_lines: list = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
