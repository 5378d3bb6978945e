import pytest

from betapar import (
    BlockAdder,
    fibonacci_base,
    gde_minus,
    gde_plus,
    gde_plus_special,
    make_block_params,
    quadratic_minus_base,
    quadratic_plus_base,
    tribonacci_base,
)


@pytest.fixture(scope="session")
def fib():
    return fibonacci_base()


@pytest.fixture(scope="session")
def tri():
    return tribonacci_base()


@pytest.fixture(scope="session")
def qp42():
    return quadratic_plus_base(4, 2)


@pytest.fixture(scope="session")
def qm31():
    return quadratic_minus_base(3, 1)


@pytest.fixture(scope="session")
def rule_plus42():
    return gde_plus(4, 2)


@pytest.fixture(scope="session")
def rule_special3():
    return gde_plus_special(3)


@pytest.fixture(scope="session")
def rule_minus41():
    return gde_minus(4, 1)


@pytest.fixture(scope="session")
def tribonacci_adder(tri):
    return BlockAdder(tri, make_block_params(tri, 2, 5))
