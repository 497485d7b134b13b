from decimal import Decimal, ROUND_FLOOR, localcontext

import pytest

ACCEPTANCE_LINES: list[str] = []


def decimal_floor(x: Decimal) -> int:
    return int(x.to_integral_value(rounding=ROUND_FLOOR))


def real_sqrt2(prec: int = 80) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = prec
        return Decimal(2).sqrt()


@pytest.fixture(scope="session")
def sqrt2_dec():
    return real_sqrt2()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
