"""Exact integer primitives.

Every comparison against an irrational quantity in this package is reduced to
integer arithmetic on Python ints, ultimately through :func:`isqrt`.  The
fixed-point routines at the bottom are an independent way of getting the same
floors and exist for cross-checking only.
"""

from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "Natural",
    "PrecisionError",
    "as_natural",
    "isqrt",
    "newton_isqrt",
    "sqrt2_fixed",
    "floor_n_sqrt2_oracle",
    "floor_n_sqrt2_checked",
    "sigma_decimal",
    "ORACLE_START_BITS",
    "ORACLE_MAX_BITS",
]

#: Arbitrary-precision nonnegative integer.  Plain ``int`` is used throughout;
#: :func:`as_natural` is the validation point for external input.
Natural = int

ORACLE_START_BITS = 32
ORACLE_MAX_BITS = 1024


class PrecisionError(ArithmeticError):
    """The fixed-point oracle could not certify its answer."""


def as_natural(value) -> int:
    """Validate and coerce ``value`` (int or decimal string) to a Natural."""
    if isinstance(value, bool):
        raise TypeError("booleans are not naturals")
    if isinstance(value, str):
        text = value.strip()
        if not text.isdigit() or not text.isascii():
            raise ValueError(f"not a decimal natural: {value!r}")
        return int(text)
    if not isinstance(value, int):
        raise TypeError(f"expected int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"natural must be >= 0, got {value}")
    return value


# CPython's math.isqrt is an exact integer Newton iteration; it is bound
# directly because the sweeps call it millions of times.  newton_isqrt below is
# the in-package implementation and is tested against it.
isqrt = math.isqrt


def newton_isqrt(m: int) -> int:
    """Integer Newton/Heron iteration seeded from the bit length of ``m``.

    The seed ``2**ceil(bits/2)`` is never below the root, so the iterates
    decrease monotonically until they stop; a final correction step guards the
    boundary.
    """
    if m < 0:
        raise ValueError("isqrt of a negative number")
    if m < 2:
        return m
    x = 1 << ((m.bit_length() + 1) >> 1)
    while True:
        y = (x + m // x) >> 1
        if y >= x:
            break
        x = y
    while x * x > m:
        x -= 1
    while (x + 1) * (x + 1) <= m:
        x += 1
    return x


@lru_cache(maxsize=64)
def sqrt2_fixed(frac_bits: int) -> int:
    """floor(sqrt(2) * 2**frac_bits), by the bit-by-bit restoring method.

    Deliberately shares no code with :func:`isqrt`.
    """
    if frac_bits < 0:
        raise ValueError("frac_bits must be >= 0")
    radicand = 2 << (2 * frac_bits)
    root = 0
    bit = 1 << (2 * (radicand.bit_length() // 2))
    while bit > radicand:
        bit >>= 2
    rem = radicand
    while bit:
        if rem >= root + bit:
            rem -= root + bit
            root = (root >> 1) + bit
        else:
            root >>= 1
        bit >>= 2
    return root


def floor_n_sqrt2_oracle(n: int, guard_bits: int) -> int:
    """floor(n*sqrt(2)) from a fixed-point sqrt(2), certified by squaring.

    Raises :class:`PrecisionError` when ``guard_bits`` is too small to certify
    the candidate; the caller retries with more bits.
    """
    n = as_natural(n)
    if guard_bits < 8:
        raise ValueError("guard_bits must be >= 8")
    frac_bits = n.bit_length() + guard_bits
    k = (n * sqrt2_fixed(frac_bits)) >> frac_bits
    two_n2 = 2 * n * n
    if not (k * k <= two_n2 < (k + 1) * (k + 1)):
        raise PrecisionError(f"precision insufficient at guard_bits={guard_bits} for n={n}")
    return k


def floor_n_sqrt2_checked(n: int) -> int:
    """Oracle with the retry policy: 32 guard bits, doubling, capped at 1024."""
    bits = ORACLE_START_BITS
    while True:
        try:
            return floor_n_sqrt2_oracle(n, bits)
        except PrecisionError:
            if bits >= ORACLE_MAX_BITS:
                raise
            bits *= 2


def sigma_decimal(n: int, guard_bits: int = 64, digits: int = 12) -> str:
    """Fractional part of n/sqrt(2) as a truncated decimal string.

    Display only; nothing decides on this value.
    """
    n = as_natural(n)
    frac_bits = n.bit_length() + guard_bits
    # n/sqrt(2) = n*sqrt(2)/2
    scaled = n * sqrt2_fixed(frac_bits)
    scale_bits = frac_bits + 1
    frac = scaled & ((1 << scale_bits) - 1)
    shown = (frac * 10**digits) >> scale_bits
    return "0." + str(shown).rjust(digits, "0")
