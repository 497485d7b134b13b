"""Exact evaluation of the Beatty sequence of sqrt(2) and its parity conditions.

Writing p = floor(n*sqrt(2)) and q = floor(n/sqrt(2)), the six parity
conditions are decided by these integer reductions (isolate the radical,
square both nonnegative sides, and use floor(sqrt(x)) == isqrt(floor(x))):

    (a)  p is even
    (b)  {n/sqrt(2)} <= 1/2                  <=>  2n^2 <= (2q+1)^2
    (c)  {n/sqrt(2)} <  1/2                  <=>  2n^2 <  (2q+1)^2
    (d)  floor(sqrt(2)*n*q) == floor(n*p/sqrt(2))
                                             <=>  isqrt(2n^2q^2) == isqrt(floor(n^2p^2/2))
    (e)  q == floor(sqrt(n^2 - q^2))         <=>  q == isqrt(n^2 - q^2)
    (f)  {n/sqrt(2)} < sqrt(q^2+q+1/2) - q   <=>  n^2 < 2q^2 + 2q + 1

For n >= 2 all six agree.  n = 0 and n = 1 are evaluated too; at n = 1 only
(d) holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._parallel import chunk_ranges, map_chunks
from .exact import as_natural, isqrt, sigma_decimal

__all__ = [
    "CONDITIONS",
    "ConditionVector",
    "EquivalenceReport",
    "ComplementarityReport",
    "RationalValue",
    "as_rational",
    "beatty_sqrt2",
    "beatty_inv_sqrt2",
    "condition_flags",
    "condition_vector",
    "check_equivalence",
    "eq1_residue",
    "lemma1_holds",
    "complement_partner",
    "complementarity_check",
]

CONDITIONS = ("a", "b", "c", "d", "e", "f")

#: Nonnegative rational in lowest terms (Fraction normalises on construction).
RationalValue = Fraction


def beatty_sqrt2(n: int) -> int:
    """floor(n*sqrt(2))."""
    n = as_natural(n)
    return isqrt(2 * n * n)


def beatty_inv_sqrt2(n: int) -> int:
    """floor(n/sqrt(2))."""
    n = as_natural(n)
    return isqrt(n * n // 2)


def condition_flags(n: int) -> tuple[bool, bool, bool, bool, bool, bool]:
    """Truth values of conditions (a)..(f) at ``n``, without validation."""
    n2 = n * n
    two_n2 = 2 * n2
    p = isqrt(two_n2)
    q = isqrt(n2 >> 1)
    odd = (2 * q + 1) ** 2
    return (
        not p & 1,
        two_n2 <= odd,
        two_n2 < odd,
        isqrt(two_n2 * q * q) == isqrt((n2 * p * p) >> 1),
        q == isqrt(n2 - q * q),
        n2 < 2 * q * q + 2 * q + 1,
    )


@dataclass(frozen=True, slots=True)
class ConditionVector:
    n: int
    p: int
    q: int
    a: bool
    b: bool
    c: bool
    d: bool
    e: bool
    f: bool
    sigma_decimal: str | None = None

    @property
    def flags(self) -> tuple[bool, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    @property
    def unanimous(self) -> bool:
        return len(set(self.flags)) == 1

    def to_dict(self) -> dict:
        out = {"n": self.n, "p": self.p, "q": self.q}
        out.update(zip(CONDITIONS, self.flags))
        if self.sigma_decimal is not None:
            out["sigma"] = self.sigma_decimal
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ConditionVector":
        return cls(
            data["n"], data["p"], data["q"],
            *(bool(data[k]) for k in CONDITIONS),
            sigma_decimal=data.get("sigma"),
        )


def condition_vector(n: int, with_sigma: bool = False) -> ConditionVector:
    """Evaluate all six conditions at ``n`` exactly.

    ``with_sigma`` attaches a 12-digit approximation of {n/sqrt(2)} for
    display; the flags never look at it.
    """
    n = as_natural(n)
    flags = condition_flags(n)
    return ConditionVector(
        n,
        isqrt(2 * n * n),
        isqrt(n * n // 2),
        *flags,
        sigma_decimal=sigma_decimal(n) if with_sigma else None,
    )


@dataclass(frozen=True)
class EquivalenceReport:
    lo: int
    hi: int
    counterexamples: list[ConditionVector] = field(default_factory=list)
    checked_count: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "range": [self.lo, self.hi],
            "checked_count": self.checked_count,
            "counterexamples": [cv.to_dict() for cv in self.counterexamples],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EquivalenceReport":
        lo, hi = data["range"]
        return cls(
            lo, hi,
            [ConditionVector.from_dict(d) for d in data["counterexamples"]],
            data["checked_count"],
        )


def _disagreeing(lo: int, hi: int) -> list[int]:
    flags = condition_flags
    out = []
    for n in range(lo, hi + 1):
        fl = flags(n)
        if fl[0]:
            if not all(fl):
                out.append(n)
        elif any(fl):
            out.append(n)
    return out


def check_equivalence(lo: int, hi: int, jobs: int = 1) -> EquivalenceReport:
    """Sweep [lo, hi] and collect every n where the six flags disagree."""
    lo, hi = as_natural(lo), as_natural(hi)
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    chunks = chunk_ranges(lo, hi, jobs * 4 if jobs > 1 else 1)
    bad = [n for part in map_chunks(_disagreeing, chunks, jobs) for n in part]
    return EquivalenceReport(
        lo, hi, [condition_vector(n, with_sigma=True) for n in bad], hi - lo + 1
    )


def eq1_residue(n: int, m: int = 2) -> int:
    """floor(x) - m*floor(x/m) for x = n*sqrt(2); only m = 2 is exact here."""
    n = as_natural(n)
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m != 2:
        raise ValueError(f"unsupported modulus: {m}")
    return isqrt(2 * n * n) - 2 * isqrt(n * n // 2)


def as_rational(value) -> Fraction:
    """Parse ``value`` ("7/2", "3", int, Fraction) into a nonnegative rational."""
    x = Fraction(value)
    if x < 0:
        raise ValueError(f"rational must be >= 0, got {x}")
    return x


def lemma1_holds(x) -> bool:
    """Decide sqrt(x^2 + x + 1/2) - x > 1/2 exactly for rational x >= 0.

    With x = a/b the inequality is (2a + b)^2 < 4a^2 + 4ab + 2b^2.
    """
    x = as_rational(x)
    a, b = x.numerator, x.denominator
    return (2 * a + b) ** 2 < 4 * a * a + 4 * a * b + 2 * b * b


def complement_partner(n: int) -> int:
    """floor(n*(2 + sqrt(2))), the n-th term of the complementary Beatty sequence."""
    n = as_natural(n)
    if n == 0:
        raise ValueError("complement_partner requires n >= 1")
    return 2 * n + isqrt(2 * n * n)


@dataclass(frozen=True)
class ComplementarityReport:
    limit: int
    duplicates: list[int] = field(default_factory=list)
    gaps: list[int] = field(default_factory=list)

    @property
    def covered(self) -> bool:
        return not self.duplicates and not self.gaps

    def to_dict(self) -> dict:
        return {
            "limit": self.limit,
            "covered": self.covered,
            "duplicates": self.duplicates,
            "gaps": self.gaps,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ComplementarityReport":
        return cls(data["limit"], list(data["duplicates"]), list(data["gaps"]))


def _first_beatty_index(v: int) -> int:
    # smallest n >= 1 with floor(n*sqrt(2)) >= v, i.e. n^2 > v^2/2
    return isqrt(v * v // 2) + 1 if v > 0 else 1


def _first_partner_index(v: int) -> int:
    n = max(1, (v * 29) // 100)
    while n > 1 and 2 * n - 2 + isqrt(2 * (n - 1) ** 2) >= v:
        n -= 1
    while 2 * n + isqrt(2 * n * n) < v:
        n += 1
    return n


def _partition_window(lo: int, hi: int) -> tuple[list[int], list[int]]:
    hits = bytearray(hi - lo + 1)
    n = _first_beatty_index(lo)
    while True:
        v = isqrt(2 * n * n)
        if v > hi:
            break
        hits[v - lo] += 1
        n += 1
    n = _first_partner_index(lo)
    while True:
        v = 2 * n + isqrt(2 * n * n)
        if v > hi:
            break
        hits[v - lo] += 1
        n += 1
    dups = [lo + i for i, h in enumerate(hits) if h > 1]
    gaps = [lo + i for i, h in enumerate(hits) if h == 0]
    return dups, gaps


def complementarity_check(limit: int, jobs: int = 1) -> ComplementarityReport:
    """Check that floor(n*sqrt(2)) and floor(n*(2+sqrt(2))) partition [1, limit]."""
    limit = as_natural(limit)
    if limit < 1:
        raise ValueError("limit must be >= 1")
    chunks = chunk_ranges(1, limit, jobs * 4 if jobs > 1 else 1)
    dups, gaps = [], []
    for d, g in map_chunks(_partition_window, chunks, jobs):
        dups.extend(d)
        gaps.extend(g)
    return ComplementarityReport(limit, dups, gaps)
