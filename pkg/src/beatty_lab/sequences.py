"""Parity and condition-defined integer sequences, and OEIS b-file handling."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from ._parallel import chunk_ranges, map_chunks
from .beatty import condition_flags
from .exact import as_natural, isqrt

__all__ = [
    "BitStream",
    "SequenceId",
    "SequenceSpec",
    "BFileEntry",
    "BFileError",
    "BFileComparison",
    "parity_bits",
    "satisfying_indices",
    "generate",
    "shift_identity_check",
    "parse_bfile",
    "serialize_bfile",
    "compare_with_bfile",
]


@dataclass(frozen=True)
class BitStream:
    """Finite 0/1 sequence; ``bits[0]`` sits at index ``origin_index``."""

    bits: bytes
    origin_index: int = 1

    def __post_init__(self):
        bits = self.bits
        if not isinstance(bits, bytes):
            bits = bytes(bits)
            object.__setattr__(self, "bits", bits)
        if bits.strip(b"\x00\x01"):
            raise ValueError("BitStream elements must be 0 or 1")

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def at(self, index: int) -> int:
        """Bit at sequence index ``index`` (not list position)."""
        pos = index - self.origin_index
        if not 0 <= pos < len(self.bits):
            raise IndexError(index)
        return self.bits[pos]

    @classmethod
    def from_string(cls, text: str, origin_index: int = 1) -> "BitStream":
        """Parse "0110", "0 1 1 0" or "0,1,1,0"."""
        digits = [ch for ch in text if not ch.isspace() and ch != ","]
        if any(ch not in "01" for ch in digits):
            raise ValueError("bit string may only contain 0, 1, whitespace and commas")
        return cls(bytes(int(ch) for ch in digits), origin_index)


class SequenceId(str, enum.Enum):
    PARITY_A083035 = "a083035"
    COND_D_A090892 = "a090892"
    COND_B_A120752 = "a120752"

    @property
    def natural_offset(self) -> int:
        return _OFFSETS[self]


# A090892 must carry exactly two more leading solutions (n = 0, 1) than A120752.
_OFFSETS = {
    SequenceId.PARITY_A083035: 1,
    SequenceId.COND_D_A090892: 0,
    SequenceId.COND_B_A120752: 1,
}

_CONDITION_SLOT = {SequenceId.COND_D_A090892: 3, SequenceId.COND_B_A120752: 1}


@dataclass(frozen=True)
class SequenceSpec:
    id: SequenceId
    start_index: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "id", SequenceId(self.id))
        if self.start_index is None:
            object.__setattr__(self, "start_index", self.id.natural_offset)
        start = as_natural(self.start_index)
        if start < self.id.natural_offset:
            raise ValueError(
                f"{self.id.value} starts at n={self.id.natural_offset}, got {start}"
            )


def parity_bits(count: int) -> BitStream:
    """floor(n*sqrt(2)) mod 2 for n = 1..count."""
    count = as_natural(count)
    return BitStream(bytes(isqrt(2 * n * n) & 1 for n in range(1, count + 1)), 1)


def _matches(slot: int, lo: int, hi: int) -> list[int]:
    flags = condition_flags
    return [n for n in range(lo, hi + 1) if flags(n)[slot]]


class _Scan:
    # picklable (lo, hi) -> matches adapter for the process pool
    def __init__(self, slot):
        self.slot = slot

    def __call__(self, lo, hi):
        return _matches(self.slot, lo, hi)


def satisfying_indices(spec: SequenceSpec, count: int, jobs: int = 1) -> list[int]:
    """First ``count`` indices n >= spec.start_index that satisfy its condition.

    Both conditions hold on roughly half of all n, so the scan proceeds in
    windows of about twice the outstanding count.
    """
    count = as_natural(count)
    if spec.id not in _CONDITION_SLOT:
        raise ValueError(f"{spec.id.value} is not an index sequence")
    scan = _Scan(_CONDITION_SLOT[spec.id])
    out: list[int] = []
    n = spec.start_index
    while len(out) < count:
        window = max(2 * (count - len(out)) + 16, 1024)
        hi = n + window - 1
        chunks = chunk_ranges(n, hi, jobs if jobs > 1 else 1)
        for part in map_chunks(scan, chunks, jobs):
            out.extend(part)
        n = hi + 1
    del out[count:]
    return out


def generate(spec: SequenceSpec, count: int, jobs: int = 1) -> list[int]:
    """First ``count`` terms of ``spec``, starting at its start index."""
    if spec.id is SequenceId.PARITY_A083035:
        start = spec.start_index
        return [isqrt(2 * n * n) & 1 for n in range(start, start + as_natural(count))]
    return satisfying_indices(spec, count, jobs)


def shift_identity_check(count: int, jobs: int = 1) -> bool:
    """Dropping the first two (d)-terms from n=0 gives the (b)-terms from n=1."""
    count = as_natural(count)
    if count < 1:
        raise ValueError("count must be >= 1")
    d_terms = satisfying_indices(SequenceSpec(SequenceId.COND_D_A090892, 0), count + 2, jobs)
    b_terms = satisfying_indices(SequenceSpec(SequenceId.COND_B_A120752, 1), count, jobs)
    return d_terms[2:] == b_terms


class BFileEntry(NamedTuple):
    index: int
    value: int


class BFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


def parse_bfile(text: str) -> list[BFileEntry]:
    """Parse OEIS b-file text: "index value" per line, '#' comments, blanks ignored."""
    entries: list[BFileEntry] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(f"malformed line {lineno}: {raw!r}", lineno)
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(f"malformed line {lineno}: {raw!r}", lineno) from None
        if entries and index <= entries[-1].index:
            raise BFileError(f"non-monotone index at line {lineno}", lineno)
        entries.append(BFileEntry(index, value))
    return entries


def serialize_bfile(entries: Iterable[BFileEntry]) -> str:
    return "".join(f"{i} {v}\n" for i, v in entries)


@dataclass(frozen=True)
class BFileComparison:
    match: bool
    first_mismatch: tuple[int, int, int] | None = None  # (index, b-file value, generated)
    checked: int = 0

    def to_dict(self) -> dict:
        return {
            "match": self.match,
            "first_mismatch": list(self.first_mismatch) if self.first_mismatch else None,
            "checked": self.checked,
        }


def compare_with_bfile(
    entries: list[BFileEntry], spec: SequenceSpec, jobs: int = 1
) -> BFileComparison:
    """Regenerate ``spec`` and compare it term by term with ``entries``.

    The file's first index is taken as the sequence offset: the entry with
    index i is compared with generated term number i - first_index.
    """
    if not entries:
        raise ValueError("no b-file entries to compare")
    offset = entries[0].index
    terms = generate(spec, entries[-1].index - offset + 1, jobs)
    for index, value in entries:
        got = terms[index - offset]
        if got != value:
            return BFileComparison(False, (index, value, got), len(entries))
    return BFileComparison(True, None, len(entries))
