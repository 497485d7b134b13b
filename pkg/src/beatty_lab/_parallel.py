"""Range chunking and an optional process pool for the sweep operations."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

JOBS_ENV = "BEATTY_LAB_JOBS"


def resolve_jobs(jobs: int | None = None) -> int:
    """Explicit value, else $BEATTY_LAB_JOBS, else the machine's CPU count."""
    if jobs is None:
        env = os.environ.get(JOBS_ENV, "").strip()
        if env:
            jobs = int(env)
        else:
            jobs = os.cpu_count() or 1
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    return jobs


def chunk_ranges(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split the inclusive range [lo, hi] into at most ``parts`` contiguous pieces."""
    if hi < lo:
        return []
    total = hi - lo + 1
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    out = []
    start = lo
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0) - 1
        out.append((start, stop))
        start = stop + 1
    return out


def map_chunks(fn, chunks, jobs: int = 1) -> list:
    """Apply ``fn(lo, hi)`` to every chunk, results in chunk order."""
    chunks = list(chunks)
    if jobs <= 1 or len(chunks) <= 1:
        return [fn(lo, hi) for lo, hi in chunks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(chunks))) as pool:
        return list(pool.map(fn, [c[0] for c in chunks], [c[1] for c in chunks]))
