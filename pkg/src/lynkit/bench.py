"""Input generators and timing for the linear-time scaling check."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .core import NATURAL, OrderedAlphabet
from .icfl import icfl_linear
from .lyndon import compact_factors

PATTERNS = ("random", "periodic", "fibonacci-like", "single-symbol")


def generate(pattern: str, size: int, seed: int = 0) -> bytes:
    if size < 1:
        raise ValueError("size must be at least 1")
    if pattern == "random":
        rng = random.Random(seed)
        return bytes(rng.choices(b"abcd", k=size))
    if pattern == "periodic":
        # rounded up to whole periods so the word is exactly (dab)^n
        return b"dab" * -(-size // 3)
    if pattern == "fibonacci-like":
        a, b = b"a", b"ab"
        while len(b) < size:
            a, b = b, b + a
        return b[:size]
    if pattern == "single-symbol":
        return b"a" * size
    raise ValueError(f"unknown pattern {pattern!r}; choose from {', '.join(PATTERNS)}")


@dataclass
class BenchRow:
    size: int
    seconds: float
    compact_factors: int
    icfl_factors: int
    ratio: float | None


def time_word(w: bytes, alphabet: OrderedAlphabet = NATURAL, repetitions: int = 3):
    """Best-of-``repetitions`` wall time of compact factors plus ICFL."""
    best = float("inf")
    for _ in range(max(1, repetitions)):
        t0 = time.perf_counter()
        runs = compact_factors(w, alphabet)
        f = icfl_linear(w, alphabet, runs)
        best = min(best, time.perf_counter() - t0)
    return best, len(runs), len(f)


def run_bench(
    size: int, pattern: str, repetitions: int = 3, seed: int = 0, doublings: int = 2
) -> list[BenchRow]:
    rows: list[BenchRow] = []
    for i in range(doublings + 1):
        n = size << i
        w = generate(pattern, n, seed)
        secs, nc, nf = time_word(w, NATURAL, repetitions)
        ratio = secs / rows[-1].seconds if rows and rows[-1].seconds > 0 else None
        rows.append(BenchRow(len(w), secs, nc, nf, ratio))
    return rows
