"""Fibonacci polynomials evaluated at integers, and the constant-word construction.

``f_0 = 0``, ``f_1 = 1``, ``f_h = m f_{h-1} + f_{h-2}``; negative indices use
``f_{-h} = (-1)^(h-1) f_h``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import KTooSmall

__all__ = ["FibParams", "fib", "mmm_k_min", "mmm_construct"]


def fib(h: int, m: int) -> int:
    if h < 0:
        return fib(-h, m) if h % 2 else -fib(-h, m)
    a, b = 0, 1
    for _ in range(h):
        a, b = b, m * b + a
    return a


def mmm_k_min(n: int, m: int) -> int:
    """Smallest k for which the word (m,...,m,s) has period exactly n+1."""
    sign = 1 if n % 2 else -1  # (-1)^(n-1)
    return sign * fib(n - 2, m) + 1


@dataclass(frozen=True)
class FibParams:
    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be >= 1")

    def check(self) -> FibParams:
        lo = mmm_k_min(self.n, self.m)
        if self.k < lo:
            raise KTooSmall(f"k={self.k} is below the bound {lo} for n={self.n}, m={self.m}")
        return self


def mmm_construct(params: FibParams) -> tuple[int, int]:
    """``(s, t)`` so that ``[0; m,...,m, s]`` (n copies of m) is a root of ``x^2 + s x + t``."""
    n, m, k = params.check().n, params.m, params.k
    sign = -1 if n % 2 else 1  # (-1)^n
    fn, fn1 = fib(n, m), fib(n - 1, m)
    s = sign * fn * fn1 + k * fib(n + 1, m)
    t = -sign * fn1 * fn1 - k * fn
    return s, t
