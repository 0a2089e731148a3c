"""Fundamental solutions of ``X^2 - D Y^2 = +-1`` for ``D = s^2 - 4t``.

For the constant-word construction put ``T = f_{n+1} s + 2 f_n``.  Then
``D f_{n+1}^2 = T^2 + 4`` for even ``n`` and ``T^2 - 4`` for odd ``n``, so
``(T, f_{n+1})`` solves the ``-4`` or ``+4`` equation and the unit equations
follow by halving, squaring or cubing ``(T + f_{n+1} sqrt(D)) / 2``.

:func:`pell_oracle` is an independent convergent search used to confirm
both the norm and the minimality of every closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

from .errors import DSquare, ParityViolated, PreconditionViolated
from .fibpoly import FibParams, fib, mmm_construct
from .surd import canonicalize, expand, is_square

__all__ = [
    "PellSolution",
    "pell_oracle",
    "lift_neg4",
    "lift_pos4",
    "T",
    "fundamental_negative",
    "fundamental_positive",
]

KINDS = (1, -1, 4, -4)


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    kind: int
    D: int
    branch: str = ""

    def __post_init__(self):
        if self.x <= 0 or self.y <= 0:
            raise PreconditionViolated("fundamental solutions are positive")
        if self.x * self.x - self.D * self.y * self.y != self.kind:
            raise PreconditionViolated(
                f"({self.x}, {self.y}) does not solve X^2 - {self.D} Y^2 = {self.kind}"
            )

    @property
    def pair(self) -> tuple[int, int]:
        return self.x, self.y


def _convergent_hits(D: int, kind: int) -> Optional[tuple[int, int]]:
    cf = expand(canonicalize(0, 1, D))
    p0, p1 = 1, cf.preperiod[0]
    q0, q1 = 0, 1
    for a in cf.period * 2:
        if p1 * p1 - D * q1 * q1 == kind:
            return p1, q1
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
    return None


def pell_oracle(D: int, kind: int) -> Optional[PellSolution]:
    """Minimal positive solution of ``X^2 - D Y^2 = kind``, or ``None``.

    Unit equations are read off the convergents of ``sqrt(D)`` over two
    periods.  For ``+-4`` a solution is either primitive, hence a convergent
    once ``4 < sqrt(D)``, or twice a unit solution; for ``D <= 16`` the
    small range is scanned directly.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if D <= 0 or is_square(D):
        raise DSquare(f"D={D} must be a positive non-square")
    if kind in (1, -1):
        hit = _convergent_hits(D, kind)
    elif D <= 16:
        bound = 2 * _convergent_hits(D, 1)[1]
        hit = next(
            ((isqrt(D * y * y + kind), y) for y in range(1, bound + 1)
             if is_square(D * y * y + kind)),
            None,
        )
    else:
        prim = _convergent_hits(D, kind)
        unit = _convergent_hits(D, kind // 4)
        cands = [c for c in (prim, unit and (2 * unit[0], 2 * unit[1])) if c]
        hit = min(cands, key=lambda c: c[1]) if cands else None
    if hit is None:
        return None
    return PellSolution(hit[0], hit[1], kind, D, "oracle")


def _check_norm(u: int, v: int, D: int, kind: int):
    if u <= 0 or v <= 0 or u * u - D * v * v != kind:
        raise PreconditionViolated(f"({u}, {v}) is not a positive solution of X^2 - {D} Y^2 = {kind}")


def lift_neg4(u: int, v: int, D: int) -> PellSolution:
    """From the minimal solution of ``X^2 - D Y^2 = -4`` to that of ``-1``."""
    _check_norm(u, v, D, -4)
    if D % 4 == 0:
        raise PreconditionViolated("D must not be divisible by 4")
    if u % 2 == 0:
        # u even forces v even once D is not 0 mod 4
        return PellSolution(u // 2, v // 2, -1, D, "half")
    return PellSolution((u**3 + 3 * u) // 2, (u * u + 1) * v // 2, -1, D, "cube")


def lift_pos4(u: int, v: int, D: int) -> PellSolution:
    """From the minimal solution of ``X^2 - D Y^2 = 4`` to that of ``+1``.

    Both even: halve.  ``u`` even and ``v`` odd (only when 4 | D): square.
    Both odd: cube.
    """
    _check_norm(u, v, D, 4)
    if u % 2 == 0 and v % 2 == 0:
        return PellSolution(u // 2, v // 2, 1, D, "half")
    if u % 2 == 0:
        return PellSolution((u * u - 2) // 2, u * v // 2, 1, D, "square")
    return PellSolution((u**3 - 3 * u) // 2, (u * u - 1) * v // 2, 1, D, "cube")


def T(n: int, m: int, s: int) -> int:
    return fib(n + 1, m) * s + 2 * fib(n, m)


def _setup(params: FibParams) -> tuple[int, int, int]:
    s, t = mmm_construct(params)
    n, m = params.n, params.m
    return s * s - 4 * t, T(n, m, s), fib(n + 1, m)


def fundamental_negative(params: FibParams) -> PellSolution:
    n, m, k = params.n, params.m, params.k
    if n % 2 or k % 2 == 0:
        raise ParityViolated("the negative equation is covered for even n and odd k only")
    D, Tn, f = _setup(params)
    if m % 2 == 1 and n % 6 == 2:
        return PellSolution(Tn // 2, f // 2, -1, D, "c")
    branch = "a" if m % 2 == 0 else "b"
    return PellSolution((Tn * Tn + 3) * Tn // 2, (Tn * Tn + 1) * f // 2, -1, D, branch)


def fundamental_positive(params: FibParams) -> PellSolution:
    """Minimal solution of ``X^2 - D Y^2 = 1``.

    Even ``n`` with even ``k`` has no closed form; the oracle answers and the
    result is tagged ``"oracle"``.
    """
    n, m, k = params.n, params.m, params.k
    D, Tn, f = _setup(params)
    if n % 2 == 0:
        if k % 2 == 0:
            return pell_oracle(D, 1)
        neg = fundamental_negative(params)
        x, y = neg.x, neg.y
        return PellSolution(2 * x * x + 1, 2 * x * y, 1, D, "a")
    if m % 2 == 0 or n % 3 == 2:
        return PellSolution(Tn // 2, f // 2, 1, D, "b")
    if Tn % 2:
        return PellSolution((Tn**3 - 3 * Tn) // 2, (Tn * Tn - 1) * f // 2, 1, D, "c")
    # even k makes T even while f_{n+1} stays odd: square instead of cube
    return PellSolution((Tn * Tn - 2) // 2, Tn * f // 2, 1, D, "c-square")
