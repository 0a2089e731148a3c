"""Exact quadratic surds and their periodic continued fractions.

This module is the ground truth the rest of the package is checked against.
Everything is integer arithmetic; no floating point is used anywhere.

A surd is stored as ``(P + sqrt(D)) / Q``.  It is *canonical* when ``Q``
divides ``D - P**2``; in that form the classical recurrence

    a = floor((P + sqrt(D)) / Q)
    P' = a*Q - P
    Q' = (D - P'**2) / Q

stays integral and the state ``(P, Q)`` ranges over a finite set, which is
what makes :func:`expand` terminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Sequence

from .errors import DSquare, EmptyWord, RationalRoot, ZeroDenominator

__all__ = [
    "QuadraticSurd",
    "CFExpansion",
    "Convergents",
    "canonicalize",
    "expand",
    "convergents",
    "eval_periodic",
    "root_of_monic",
    "is_square",
]


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


@dataclass(frozen=True, eq=False)
class QuadraticSurd:
    """The real number ``(P + sqrt(D)) / Q``.

    Equality and hashing are by value, so ``-14 + sqrt(207)`` and
    ``(-28 + sqrt(828)) / 2`` compare equal.
    """

    P: int
    Q: int
    D: int

    def __post_init__(self):
        if self.Q == 0:
            raise ZeroDenominator("Q must be nonzero")
        if self.D <= 0 or is_square(self.D):
            raise DSquare(f"D={self.D} must be a positive non-square")

    @property
    def is_canonical(self) -> bool:
        return (self.D - self.P * self.P) % self.Q == 0

    def minimal_polynomial(self) -> tuple[int, int, int]:
        """Primitive ``(a, b, c)`` with ``a > 0`` and ``a*x**2 + b*x + c = 0``."""
        P, Q, D = self.P, self.Q, self.D
        a, b, c = Q * Q, -2 * P * Q, P * P - D
        g = gcd(gcd(a, b), c)
        return a // g, b // g, c // g

    def is_algebraic_integer(self) -> bool:
        return self.minimal_polynomial()[0] == 1

    def primitive(self) -> QuadraticSurd:
        """The unique form ``(-b +- sqrt(b^2-4ac)) / 2a`` from the primitive polynomial."""
        a, b, c = self.minimal_polynomial()
        sgn = _sign(self.Q)
        return QuadraticSurd(-b * sgn, 2 * a * sgn, b * b - 4 * a * c)

    def simplified(self) -> QuadraticSurd:
        """Smallest canonical representative, for display.

        Pulls common factors ``g`` out of ``P``, ``Q`` and ``sqrt(D)`` as long
        as the result stays canonical.
        """
        prim = self.primitive()
        P, Q, D = prim.P, prim.Q, prim.D
        for p in _small_prime_factors(gcd(P, Q)):
            while P % p == 0 and Q % p == 0 and D % (p * p) == 0:
                P2, Q2, D2 = P // p, Q // p, D // (p * p)
                if (D2 - P2 * P2) % Q2:
                    break
                P, Q, D = P2, Q2, D2
        return QuadraticSurd(P, Q, D)

    def floor(self) -> int:
        r = isqrt(self.D)
        if self.Q > 0:
            return (self.P + r) // self.Q
        return (-self.P - r - 1) // (-self.Q)

    def __sub__(self, n: int) -> QuadraticSurd:
        if not isinstance(n, int):
            return NotImplemented
        return QuadraticSurd(self.P - n * self.Q, self.Q, self.D)

    def __add__(self, n: int) -> QuadraticSurd:
        if not isinstance(n, int):
            return NotImplemented
        return QuadraticSurd(self.P + n * self.Q, self.Q, self.D)

    __radd__ = __add__

    def __mul__(self, n: int) -> QuadraticSurd:
        """Multiply by a positive integer."""
        if not isinstance(n, int) or n <= 0:
            return NotImplemented
        return QuadraticSurd(self.P * n, self.Q, self.D * n * n)

    __rmul__ = __mul__

    def sign_cmp(self, n: int) -> int:
        """Sign of ``self - n`` computed exactly."""
        # (P - nQ + sqrt(D)) / Q ; compare u + sqrt(D) with 0 then fix by sign(Q)
        u = self.P - n * self.Q
        if u >= 0:
            s = 1
        else:
            s = 1 if self.D > u * u else -1
        return s * _sign(self.Q)

    def _key(self):
        return self.minimal_polynomial(), _sign(self.Q)

    def __eq__(self, other):
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        s = self.simplified()
        P, Q, root = s.P, s.Q, f"sqrt({s.D})"
        if Q < 0:
            P, Q, root = -P, -Q, f"-{root}"
        if P == 0:
            num = root
        else:
            num = f"{P} {'-' if root[0] == '-' else '+'} {root.lstrip('-')}"
        if Q == 1:
            return num
        return f"({num})/{Q}"


def _small_prime_factors(n: int, limit: int = 10**5) -> list[int]:
    n = abs(n)
    out = []
    p = 2
    while p * p <= n and p <= limit:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if 1 < n <= limit * limit:
        out.append(n)
    return out


@dataclass(frozen=True)
class CFExpansion:
    """``[preperiod[0]; preperiod[1:], period, period, ...]``.

    ``preperiod`` always carries the integer part, so it is never empty.
    Use :meth:`minimal` to obtain the normalized representative.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(a) for a in self.preperiod))
        object.__setattr__(self, "period", tuple(int(a) for a in self.period))
        if not self.preperiod:
            raise ValueError("preperiod must contain the integer part")
        if not self.period:
            raise ValueError("period must be nonempty")
        if any(a < 1 for a in self.preperiod[1:]) or any(a < 1 for a in self.period):
            raise ValueError("partial quotients after the first must be >= 1")

    @classmethod
    def minimal(cls, preperiod: Sequence[int], period: Sequence[int]) -> CFExpansion:
        pre, per = list(preperiod), list(period)
        n = len(per)
        for d in range(1, n + 1):
            if n % d == 0 and per == per[:d] * (n // d):
                per = per[:d]
                break
        while len(pre) > 1 and pre[-1] == per[-1]:
            pre.pop()
            per = [per[-1]] + per[:-1]
        return cls(tuple(pre), tuple(per))

    def is_minimal(self) -> bool:
        return CFExpansion.minimal(self.preperiod, self.period) == self

    def terms(self, count: int) -> list[int]:
        out = list(self.preperiod[:count])
        while len(out) < count:
            out.extend(self.period[: count - len(out)])
        return out

    def __str__(self):
        head = ", ".join(map(str, self.preperiod[1:]))
        body = ", ".join(map(str, self.period))
        sep = ", " if head else ""
        return f"[{self.preperiod[0]}; {head}{sep}({body})]"


@dataclass(frozen=True)
class Convergents:
    """Continuants of a word ``(a_1, ..., a_n)``.

    ``A[h] / B[h]`` is ``[a_1; a_2, ..., a_h]`` (so ``B[h] / A[h]`` is
    ``[0; a_1, ..., a_h]``).
    """

    A: tuple[int, ...]
    B: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.A) - 1


def canonicalize(P: int, Q: int, D: int) -> QuadraticSurd:
    if Q == 0:
        raise ZeroDenominator("Q must be nonzero")
    if D <= 0 or is_square(D):
        raise DSquare(f"D={D} must be a positive non-square")
    if (D - P * P) % Q:
        P, Q, D = P * abs(Q), Q * abs(Q), D * Q * Q
    return QuadraticSurd(P, Q, D)


def expand(s: QuadraticSurd) -> CFExpansion:
    """Exact continued fraction of a quadratic surd.

    The period is found as the first repeat of the ``(P, Q)`` state; states
    are only recorded from index 1 so the integer part always stays in the
    preperiod.
    """
    if not s.is_canonical:
        s = canonicalize(s.P, s.Q, s.D)
    P, Q, D = s.P, s.Q, s.D
    r = isqrt(D)
    terms = []
    seen = {}
    while True:
        if terms:
            if (P, Q) in seen:
                break
            seen[(P, Q)] = len(terms)
        a = (P + r) // Q if Q > 0 else (-P - r - 1) // (-Q)
        terms.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    i = seen[(P, Q)]
    return CFExpansion.minimal(terms[:i], terms[i:])


def convergents(word: Sequence[int]) -> Convergents:
    if not word:
        raise EmptyWord("word must be nonempty")
    if any(a < 1 for a in word):
        raise ValueError("word entries must be >= 1")
    A, B = [1, word[0]], [0, 1]
    for a in word[1:]:
        A.append(a * A[-1] + A[-2])
        B.append(a * B[-1] + B[-2])
    return Convergents(tuple(A), tuple(B))


def _apply_mobius(y: QuadraticSurd, p: int, q: int, r: int, s: int) -> QuadraticSurd:
    """``(p*y + q) / (r*y + s)`` as a surd."""
    D = y.D
    u, v = p * y.P + q * y.Q, p
    w, z = r * y.P + s * y.Q, r
    # (u + v sqrt D) / (w + z sqrt D), rationalized
    den = w * w - z * z * D
    X, Y = u * w - v * z * D, v * w - u * z
    if Y < 0:
        X, Y, den = -X, -Y, -den
    return canonicalize(X, den, Y * Y * D).primitive()


def eval_periodic(cf: CFExpansion) -> QuadraticSurd:
    """The quadratic irrational whose expansion is ``cf``."""
    per = cf.period
    # y = [per; y]  =>  B y^2 + (B' - A) y - A' = 0 with A/B, A'/B' the last two convergents
    A0, A1 = 1, per[0]
    B0, B1 = 0, 1
    for a in per[1:]:
        A0, A1 = A1, a * A1 + A0
        B0, B1 = B1, a * B1 + B0
    a, b, c = B1, B0 - A1, -A0
    y = QuadraticSurd(-b, 2 * a, b * b - 4 * a * c)  # the root > 1
    # x = [pre; y] = (p y + p') / (q y + q')
    p0, p1 = 1, cf.preperiod[0]
    q0, q1 = 0, 1
    for t in cf.preperiod[1:]:
        p0, p1 = p1, t * p1 + p0
        q0, q1 = q1, t * q1 + q0
    return _apply_mobius(canonicalize(y.P, y.Q, y.D), p1, p0, q1, q0)


def root_of_monic(s: int, t: int) -> QuadraticSurd:
    """Larger root ``(-s + sqrt(s^2 - 4t)) / 2`` of ``x^2 + s*x + t``."""
    disc = s * s - 4 * t
    if disc <= 0:
        raise RationalRoot(f"x^2 + {s}x + {t} has no real irrational root")
    if is_square(disc):
        raise RationalRoot(f"x^2 + {s}x + {t} has rational roots")
    return canonicalize(-s, 2, disc)
