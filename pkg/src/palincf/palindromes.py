"""Algebraic integers whose continued fractions have a palindromic period.

For a palindrome ``p = (a_1, ..., a_n)`` with continuants ``A_h, B_h``, the
number ``[0; p, s, p, s, ...]`` is an algebraic integer exactly when
``(-1)^n s = A_{n-1} B_{n-1} (mod A_n)``.  Writing
``s = (-1)^n A_{n-1} B_{n-1} + k A_n`` its minimal polynomial is
``x^2 + s x + t`` with ``t = (-1)^(n-1) B_{n-1}^2 - k B_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import KTooSmall, NotAdmissible, NotPalindrome
from .surd import CFExpansion, Convergents, QuadraticSurd, convergents, expand, root_of_monic

__all__ = [
    "Palindrome",
    "ConstructionResult",
    "SqrtAdmissibility",
    "k_min",
    "construct",
    "admissible_s",
    "is_algebraic_integer",
    "sqrt_admissibility",
    "enumerate_sqrtD",
]


@dataclass(frozen=True)
class Palindrome:
    entries: tuple[int, ...]
    conv: Convergents = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise NotPalindrome("palindrome must be nonempty")
        if any(a < 1 for a in entries):
            raise NotPalindrome("entries must be >= 1")
        if entries != entries[::-1]:
            raise NotPalindrome(f"{entries} does not read the same reversed")
        object.__setattr__(self, "conv", convergents(entries))

    @classmethod
    def parse(cls, text: str) -> Palindrome:
        return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))

    @property
    def n(self) -> int:
        return len(self.entries)

    def _sign(self) -> int:
        return -1 if self.n % 2 else 1  # (-1)^n

    def trace_offset(self) -> int:
        """``(-1)^n A_{n-1} B_{n-1}``, the value of ``s`` at ``k = 0``."""
        c = self.conv
        return self._sign() * c.A[-2] * c.B[-2]

    def s_of(self, k: int) -> int:
        return self.trace_offset() + k * self.conv.A[-1]

    def t_of(self, k: int) -> int:
        c = self.conv
        return -self._sign() * c.B[-2] ** 2 - k * c.B[-1]

    def __str__(self):
        return ",".join(map(str, self.entries))


def _as_palindrome(p) -> Palindrome:
    return p if isinstance(p, Palindrome) else Palindrome(tuple(p))


@dataclass(frozen=True)
class ConstructionResult:
    s: int
    t: int
    k: int
    k_min: int
    a0: int
    alpha: QuadraticSurd
    poly: tuple[int, int]
    expansion: CFExpansion
    collapsed: bool


def k_min(p) -> int:
    p = _as_palindrome(p)
    A_n = p.conv.A[-1]
    k1 = -(p.trace_offset() // A_n)  # ceil(-offset / A_n)
    if p.s_of(k1) == 0:
        k1 += 1
    return k1


def construct(p, k: int, a0: int = 0) -> ConstructionResult:
    p = _as_palindrome(p)
    lo = k_min(p)
    if k < lo:
        raise KTooSmall(f"k={k} is below k_min={lo} for palindrome ({p})")
    s, t = p.s_of(k), p.t_of(k)
    frac = root_of_monic(s, t)
    assert frac.sign_cmp(0) > 0 and frac.sign_cmp(1) < 0, "fractional part left (0, 1)"
    alpha = frac + a0
    cf = expand(alpha)
    return ConstructionResult(
        s=s,
        t=t,
        k=k,
        k_min=lo,
        a0=a0,
        alpha=alpha,
        poly=(s - 2 * a0, a0 * a0 - s * a0 + t),
        expansion=cf,
        collapsed=len(cf.period) < p.n + 1,
    )


def admissible_s(p) -> tuple[int, int]:
    """``(r, A_n)``: ``s`` gives an algebraic integer iff ``s = r (mod A_n)``."""
    p = _as_palindrome(p)
    A_n = p.conv.A[-1]
    return p.trace_offset() % A_n, A_n


def is_algebraic_integer(p, s: int, a0: int = 0) -> bool:
    # a0 only shifts by an integer, which never changes integrality
    r, mod = admissible_s(p)
    return s >= 1 and (s - r) % mod == 0


@dataclass(frozen=True)
class SqrtAdmissibility:
    possible: bool
    a0_residue: Optional[int] = None
    a0_modulus: Optional[int] = None


def sqrt_admissibility(p) -> SqrtAdmissibility:
    """Solve ``2 a0 = (-1)^n A_{n-1} B_{n-1} (mod A_n)`` for the leading term of sqrt(D)."""
    p = _as_palindrome(p)
    A_n = p.conv.A[-1]
    c = p.trace_offset() % A_n
    if A_n % 2:
        return SqrtAdmissibility(True, c * pow(2, -1, A_n) % A_n if A_n > 1 else 0, A_n)
    if c % 2:
        return SqrtAdmissibility(False)
    half = A_n // 2
    return SqrtAdmissibility(True, (c // 2) % half, half)


def enumerate_sqrtD(p, count: int) -> list[tuple[int, int]]:
    """The ``count`` smallest ``(a0, D)`` with ``sqrt(D) = [a0; p, 2*a0, p, 2*a0, ...]``.

    The expansion may have a shorter minimal period than ``n + 1`` when
    ``2*a0`` is small, e.g. ``sqrt(2)`` for ``p = (2,)``.
    """
    p = _as_palindrome(p)
    adm = sqrt_admissibility(p)
    if not adm.possible:
        raise NotAdmissible(f"no sqrt(D) has period ({p}, 2a0)")
    A_n = p.conv.A[-1]
    off = p.trace_offset()
    out = []
    a0 = adm.a0_residue or adm.a0_modulus
    while len(out) < count:
        k, rem = divmod(2 * a0 - off, A_n)
        assert rem == 0
        D = a0 * a0 - p.t_of(k)
        if a0 * a0 < D < (a0 + 1) ** 2:
            out.append((a0, D))
        a0 += adm.a0_modulus
    return out
