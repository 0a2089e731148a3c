"""Continued fractions as R/L words and the doubling transducer.

With ``R = [[1,1],[0,1]]`` and ``L = [[1,0],[1,1]]`` a positive real
``[a0; a1, a2, ...]`` is the infinite product ``R^a0 L^a1 R^a2 ...`` acting
as a Moebius map.  Multiplying by 2 is the matrix ``M = diag(2, 1)``; pushing
``M`` rightwards through the word with the rewriting rules below, via the
auxiliary states ``N = diag(1, 2)``, ``P = [[2,0],[1,1]]`` and
``Q = [[1,1],[0,2]]``, yields the word of ``2x``.

The same machinery gives ``beta(n, m, k) = sqrt(s^2 - 4t)``, because
``beta = s + 2*alpha`` where ``alpha`` is the root of ``x^2 + s x + t`` in
(0, 1).  For even ``m`` the expansion is available in closed form; the other
cases run the transducer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence

from .errors import DomainError
from .fibpoly import FibParams, mmm_construct
from .surd import CFExpansion, canonicalize, expand, root_of_monic

__all__ = [
    "LRWord",
    "BetaResult",
    "FamilyRow",
    "cf_to_word",
    "word_to_cf",
    "double",
    "transduce_step",
    "beta",
    "doubled_alpha_floor",
    "sleepers",
    "creepers",
    "family_row",
]

Run = tuple[str, int]


def _merge(runs: Iterable[Run]) -> list[Run]:
    out: list[Run] = []
    for letter, e in runs:
        if e == 0:
            continue
        if e < 0 or letter not in "RL":
            raise ValueError(f"bad run {letter}^{e}")
        if out and out[-1][0] == letter:
            out[-1] = (letter, out[-1][1] + e)
        else:
            out.append((letter, e))
    return out


@dataclass(frozen=True)
class LRWord:
    """Eventually periodic word ``pre_runs + cycle_runs + cycle_runs + ...``.

    Build through :meth:`normalized`, which merges equal neighbours (including
    across the cycle seam) so letters strictly alternate along the stream.
    """

    pre_runs: tuple[Run, ...]
    cycle_runs: tuple[Run, ...]

    @classmethod
    def normalized(cls, pre: Iterable[Run], cycle: Iterable[Run]) -> LRWord:
        cyc = _merge(cycle)
        if len({letter for letter, _ in cyc}) < 2:
            raise DomainError("cycle must contain both letters")
        if cyc[0][0] == cyc[-1][0]:
            head = cyc[0]
            cyc = cyc[1:-1] + [(head[0], cyc[-1][1] + head[1])]
            pre = list(pre) + [head]
        pre = _merge(pre)
        if pre and pre[-1][0] == cyc[0][0]:
            head = cyc[0]
            pre[-1] = (head[0], pre[-1][1] + head[1])
            cyc = cyc[1:] + [head]
        return cls(tuple(pre), tuple(cyc))

    def letters(self, count: int) -> str:
        """First ``count`` letters, for debugging and tests."""
        out = []
        for letter, e in self.pre_runs:
            out.append(letter * e)
        text = "".join(out)
        while len(text) < count:
            text += "".join(letter * e for letter, e in self.cycle_runs)
        return text[:count]

    def __str__(self):
        fmt = lambda runs: " ".join(f"{c}^{e}" for c, e in runs)  # noqa: E731
        return f"{fmt(self.pre_runs)} ({fmt(self.cycle_runs)})*".strip()


def _letter(index: int) -> str:
    return "R" if index % 2 == 0 else "L"


def cf_to_word(cf: CFExpansion) -> LRWord:
    if cf.preperiod[0] != 0:
        raise DomainError("expected a number in (0, 1), i.e. integer part 0")
    pre = [(_letter(i), a) for i, a in enumerate(cf.preperiod) if i > 0]
    start = len(cf.preperiod)
    period = list(cf.period)
    if len(period) % 2:
        period *= 2  # restore letter parity for the cycle
    cycle = [(_letter(start + i), a) for i, a in enumerate(period)]
    return LRWord.normalized(pre, cycle)


def word_to_cf(word: LRWord) -> CFExpansion:
    pre, cyc = list(word.pre_runs), list(word.cycle_runs)
    if not pre and cyc[0][0] == "R":
        pre, cyc = [cyc[0]], cyc[1:] + [cyc[0]]
    a0 = 0
    if pre and pre[0][0] == "R":
        a0 = pre.pop(0)[1]
    return CFExpansion.minimal([a0] + [e for _, e in pre], [e for _, e in cyc])


def transduce_step(state: str, letter: str, e: int) -> tuple[list[Run], str]:
    """One rewrite ``state * letter^e = output * new_state``."""
    if state == "P" and letter == "L":
        return transduce_step("M", "L", e + 1)  # P = M L
    if state == "Q" and letter == "R":
        return transduce_step("N", "R", e + 1)  # Q = N R
    if state == "M" and letter == "R":
        return [("R", 2 * e)], "M"
    if state == "N" and letter == "L":
        return [("L", 2 * e)], "N"
    if e % 2 == 0:
        if state == "P":
            return [("R", 1), ("L", 1), ("R", (e - 2) // 2)], "Q"
        if state == "Q":
            return [("L", 1), ("R", 1), ("L", (e - 2) // 2)], "P"
        if state == "N":
            return [("R", e // 2)], "N"
        if state == "M":
            return [("L", e // 2)], "M"
    else:
        if state == "P":
            return [("R", 1), ("L", 1), ("R", (e - 1) // 2)], "N"
        if state == "Q":
            return [("L", 1), ("R", 1), ("L", (e - 1) // 2)], "M"
        if state == "N":
            return [("R", (e - 1) // 2)], "Q"
        if state == "M":
            return [("L", (e - 1) // 2)], "P"
    raise ValueError(f"unknown state {state!r}")


def double(word: LRWord) -> LRWord:
    """Word of ``2x`` from the word of ``x``."""
    out: list[Run] = []
    state = "M"
    for letter, e in word.pre_runs:
        emitted, state = transduce_step(state, letter, e)
        out.extend(emitted)
    cycle = word.cycle_runs
    seen: dict[tuple[str, int], int] = {}
    i = 0
    while (state, i) not in seen:
        seen[(state, i)] = len(out)
        emitted, state = transduce_step(state, *cycle[i])
        out.extend(emitted)
        i = (i + 1) % len(cycle)
    mark = seen[(state, i)]
    return LRWord.normalized(out[:mark], out[mark:])


@dataclass(frozen=True)
class BetaResult:
    D: int
    s: int
    cf: CFExpansion
    branch: str


def doubled_alpha_floor(params: FibParams) -> int:
    """``floor(2*alpha)``, decided by the exact sign of ``2s + 4t + 1``."""
    s, t = mmm_construct(params)
    return 0 if 2 * s + 4 * t + 1 > 0 else 1


def _closed_form(n: int, m: int, k: int, s: int) -> tuple[list[int], str] | None:
    if m % 2:
        return None
    half, dbl = m // 2, 2 * m
    if n % 2 == 1:
        w = [half, dbl] * (n // 2) + [half]
        return w + [2 * s], "meno"
    v = [half, dbl] * (n // 2)
    vr = v[::-1]
    if k % 2 == 0:
        assert s % 2 == 0
        return v + [s // 2] + vr + [2 * s], "case1"
    mid = (s - 1) // 2
    if m > 2:
        u = [1, 1, (m - 2) // 2] * n
        return v + [mid] + u + [1, 1, mid] + vr + [2 * s], "case2"
    return v + [mid, 1] + [2] * n + [1, mid] + vr + [2 * s], "case3"


def beta(params: FibParams, closed_form: bool = True) -> BetaResult:
    """Expansion of ``sqrt(s^2 - 4t)`` for the constant-word construction.

    ``closed_form=False`` forces the transducer path even where a closed
    form exists.
    """
    n, m, k = params.n, params.m, params.k
    s, t = mmm_construct(params)
    D = s * s - 4 * t
    found = _closed_form(n, m, k, s) if closed_form else None
    if found is not None:
        period, branch = found
        cf = CFExpansion((s,), tuple(period))
    else:
        alpha = root_of_monic(s, t)
        twice = word_to_cf(double(cf_to_word(expand(alpha))))
        assert twice.preperiod[0] == doubled_alpha_floor(params)
        cf = CFExpansion((s + twice.preperiod[0],) + twice.preperiod[1:], twice.period)
        branch = "generic"
    assert cf.preperiod[0] == isqrt(D)
    return BetaResult(D=D, s=s, cf=cf, branch=branch)


@dataclass(frozen=True)
class FamilyRow:
    params: FibParams
    D: int
    cf: CFExpansion
    branch: str
    verified: bool

    @property
    def period_length(self) -> int:
        return len(self.cf.period)


def family_row(params: FibParams) -> FamilyRow:
    res = beta(params)
    oracle = expand(canonicalize(0, 1, res.D))
    return FamilyRow(params, res.D, res.cf, res.branch, res.cf == oracle)


def sleepers(n: int, k: int, ms: Sequence[int]) -> list[FamilyRow]:
    """``beta(n, m, k)`` with ``n`` and ``k`` fixed; constant period length for even ``m``."""
    return [family_row(FibParams(n, m, k).check()) for m in ms]


def creepers(m: int, js: Sequence[int], k: int = 2) -> list[FamilyRow]:
    """``beta(2j, m, k)``; for even ``m`` and ``k`` the period length is ``4j + 2``."""
    return [family_row(FibParams(2 * j, m, k).check()) for j in js]
