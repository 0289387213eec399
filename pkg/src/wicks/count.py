"""Closed-form masses and class counts of maximal Wicks forms, in exact arithmetic.

Masses weight each equivalence class by ``1/|Aut|``.  ``m2`` is indexed by
the number ``r`` of reversed edges, ``m3`` by the fixed positive/negative
vertex counts ``(s, t)``, and ``m6`` by the unscaled ``(r, s, t)`` of the
observed parameters ``(3r; 2s, 2t)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

ORDERS = (1, 2, 3, 6)


def _check_genus(g: int) -> None:
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")


def _closed_form(d: int, f: int, params: tuple[int, ...]) -> Fraction:
    """(2/d) (d^2/12)^f / prod(params!) * (6f + 2 sum - 5)! / (f! (3f + sum - 3)!)."""
    total = sum(params)
    top = 6 * f + 2 * total - 5
    bottom = 3 * f + total - 3
    if top < 0 or bottom < 0:
        return Fraction(0)
    denom = factorial(f) * factorial(bottom)
    for p in params:
        denom *= factorial(p)
    return Fraction(2, d) * Fraction(d * d, 12) ** f * Fraction(factorial(top), denom)


def mass_m1(g: int) -> Fraction:
    _check_genus(g)
    return 2 * Fraction(1, 12) ** g * Fraction(factorial(6 * g - 5), factorial(g) * factorial(3 * g - 3))


def _f2(g: int, r: int) -> int | None:
    num = 2 * g + 1 - r
    return num // 4 if r >= 0 and num >= 0 and num % 4 == 0 else None


def _f3(g: int, s: int, t: int) -> int | None:
    num = g + 1 - s - t
    if s < 0 or t < 0 or num < 0 or num % 3:
        return None
    if (s - 2 * g - 1) % 3 or (t - 2 * g) % 3:
        return None
    return num // 3


def _f6(g: int, r: int, s: int, t: int) -> int | None:
    num = 2 * g + 5 - 3 * r - 4 * s - 4 * t
    if min(r, s, t) < 0 or num < 0 or num % 12:
        return None
    if (2 * s - 2 * g - 1) % 3 or (2 * t - 2 * g) % 3:
        return None
    return num // 12


def mass_m2(g: int, r: int) -> Fraction:
    _check_genus(g)
    f = _f2(g, r)
    return Fraction(0) if f is None else _closed_form(2, f, (r,))


def mass_m3(g: int, s: int, t: int) -> Fraction:
    _check_genus(g)
    f = _f3(g, s, t)
    if f is None:
        return Fraction(0)
    if g == 1:
        # the general formula needs (-1)! here
        return Fraction(1, 6) if (s, t) == (0, 2) else Fraction(0)
    return _closed_form(3, f, (s, t))


def mass_m6(g: int, r: int, s: int, t: int) -> Fraction:
    _check_genus(g)
    f = _f6(g, r, s, t)
    if f is None:
        return Fraction(0)
    if g == 1:
        return Fraction(1, 6) if (r, s, t) == (1, 0, 1) else Fraction(0)
    return _closed_form(6, f, (r, s, t))


def feasible_params(g: int, d: int) -> list[tuple[int, ...]]:
    """Parameter tuples allowed by the divisibility and congruence conditions."""
    _check_genus(g)
    if d == 2:
        return [(r,) for r in range(2 * g + 2) if _f2(g, r) is not None]
    if d == 3:
        return [(s, t) for s in range(g + 2) for t in range(g + 2 - s)
                if _f3(g, s, t) is not None]
    if d == 6:
        bound = 2 * g + 5
        return [(r, s, t)
                for r in range(bound // 3 + 1)
                for s in range((bound - 3 * r) // 4 + 1)
                for t in range((bound - 3 * r - 4 * s) // 4 + 1)
                if _f6(g, r, s, t) is not None]
    raise ValueError(f"order must be 2, 3 or 6, got {d}")


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1 or x < 0:
        raise ArithmeticError(f"{what} = {x} is not a nonnegative integer")
    return x.numerator


@dataclass(frozen=True)
class MassReport:
    genus: int
    m1: Fraction
    m2_by_r: dict[int, Fraction]
    m3_by_st: dict[tuple[int, int], Fraction]
    m6_by_rst: dict[tuple[int, int, int], Fraction]
    m2: Fraction
    m3: Fraction
    m6: Fraction
    M1: int
    M2: int
    M3: int
    M6: int
    exact_orders: dict[int, int]

    def mass(self, d: int) -> Fraction:
        return {1: self.m1, 2: self.m2, 3: self.m3, 6: self.m6}[d]

    def count(self, d: int) -> int:
        """Classes with an automorphism of order ``d`` (zero unless d divides 6)."""
        return {1: self.M1, 2: self.M2, 3: self.M3, 6: self.M6}.get(d, 0)


def report(g: int) -> MassReport:
    _check_genus(g)
    m2_by_r = {r: mass_m2(g, r) for (r,) in feasible_params(g, 2)}
    m3_by_st = {p: mass_m3(g, *p) for p in feasible_params(g, 3)}
    m6_by_rst = {p: mass_m6(g, *p) for p in feasible_params(g, 6)}
    m1 = mass_m1(g)
    m2 = sum(m2_by_r.values(), Fraction(0))
    m3 = sum(m3_by_st.values(), Fraction(0))
    m6 = sum(m6_by_rst.values(), Fraction(0))
    M1 = _as_int(m1 + m2 + 2 * m3 + 2 * m6, f"M1^{g}")
    M2 = _as_int(2 * m2 + 4 * m6, f"M2^{g}")
    M3 = _as_int(3 * m3 + 3 * m6, f"M3^{g}")
    M6 = _as_int(6 * m6, f"M6^{g}")
    exact = {6: M6, 3: M3 - M6, 2: M2 - M6, 1: M1 - M2 - M3 + M6}
    if any(v < 0 for v in exact.values()):
        raise ArithmeticError(f"negative exact-order count in genus {g}: {exact}")
    return MassReport(g, m1, m2_by_r, m3_by_st, m6_by_rst, m2, m3, m6, M1, M2, M3, M6, exact)


def pointed_count(g: int, d: int) -> int:
    """Number of linear (rather than cyclic) representatives, (12g-6) m_d^g."""
    if d not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}")
    return _as_int((12 * g - 6) * report(g).mass(d), f"pointed count (g={g}, d={d})")


def recursion_check(g: int) -> bool:
    """Whether 2(6g+1)(6g-1)(2g-1) m1^g == (g+1) m1^{g+1} holds exactly."""
    if g < 1:
        return False
    return 2 * (6 * g + 1) * (6 * g - 1) * (2 * g - 1) * mass_m1(g) == (g + 1) * mass_m1(g + 1)
