"""Truncated power series with exact rational coefficients, and the
functional-equation system counting butterfly-cacti.

The counting goes through a tree encoding: a connected cactus obstruction
with k butterflies corresponds to a tree with three vertex types (square
vertices for butterfly centers, triangle vertices for the two triangles of
each butterfly, circle vertices for the remaining graph vertices), with
size = number of square vertices.  Rooting the trees in the various ways,
translating multisets with the usual exp(sum B(x^k)/k) operator and
unordered pairs with (B(x)^2 + B(x^2))/2, and combining through the
dissymmetry relation (unrooted = vertex-rooted + edge-rooted - oriented-
edge-rooted) yields the unrooted count series T(x); the full (possibly
disconnected) count is G(x) = MSET(T).

All arithmetic is exact; T and G come out with non-negative integer
coefficients (asserted), growing like 6.279^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class PowerSeries:
    """A formal power series truncated at a fixed order.

    coeffs[i] is the coefficient of x^i; len(coeffs) == truncation + 1.
    Binary operations require equal truncation orders.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def from_coeffs(values: Iterable[Rational], truncation: int | None = None) -> PowerSeries:
        cs = [Fraction(v) for v in values]
        if truncation is not None:
            cs = (cs + [Fraction(0)] * (truncation + 1))[: truncation + 1]
        return PowerSeries(tuple(cs))

    @staticmethod
    def zero(truncation: int) -> PowerSeries:
        return PowerSeries((Fraction(0),) * (truncation + 1))

    @staticmethod
    def one(truncation: int) -> PowerSeries:
        return PowerSeries((Fraction(1),) + (Fraction(0),) * truncation)

    @staticmethod
    def x(truncation: int) -> PowerSeries:
        if truncation < 1:
            raise ValueError("truncation must be >= 1 for the atom series")
        return PowerSeries.from_coeffs([0, 1], truncation)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def _check(self, other: PowerSeries) -> None:
        if self.truncation != other.truncation:
            raise ValueError(
                f"truncation mismatch: {self.truncation} vs {other.truncation}"
            )

    def __add__(self, other: PowerSeries) -> PowerSeries:
        self._check(other)
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        self._check(other)
        return PowerSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        self._check(other)
        n = self.truncation
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return PowerSeries(tuple(out))

    def scale(self, factor: Rational) -> PowerSeries:
        f = Fraction(factor)
        return PowerSeries(tuple(f * a for a in self.coeffs))

    def shift(self, k: int = 1) -> PowerSeries:
        """Multiply by x^k (truncated)."""
        if k < 0:
            raise ValueError("negative shift")
        return PowerSeries((Fraction(0),) * k + self.coeffs[: self.truncation + 1 - k])

    def truncate(self, truncation: int) -> PowerSeries:
        if truncation > self.truncation:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(self.coeffs[: truncation + 1])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral():
            bad = next(i for i, c in enumerate(self.coeffs) if c.denominator != 1)
            raise ValueError(f"coefficient of x^{bad} is not an integer: {self.coeffs[bad]}")
        return tuple(int(c) for c in self.coeffs)


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a + b


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def series_scale(a: PowerSeries, factor: Rational) -> PowerSeries:
    return a.scale(factor)


def substitute_power(a: PowerSeries, k: int) -> PowerSeries:
    """A(x^k): coefficient j of the input lands at exponent j*k."""
    if k < 1:
        raise ValueError("substitution power must be >= 1")
    n = a.truncation
    out = [Fraction(0)] * (n + 1)
    for j in range(n // k + 1):
        out[j * k] = a.coeffs[j]
    return PowerSeries(tuple(out))


def series_exp(a: PowerSeries) -> PowerSeries:
    """exp of a series with zero constant term, by the B' = A'B recurrence."""
    if a.coeffs[0] != 0:
        raise ValueError("series_exp needs zero constant term")
    n = a.truncation
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    for m in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            if a.coeffs[j]:
                acc += j * a.coeffs[j] * out[m - j]
        out[m] = acc / m
    return PowerSeries(tuple(out))


def _mset_log(a: PowerSeries) -> PowerSeries:
    """sum_{k>=1} A(x^k)/k, the exponent of the multiset operator."""
    n = a.truncation
    out = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        acc = Fraction(0)
        for d in range(1, m + 1):
            if m % d == 0 and a.coeffs[d]:
                acc += Fraction(a.coeffs[d], m // d)
        out[m] = acc
    return PowerSeries(tuple(out))


def mset(a: PowerSeries) -> PowerSeries:
    """Multiset construction: exp(sum_{k>=1} A(x^k)/k)."""
    if a.coeffs[0] != 0:
        raise ValueError("mset needs zero constant term")
    return series_exp(_mset_log(a))


def mset2(a: PowerSeries) -> PowerSeries:
    """Unordered pairs: (A(x)^2 + A(x^2))/2."""
    return (a * a + substitute_power(a, 2)).scale(Fraction(1, 2))


# -- the functional-equation system -------------------------------------------


def solve_T_diamond(truncation: int) -> tuple[PowerSeries, PowerSeries]:
    """Solve the leaf-rooted tree equation; returns (T_diamond, T_star).

    With A = T_star = MSET(T_diamond), the equation collapses to
        T_diamond = (x/2) * (A(x)^3 + A(x)*A(x^2)),
    since exp(2*sum T(x^k)/k) = A(x)^2 and exp(sum T(x^(2k))/k) = A(x^2).
    The unique fixed point with zero constant term is computed order by
    order: each new coefficient depends only on lower-order ones, which is
    the same sequence naive re-iteration from 0 stabilizes to, one order per
    round.
    """
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    n = truncation
    d = [Fraction(0)] * (n + 1)   # T_diamond
    a = [Fraction(0)] * (n + 1)   # T_star
    a[0] = Fraction(1)
    a2 = [Fraction(0)] * (n + 1)  # running A^2
    a3 = [Fraction(0)] * (n + 1)  # running A^3
    lg = [Fraction(0)] * (n + 1)  # sum_k D(x^k)/k
    a2[0] = a3[0] = Fraction(1)
    for m in range(1, n + 1):
        p = m - 1
        a2[p] = sum(a[i] * a[p - i] for i in range(p + 1))
        a3[p] = sum(a2[i] * a[p - i] for i in range(p + 1))
        aax2 = sum(a[p - 2 * j] * a[j] for j in range(p // 2 + 1))
        d[m] = Fraction(1, 2) * (a3[p] + aax2)
        lg[m] = sum(Fraction(d[q], m // q) for q in range(1, m + 1) if m % q == 0)
        a[m] = sum(j * lg[j] * a[m - j] for j in range(1, m + 1)) / m
    return PowerSeries(tuple(d)), PowerSeries(tuple(a))


@dataclass(frozen=True)
class SeriesSystemSolution:
    """All series of the tree system at one truncation order."""

    T_diamond: PowerSeries
    T_star: PowerSeries
    T_circ: PowerSeries
    T_square: PowerSeries
    T_triangle: PowerSeries
    T_sq_to_tri: PowerSeries
    T_tri_to_circ: PowerSeries
    T: PowerSeries
    G: PowerSeries

    @property
    def truncation(self) -> int:
        return self.T.truncation

    def truncated(self, truncation: int) -> SeriesSystemSolution:
        return SeriesSystemSolution(
            *(getattr(self, f).truncate(truncation) for f in (
                "T_diamond", "T_star", "T_circ", "T_square", "T_triangle",
                "T_sq_to_tri", "T_tri_to_circ", "T", "G"))
        )


def solve_system(truncation: int) -> SeriesSystemSolution:
    """Evaluate the rooted series, combine by dissymmetry, and count multisets.

    T = T_square + T_triangle + T_circ - T_sq_to_tri - T_tri_to_circ;
    G = MSET(T).  Both must have non-negative integer coefficients (they
    count graphs); that is asserted, not rounded.
    """
    d, a = solve_T_diamond(truncation)
    one = PowerSeries.one(truncation)
    c = substitute_power(a, 2)       # A(x^2)
    q = substitute_power(a, 4)       # A(x^4)
    a2 = a * a
    a4 = a2 * a2
    a2c = a2 * c
    c2 = c * c
    t_circ = a - one
    t_square = (
        a4.scale(Fraction(1, 8))
        + a2c.scale(Fraction(1, 4))
        + c2.scale(Fraction(3, 8))
        + q.scale(Fraction(1, 4))
    ).shift()
    t_triangle = (
        a4.scale(Fraction(1, 4)) + a2c.scale(Fraction(1, 2)) + c2.scale(Fraction(1, 4))
    ).shift()
    t_sq_to_tri = (
        a4.scale(Fraction(1, 4)) + a2c.scale(Fraction(1, 2)) + c2.scale(Fraction(1, 4))
    ).shift()
    t_tri_to_circ = (
        a4.scale(Fraction(1, 2)) + a2c.scale(Fraction(1, 2))
    ).shift()
    t = t_square + t_triangle + t_circ - t_sq_to_tri - t_tri_to_circ
    g = mset(t)
    for name, s in (("T", t), ("G", g)):
        ints = s.integer_coeffs()  # raises if any coefficient is fractional
        if any(v < 0 for v in ints):
            raise AssertionError(f"{name} has a negative coefficient")
    return SeriesSystemSolution(
        T_diamond=d,
        T_star=a,
        T_circ=t_circ,
        T_square=t_square,
        T_triangle=t_triangle,
        T_sq_to_tri=t_sq_to_tri,
        T_tri_to_circ=t_tri_to_circ,
        T=t,
        G=g,
    )


def coefficient_table(sol: SeriesSystemSolution, up_to: int | None = None) -> list[tuple[int, int, int]]:
    """Rows (n, t_n, g_n) of exact integers."""
    hi = sol.truncation if up_to is None else min(up_to, sol.truncation)
    t = sol.T.integer_coeffs()
    g = sol.G.integer_coeffs()
    return [(n, t[n], g[n]) for n in range(hi + 1)]
