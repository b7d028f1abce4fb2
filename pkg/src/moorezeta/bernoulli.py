"""Classical and generalized Bernoulli numbers.

Convention: classical numbers come from t*e^t/(e^t - 1), so B_1 = +1/2.
With that choice the modulus-1 character reproduces the classical numbers
through the same generating function as every other character, and
zeta(1 - n) = -B_n / n holds for every n >= 1 including n = 1.

Two independent routes compute B_n^chi:

* :func:`generalized_bernoulli` divides the truncated power series
  sum_r chi(r) e^(rt) by (e^(ft) - 1)/t over Q(zeta_d).
* :func:`generalized_bernoulli_oracle` uses the Bernoulli-polynomial
  identity B_n^chi = f^(n-1) * sum_a chi(a) B_n(a/f).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .arith import Cyclotomic, Scalar
from .dirichlet import DirichletCharacter

__all__ = [
    "PowerSeries",
    "classical_bernoulli",
    "classical_bernoulli_list",
    "bernoulli_polynomial",
    "generalized_bernoulli",
    "generalized_bernoulli_numbers",
    "generalized_bernoulli_oracle",
    "riemann_zeta_special",
    "clear_cache",
    "cache_snapshot",
    "cache_load",
]


class PowerSeries:
    """Power series over Q(zeta_order) truncated after ``prec`` terms.

    ``coeffs[k]`` is the coefficient of t^k for k < prec; nothing beyond
    ``prec`` is ever read, and binary operations keep the smaller ``prec``.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[Cyclotomic | Scalar]):
        self.order = order
        self.coeffs = tuple(
            c.embed(order) if isinstance(c, Cyclotomic) else Cyclotomic.rational(c, order)
            for c in coeffs
        )

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Cyclotomic:
        if not 0 <= k < self.prec:
            raise IndexError(f"coefficient t^{k} is beyond the truncation t^{self.prec}")
        return self.coeffs[k]

    def _check(self, other: "PowerSeries") -> int:
        if other.order != self.order:
            raise ValueError("power series over different fields")
        return min(self.prec, other.prec)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = self._check(other)
        return PowerSeries(self.order, [self.coeffs[k] + other.coeffs[k] for k in range(n)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = self._check(other)
        return PowerSeries(self.order, [self.coeffs[k] - other.coeffs[k] for k in range(n)])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = self._check(other)
        out = []
        for k in range(n):
            acc = Cyclotomic.rational(0, self.order)
            for i in range(k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return PowerSeries(self.order, out)

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        """Long division; the divisor needs a nonzero constant term."""
        n = self._check(other)
        lead_inv = other.coeffs[0].inverse()
        out: list[Cyclotomic] = []
        for k in range(n):
            acc = self.coeffs[k]
            for i in range(k):
                acc = acc - out[i] * other.coeffs[k - i]
            out.append(acc * lead_inv)
        return PowerSeries(self.order, out)

    def __repr__(self):
        return f"PowerSeries(order={self.order}, prec={self.prec})"


# ---------------------------------------------------------------------------
# classical numbers


_classical_lock = threading.Lock()
_classical: list[Fraction] = [Fraction(1)]


def classical_bernoulli_list(n: int) -> list[Fraction]:
    """B_0..B_n with B_1 = +1/2 (Akiyama-Tanigawa)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _classical_lock:
        if len(_classical) <= n:
            a = [Fraction(0)] * (n + 1)
            out = []
            for m in range(n + 1):
                a[m] = Fraction(1, m + 1)
                for j in range(m, 0, -1):
                    a[j - 1] = j * (a[j - 1] - a[j])
                out.append(a[0])
            _classical[:] = out
        return _classical[: n + 1]


def classical_bernoulli(n: int) -> Fraction:
    return classical_bernoulli_list(n)[n]


@lru_cache(maxsize=None)
def bernoulli_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients (constant first) of the Bernoulli polynomial B_n(x).

    B_n(x) = sum_k C(n, k) B_k x^(n-k) with B_1 = -1/2 here, i.e. the
    polynomials of t*e^(xt)/(e^t - 1).
    """
    bs = classical_bernoulli_list(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        b = Fraction(-1, 2) if k == 1 else bs[k]
        coeffs[n - k] += comb(n, k) * b
    return tuple(coeffs)


def riemann_zeta_special(one_minus_n: int) -> Fraction:
    """zeta(1 - n) = -B_n / n for n >= 1."""
    n = 1 - one_minus_n
    if n < 1:
        raise ValueError(f"argument must be <= 0, got {one_minus_n}")
    return -classical_bernoulli(n) / n


# ---------------------------------------------------------------------------
# generalized numbers via power series


_cache_lock = threading.Lock()
_cache: dict[tuple[int, int, int], Cyclotomic] = {}


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def cache_snapshot() -> dict[tuple[int, int, int], Cyclotomic]:
    with _cache_lock:
        return dict(_cache)


def cache_load(entries: dict[tuple[int, int, int], Cyclotomic]) -> None:
    with _cache_lock:
        for key, value in entries.items():
            _cache.setdefault(key, value)


def _key(chi: DirichletCharacter, n: int) -> tuple[int, int, int]:
    return (chi.modulus, chi.log_value, n)


def _exponent_power_sums(chi: DirichletCharacter, kmax: int) -> list[list[int]]:
    """S[k][c] = sum of r^k over r in [1, f] with chi(r) = zeta^c."""
    d = chi.order
    sums = [[0] * d for _ in range(kmax + 1)]
    for r in range(1, chi.modulus + 1):
        c = chi.exponent(r)
        if c is None:
            continue
        rk = 1
        for k in range(kmax + 1):
            sums[k][c] += rk
            rk *= r
    return sums


def _bernoulli_series(chi: DirichletCharacter, prec: int) -> PowerSeries:
    """sum_r chi(r) t e^(rt) / (e^(ft) - 1), first ``prec`` coefficients."""
    d, f = chi.order, chi.modulus
    sums = _exponent_power_sums(chi, prec - 1)
    numerator = PowerSeries(
        d,
        [Cyclotomic.from_exponent_sums(d, sums[k]).scale(Fraction(1, factorial(k))) for k in range(prec)],
    )
    # (e^(ft) - 1)/t has constant term f, so the division is well defined
    denominator = PowerSeries(d, [Fraction(f ** (k + 1), factorial(k + 1)) for k in range(prec)])
    return numerator / denominator


def generalized_bernoulli(chi: DirichletCharacter, n: int) -> Cyclotomic:
    """B_n^chi in Q(zeta_ord(chi)), series truncated at degree n + 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    key = _key(chi, n)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    series = _bernoulli_series(chi, n + 1)
    value = series[n].scale(factorial(n))
    with _cache_lock:
        _cache.setdefault(key, value)
    return value


def generalized_bernoulli_numbers(chi: DirichletCharacter, n_max: int) -> list[Cyclotomic]:
    """[B_0^chi, ..., B_{n_max}^chi] from a single series of n_max + 1 terms.

    Coefficient t^n of the quotient does not depend on terms past t^n, so
    each entry equals the one :func:`generalized_bernoulli` returns.
    """
    keys = [_key(chi, n) for n in range(n_max + 1)]
    with _cache_lock:
        cached = [_cache.get(k) for k in keys]
    if all(c is not None for c in cached):
        return cached  # type: ignore[return-value]
    series = _bernoulli_series(chi, n_max + 1)
    values = [series[n].scale(factorial(n)) for n in range(n_max + 1)]
    with _cache_lock:
        for k, v in zip(keys, values):
            _cache.setdefault(k, v)
    return values


# ---------------------------------------------------------------------------
# oracle via Bernoulli polynomials


@lru_cache(maxsize=None)
def _bernoulli_poly_value(n: int, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(bernoulli_polynomial(n)):
        acc = acc * x + c
    return acc


def generalized_bernoulli_oracle(chi: DirichletCharacter, n: int) -> Cyclotomic:
    """B_n^chi = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    f, d = chi.modulus, chi.order
    by_exponent = [Fraction(0)] * d
    for a in range(1, f + 1):
        c = chi.exponent(a)
        if c is not None:
            by_exponent[c] += _bernoulli_poly_value(n, Fraction(a, f))
    return Cyclotomic.from_exponent_sums(d, by_exponent).scale(Fraction(f) ** (n - 1))
