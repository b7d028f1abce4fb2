"""Exact arithmetic: rationals, cyclotomic fields Q(zeta_m), valuations.

Rationals are :class:`fractions.Fraction`.  An element of Q(zeta_m) is a
:class:`Cyclotomic`, stored in the power basis 1, z, ..., z^(phi(m)-1)
reduced modulo the m-th cyclotomic polynomial, so equal elements of the
same field always have identical coefficient tuples.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "Cyclotomic",
    "Scalar",
    "cyclotomic_polynomial",
    "cyc_add",
    "cyc_mul",
    "cyc_neg",
    "cyc_inverse",
    "galois_conj",
    "field_norm",
    "padic_valuation",
    "reduce_mod_lambda",
    "lambda_valuation",
    "euler_phi",
    "divisors",
    "factor_small",
]

Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# small integer helpers


def factor_small(n: int) -> dict[int, int]:
    """Trial-division factorization of a small positive integer."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    result = n
    for q in factor_small(n):
        result -= result // q
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _moebius(n: int) -> int:
    f = factor_small(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


# ---------------------------------------------------------------------------
# polynomials over Q, coefficient lists low degree first


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(c) for c in a]
    b = _trim([Fraction(c) for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(q), _trim(a[: len(b) - 1])


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, constant term first.

    >>> cyclotomic_polynomial(3)
    (1, 1, 1)
    """
    if m < 1:
        raise ValueError(f"cyclotomic_polynomial needs m >= 1, got {m}")
    num: list = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
        assert not rem
    return tuple(int(c) for c in num)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of z^k for k = 0..m-1 (all integral)."""
    phi = euler_phi(m)
    cyc = cyclotomic_polynomial(m)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by z: shift, then fold z^phi = -(cyc[0] + ... + cyc[phi-1] z^(phi-1))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _trace_table(m: int) -> tuple[int, ...]:
    """Tr(z^i) for i < phi(m): the Ramanujan sums c_m(i)."""
    phi = euler_phi(m)
    out = []
    for i in range(phi):
        g = math.gcd(i, m)
        q = m // g
        out.append(_moebius(q) * phi // euler_phi(q))
    return tuple(out)


def _reduce(raw: Sequence, m: int) -> tuple[Fraction, ...]:
    phi = euler_phi(m)
    out = [Fraction(c) for c in raw[:phi]] + [Fraction(0)] * max(phi - len(raw), 0)
    if len(raw) > phi:
        table = _power_table(m)
        for k in range(phi, len(raw)):
            c = raw[k]
            if c:
                row = table[k % m]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
    return tuple(out)


# ---------------------------------------------------------------------------
# Cyclotomic


class Cyclotomic:
    """Immutable element of Q(zeta_m) in the reduced power basis.

    Binary operations accept a plain int/Fraction, or another element whose
    order divides (or is divisible by) this one; the smaller field is
    embedded via zeta_m = zeta_M^(M/m).  Any other order mix is an error.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Iterable[Scalar] = ()):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        raw = list(coeffs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", _reduce(raw, order))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, order: int, coeffs: tuple[Fraction, ...]) -> "Cyclotomic":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def rational(cls, q: Scalar, order: int = 1) -> "Cyclotomic":
        phi = euler_phi(order)
        return cls._raw(order, (Fraction(q),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "Cyclotomic":
        """zeta_order ** k."""
        row = _power_table(order)[k % order]
        return cls._raw(order, tuple(Fraction(c) for c in row))

    @classmethod
    def from_exponent_sums(cls, order: int, sums: Sequence[Scalar]) -> "Cyclotomic":
        """Sum of sums[k] * zeta^k over k = 0..order-1."""
        table = _power_table(order)
        phi = euler_phi(order)
        out = [Fraction(0)] * phi
        for k, c in enumerate(sums):
            if c:
                row = table[k % order]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return cls._raw(order, tuple(out))

    # -- predicates / views ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_integral(self) -> bool:
        """True when every power-basis coordinate is an integer.

        Z[zeta_m] is the full ring of integers, so this is exactly
        algebraic integrality.
        """
        return all(c.denominator == 1 for c in self.coeffs)

    def to_complex(self) -> complex:
        w = cmath.exp(2j * cmath.pi / self.order)
        return sum((complex(c) * w**i for i, c in enumerate(self.coeffs) if c), 0j)

    def trace(self) -> Fraction:
        return sum((c * t for c, t in zip(self.coeffs, _trace_table(self.order))), Fraction(0))

    # -- coercion -------------------------------------------------------------

    def embed(self, order: int) -> "Cyclotomic":
        """Image in Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) into Q(zeta_{order})")
        step = order // self.order
        sums = [Fraction(0)] * order
        for i, c in enumerate(self.coeffs):
            sums[i * step] = c
        return Cyclotomic.from_exponent_sums(order, sums)

    def _coerce(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic.rational(other, self.order)
        if not isinstance(other, Cyclotomic):
            return NotImplemented  # type: ignore[return-value]
        if other.order == self.order:
            return self, other
        if other.order % self.order == 0:
            return self.embed(other.order), other
        if self.order % other.order == 0:
            return self, other.embed(self.order)
        raise ValueError(
            f"incompatible orders {self.order} and {other.order}; embed explicitly"
        )

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return Cyclotomic._raw(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return Cyclotomic._raw(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def scale(self, q: Scalar) -> "Cyclotomic":
        return Cyclotomic._raw(self.order, tuple(q * x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        if b.is_rational():
            return a.scale(b.coeffs[0])
        if a.is_rational():
            return b.scale(a.coeffs[0])
        return Cyclotomic._raw(a.order, _reduce(_poly_mul(a.coeffs, b.coeffs), a.order))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via extended Euclid against Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.coeffs[0], self.order)
        # invariant: s * self == r (mod Phi)
        r0, r1 = list(cyclotomic_polynomial(self.order)), _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant since Phi_m is irreducible
        c = r1[0]
        return Cyclotomic(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.scale(1 / Fraction(other))
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> "Cyclotomic":
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.rational(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- Galois ---------------------------------------------------------------

    def galois_conj(self, sigma: int) -> "Cyclotomic":
        """Apply the automorphism zeta_m -> zeta_m ** sigma."""
        m = self.order
        if math.gcd(sigma, m) != 1:
            raise ValueError(f"sigma={sigma} is not coprime to {m}")
        sums = [Fraction(0)] * m
        for i, c in enumerate(self.coeffs):
            if c:
                sums[(i * sigma) % m] += c
        return Cyclotomic.from_exponent_sums(m, sums)

    def norm(self) -> Fraction:
        m = self.order
        result = self
        for sigma in range(2, m):
            if math.gcd(sigma, m) == 1:
                result = result * self.galois_conj(sigma)
        if not result.is_rational():
            raise ArithmeticError(f"norm of {self!r} did not land in Q")
        return result.coeffs[0]

    # -- equality / display ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        m = math.lcm(self.order, other.order)
        return self.embed(m).coeffs == other.embed(m).coeffs

    def __hash__(self):
        # Tr/deg is invariant under field embeddings, so equal elements
        # of different orders hash alike.
        if self._hash is None:
            h = hash(self.coeffs[0]) if self.is_rational() else hash(self.trace() / self.degree)
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else (f"z{self.order}" if i == 1 else f"z{self.order}^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"({c})*{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyclotomic[{self.order}]({body})"


# ---------------------------------------------------------------------------
# functional surface


def cyc_add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def cyc_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def cyc_neg(a: Cyclotomic) -> Cyclotomic:
    return -a


def cyc_inverse(a: Cyclotomic) -> Cyclotomic:
    return a.inverse()


def galois_conj(a: Cyclotomic, sigma: int) -> Cyclotomic:
    return a.galois_conj(sigma)


def field_norm(a: Cyclotomic) -> Fraction:
    """Norm from Q(zeta_m) down to Q, m = a.order."""
    return a.norm()


def padic_valuation(q: Scalar, p: int) -> float | int:
    """Exponent of p in q; ``math.inf`` for q = 0."""
    q = Fraction(q)
    if q == 0:
        return math.inf
    v = 0
    num, den = abs(q.numerator), q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _as_order_p(a: Cyclotomic | Scalar, p: int) -> Cyclotomic:
    if not isinstance(a, Cyclotomic):
        return Cyclotomic.rational(a, p)
    if a.order != p:
        if a.is_rational():
            return Cyclotomic.rational(a.coeffs[0], p)
        raise ValueError(f"expected an element of Q(zeta_{p}), got order {a.order}")
    return a


def _is_p_integral(a: Cyclotomic, p: int) -> bool:
    return all(c.denominator % p for c in a.coeffs)


def reduce_mod_lambda(a: Cyclotomic | Scalar, p: int) -> int:
    """Image of a in Z_(p)[zeta_p] / (1 - zeta_p) = F_p.

    Coordinates may carry denominators prime to p; zeta_p maps to 1.
    """
    a = _as_order_p(a, p)
    if not _is_p_integral(a, p):
        raise ValueError(f"{a!r} is not integral at (1 - zeta_{p})")
    total = sum(a.coeffs)
    return total.numerator * pow(total.denominator, -1, p) % p


@lru_cache(maxsize=None)
def _inv_one_minus_zeta(p: int) -> Cyclotomic:
    return (1 - Cyclotomic.zeta(p)).inverse()


def lambda_valuation(a: Cyclotomic | Scalar, p: int) -> float | int:
    """Valuation of a at the prime (1 - zeta_p), for a integral there; inf for 0."""
    a = _as_order_p(a, p)
    if not _is_p_integral(a, p):
        raise ValueError(f"{a!r} is not integral at (1 - zeta_{p})")
    if a.is_zero():
        return math.inf
    bound = (p - 1) * padic_valuation(a.norm(), p)
    inv = _inv_one_minus_zeta(p)
    v = 0
    while reduce_mod_lambda(a, p) == 0:
        if v >= bound:
            raise ArithmeticError(f"lambda valuation exceeded its bound {bound}")
        a = a * inv
        v += 1
    return v
