"""Dirichlet characters of modulus 1 or an odd prime power.

A character is stored as the exponent ``log_value`` = j with
chi(g) = zeta_{phi(f)}^j for the canonical primitive root g mod f.
Values are returned in the smallest cyclotomic field that holds them,
Q(zeta_d) with d the order of chi, so a character of order p lands in
Q(zeta_p) and never in the larger Q(zeta_{p(p-1)}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .arith import Cyclotomic, divisors, euler_phi, factor_small

__all__ = [
    "DirichletCharacter",
    "CharacterGroup",
    "is_prime",
    "is_odd_prime_power",
    "primitive_root",
    "multiplicative_order",
    "discrete_log",
    "torsion_subgroup",
    "torsion_generator",
    "galois_orbit",
    "dirichlet_convolution",
    "principal_character",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_odd_prime_power(f: int) -> bool:
    if f < 3 or f % 2 == 0:
        return False
    return len(factor_small(f)) == 1


def multiplicative_order(a: int, f: int) -> int:
    a %= f
    if math.gcd(a, f) != 1:
        raise ValueError(f"{a} is not a unit mod {f}")
    phi = euler_phi(f)
    order = phi
    for q in factor_small(phi):
        while order % q == 0 and pow(a, order // q, f) == 1:
            order //= q
    return order


@lru_cache(maxsize=None)
def primitive_root(f: int) -> int:
    """Smallest g >= 2 generating (Z/f)^x, f an odd prime power.

    For f = p^k with k >= 2 the result also generates mod p^r for every r,
    because generating mod p^2 already forces that.
    """
    if not is_odd_prime_power(f):
        raise ValueError(f"primitive_root needs an odd prime power, got {f}")
    phi = euler_phi(f)
    qs = list(factor_small(phi))
    for g in range(2, f):
        if math.gcd(g, f) == 1 and all(pow(g, phi // q, f) != 1 for q in qs):
            return g
    raise AssertionError(f"no primitive root mod {f}")  # unreachable for prime powers


@lru_cache(maxsize=None)
def _log_table(f: int) -> dict[int, int]:
    # full table: moduli here are p^2 for small p, so O(f) memory is fine
    g = primitive_root(f)
    table = {}
    x = 1
    for k in range(euler_phi(f)):
        table[x] = k
        x = x * g % f
    return table


def discrete_log(n: int, f: int) -> int:
    """k with g^k = n mod f for the canonical primitive root g."""
    try:
        return _log_table(f)[n % f]
    except KeyError:
        raise ValueError(f"{n} is not a unit mod {f}") from None


@dataclass(frozen=True, order=True)
class DirichletCharacter:
    modulus: int
    log_value: int = 0
    generator: int | None = field(default=None, compare=False)

    def __post_init__(self):
        f = self.modulus
        if f == 1:
            if self.log_value != 0:
                raise ValueError("the modulus-1 character has log_value 0")
            object.__setattr__(self, "generator", None)
            return
        if not is_odd_prime_power(f):
            raise ValueError(f"unsupported modulus {f}: need 1 or an odd prime power")
        g = primitive_root(f)
        if self.generator is not None and self.generator != g:
            raise ValueError(f"generator must be the canonical primitive root {g} mod {f}")
        object.__setattr__(self, "generator", g)
        object.__setattr__(self, "log_value", self.log_value % euler_phi(f))

    @property
    def phi(self) -> int:
        return euler_phi(self.modulus)

    @property
    def order(self) -> int:
        """Order of chi in Dir(f), also the order of its value field."""
        return self.phi // math.gcd(self.log_value, self.phi)

    @property
    def prime(self) -> int | None:
        if self.modulus == 1:
            return None
        return next(iter(factor_small(self.modulus)))

    def is_principal(self) -> bool:
        return self.log_value == 0

    def exponent(self, n: int) -> int | None:
        """k with chi(n) = zeta_order^k, or None when chi(n) = 0."""
        f = self.modulus
        if f == 1:
            return 0
        if math.gcd(n, f) != 1:
            return None
        step = self.phi // self.order
        return (self.log_value // step) * discrete_log(n, f) % self.order

    def __call__(self, n: int) -> Cyclotomic:
        k = self.exponent(n)
        if k is None:
            return Cyclotomic.rational(0, self.order)
        return Cyclotomic.zeta(self.order, k)

    eval = __call__

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if other.modulus != self.modulus:
            raise ValueError("pointwise product needs equal moduli")
        return DirichletCharacter(self.modulus, self.log_value + other.log_value)

    def __pow__(self, e: int) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, self.log_value * e)

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, -self.log_value)

    def galois(self, sigma: int) -> "DirichletCharacter":
        """The character n -> sigma(chi(n)), sigma acting by zeta_d -> zeta_d^sigma."""
        if math.gcd(sigma, self.order) != 1:
            raise ValueError(f"sigma={sigma} is not a unit mod {self.order}")
        return DirichletCharacter(self.modulus, self.log_value * sigma)

    def is_induced_modulus(self, d: int) -> bool:
        f = self.modulus
        if f % d:
            return False
        return all(self.exponent(n) == 0 for n in range(1, f + 1, d) if math.gcd(n, f) == 1)

    def conductor(self) -> int:
        return next(d for d in divisors(self.modulus) if self.is_induced_modulus(d))

    def is_primitive(self) -> bool:
        return self.conductor() == self.modulus

    def is_even(self) -> bool:
        return self.exponent(-1) == 0

    def __repr__(self):
        if self.modulus == 1:
            return "DirichletCharacter(1)"
        return f"DirichletCharacter(f={self.modulus}, chi({self.generator})=z{self.phi}^{self.log_value})"


def principal_character(f: int = 1) -> DirichletCharacter:
    return DirichletCharacter(f, 0)


@dataclass(frozen=True)
class CharacterGroup:
    modulus: int
    characters: tuple[DirichletCharacter, ...]

    @classmethod
    def full(cls, f: int) -> "CharacterGroup":
        if f == 1:
            return cls(1, (principal_character(1),))
        return cls(f, tuple(DirichletCharacter(f, j) for j in range(euler_phi(f))))

    def __len__(self):
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __contains__(self, chi):
        return chi in self.characters

    def nonprincipal(self) -> list[DirichletCharacter]:
        return [c for c in self.characters if not c.is_principal()]


def torsion_subgroup(p: int) -> CharacterGroup:
    """Dir(p^2)[p]: the p characters mod p^2 with p-th-root-of-unity values."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")
    f = p * p
    return CharacterGroup(f, tuple(DirichletCharacter(f, (p - 1) * k) for k in range(p)))


def torsion_generator(p: int, k: int = 1) -> DirichletCharacter:
    """The member of Dir(p^2)[p] with chi(g) = zeta_p^k."""
    if k % p == 0:
        raise ValueError("k must be nonzero mod p for a generator")
    return DirichletCharacter(p * p, (p - 1) * k)


def galois_orbit(chi: DirichletCharacter) -> list[DirichletCharacter]:
    """{sigma o chi : sigma in Gal(Q(zeta_p)/Q)} for chi of order p in Dir(p^2)[p]."""
    p = chi.prime
    if p is None or chi.modulus != p * p or chi.order != p:
        raise ValueError(f"{chi!r} is not a nonprincipal member of Dir(p^2)[p]")
    return [chi.galois(a) for a in range(1, p)]


def _embed_values(values: Sequence[Cyclotomic], order: int) -> list[Cyclotomic]:
    return [v.embed(order) for v in values]


def dirichlet_convolution(
    chi1: DirichletCharacter, chi2: DirichletCharacter, n_max: int
) -> list[Cyclotomic]:
    """[(chi1 * chi2)(n) for n = 1..n_max] in Q(zeta_lcm(ord1, ord2))."""
    m = math.lcm(chi1.order, chi2.order)
    v1 = _embed_values([chi1(n) for n in range(1, n_max + 1)], m)
    v2 = _embed_values([chi2(n) for n in range(1, n_max + 1)], m)
    out = [Cyclotomic.rational(0, m) for _ in range(n_max)]
    for d in range(1, n_max + 1):
        if v1[d - 1].is_zero():
            continue
        for k in range(d, n_max + 1, d):
            b = v2[k // d - 1]
            if not b.is_zero():
                out[k - 1] = out[k - 1] + v1[d - 1] * b
    return out
