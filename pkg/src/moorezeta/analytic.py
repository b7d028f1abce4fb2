"""Floating-point evaluations: Euler products, Dirichlet series, Gauss sums,
and the coprimality probabilities.

Prime classes mod p^2.  Let chi generate Dir(p^2)[p].  For a prime l != p,
chi(l) = 1 exactly when l^(p-1) = 1 mod p^2 ("chi-trivial"); otherwise
chi(l) is a primitive p-th root of unity.  Primitive roots mod p^2 (class
G_p) are always chi-nontrivial, but so are primes of order p*d for d < p-1,
e.g. l = 7 for p = 3.  The Euler product of L(s, S/p) therefore splits on
chi-triviality:

    L(s, S/p) = prod_{chi(l)=1} (1 - l^-s)^-(p-1) * prod_{chi(l)!=1} (1 - l^-s)/(1 - l^-ps)

which is the default ``split="character"``.  ``split="primitive_root"``
evaluates the G_p / N_p form with a (1 - p^-s)/zeta(s) prefactor instead;
it does not converge to L(s, S/p) and is kept for comparison.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath
import numpy as np

from .arith import Cyclotomic
from .dirichlet import DirichletCharacter, galois_orbit, is_prime, multiplicative_order, torsion_generator
from .lvalues import moore_L_special

__all__ = [
    "RealApprox",
    "PrimeClassification",
    "FunctionalEquationReport",
    "ProbabilityReport",
    "MonteCarloResult",
    "primes_up_to",
    "classify_prime",
    "euler_L_moore",
    "series_L",
    "series_L_values",
    "moore_series_product",
    "functional_equation_rhs",
    "functional_equation_check",
    "gauss_sum",
    "gauss_sum_magnitude",
    "probability_constant",
    "coprimality_probability",
    "monte_carlo_probability",
]

SPLITS = ("character", "primitive_root")


@dataclass(frozen=True)
class RealApprox:
    value: float | complex
    error_bound: float
    precision: str = "float64"

    def __float__(self):
        return float(self.value.real if isinstance(self.value, complex) else self.value)

    def agrees_with(self, other: float, tol: float) -> bool:
        return abs(self.value - other) <= tol + self.error_bound


@dataclass(frozen=True)
class PrimeClassification:
    prime: int
    cls: str  # "G_p", "N_p" or "p"
    chi_trivial: bool


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")


@lru_cache(maxsize=8)
def primes_up_to(bound: int) -> np.ndarray:
    if bound < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for i in range(3, math.isqrt(bound) + 1, 2):
        if sieve[i]:
            sieve[i * i :: 2 * i] = False
    out = np.flatnonzero(sieve)
    out.flags.writeable = False
    return out


def classify_prime(ell: int, p: int) -> PrimeClassification:
    _check_odd_prime(p)
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if ell == p:
        return PrimeClassification(ell, "p", False)
    m = p * p
    gen = multiplicative_order(ell, m) == p * (p - 1)
    return PrimeClassification(ell, "G_p" if gen else "N_p", pow(ell, p - 1, m) == 1)


@lru_cache(maxsize=None)
def _residue_masks(p: int) -> tuple[np.ndarray, np.ndarray]:
    """(is_primitive_root, is_chi_trivial) indexed by residue mod p^2."""
    m = p * p
    gen = np.zeros(m, dtype=bool)
    triv = np.zeros(m, dtype=bool)
    for r in range(m):
        if r % p:
            gen[r] = multiplicative_order(r, m) == p * (p - 1)
            triv[r] = pow(r, p - 1, m) == 1
    return gen, triv


def _prime_classes(p: int, bound: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Primes <= bound except p, with masks (primitive root, chi-trivial)."""
    primes = primes_up_to(bound)
    primes = primes[primes != p]
    gen, triv = _residue_masks(p)
    res = primes % (p * p)
    return primes, gen[res], triv[res]


def _tail_bound(s: float, bound: int, weight: float) -> float:
    """Bound on |log(true) - log(truncated)| when each prime l > bound
    contributes at most weight * l^-s / (1 - l^-s)."""
    tail = bound ** (1.0 - s) / (s - 1.0)
    delta = weight * tail / (1.0 - bound ** (-s))
    return math.expm1(delta)


def euler_L_moore(
    s: float,
    p: int,
    prime_bound: int,
    split: str = "character",
    dps: int | None = None,
) -> RealApprox:
    """Truncated Euler product for L(s, S/p), real s > 1.

    ``dps`` switches from float64 to mpmath at that many decimal digits.
    ``error_bound`` is an a priori bound on the truncation error only.
    """
    _check_odd_prime(p)
    if s <= 1:
        raise ValueError(f"the Euler product needs s > 1, got {s}")
    if split not in SPLITS:
        raise ValueError(f"split must be one of {SPLITS}")
    primes, gen, triv = _prime_classes(p, max(prime_bound, 2))
    if split == "character":
        one_mask, nontriv_mask = triv, ~triv
    else:
        one_mask, nontriv_mask = ~gen, gen

    if dps is None:
        x = primes.astype(np.float64) ** (-float(s))
        log1 = np.log1p(-x)
        logp = np.log1p(-(x**p))
        # sum(log1) is log of prod_{l != p} (1 - l^-s) = (1 - p^-s)^-1 / zeta(s)
        total = float(np.sum(log1)) - p * float(np.sum(log1[one_mask])) - float(np.sum(logp[nontriv_mask]))
        if split == "primitive_root":
            total += 2 * math.log1p(-(float(p) ** (-float(s))))
        value: float = math.exp(total)
        precision = "float64"
    else:
        with mpmath.workdps(dps):
            sm = mpmath.mpf(s)
            acc = mpmath.mpf(0)
            for ell, o, w in zip(primes.tolist(), one_mask.tolist(), nontriv_mask.tolist()):
                xe = mpmath.mpf(ell) ** (-sm)
                l1 = mpmath.log1p(-xe)
                acc += l1
                if o:
                    acc -= p * l1
                if w:
                    acc -= mpmath.log1p(-(xe**p))
            if split == "primitive_root":
                acc += 2 * mpmath.log1p(-mpmath.mpf(p) ** (-sm))
            value = mpmath.exp(acc)
        precision = f"mpmath:{dps}"
    err = abs(float(value)) * _tail_bound(float(s), max(prime_bound, 2), p - 1)
    return RealApprox(value, err, precision)


# ---------------------------------------------------------------------------
# Dirichlet series


def _character_complex_values(chi: DirichletCharacter, n_max: int) -> np.ndarray:
    vals = np.zeros(n_max, dtype=np.complex128)
    roots = np.exp(2j * np.pi * np.arange(chi.order) / chi.order)
    f = chi.modulus
    period = np.zeros(f, dtype=np.complex128)
    for r in range(f):
        k = chi.exponent(r)
        if k is not None:
            period[r] = roots[k]
    n = np.arange(1, n_max + 1)
    vals[:] = period[n % f]
    return vals


def series_L(chi: DirichletCharacter, s: float, n_max: int) -> RealApprox:
    """sum_{n <= n_max} chi(n) n^-s with chi embedded via zeta_d = e^(2 pi i/d)."""
    if s <= 1:
        raise ValueError(f"the Dirichlet series needs s > 1, got {s}")
    vals = _character_complex_values(chi, n_max)
    terms = vals * np.arange(1, n_max + 1, dtype=np.float64) ** (-float(s))
    tail = n_max ** (1.0 - s) / (s - 1.0)
    return RealApprox(complex(np.sum(terms)), tail)


def series_L_values(values: Sequence[Cyclotomic], s: float) -> RealApprox:
    """sum_n values[n-1] n^-s for an arbitrary coefficient sequence; no tail bound."""
    vals = np.array([v.to_complex() for v in values], dtype=np.complex128)
    terms = vals * np.arange(1, len(vals) + 1, dtype=np.float64) ** (-float(s))
    return RealApprox(complex(np.sum(terms)), math.nan)


def moore_series_product(p: int, s: float, n_max: int) -> RealApprox:
    """prod over the Galois orbit of the truncated series; error bound is first order."""
    _check_odd_prime(p)
    product = 1 + 0j
    rel = 0.0
    for conj in galois_orbit(torsion_generator(p)):
        term = series_L(conj, s, n_max)
        product *= term.value
        rel += term.error_bound / max(abs(term.value) - term.error_bound, 1e-300)
    return RealApprox(product, abs(product) * math.expm1(rel))


# ---------------------------------------------------------------------------
# functional equation


def functional_equation_rhs(p: int, n: int) -> float:
    """(2^(n-1) pi^n / (p^(2n-1) (n-1)!))^(p-1) * |L(1-n, S/p)|."""
    value = moore_L_special(p, 1 - n)
    factor = 2 ** (n - 1) * math.pi**n / (p ** (2 * n - 1) * math.factorial(n - 1))
    return factor ** (p - 1) * abs(float(value))


@dataclass
class FunctionalEquationReport:
    p: int
    n: int
    lhs: RealApprox
    rhs: float
    exact_value: Fraction
    tolerance: float

    @property
    def relative_error(self) -> float:
        return abs(float(self.lhs) - self.rhs) / abs(self.rhs)

    @property
    def passed(self) -> bool:
        return abs(float(self.lhs) - self.rhs) <= self.tolerance * abs(self.rhs) + self.lhs.error_bound


def functional_equation_check(
    p: int, n: int, prime_bound: int = 10**6, tolerance: float = 1e-4
) -> FunctionalEquationReport:
    if n < 2 or n % 2:
        raise ValueError("n must be an even integer >= 2")
    lhs = euler_L_moore(n, p, prime_bound)
    return FunctionalEquationReport(p, n, lhs, functional_equation_rhs(p, n), moore_L_special(p, 1 - n), tolerance)


# ---------------------------------------------------------------------------
# Gauss sums


def gauss_sum(chi: DirichletCharacter) -> complex:
    f = chi.modulus
    vals = _character_complex_values(chi, f)
    r = np.arange(1, f + 1)
    return complex(np.sum(vals * np.exp(2j * np.pi * r / f)))


def gauss_sum_magnitude(chi: DirichletCharacter) -> RealApprox:
    if not chi.is_primitive():
        raise ValueError(f"{chi!r} is not primitive")
    g = gauss_sum(chi)
    return RealApprox(abs(g), 1e-12 * chi.modulus)


# ---------------------------------------------------------------------------
# coprimality probability


def probability_constant(p: int) -> tuple[Fraction, int]:
    """(R, e) with 1/((1 - p^-2) zeta(2) L(2, S/p)) = R / pi^e.

    Uses L(2, S/p) = (2 pi^2 / p^3)^(p-1) * L(-1, S/p).
    """
    value = moore_L_special(p, -1)
    r = Fraction(p * p, p * p - 1) * 6 * Fraction(p ** (3 * (p - 1)), 2 ** (p - 1)) / value
    return r, 2 * p


@dataclass
class ProbabilityReport:
    p: int
    euler: RealApprox
    closed_form: float
    constant: Fraction
    pi_power: int

    @property
    def constant_str(self) -> str:
        c = self.constant
        return f"{c.numerator}/({c.denominator}π^{self.pi_power})"

    @property
    def difference(self) -> float:
        return abs(float(self.euler) - self.closed_form)


def coprimality_probability(p: int, prime_bound: int = 10**6) -> ProbabilityReport:
    """Probability via the Euler product and via the exact closed form."""
    _check_odd_prime(p)
    lval = euler_L_moore(2, p, prime_bound)
    zeta2 = math.pi**2 / 6
    value = 1.0 / ((1 - p**-2.0) * zeta2 * float(lval))
    err = value * lval.error_bound / max(float(lval) - lval.error_bound, 1e-300)
    const, e = probability_constant(p)
    closed = float(const) / math.pi**e
    return ProbabilityReport(p, RealApprox(value, err), closed, const, e)


@dataclass
class MonteCarloResult:
    p: int
    samples: int
    range_bound: int
    seed: int
    hits: int
    split: str
    note: str = field(
        default="finite sampling range: divisibility probabilities are floor(R/l)/R, not 1/l"
    )

    @property
    def frequency(self) -> float:
        return self.hits / self.samples

    @property
    def standard_error(self) -> float:
        f = self.frequency
        return math.sqrt(max(f * (1 - f), 1e-300) / self.samples)

    def as_approx(self) -> RealApprox:
        return RealApprox(self.frequency, self.standard_error, "monte-carlo")


@lru_cache(maxsize=4)
def _bad_factor_tables(p: int, range_bound: int, split: str) -> tuple[np.ndarray, np.ndarray]:
    """(has factor in the all-share class, has factor in the pairwise class) for 0..R."""
    primes, gen, triv = _prime_classes(p, range_bound)
    if split == "character":
        all_cls, pair_cls = primes[~triv], primes[triv]
    else:
        all_cls, pair_cls = primes[gen], primes[~gen]
    out = []
    for cls in (all_cls, pair_cls):
        mark = np.zeros(range_bound + 1, dtype=bool)
        for ell in cls.tolist():
            mark[ell::ell] = True
        mark.flags.writeable = False
        out.append(mark)
    return out[0], out[1]


_BATCH = 1 << 16


def _mc_batch(p: int, size: int, range_bound: int, seq: np.random.SeedSequence, tables) -> int:
    bad_all, bad_pair = tables
    rng = np.random.default_rng(seq)
    draws = rng.integers(1, range_bound + 1, size=(size, 2 * p), dtype=np.int64)
    pair_gcd = np.gcd(draws[:, 0::2], draws[:, 1::2])
    common = np.gcd.reduce(pair_gcd, axis=1)
    ok = ~bad_all[common] & ~bad_pair[pair_gcd].any(axis=1)
    return int(np.count_nonzero(ok))


def monte_carlo_probability(
    p: int,
    samples: int,
    range_bound: int,
    seed: int,
    split: str = "character",
    threads: int = 1,
) -> MonteCarloResult:
    """Sample (m_1, n_1, ..., m_p, n_p) uniformly from [1, R]^(2p).

    A tuple counts when (1) no prime of the all-share class divides every
    entry and (2) no pair (m_i, n_i) shares a prime of the pairwise class.
    With ``split="character"`` those classes are chi-nontrivial and
    chi-trivial primes (p excluded from both), matching the Euler product.
    Batches have a fixed size and per-batch seeds, so results do not depend
    on ``threads``.
    """
    _check_odd_prime(p)
    if samples <= 0:
        raise ValueError("samples must be positive")
    if split not in SPLITS:
        raise ValueError(f"split must be one of {SPLITS}")
    tables = _bad_factor_tables(p, range_bound, split)
    n_batches = -(-samples // _BATCH)
    sizes = [_BATCH] * (n_batches - 1) + [samples - _BATCH * (n_batches - 1)]
    seqs = np.random.SeedSequence(seed).spawn(n_batches)
    args = [(p, size, range_bound, sq, tables) for size, sq in zip(sizes, seqs)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            counts = list(pool.map(lambda a: _mc_batch(*a), args))
    else:
        counts = [_mc_batch(*a) for a in args]
    return MonteCarloResult(p, samples, range_bound, seed, sum(counts), split)
