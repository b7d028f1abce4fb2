"""Special values L(1 - n, chi) and L(1 - n, S/p), and the checks built on them.

L(s, S/p) is the product of L(s, chi^sigma) over the Galois orbit of a
generator chi of Dir(p^2)[p]; it equals zeta_F(s)/zeta(s) for the degree-p
subfield F of Q(zeta_{p^2}).  At s = 1 - n the product is the field norm
of -B_n^chi / n from Q(zeta_p), hence rational.  No separate Dedekind-zeta
evaluation exists here: zeta_F(1-n)/zeta(1-n) is always computed as that
norm.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .arith import Cyclotomic, lambda_valuation, padic_valuation, reduce_mod_lambda
from .bernoulli import (
    generalized_bernoulli,
    generalized_bernoulli_numbers,
    riemann_zeta_special,
)
from .dirichlet import DirichletCharacter, galois_orbit, is_prime, primitive_root, torsion_generator
from .homotopy import homotopy_order

log = logging.getLogger(__name__)

__all__ = [
    "SpecialValueRecord",
    "MainTheoremReport",
    "CarlitzReport",
    "ConvergenceReport",
    "MainTheoremMismatch",
    "dirichlet_L_special",
    "moore_L_special",
    "denominator",
    "special_value_record",
    "verify_main_theorem",
    "carlitz_check",
    "padic_convergence_check",
]


class MainTheoremMismatch(AssertionError):
    pass


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")


def _n_from(one_minus_n: int) -> int:
    n = 1 - one_minus_n
    if n < 1:
        raise ValueError(f"argument must be 1 - n with n >= 1, got {one_minus_n}")
    return n


def dirichlet_L_special(chi: DirichletCharacter, one_minus_n: int) -> Cyclotomic:
    """L(1 - n, chi) = -B_n^chi / n."""
    n = _n_from(one_minus_n)
    return -generalized_bernoulli(chi, n) / n


def moore_L_special(p: int, one_minus_n: int, chi: DirichletCharacter | None = None) -> Fraction:
    """L(1 - n, S/p) as an exact rational.

    ``chi`` may be any generator of Dir(p^2)[p]; the default has
    chi(g) = zeta_p for the canonical primitive root g.
    """
    _check_odd_prime(p)
    if chi is None:
        chi = torsion_generator(p)
    elif chi.modulus != p * p or chi.order != p:
        raise ValueError(f"{chi!r} does not generate Dir({p * p})[{p}]")
    value = dirichlet_L_special(chi, one_minus_n)
    try:
        return value.norm()
    except ArithmeticError as exc:  # pragma: no cover - would be a bug in arith
        raise ArithmeticError(f"norm of L(1-n, chi) is not rational for p={p}") from exc


def denominator(q: Fraction | int) -> int:
    """Reduced denominator, with denominator(0) = 1."""
    return Fraction(q).denominator


# ---------------------------------------------------------------------------
# main theorem


@dataclass(frozen=True)
class SpecialValueRecord:
    p: int
    n: int
    value: Fraction
    order_pi_2n: int
    order_pi_2n_minus_1: int

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    @property
    def passed(self) -> bool:
        return self.denominator == self.order_pi_2n == self.order_pi_2n_minus_1

    def as_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "n": self.n,
            "argument": 1 - self.n,
            "value": _fraction_str(self.value),
            "numerator": str(self.numerator),
            "denominator": str(self.denominator),
            "order_pi_2n": self.order_pi_2n,
            "order_pi_2n_minus_1": self.order_pi_2n_minus_1,
            "passed": self.passed,
        }


def _fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def special_value_record(p: int, n: int, chi: DirichletCharacter | None = None) -> SpecialValueRecord:
    value = moore_L_special(p, 1 - n, chi)
    return SpecialValueRecord(
        p=p,
        n=n,
        value=value,
        order_pi_2n=homotopy_order(p, 2 * n),
        order_pi_2n_minus_1=homotopy_order(p, 2 * n - 1),
    )


@dataclass
class MainTheoremReport:
    p: int
    n_max: int
    records: list[SpecialValueRecord]

    @property
    def mismatches(self) -> list[SpecialValueRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def verify_main_theorem(p: int, n_max: int, threads: int = 1, strict: bool = False) -> MainTheoremReport:
    """Compare denom L(1-n, S/p) with #pi_2n and #pi_{2n-1} for n = 1..n_max.

    Mismatches are logged with all three numbers; ``strict`` raises
    :class:`MainTheoremMismatch` instead.  Records are sorted by n whatever
    the thread count.
    """
    _check_odd_prime(p)
    chi = torsion_generator(p)
    # one series of n_max + 1 terms fills the Bernoulli cache for every n
    generalized_bernoulli_numbers(chi, n_max)
    ns = range(1, n_max + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(lambda n: special_value_record(p, n, chi), ns))
    else:
        records = [special_value_record(p, n, chi) for n in ns]
    records.sort(key=lambda r: r.n)
    report = MainTheoremReport(p, n_max, records)
    for r in report.mismatches:
        msg = (
            f"p={p} n={r.n}: denom={r.denominator} #pi_{2 * r.n}={r.order_pi_2n} "
            f"#pi_{2 * r.n - 1}={r.order_pi_2n_minus_1}"
        )
        log.error(msg)
        if strict:
            raise MainTheoremMismatch(msg)
    return report


# ---------------------------------------------------------------------------
# Carlitz-style congruences


@dataclass
class CarlitzReport:
    p: int
    n: int
    value: Fraction
    branch: str  # "divisible" when (p-1) | n, else "integral"
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "n": self.n,
            "value": _fraction_str(self.value),
            "branch": self.branch,
            "checks": dict(self.checks),
            "details": {k: (str(v) if isinstance(v, (Fraction, Cyclotomic)) else v) for k, v in self.details.items()},
            "passed": self.passed,
        }


def carlitz_check(p: int, n: int) -> CarlitzReport:
    """Check the congruences behind the denominator of L(1 - n, S/p).

    Branch (p-1) | n:

    * ``ideal_containment``: 1 - chi(g) g^n lies in (1 - zeta_p).
    * ``carlitz_congruence``: for every conjugate chi^sigma,
      (1 - chi^sigma(1+p)) B_n^sigma / n = 1 mod (p, 1 - chi^sigma(g) g^n).
    * ``normed_congruence``: the product of those over sigma, which is
      p * L(1-n, S/p), is 1 mod (1 - zeta_p).
    * ``pre_valuation_unit``: (1 - chi(1+p))^(p-1) L(1-n, S/p) is a unit at
      (1 - zeta_p).  Its residue is reported; it is always p - 1, because
      (1 - zeta)^(p-1) / prod_sigma (1 - zeta^sigma) = 1/(p-1)! = -1 mod p.
    * ``valuation``: nu_p(L(1-n, S/p)) = -1.

    Otherwise L(1-n, S/p) must be an integer and B_n^chi / n integral.
    """
    _check_odd_prime(p)
    chi = torsion_generator(p)
    g = primitive_root(p * p)
    value = moore_L_special(p, 1 - n, chi)
    divisible = n % (p - 1) == 0
    rep = CarlitzReport(p, n, value, "divisible" if divisible else "integral")

    twist = 1 - chi(g) * (g**n)
    twist_residue = reduce_mod_lambda(twist, p)
    rep.details["residue_1_minus_chi_g_g_n"] = twist_residue

    if not divisible:
        rep.checks["ideal_is_unit"] = twist_residue != 0
        rep.checks["value_is_integer"] = value.denominator == 1
        rep.checks["bernoulli_over_n_integral"] = (generalized_bernoulli(chi, n) / n).is_integral()
        return rep

    rep.checks["ideal_containment"] = twist_residue == 0

    normed = Cyclotomic.rational(1, p)
    congruence_ok = True
    for conj in galois_orbit(chi):
        unit_part = 1 - conj(1 + p)
        y = unit_part * generalized_bernoulli(conj, n) / n
        if not y.is_integral():
            congruence_ok = False
            rep.details[f"nonintegral_sigma_{conj.log_value}"] = y
            continue
        ideal_exp = min(p - 1, lambda_valuation(1 - conj(g) * (g**n), p))
        diff_val = lambda_valuation(y - 1, p)
        if diff_val < ideal_exp:
            congruence_ok = False
            rep.details[f"congruence_gap_sigma_{conj.log_value}"] = (diff_val, ideal_exp)
        normed = normed * y
    rep.checks["carlitz_congruence"] = congruence_ok
    if congruence_ok:
        # prod_sigma of the unit parts is N(1 - zeta_p) = p
        assert normed == p * value
        rep.details["normed_residue"] = reduce_mod_lambda(normed, p)
        rep.checks["normed_congruence"] = rep.details["normed_residue"] == 1
    else:
        rep.checks["normed_congruence"] = False

    pre = (1 - chi(1 + p)) ** (p - 1) * value
    if pre.is_integral():
        rep.details["pre_valuation_residue"] = reduce_mod_lambda(pre, p)
        rep.checks["pre_valuation_unit"] = rep.details["pre_valuation_residue"] != 0
    else:
        rep.checks["pre_valuation_unit"] = False
    rep.details["nu_p"] = padic_valuation(value, p)
    rep.checks["valuation"] = rep.details["nu_p"] == -1
    return rep


# ---------------------------------------------------------------------------
# p-adic convergence along s = 1 - p^j (p - 1)


@dataclass
class ConvergenceReport:
    p: int
    j_max: int
    a: list[Fraction]
    c: list[Fraction]
    a_diff_valuations: list[int | float]
    c_diff_valuations: list[int | float]
    c_valuations: list[int | float]

    @staticmethod
    def _increasing(vals) -> bool:
        return all(x < y for x, y in zip(vals, vals[1:]))

    @property
    def a_increasing(self) -> bool:
        return self._increasing(self.a_diff_valuations)

    @property
    def c_increasing(self) -> bool:
        return self._increasing(self.c_diff_valuations)

    @property
    def passed(self) -> bool:
        return self.a_increasing and self.c_increasing

    def as_dict(self) -> dict[str, Any]:
        def v(x):
            return "inf" if x == math.inf else x

        return {
            "p": self.p,
            "j_max": self.j_max,
            "rows": [
                {
                    "j": j,
                    "k": self.p**j * (self.p - 1),
                    "a": _fraction_str(self.a[j]),
                    "c": _fraction_str(self.c[j]),
                    "nu_p_c": v(self.c_valuations[j]),
                    "nu_p_a_diff": v(self.a_diff_valuations[j]) if j < self.j_max else None,
                    "nu_p_c_diff": v(self.c_diff_valuations[j]) if j < self.j_max else None,
                }
                for j in range(self.j_max + 1)
            ],
            "a_increasing": self.a_increasing,
            "c_increasing": self.c_increasing,
            "passed": self.passed,
        }


def padic_convergence_check(p: int, j_max: int) -> ConvergenceReport:
    """Valuations of successive differences along k_j = p^j (p - 1).

    a_j = -k_j (1 - p^(k_j - 1)) zeta(1 - k_j) is the base-field family and
    c_j = L(1 - k_j, S/p).  Both difference-valuation sequences should be
    strictly increasing; only that is asserted, not a rate.
    """
    _check_odd_prime(p)
    ks = [p**j * (p - 1) for j in range(j_max + 1)]
    a = [-k * (1 - Fraction(p) ** (k - 1)) * riemann_zeta_special(1 - k) for k in ks]
    chi = torsion_generator(p)
    generalized_bernoulli_numbers(chi, ks[-1])
    c = [moore_L_special(p, 1 - k, chi) for k in ks]
    return ConvergenceReport(
        p=p,
        j_max=j_max,
        a=a,
        c=c,
        a_diff_valuations=[padic_valuation(y - x, p) for x, y in zip(a, a[1:])],
        c_diff_valuations=[padic_valuation(y - x, p) for x, y in zip(c, c[1:])],
        c_valuations=[padic_valuation(x, p) for x in c],
    )
