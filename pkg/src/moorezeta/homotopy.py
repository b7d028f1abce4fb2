"""Orders of the KU-local homotopy groups of the mod p Moore spectrum.

For odd p the graded group is an exterior algebra on alpha_1 (degree
2p - 3) tensored with a Laurent ring on v_1 (degree 2p - 2), so pi_n has
order p when n = 0 or -1 mod 2p - 2 and is trivial otherwise.  We use that
closed form directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dirichlet import is_prime

__all__ = [
    "HomotopyPattern",
    "homotopy_order",
    "periodicity_witness",
    "leopoldt_sequence",
]


def _check_prime(p: int) -> None:
    if p == 2:
        raise ValueError("p = 2 is not supported; the pattern is for odd primes")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


@dataclass(frozen=True)
class HomotopyPattern:
    p: int

    def __post_init__(self):
        _check_prime(self.p)

    @property
    def period(self) -> int:
        return 2 * self.p - 2

    @property
    def alpha1_degree(self) -> int:
        return 2 * self.p - 3

    @property
    def v1_degree(self) -> int:
        return 2 * self.p - 2

    def order(self, n: int) -> int:
        return self.p if n % self.period in (0, self.period - 1) else 1

    def nontrivial_degrees(self, start: int, stop: int) -> list[int]:
        return [n for n in range(start, stop) if self.order(n) > 1]


def homotopy_order(p: int, n: int) -> int:
    """#pi_n(L_KU S/p)."""
    return HomotopyPattern(p).order(n)


def periodicity_witness(p: int, n: int, steps: int) -> bool:
    pat = HomotopyPattern(p)
    base = pat.order(n)
    return all(pat.order(n + k * pat.period) == base for k in range(1, steps + 1))


def leopoldt_sequence(p: int, j_max: int) -> list[int]:
    """Orders of pi_{2(p-1)p^j - 1} for j = 0..j_max.

    Raises AssertionError if the sequence is not constantly p; every entry
    is a finite group order by construction.
    """
    pat = HomotopyPattern(p)
    seq = [pat.order(2 * (p - 1) * p**j - 1) for j in range(j_max + 1)]
    assert pat.order(-1) == p, "pi_{-1} must be finite of order p"
    assert all(x == p for x in seq), f"non-constant sequence {seq}"
    return seq
