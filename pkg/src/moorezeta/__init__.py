"""Exact special values of L(s, S/p) and the KU-local mod-p Moore spectrum.

The L-function attached to the mod-p Moore spectrum is the product of the
Dirichlet L-functions of the nonprincipal characters of order p modulo p^2.
This package computes its values at negative integers exactly and checks
their denominators against the orders of the KU-local homotopy groups.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .arith import Cyclotomic, cyclotomic_polynomial, field_norm, lambda_valuation, padic_valuation
from .bernoulli import (
    PowerSeries,
    classical_bernoulli,
    generalized_bernoulli,
    generalized_bernoulli_numbers,
    generalized_bernoulli_oracle,
)
from .dirichlet import (
    CharacterGroup,
    DirichletCharacter,
    discrete_log,
    primitive_root,
    torsion_generator,
    torsion_subgroup,
)
from .homotopy import HomotopyPattern, homotopy_order
from .lvalues import (
    carlitz_check,
    dirichlet_L_special,
    moore_L_special,
    padic_convergence_check,
    verify_main_theorem,
)
from .analytic import (
    coprimality_probability,
    euler_L_moore,
    functional_equation_check,
    gauss_sum,
    monte_carlo_probability,
)

__all__ = [
    "__version__",
    "Cyclotomic",
    "cyclotomic_polynomial",
    "field_norm",
    "lambda_valuation",
    "padic_valuation",
    "PowerSeries",
    "classical_bernoulli",
    "generalized_bernoulli",
    "generalized_bernoulli_numbers",
    "generalized_bernoulli_oracle",
    "CharacterGroup",
    "DirichletCharacter",
    "discrete_log",
    "primitive_root",
    "torsion_generator",
    "torsion_subgroup",
    "HomotopyPattern",
    "homotopy_order",
    "carlitz_check",
    "dirichlet_L_special",
    "moore_L_special",
    "padic_convergence_check",
    "verify_main_theorem",
    "coprimality_probability",
    "euler_L_moore",
    "functional_equation_check",
    "gauss_sum",
    "monte_carlo_probability",
]
