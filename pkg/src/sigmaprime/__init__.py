"""Exact arithmetic for coprime-restricted divisor convolutions.

The package enumerates the solution sets B(n) and B'(n) of ax + by = n
(B' adds gcd(a, b) = gcd(x, y) = 1), evaluates the two-variable coprime
divisor sum sigma_prime and its convolutions, stores exact closed forms
for the nine proven exponent pairs alongside their enumeration oracle,
checks the six-term polynomial identities behind them, counts the related
representation problems two independent ways, and fits the closed-form
ansatz to fresh oracle data with exact rational arithmetic.

All computation is exact: Python ints and fractions.Fraction, no floats.
"""

from __future__ import annotations

from .arith import bernoulli, divisors, factorize, faulhaber_sum, mobius, sigma_k, totient
from .identities import (
    PROOF_POLYNOMIALS,
    THEOREM_BY_RS,
    THEOREM_RS,
    Poly4,
    TheoremId,
    VerifyReport,
    VerifyRow,
    besge_check,
    eval_theorem,
    glaisher_check,
    main_identity_sides,
    parse_theorem_id,
    random_symmetric_poly,
    symmetry_holds,
    theorem_form,
    verify_theorem,
)
from .lattice import (
    PreIdentityReport,
    brute_convolution,
    check_pre_identity,
    enumerate_quadruples,
    quadruples,
    sigma_prime,
)
from .patternfit import (
    FitReport,
    PatternCoeffs,
    fit,
    fit_and_validate,
    pattern_value,
    probe_weight10,
    theorem_pattern,
    validate,
)
from .powersums import COPRIME_POWER_FORMS, ClosedForm, coprime_power_sum, psi
from .representations import (
    BudgetExceededError,
    CountSpec,
    LMReport,
    LMRow,
    count_fast,
    count_raw,
    verify_lm,
)

__version__ = "0.1.0"

__all__ = [
    "bernoulli",
    "divisors",
    "factorize",
    "faulhaber_sum",
    "mobius",
    "sigma_k",
    "totient",
    "psi",
    "coprime_power_sum",
    "ClosedForm",
    "COPRIME_POWER_FORMS",
    "enumerate_quadruples",
    "quadruples",
    "sigma_prime",
    "brute_convolution",
    "check_pre_identity",
    "PreIdentityReport",
    "Poly4",
    "symmetry_holds",
    "main_identity_sides",
    "random_symmetric_poly",
    "PROOF_POLYNOMIALS",
    "TheoremId",
    "parse_theorem_id",
    "THEOREM_RS",
    "THEOREM_BY_RS",
    "theorem_form",
    "eval_theorem",
    "verify_theorem",
    "VerifyRow",
    "VerifyReport",
    "besge_check",
    "glaisher_check",
    "CountSpec",
    "count_fast",
    "count_raw",
    "verify_lm",
    "LMRow",
    "LMReport",
    "BudgetExceededError",
    "PatternCoeffs",
    "FitReport",
    "fit",
    "validate",
    "fit_and_validate",
    "probe_weight10",
    "pattern_value",
    "theorem_pattern",
    "__version__",
]
