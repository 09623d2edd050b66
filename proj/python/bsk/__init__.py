"""Exact polynomial engine: Groebner bases, resolutions, degree bounds, membership certificates."""

from fractions import Fraction

from ._bsk import (
    BudgetExhausted,
    Error,
    InvalidInput,
    ParseError,
    RingMismatch,
    bench,
    bound,
    bounds,
    groebner_basis,
    hilbert,
    local_bs_number,
    membership,
    minimal_degree,
    monomial_integral_closure,
    multiplicity_cap,
    normal_form,
    projective_closure,
    resolve,
    search_at_degree,
    vanishing_order,
)
from ._bsk import bs_exponent_check as _bs_exponent_check
from ._bsk import max_bs_exponent as _max_bs_exponent


def bs_exponent_check(generators, phi, k, vars, branches):
    return _bs_exponent_check(generators, phi, str(Fraction(k)), vars, branches)


def max_bs_exponent(generators, phi, vars, branches):
    r = _max_bs_exponent(generators, phi, vars, branches)
    return None if r is None else Fraction(r)


__all__ = [
    "BudgetExhausted",
    "Error",
    "InvalidInput",
    "ParseError",
    "RingMismatch",
    "bench",
    "bound",
    "bounds",
    "bs_exponent_check",
    "groebner_basis",
    "hilbert",
    "local_bs_number",
    "max_bs_exponent",
    "membership",
    "minimal_degree",
    "monomial_integral_closure",
    "multiplicity_cap",
    "normal_form",
    "projective_closure",
    "resolve",
    "search_at_degree",
    "vanishing_order",
]
