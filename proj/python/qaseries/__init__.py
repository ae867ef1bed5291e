"""Exact truncated formal power series with Weierstrass preparation."""

from ._core import (  # noqa: F401
    CauchyRiemannResidual,
    DistinguishedPoly,
    DivisionResult,
    Error,
    HoloPair,
    InvariantError,
    LemmaResult,
    ParseError,
    PreconditionError,
    PreparationResult,
    Series,
    agree_to_degree,
    cauchy_riemann_check,
    compose,
    direct_complexification,
    even_odd_split,
    halve_exponents,
    holomorphic_extension,
    implicit_solve,
    invert_unit,
    lemma_split,
    monomial_divide,
    normalize_h,
    order_in_variable,
    partial_derivative,
    semigroup_check,
    substitute_square,
    weierstrass_divide,
    weierstrass_prepare,
)
