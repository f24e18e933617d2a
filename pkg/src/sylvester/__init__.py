"""Restricted partition functions in closed form via Sylvester waves.

The count ``W(s, d)`` of partitions of ``s`` into parts from ``d`` is built
exactly as a sum of waves made from higher-order Bernoulli polynomials and
generalized Euler numbers over cyclotomic fields, and checked against a
dynamic-programming oracle.  A small layer on top counts invariants of
finite groups from their Molien functions.
"""
from .errors import (
    ConsistencyError,
    DomainError,
    NonRationalError,
    SylvesterError,
    ValidationError,
)
from .exact import (
    CycloElement,
    RatPoly,
    cyclo_as_rational,
    cyclo_inverse,
    cyclo_root_power,
    cyclotomic_polynomial,
    mobius,
    rational_str,
)
from .higher import (
    bernoulli_higher_poly,
    bernoulli_numbers,
    frobenius_numbers,
    gen_euler_numbers,
    gen_euler_poly_at,
)
from .molien import MolienSpec, catalog, invariant_count, load_spec
from .oracle import count_partitions, rational_series
from .waves import (
    PartSet,
    QuasiPoly,
    WaveComponent,
    eval_exact,
    eval_real,
    make_partset,
    natural_set,
    partition_quasipoly,
    polynomial_wave,
    quasipoly_to_json,
    two_prime_closed_form,
    wave,
    wave_recursion_residual,
)

__version__ = "0.1.0"
