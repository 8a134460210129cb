"""Finite prime supersets for quaternion discriminants over imaginary
quadratic fields of class number > 1."""

from .arith import FactorBudget, FactoredInteger, factor, is_prime, kronecker, primes_up_to
from .quadfield import (
    FieldContext,
    IdealRep,
    QuadInt,
    ideal_mul,
    ideal_pow,
    make_field,
    prime_ideal_above,
    shortest_generator,
    splitting_type,
)
from .classgroup import (
    QuadForm,
    SplitPrime,
    choose_S,
    class_number,
    compose,
    enumerate_S0,
    exponent,
    fill_class_data,
    generates,
    reduced_forms,
)
from .weilsets import ASet, TraceSet, beta_for, family_A1, family_A2, family_A3, intersect_supports, prime_support, trace_power, trace_set
from .mazur import MazurResult, is_in_mazur, mazur_discriminants, mazur_prime_set
from .bound import BoundParams, BoundReport, assemble_bound, candidate_discriminants, verify_prime_membership

__version__ = "0.1.0"
