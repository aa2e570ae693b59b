"""Numerical verification lab for primes of the form n^2 + 1.

Sieve-backed arithmetic-function tables, divisor-sum identity checkers,
prime counting in arithmetic progressions, quadratic-polynomial prime
densities, and the associated Euler-product constants; every claim is
evaluated against independent routes and recorded as a verdict.
"""

from .backends import BACKEND
from .errors import CapacityError, ParameterError, RangeError
from .records import (ClaimVerdict, ConstantEstimate, IdentityCheck,
                      SummatoryCurve, FALSIFIED, INDETERMINATE, VERIFIED)
from .sieve import (Factorization, SieveTable, build_table, is_prime_wide,
                    primes_upto)
from .quadratic import QuadraticPoly

__all__ = [
    "BACKEND", "CapacityError", "ParameterError", "RangeError",
    "ClaimVerdict", "ConstantEstimate", "IdentityCheck", "SummatoryCurve",
    "FALSIFIED", "INDETERMINATE", "VERIFIED",
    "Factorization", "SieveTable", "build_table", "is_prime_wide",
    "primes_upto", "QuadraticPoly",
]

__version__ = "0.1.0"
