"""Certificates and bounded searches for y^2 - xyz + z^2 = x^3 - 5."""

from .arith import factorize, is_prime, legendre, mod_canon, squares_mod
from .curves import RationalPoint, integral_points_Ek, is_on_Ek
from .obstruction import CaseLabel, Certificate, certify, check_certificate, classify
from .poly import Polynomial, parse_polynomial, size_h

__version__ = "0.1.0"
