"""Hole probabilities of Gaussian entire functions with log-concave coefficients."""

__version__ = '0.1.0'

from holescope.coeffs import CoefficientModel, Family, FamilySpec, make_family  # noqa: E402
from holescope.exceptions import HoleScopeError  # noqa: E402
from holescope.growth import growth_profile, s_value  # noqa: E402

__all__ = [
    'CoefficientModel',
    'Family',
    'FamilySpec',
    'HoleScopeError',
    'growth_profile',
    'make_family',
    's_value',
]
