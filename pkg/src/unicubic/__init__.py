"""Exact unirational parametrization of cubic hypersurfaces.

Given a cubic form over Q or a small finite field and a rational point, this
package classifies the hypersurface, constructs an explicit parametrization
from affine space of dimension 3n-2, verifies the construction exactly, and
generates rational points by specialization.
"""

__version__ = "0.1.0"

from .fields import (ExtensionField, Field, PrimeField, Rationals,
                     extension_field, field_arith, field_from_designator,
                     frobenius_sqrt, prime_field, rationals)
from .poly import Poly, PolyRing, poly_arith
from .ratfunc import RationalFunction, reduce_fraction, substitute
from .gcd import poly_gcd

__all__ = [
    "ExtensionField", "Field", "PrimeField", "Rationals",
    "extension_field", "field_arith", "field_from_designator",
    "frobenius_sqrt", "prime_field", "rationals",
    "Poly", "PolyRing", "poly_arith",
    "RationalFunction", "reduce_fraction", "substitute",
    "poly_gcd",
]
