from .root_vector import RootVector
from .weight import Weight, Rational, exact
from .root_slice import RootSlice
from .cartan_datum import CartanDatum, CartanKind, validate
from .weyl_group import WeylGroup, OrbitPoint, DominantResult, WeylElement
from .cartan_catalog import from_name, finite_cartan_matrix, affine_extension


__all__ = [
    "RootVector",
    "Weight",
    "Rational",
    "exact",
    "RootSlice",
    "CartanDatum",
    "CartanKind",
    "validate",
    "WeylGroup",
    "OrbitPoint",
    "DominantResult",
    "WeylElement",
    "from_name",
    "finite_cartan_matrix",
    "affine_extension"
]
