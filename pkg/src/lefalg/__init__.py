"""Exact-arithmetic models of even-degree rational cohomology rings.

Finite graded commutative Q-algebras with a chosen integration functional,
compositional constructors (projective spaces, Grassmannians, products,
projective bundles, blowups), and tests for the structural properties of
the subalgebra generated in degree one: dimension symmetry, Poincare
duality of the induced pairing, and hard Lefschetz.
"""

from .linalg import Matrix, format_rational, parse_rational
from .ring import (CheckReport, Element, GradedAlgebra, RingMap,
                   apply_ring_map, integrate, multiply, pairing_matrix,
                   relabeled, render_element, tensor_product, verify_algebra,
                   verify_ring_map)
from .schubert import (Box, grassmannian, lr_coefficient, parse_partition,
                       partitions_in_box, pieri, quotient_chern_classes,
                       schubert_label)
from .constructors import (BlowupInput, adjoint_pushforward, blowup,
                           chern_series_inverse, projective_bundle,
                           projective_space, series, series_product,
                           truncated_polynomial_algebra)
from .lefschetz import (LefschetzData, PredicateVerdict, PrimitiveDims,
                        check_hard_lefschetz, check_poincare_duality,
                        check_symmetry, lefschetz_subalgebra, primitive_dims)
from .serialize import (algebra_from_payload, algebra_payload, read_algebra,
                        write_algebra)
from .buildfile import (BuildFileError, BuildSyntaxError, BuildTypeError,
                        evaluate, parse_build_file)
from . import catalog

__version__ = "0.1.0"

__all__ = [
    "Matrix", "format_rational", "parse_rational",
    "CheckReport", "Element", "GradedAlgebra", "RingMap", "apply_ring_map",
    "integrate", "multiply", "pairing_matrix", "relabeled", "render_element",
    "tensor_product", "verify_algebra", "verify_ring_map",
    "Box", "grassmannian", "lr_coefficient", "parse_partition",
    "partitions_in_box", "pieri", "quotient_chern_classes", "schubert_label",
    "BlowupInput", "adjoint_pushforward", "blowup", "chern_series_inverse",
    "projective_bundle", "projective_space", "series", "series_product",
    "truncated_polynomial_algebra",
    "LefschetzData", "PredicateVerdict", "PrimitiveDims",
    "check_hard_lefschetz", "check_poincare_duality", "check_symmetry",
    "lefschetz_subalgebra", "primitive_dims",
    "algebra_from_payload", "algebra_payload", "read_algebra",
    "write_algebra",
    "BuildFileError", "BuildSyntaxError", "BuildTypeError", "evaluate",
    "parse_build_file",
    "catalog",
    "__version__",
]
