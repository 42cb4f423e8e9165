"""Exact-arithmetic construction and verification kernel for finite-dimensional
quasi-Hopf algebras."""

from .exactfield import (
    Field,
    Scalar,
    DivisionByZero,
    fourth_root_of_unity,
    gaussian,
    prime_field,
    rationals,
)
from .tensorcore import (
    AlgebraData,
    ArityMismatch,
    CoalgebraData,
    LinMap,
    NotInvertible,
    TensorElement,
    apply_legs,
    invert_in_tensor_power,
    leg_product,
    permute_legs,
    place,
    solve_linear,
)
from .quasihopf import (
    AntipodeNotInvertible,
    CheckResult,
    FieldMismatch,
    InternalInconsistency,
    InvalidTwist,
    PQElements,
    QuasiBialgebra,
    QuasiHopfAlgebra,
    TwistData,
    VerificationReport,
    antipode_transform,
    drinfeld_twist,
    gauge_twist,
    is_semisimple,
    left_integrals,
    normalized_integral,
    pq_elements,
    right_integrals,
    structures_equal,
    tensor_product,
    variants,
    verify_quasibialgebra,
    verify_quasihopf,
)

__version__ = "0.1.0"
