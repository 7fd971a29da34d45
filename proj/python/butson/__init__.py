"""Butson-Hadamard matrices: construction, order reduction and exact verification."""

from ._butson import (
    BhMatrix,
    ButsonError,
    CycloElement,
    MonomialImage,
    OrderMismatch,
    ArithmeticOverflow,
    ParseError,
    PreconditionError,
    ReductionPlan,
    UnsupportedOrder,
    VerifyReport,
    compose,
    cyclotomic_poly,
    expand,
    fourier,
    gram_entry,
    kronecker,
    plan_reduction,
    psi_scalar,
    read_matrix,
    reduce_full,
    reduce_once,
    verify,
    write_matrix,
)

__all__ = [
    "BhMatrix",
    "ButsonError",
    "CycloElement",
    "MonomialImage",
    "OrderMismatch",
    "ArithmeticOverflow",
    "ParseError",
    "PreconditionError",
    "ReductionPlan",
    "UnsupportedOrder",
    "VerifyReport",
    "compose",
    "cyclotomic_poly",
    "expand",
    "fourier",
    "gram_entry",
    "kronecker",
    "plan_reduction",
    "psi_scalar",
    "read_matrix",
    "reduce_full",
    "reduce_once",
    "verify",
    "write_matrix",
]
