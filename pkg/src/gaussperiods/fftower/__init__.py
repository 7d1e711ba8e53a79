"""Finite-field tower arithmetic: F_p, F_q = F_{p^k}, and F_q[x]/Phi_r(x)."""
from . import kernel
from .field import (
    BaseFieldCtx,
    CycloCtx,
    FieldElem,
    add,
    canonical_encoding,
    frobenius,
    gauss_period,
    inv,
    is_irreducible,
    make_base_field,
    make_cyclo_ctx,
    mul,
    mul_by_remainder,
    neg,
    power,
    sub,
)

__all__ = [
    "BaseFieldCtx",
    "CycloCtx",
    "FieldElem",
    "add",
    "canonical_encoding",
    "frobenius",
    "gauss_period",
    "inv",
    "is_irreducible",
    "kernel",
    "make_base_field",
    "make_cyclo_ctx",
    "mul",
    "mul_by_remainder",
    "neg",
    "power",
    "sub",
]
