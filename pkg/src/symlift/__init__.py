"""Exact decomposition and Euler-factor verification for tensor products of
symmetric powers of a level-1 Hecke eigenform."""

from .char_ring import (
    Character,
    NonIntegralPlethysm,
    SchurConstituent,
    SchurDecomposition,
    VirtualCharacter,
    adams,
    decompose,
    det_twist,
    dimension,
    direct_sum,
    dual,
    plethysm_sym,
    recombine,
    sym_char,
    tensor,
    unitary_specialize,
)
from .eigenforms import (
    WEIGHTS,
    InexactDivision,
    NotPrime,
    QExpansion,
    SatakeData,
    eigenform_qexp,
    eisenstein,
    hecke_a,
    satake,
)
from .euler import (
    DirichletCoefficients,
    GammaShifts,
    LocalFactor,
    NotSymmetric,
    SymPolyAB,
    VerificationOutcome,
    dirichlet_coefficients,
    gamma_shifts,
    local_factor,
    reduce_symmetric,
    tensor_local_factor,
    verify_gamma_identity,
    verify_local_identity,
)
from .rep_expr import LiftDescriptor, ParseError, eval_char, lift, parse, render

__version__ = "0.1.0"
