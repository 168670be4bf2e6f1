"""Exact computations with left-orderings of BS(1,n), Thompson's F and H_inf."""

from .balls import Ball, ConeRestriction, cayley_ball, restrict_cone
from .certificate import Certificate, Check
from .cones import (
    EnumCone,
    Sign,
    SignSeqCone,
    SmirnovCone,
    cone_axiom_check,
    enum_cone_sign,
    enum_rational,
    extend_prefix_cone,
    signseq_conjugate,
    signseq_sign,
    smirnov_conjugate,
    smirnov_sign,
)
from .exactnum import NAdic, QuadIrr, nadic_normalize, parse_quadirr, quad_affine, quad_cmp
from .groups import (
    BSElement,
    DyadicInterval,
    Group,
    HInfElement,
    PLMap,
    bs_fixed_point,
    bs_from_word,
    bs_inv,
    bs_mul,
    bump,
    hinf_from_word,
    hinf_inv,
    hinf_mul,
    pl_compose,
    pl_eval,
    pl_from_word,
    pl_inverse,
)
from .kernels import BACKEND
from .topology import condensed_at_resolution
from .verify import verify_certificate
from .witness import (
    bs_freepart_witness,
    condensation_witness,
    conjugacy_separator_F,
    good_function,
    separate_smirnov,
    separator_certificate,
)

__version__ = "0.1.0"
