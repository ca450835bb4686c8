"""Motives of nullcones of quiver representations."""

from .motive import (
    HalfPoly,
    HalfRat,
    L,
    LaurentPoly,
    MotiveRat,
    W,
    eval_at,
    gauss_binomial,
    gauss_multinomial,
    gl_motive,
    group_motive,
    half_substitute,
    pochhammer,
    pochhammer_dim,
    rat_arith,
)
from .nullcone import (
    leading_term_symmetric,
    monomial_support_loop,
    motive_acyclic,
    motive_dim_one,
    motive_recursive,
    motive_resolved,
    nullcone_motive,
)
from .quiver import (
    DimVector,
    Quiver,
    a2_quiver,
    atilde2_quiver,
    euler_form,
    is_acyclic,
    is_symmetric,
    loop_quiver,
    ordered_decompositions,
    rep_space_dim,
    sub_dim_vectors,
    two_cycle_quiver,
)
from .series import TwistedSeries, exp_series, gfi_check, ts_invert, ts_mul

__version__ = "0.1.0"
