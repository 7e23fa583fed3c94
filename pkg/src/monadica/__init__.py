"""Exact arithmetic with nilpotent infinitesimals.

Values are a real shadow plus a finite combination of named infinitesimal
generators; products of infinitesimals vanish.  On top of that ring the
package provides monads and shadows of real sets, interval topology, and a
limit-free derivative engine with Taylor, mean-value, and inverse-function
machinery, all backed by executable verification suites.
"""

from .calculus import (
    InverseExpr,
    LimitProbe,
    MonadRule,
    NaturalExtension,
    PiecewiseExtension,
    RegionReport,
    TaylorExpansion,
    compose_ext,
    derivative_at,
    gen_eval,
    image_set,
    inverse_extension,
    mean_value_point,
    mth_derivative,
    mth_ext_eval,
    nat_ext_eval,
    ode_verify,
    pw_derivative_at,
    pw_eval,
    taylor_expand,
)
from .core import (
    ONE,
    ZERO,
    GeneralizedReal,
    Ordering,
    add,
    archimedean_witness,
    as_generalized,
    cmp3,
    density_nonreal_between,
    density_real_between,
    differential,
    div,
    from_dict,
    from_json,
    indiscernible,
    inv,
    lesssim,
    lt,
    make,
    mul,
    neg,
    pow_nat,
    quotient_repr,
    root,
    sigma,
    sub,
    to_dict,
    to_json,
)
from .errors import (
    DomainError,
    EmptySetError,
    LengthUndefined,
    MonadicaError,
    NonFiniteInput,
    NotDifferentiable,
    NotInjective,
    NotInvertible,
    NotMonadic,
    NotRepresentable,
    OutOfDomain,
    ProvisoViolated,
    RegionMismatch,
    UnboundedError,
    UnknownGenerator,
    VanishingDerivative,
)
from .expr import (
    Add,
    Compose,
    Const,
    Cos,
    Div,
    Exp,
    Expr,
    Log,
    Mul,
    Neg,
    PowInt,
    PowReal,
    Root,
    Sin,
    Sub,
    Var,
    differentiate,
    parse,
    pow_int,
)
from .seq import (
    Catalog,
    DEFAULT_CATALOG,
    SequenceGenerator,
    convergence_witness,
    geometric,
    harmonic,
    impulse,
    oracle_binary,
    oracle_inv,
    oracle_pow_nat,
    prefix,
    term,
)
from .sets import (
    GeneralizedSet,
    Interval,
    RealSet,
    boundary,
    closure,
    difference,
    exterior,
    hat_interval,
    inf_r,
    interior,
    intersect,
    is_closed,
    is_compact,
    is_connected,
    is_lower_bound,
    is_open,
    is_upper_bound,
    length,
    max_r,
    member,
    min_r,
    monad,
    realset_from_dict,
    realset_to_dict,
    set_from_dict,
    set_from_json,
    set_to_dict,
    set_to_json,
    shadow,
    sup_r,
    topo,
    union,
)

__version__ = "0.1.0"
