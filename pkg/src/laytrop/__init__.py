"""laytrop: exact layered tropical algebra.

Scalars carry a value in (Q, +) and a layer from a configurable sorting
semiring; the package provides the scalar and polynomial arithmetic,
primary factorization, permanent-based resultants, layered calculus and
multivariate layering-map rasters, plus a text grammar and CLI.
"""

from .calculus import (
    antiderivative,
    derivative,
    discriminant,
    formal_derivative,
    is_separable,
    separable_sort,
)
from .errors import (
    ArityMismatch,
    DegreeZero,
    DomainError,
    InvalidLayer,
    LayerNotDivisible,
    LaytropError,
    NonInvertibleLayer,
    NotFullForm,
    NotMonic,
    NotPrimary,
    NotPrimaryPair,
    NotSeparable,
    NotSquare,
    OutOfRange,
    ParseError,
    PreconditionViolated,
)
from .factor import (
    PrimaryDecomposition,
    PrimaryFactor,
    eval_sort,
    is_primary,
    linear_divides_via_zero_layer,
    linear_multiplicity,
    primary_decomposition,
    psi_a,
    separable_factor,
)
from .multivar import (
    GridRow,
    MultiPoly,
    component_index,
    corner_locus_on_grid,
    corner_support,
    grid_scan,
    is_corner_root,
    is_ell_root,
    mp_eval,
    mp_mul,
    multipoly,
    theta,
    theta_min,
)
from .parsing import (
    format_poly,
    format_scalar,
    format_value,
    parse_layer,
    parse_poly,
    parse_scalar,
    to_multipoly,
)
from .polys import (
    LayeredPoly,
    corner_roots,
    essential_form,
    full_form,
    homogeneous_parts,
    hull_vertices,
    monomial,
    p_add,
    p_eval,
    p_mul,
    p_pow,
    p_scale,
    p_shift,
    poly,
    slopes,
    zero_poly,
)
from .resultants import (
    LayerMatrix,
    LayeredMatrix,
    layer_permanent,
    layer_sylvester,
    layered_matrix,
    layered_permanent,
    layered_permanent_naive,
    primary_pair_resultant,
    reduction,
    resultant,
    sylvester,
)
from .scalars import (
    BOTTOM,
    ONE,
    LayeredScalar,
    is_ell_ghost,
    ls_add,
    ls_inv,
    ls_mul,
    ls_pow,
    ls_sum,
    nu_cmp,
    nu_eq,
    s,
    scalar,
    surpasses_L,
    surpasses_ell,
)
from .sorts import (
    INF,
    NAT,
    POSQ,
    RAT,
    SUPER,
    UNIT,
    Sort,
    as_layer,
    format_layer,
    infinite_layer,
    is_ghost_sort,
    is_inf,
    layer_add,
    layer_cmp,
    layer_div,
    layer_mul,
    layer_ndiv,
    layer_nmul,
    layer_pow_int,
    layer_valid,
    parse_sort,
    truncate_layer,
    truncated,
)

__version__ = "0.1.0"
