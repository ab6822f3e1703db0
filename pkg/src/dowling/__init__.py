"""Exact computation of Stirling, Lah, Whitney and Dowling number families,
their r- and unified generalizations, and the Bell-type row sums, with every
family available through at least two independent routes."""

from .basis import (
    CoeffMatrix,
    PolyBasis,
    connection_matrix,
    expand_in_monomials,
    factorial_basis,
    monomial_basis,
    power_basis,
    verify_orthogonality,
    verify_tauber_product,
)
from .classic import (
    bell,
    lah_egf_check,
    lah_explicit,
    lah_from_stirlings,
    lah_horizontal,
    lah_signed_triangle,
    lah_signless,
    lah_vertical,
    partial_bell,
    qi_bell,
    stirling1_triangle,
    stirling2_triangle,
)
from .exactmath import (
    DegenerateBasisError,
    IntegralityError,
    Poly,
    Series,
    binomial,
    exp_series,
    factorial_basis_poly,
    falling_factorial,
    generalized_falling,
    generalized_rising,
    interpolate,
    rising_factorial,
)
from .oracle import PartitionSpec, count_all_partitions, count_partitions
from .rnumbers import (
    r_bell,
    r_bell_explicit,
    r_dowling,
    r_dowling_explicit,
    r_lah,
    r_lah_from_stirlings,
    r_stirling1,
    r_stirling2,
    r_whitney_first,
    r_whitney_lah,
    r_whitney_lah_explicit,
    r_whitney_lah_from_whitney,
    r_whitney_lah_horizontal,
    r_whitney_lah_vertical,
    r_whitney_second,
    r_whitney_second_recurrence,
    verify_log_concavity,
    verify_r_inverse,
    weighted_stirling_egf_check,
)
from .triangles import Triangle, transform
from .unified import (
    HSPair,
    HSParams,
    cakic,
    cakic_bell,
    cakic_bell_explicit,
    hs_bell,
    hs_bell_explicit,
    hs_lah,
    hs_lah_matrix,
    hs_pair,
    verify_hs_orthogonality,
    verify_specializations,
)
from .whitney import (
    bell_via_dowling,
    dowling,
    dowling_explicit,
    verify_whitney_lah_inverse,
    verify_whitney_lah_orthogonality,
    whitney_first,
    whitney_lah,
    whitney_lah_from_whitney,
    whitney_lah_horizontal,
    whitney_lah_vertical,
    whitney_second,
    whitney_second_benoumhani,
)

__version__ = "0.1.0"
