"""minvert: exact computational Lie theory around minimal nilpotent orbits.

Builds Chevalley bases with exact structure constants, the minimal
5-grading and the reductive part g^natural with its induced levels,
singular vectors of affine vertex algebras V^k(g) with a symbolic level k,
and the lisse / collapse classification of minimal W-algebras.  All
arithmetic is exact (rationals and polynomials in k); no floating point.
"""

from .affinevert import (
    SingularSolution,
    apply_mode,
    format_pbw_vector,
    is_affine_singular,
    pbw_multiply,
    sigma_embed,
    singular_level_of_power,
    solve_affine_singular,
)
from .chevalley import LieAlgebra, bracket, build_lie_algebra, centralizer_dim, normalized_form
from .exact import Poly, RatFunc
from .minimal_data import (
    ClassificationVerdict,
    MinimalGrading,
    NaturalSummand,
    central_charge,
    collapse_verdict,
    deligne_level,
    g_natural,
    k_natural,
    lisse_verdict,
    minimal_grading,
)
from .rootsys import (
    RootSystem,
    SimpleType,
    build_root_system,
    dual_coxeter,
    shifted_weyl_action,
    simple_reflection,
    weyl_action,
    weyl_dimension,
)
from .symmod import (
    PairList,
    casimir,
    s2_decomposition_check,
    solve_highest_weight_vector,
    theta_pairs,
    weight_space,
)
from .tables import JosephWeightList, emit_table, joseph_weights

__version__ = "0.1.0"
