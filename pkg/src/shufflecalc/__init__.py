"""Exact workbench for compositional shuffle operators and nabla images.

Core surface: exact coefficient rings (rings), partitions and symmetric /
quasisymmetric functions (partitions, symfunc), the C and S operators with
the hook expansion identity (operators), modified Macdonald polynomials and
nabla (macdonald), parking-function statistics (parking), and bi-brick
permutations through Lyndon words (bibrick).
"""

from .config import DEFAULT_LIMITS, Limits
from .errors import (
    DegreeGuardError,
    InhomogeneousInputError,
    NotSymmetricError,
    PeriodicWordError,
    SingularSystemError,
    SizeMismatchError,
    UnsupportedConversionError,
)
from .rings import (
    LaurentPolyQ,
    PolyQT,
    RatFuncQT,
    eval_q1,
    laurent_arith,
    polyqt_gcd,
    qint,
    ratfunc_arith,
)
from .partitions import compositions_of, conjugate, partitions_of, stat_n
from .symfunc import (
    QSymFunc,
    SignedPartition,
    SymFunc,
    convert,
    fqsym_to_sym,
    hook_m_to_s,
    kostka,
    perp_e,
    perp_h,
    pieri_e,
    pieri_h,
    straighten,
)
from .operators import (
    TheoremCoefficient,
    Verdict,
    c_alpha_one,
    c_apply,
    en_identity,
    pn_identity,
    s_apply,
    theorem_coeff,
    theorem_rhs,
)
from .macdonald import MacdonaldTable, macdonald, macdonald_table, nabla
from .parking import (
    DyckPath,
    ParkingFunction,
    PFStatistics,
    corollary_rhs,
    dyck_paths,
    enumerate_pf,
    llt_by_path,
    shuffle_sum,
    statistics,
    wpoly,
)
from .bibrick import (
    BiBrickCycle,
    BiBrickPermutation,
    alpha_of,
    alpha_of_cycle,
    canonical_rotation,
    cfl_factorize,
    enumerate_bibrick,
    hook_construct,
    is_lyndon,
    verify_q1,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
