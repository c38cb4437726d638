"""Exact-arithmetic toolkit for flat Lie algebras in normal form.

Construction from a characteristic matrix, invariant multivectors,
cocycle decomposition into coboundary plus residue, dual brackets with
the bialgebra verdict, and Schouten/Yang-Baxter classification. All
scalars are rationals; nothing here ever rounds.
"""

from .bialgebra import (
    CybeVerdict,
    DualBracket,
    JacobiReport,
    case_filter,
    cybe_classify,
    dual_bracket,
    exactness,
    is_bialgebra,
    jacobiator,
    mu,
    schouten,
    schouten_oracle,
)
from .cohomology import (
    Cochain,
    CoefficientView,
    Decomposition,
    DecompositionError,
    NotCocycleError,
    TableReport,
    check_tables,
    coboundary,
    coboundary_space,
    cocycle_residual,
    cocycle_space,
    decompose,
    invariants,
    lemma_inv_closed_form,
)
from .exteralg import (
    Multivector,
    SubspaceBasis,
    basis_keys,
    contract,
    pairing,
    wedge,
)
from .flatliealg import (
    AlgebraError,
    AnomalousAlgebraError,
    CharacteristicMatrix,
    DimensionError,
    FlatLieAlgebra,
    InvalidCenterError,
    NonInjectiveError,
    build_algebra,
    classify,
    curvature,
    jacobi_defect,
    levi_civita,
    unimodular_defect,
)
from .zoo import get_zoo, nondegenerate_names

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "AnomalousAlgebraError",
    "CharacteristicMatrix",
    "Cochain",
    "CoefficientView",
    "CybeVerdict",
    "Decomposition",
    "DecompositionError",
    "DimensionError",
    "DualBracket",
    "FlatLieAlgebra",
    "InvalidCenterError",
    "JacobiReport",
    "Multivector",
    "NonInjectiveError",
    "NotCocycleError",
    "SubspaceBasis",
    "TableReport",
    "basis_keys",
    "build_algebra",
    "case_filter",
    "check_tables",
    "classify",
    "coboundary",
    "coboundary_space",
    "cocycle_residual",
    "cocycle_space",
    "contract",
    "curvature",
    "cybe_classify",
    "decompose",
    "dual_bracket",
    "exactness",
    "get_zoo",
    "invariants",
    "is_bialgebra",
    "jacobi_defect",
    "jacobiator",
    "lemma_inv_closed_form",
    "levi_civita",
    "mu",
    "nondegenerate_names",
    "pairing",
    "schouten",
    "schouten_oracle",
    "unimodular_defect",
    "wedge",
]
