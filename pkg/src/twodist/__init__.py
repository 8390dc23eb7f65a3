"""Linear-programming bounds and certified constructions for spherical two-distance sets."""

__version__ = "0.1.0"

from .gegenbauer import (
    GegenbauerExpansion,
    as_monomial,
    from_gegenbauer,
    gegenbauer_eval,
    gegenbauer_poly,
    to_gegenbauer,
)
from .bound_polys import (
    CandidateBound,
    DelsarteCheck,
    InnerProductPair,
    best_bound,
    build_candidate,
    candidate_values,
    delsarte_check,
)
from .lrs import (
    KSlice,
    ProfileSample,
    TableRow,
    b_k,
    g_upper,
    interval,
    k_max,
    k_slice,
    omega_hat,
    omega_hat_nk,
    phi,
    profile,
    q_bound,
    rho,
    table,
)
from .constructions import (
    TwoDistanceCertificate,
    UnitPointSet,
    gram_check,
    independence_rank,
    lambda_params,
    lambda_set,
    verify_two_distance,
)

__all__ = [
    "__version__",
    "GegenbauerExpansion",
    "as_monomial",
    "from_gegenbauer",
    "gegenbauer_eval",
    "gegenbauer_poly",
    "to_gegenbauer",
    "CandidateBound",
    "DelsarteCheck",
    "InnerProductPair",
    "best_bound",
    "build_candidate",
    "candidate_values",
    "delsarte_check",
    "KSlice",
    "ProfileSample",
    "TableRow",
    "b_k",
    "g_upper",
    "interval",
    "k_max",
    "k_slice",
    "omega_hat",
    "omega_hat_nk",
    "phi",
    "profile",
    "q_bound",
    "rho",
    "table",
    "TwoDistanceCertificate",
    "UnitPointSet",
    "gram_check",
    "independence_rank",
    "lambda_params",
    "lambda_set",
    "verify_two_distance",
]
