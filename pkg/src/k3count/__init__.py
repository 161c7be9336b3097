"""Exact q-series, chain configurations and the K3 rational-curve counts N_g."""

from .counting import (
    LaurentBundle,
    check_functional_equation,
    closed_form_C0,
    dual_counting_series,
    expand_G,
    ng_fast,
    ng_series,
    ng_via_convolution,
    partition_series,
    recursion_C0,
    verify_durfee_identity,
)
from .partitions import YoungDiagram, conjugate, enumerate_partitions, partition_p
from .qseries import (
    InexactPowerDivision,
    NonUnitConstantTerm,
    OrderExceeded,
    QSeries,
    euler_product,
    pentagonal_series,
)
from .schain import (
    InvalidConfig,
    LambdaConfig,
    MuConfig,
    NotAdmissible,
    delta_lower_bound,
    enumerate_lambda_configs,
    enumerate_mu_configs,
    lambda_to_mu,
    mu_to_lambda,
)

__version__ = "0.1.0"
