"""Basic Humbert hypergeometric functions and an executable audit of their identities."""

__version__ = "0.1.0"

from .humbert import (  # noqa: E402
    ClassicalParams,
    HumbertParams,
    classical_phi1,
    classical_phi2,
    classical_phi3,
    phi1,
    phi2,
    phi3,
    shifted,
)
from .kernels import get_backend, set_backend  # noqa: E402
from .qcore import (  # noqa: E402
    q_beta,
    q_exponential,
    q_factorial,
    q_gamma,
    q_number,
    q_pochhammer,
    q_pochhammer_inf,
    q_power_binomial,
    q_power_product,
)
from .series import rphis_plain, sum_double, sum_rphis  # noqa: E402
from .types import (  # noqa: E402
    DEFAULT_CONFIG,
    DomainError,
    EvalResult,
    NotConverged,
    QContext,
    RatioUndefined,
    SeriesConfig,
)

__all__ = [
    "__version__", "ClassicalParams", "HumbertParams", "classical_phi1", "classical_phi2", "classical_phi3",
    "phi1", "phi2", "phi3", "shifted", "get_backend", "set_backend", "q_beta", "q_exponential", "q_factorial",
    "q_gamma", "q_number", "q_pochhammer", "q_pochhammer_inf", "q_power_binomial", "q_power_product",
    "rphis_plain", "sum_double", "sum_rphis", "DEFAULT_CONFIG", "DomainError", "EvalResult", "NotConverged",
    "QContext", "RatioUndefined", "SeriesConfig",
]
