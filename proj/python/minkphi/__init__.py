"""Exact Minkowski group-order bounds G(n), H(n), totient maxima Phi(n),
and interval-certified verification campaigns.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (  # noqa: F401
    campaign_names,
    euler_phi,
    g,
    g_by_gcd,
    g_exponents,
    gl_order,
    gsp_order,
    h,
    k_enclosure,
    log_g,
    nth_prime,
    phi,
    phi_bulk,
    phi_search_bound,
    prime_count,
    primorial,
    run_campaign,
    theorem1_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "campaign_names",
    "euler_phi",
    "g",
    "g_by_gcd",
    "g_exponents",
    "gl_order",
    "gsp_order",
    "h",
    "k_enclosure",
    "log_g",
    "nth_prime",
    "phi",
    "phi_bulk",
    "phi_search_bound",
    "prime_count",
    "primorial",
    "run_campaign",
    "theorem1_bounds",
]
