from .carton import CartonResult, bridge_compose_carton, carton_bruteforce
from .dsn import dsn_exact, dsn_growth_bound
from .products import FiveInvariantReport, ProductBound, dsn_cartesian_lower, five_invariant_check
from .sandwich import InvariantInterval, SearchCaps, carton_value, catalog_scrambles, sn_interval

__all__ = [
    "CartonResult", "bridge_compose_carton", "carton_bruteforce",
    "dsn_exact", "dsn_growth_bound",
    "FiveInvariantReport", "ProductBound", "dsn_cartesian_lower", "five_invariant_check",
    "InvariantInterval", "SearchCaps", "carton_value", "catalog_scrambles", "sn_interval",
]
