"""Exact one-part double Hurwitz numbers by enumeration, recursion and closed forms."""

from .core import (
    ExactRational,
    HurwitzKey,
    Partition,
    aut_order,
    format_rational,
    from_hat,
    from_prime,
    make_partition,
    parse_rational,
    partitions,
    to_hat,
    to_prime,
)
from .cutjoin import CutJoin, hprime, hurwitz_hat, hurwitz_raw
from .oracle import InfeasibleError, oracle_hurwitz, oracle_table

__all__ = [
    "CutJoin",
    "ExactRational",
    "HurwitzKey",
    "InfeasibleError",
    "Partition",
    "aut_order",
    "format_rational",
    "from_hat",
    "from_prime",
    "hprime",
    "hurwitz_hat",
    "hurwitz_raw",
    "make_partition",
    "oracle_hurwitz",
    "oracle_table",
    "parse_rational",
    "partitions",
    "to_hat",
    "to_prime",
]
