"""Exact computations in the space of marked groups.

Cayley balls and ultrametric distances, group rings with direct-finiteness
scans, crossed products with cocycle validation, congruence quotient chains
with limit-transfer certificates, and SL_n(Z[1/p]) congruence-order
experiments.  Everything is exact integer arithmetic; reports are plain
dicts mirroring the `mglab` command-line tool.
"""

from mglab._core import (
    __version__,
    amalgam,
    ball,
    converge,
    crossed_decompose,
    crossed_validate,
    deficiency,
    direct_finiteness,
    direct_finiteness_crossed,
    distance,
    hnn,
    make_generators,
    sanov_word,
    slnp_orders,
    slnp_vanish,
    transfer,
    transfer_random,
    trivial_words,
    valuation,
    verify_order_step,
    word_norm,
)

__all__ = [
    "__version__",
    "amalgam",
    "ball",
    "converge",
    "crossed_decompose",
    "crossed_validate",
    "deficiency",
    "direct_finiteness",
    "direct_finiteness_crossed",
    "distance",
    "hnn",
    "make_generators",
    "sanov_word",
    "slnp_orders",
    "slnp_vanish",
    "transfer",
    "transfer_random",
    "trivial_words",
    "valuation",
    "verify_order_step",
    "word_norm",
]
