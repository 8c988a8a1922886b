"""Homotopy dimer algebra toolkit.

Quivers are passed as their text format (the same one the CLI reads):

    vertices N
    arrow <id> <tail> <head> <dx> <dy>
    face <+|-> <arrow ids in traversal order>

The heavy lifting lives in the compiled extension; this package re-exports
its functions.
"""

from dimerlab._core import (
    arrow_images,
    cancellativity,
    center_module_gens,
    certify_json,
    contract,
    cycle_algebra_gens,
    origin_gens,
    simple_matchings,
    validate,
    verdict,
)

__all__ = [
    "arrow_images",
    "cancellativity",
    "center_module_gens",
    "certify_json",
    "contract",
    "cycle_algebra_gens",
    "origin_gens",
    "simple_matchings",
    "validate",
    "verdict",
]
