"""Exact limit-stability wall-crossing engine.

All rational inputs accept int, fractions.Fraction or "p/q" strings;
rational outputs are fractions.Fraction. Curve classes are integer
sequences over the model's curve basis.
"""

from ._limitstab import (
    ChernCharacter,
    Engine,
    Model,
    ModelError,
    ch_of_pair,
    charge_polynomial,
    compare_phases,
    compare_phases_closed,
    degree,
    dual,
    effective_below,
    min_ch3,
    mu_threshold,
    pt_bounds,
    twisted_invariants,
    wall_set,
)

__all__ = [
    "ChernCharacter",
    "Engine",
    "Model",
    "ModelError",
    "ch_of_pair",
    "charge_polynomial",
    "compare_phases",
    "compare_phases_closed",
    "degree",
    "dual",
    "effective_below",
    "min_ch3",
    "mu_threshold",
    "pt_bounds",
    "twisted_invariants",
    "wall_set",
]
