"""Brute-force ground truth: multiply in the power-sum basis, then project.

Nothing here touches the Pfaffian, strip or straightening code.
"""
from __future__ import annotations

from typing import Sequence

from .hall_littlewood import HExpansion, expand_in_h, hl_function, q_t
from .partitions import as_partition, as_strict
from .schurq import QExpansion, expand_in_q_basis, q_one_row, schur_q
from .symfunc import pleth_ps, tpleth_ps


def oracle_q(s: int, k: int, mu: Sequence[int]) -> QExpansion:
    """``(p_s ∘ q_k) Q_μ`` projected onto the Q-basis."""
    if s < 1 or s % 2 == 0:
        raise ValueError(f"s must be odd and positive, got {s}")
    if k < 1:
        raise ValueError("k must be positive")
    return expand_in_q_basis(pleth_ps(q_one_row(k), s) * schur_q(as_strict(mu)))


def oracle_hl(s: int, k: int, mu: Sequence[int]) -> HExpansion:
    """``(p_s ⋄ q_k(t)) H_μ.1`` projected onto the Hall-Littlewood basis."""
    if s < 1 or k < 1:
        raise ValueError("s and k must be positive")
    return expand_in_h(tpleth_ps(q_t(k), s) * hl_function(as_partition(mu)))
