"""Schur Q-functions through the twisted vertex operator ``Q(z)``.

``Q_m f = Σ_i q_{m+i} · D_i f`` where ``D_i`` are the graded pieces of
``exp(-Σ_{j odd} ∂/∂p_j z^{-j})``; ``Q_λ = Q_{λ_1} ... Q_{λ_l}.1``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import TRational, as_trational
from .partitions import Partition, as_strict, odd_partitions, strict_partitions, z_of
from .symfunc import PSeries, dexp_components, inner_spin

QExpansion = dict  # strict partition -> TRational


@lru_cache(maxsize=None)
def q_one_row(m: int) -> PSeries:
    """``q_m = Σ_{λ ⊢_o m} 2^{l(λ)}/z_λ p_λ`` (``q_0 = 1``, ``q_m = 0`` for m < 0)."""
    if m < 0:
        return PSeries()
    if m == 0:
        return PSeries.one()
    return PSeries({lam: Fraction(2 ** len(lam), z_of(lam)) for lam in odd_partitions(m)})


def _require_gamma(f: PSeries) -> None:
    if not f.in_gamma():
        raise ValueError("not in Gamma: even power sum present")


def q_apply(m: int, f: PSeries) -> PSeries:
    """Component ``Q_m`` of the vertex operator applied to ``f ∈ Γ``."""
    _require_gamma(f)
    out = PSeries()
    for i, piece in enumerate(dexp_components(f, -1, odd_only=True)):
        if piece and m + i >= 0:
            out = out + q_one_row(m + i) * piece
    return out


def qminus_apply(m: int, f: PSeries) -> PSeries:
    """Component ``Q⁻_m`` (coefficient of ``z^{-m}`` in the adjoint operator)."""
    _require_gamma(f)
    out = PSeries()
    for i, piece in enumerate(dexp_components(f, 1, odd_only=True)):
        n = i - m
        if piece and n >= 0:
            out = out + q_one_row(n) * piece.scale(-1 if n % 2 else 1)
    return out


@lru_cache(maxsize=None)
def _schur_q(lam: Partition) -> PSeries:
    if not lam:
        return PSeries.one()
    return q_apply(lam[0], _schur_q(lam[1:]))


def schur_q(lam: Sequence[int]) -> PSeries:
    return _schur_q(as_strict(lam))


def expand_in_q_basis(f: PSeries) -> QExpansion:
    """Coefficients ``<f, Q_λ>_{-1} / 2^{l(λ)}`` over strict λ, degree by degree."""
    _require_gamma(f)
    out: QExpansion = {}
    for d in sorted(f.degrees()):
        fd = f.homogeneous_part(d)
        for lam in strict_partitions(d):
            c = inner_spin(fd, _schur_q(lam))
            if c:
                out[lam] = c * Fraction(1, 2 ** len(lam))
    return out


def assemble_q(expansion: QExpansion) -> PSeries:
    """``Σ c_λ Q_λ`` back in the p-basis."""
    out = PSeries()
    for lam, c in expansion.items():
        out = out + _schur_q(tuple(lam)).scale(c)
    return out


@lru_cache(maxsize=None)
def _normalize(word: tuple[int, ...]) -> tuple[tuple[Partition, int], ...]:
    # Q_w1 ... Q_wr .1 via {Q_a, Q_b} = (-1)^b 2 δ_{a,-b}, Q_{-m}.1 = 0, Q_0.1 = 1
    if not word:
        return (((), 1),)
    last = word[-1]
    if last < 0:
        return ()
    if last == 0:
        return _normalize(word[:-1])
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if a > b:
            continue
        if a == b:
            if a != 0:
                return ()
            return _normalize(word[:i] + word[i + 2:])
        acc: dict[Partition, int] = {}
        for lam, c in _normalize(word[:i] + (b, a) + word[i + 2:]):
            acc[lam] = acc.get(lam, 0) - c
        if a == -b:
            sign = -2 if b % 2 else 2
            for lam, c in _normalize(word[:i] + word[i + 2:]):
                acc[lam] = acc.get(lam, 0) + sign * c
        return tuple((lam, c) for lam, c in acc.items() if c)
    return ((word, 1),)


def normalize_q_word(word: Sequence[int]) -> QExpansion:
    """Rewrite ``Q_{w_1} ... Q_{w_r}.1`` as an integer combination of ``Q_λ`` (λ strict)."""
    return {lam: as_trational(c) for lam, c in _normalize(tuple(int(x) for x in word))}


def q_word_value(word: Sequence[int]) -> PSeries:
    """``Q_{w_1} ... Q_{w_r}.1`` computed directly with the vertex operator."""
    f = PSeries.one()
    for m in reversed(list(word)):
        f = q_apply(m, f)
    return f
