"""Symmetric functions in the power-sum basis over Q(t).

A :class:`PSeries` is a finite map ``partition -> TRational``, the partition
``λ`` standing for the monomial ``p_λ = p_{λ_1} ... p_{λ_l}``.  Everything else
in the package (Schur Q-functions, Hall-Littlewood functions, vertex operator
actions, the brute-force oracles) is built on this one representation.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping, Union

from .exact import ONE, ZERO, TPoly, TRational, as_trational, one_minus_t_power
from .partitions import Partition, is_odd, z_of, z_t_of

Coeff = Union[int, Fraction, TRational]


def _merge(a: Partition, b: Partition) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


class PSeries:
    """Immutable element of Λ_{Q(t)} written in the ``p_λ`` basis."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, Coeff] | Iterable[tuple[Partition, Coeff]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, TRational] = {}
        for lam, c in items:
            lam = tuple(lam)
            c = as_trational(c)
            if lam in acc:
                acc[lam] = acc[lam] + c
            else:
                acc[lam] = c
        self.terms: dict[Partition, TRational] = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, terms: dict[Partition, TRational]) -> "PSeries":
        obj = cls.__new__(cls)
        obj.terms = {k: v for k, v in terms.items() if v}
        return obj

    @classmethod
    def one(cls) -> "PSeries":
        return cls._raw({(): ONE})

    @classmethod
    def p(cls, *parts: int, coeff: Coeff = 1) -> "PSeries":
        """The monomial ``coeff * p_{parts}``."""
        return cls({tuple(sorted(parts, reverse=True)): coeff})

    # queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, lam: Partition) -> TRational:
        return self.terms.get(tuple(lam), ZERO)

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def degree(self) -> int:
        """Top degree; ``-1`` for zero."""
        return max((sum(lam) for lam in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "PSeries":
        return PSeries._raw({k: v for k, v in self.terms.items() if sum(k) == d})

    def in_gamma(self) -> bool:
        return all(is_odd(lam) for lam in self.terms)

    # arithmetic -------------------------------------------------------
    def __add__(self, other: "PSeries") -> "PSeries":
        if not isinstance(other, PSeries):
            return NotImplemented
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc[k] + v if k in acc else v
        return PSeries._raw(acc)

    def __neg__(self):
        return PSeries._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "PSeries") -> "PSeries":
        if not isinstance(other, PSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coeff) -> "PSeries":
        c = as_trational(c)
        if not c:
            return PSeries()
        return PSeries._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PSeries):
            return ps_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, PSeries):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "PSeries(0)"
        body = " + ".join(f"{c}*p{list(k)}" for k, c in sorted(self.terms.items(), reverse=True))
        return f"PSeries({body})"


def ps_mul(f: PSeries, g: PSeries) -> PSeries:
    acc: dict[Partition, TRational] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            k = _merge(a, b)
            c = ca * cb
            acc[k] = acc[k] + c if k in acc else c
    return PSeries._raw(acc)


def inner_t(f: PSeries, g: PSeries) -> TRational:
    """Hall-Littlewood form: ``<p_λ, p_μ>_t = δ z_λ(t)``."""
    if len(g) < len(f):
        f, g = g, f
    total = ZERO
    for lam, c in f.terms.items():
        d = g.terms.get(lam)
        if d is not None:
            total = total + c * d * z_t_of(lam)
    return total


def inner_spin(f: PSeries, g: PSeries) -> TRational:
    """Form on Γ: ``<p_λ, p_μ>_{-1} = δ z_λ / 2^{l(λ)}`` for odd λ."""
    if not (f.in_gamma() and g.in_gamma()):
        raise ValueError("not in Gamma")
    if len(g) < len(f):
        f, g = g, f
    total = ZERO
    for lam, c in f.terms.items():
        d = g.terms.get(lam)
        if d is not None:
            total = total + c * d * Fraction(z_of(lam), 2 ** len(lam))
    return total


def pleth_ps(f: PSeries, s: int) -> PSeries:
    """``p_s ∘ f``: every ``p_m`` becomes ``p_{sm}``."""
    if s < 1:
        raise ValueError("s must be a positive integer")
    return PSeries._raw({tuple(s * x for x in lam): c for lam, c in f.terms.items()})


def tpleth_ps(f: PSeries, s: int) -> PSeries:
    """``p_s ⋄ f``: ``p_m -> p_{sm}`` and ``t -> t^s`` in the coefficients."""
    if s < 1:
        raise ValueError("s must be a positive integer")
    return PSeries._raw(
        {tuple(s * x for x in lam): c.substitute_power(s) for lam, c in f.terms.items()}
    )


def specialize(f: PSeries, t0) -> PSeries:
    """Evaluate every coefficient at ``t = t0``."""
    return PSeries({lam: c(t0) for lam, c in f.terms.items()})


def partial(f: PSeries, m: int, times: int = 1) -> PSeries:
    """``(∂/∂p_m)^times f``."""
    acc: dict[Partition, TRational] = {}
    for lam, c in f.terms.items():
        n = lam.count(m)
        if n < times:
            continue
        factor = 1
        for j in range(times):
            factor *= n - j
        rest = list(lam)
        for _ in range(times):
            rest.remove(m)
        k = tuple(rest)
        v = c * factor
        acc[k] = acc[k] + v if k in acc else v
    return PSeries._raw(acc)


@dataclass(frozen=True)
class SkewSpec:
    """Adjoint of multiplication by ``p_m``: ``hall`` is ``p*_m``, ``spin`` is ``p⁻_m``."""

    mode: str
    m: int

    def __post_init__(self):
        if self.mode not in ("hall", "spin"):
            raise ValueError(f"unknown skew mode {self.mode!r}")
        if self.m < 1:
            raise ValueError("m must be positive")
        if self.mode == "spin" and self.m % 2 == 0:
            raise ValueError("spin skewing requires odd m")


def skew_apply(spec: SkewSpec, f: PSeries) -> PSeries:
    m = spec.m
    if spec.mode == "hall":
        scale = TRational(TPoly.const(m), one_minus_t_power(m))
    else:
        scale = as_trational(Fraction(m, 2))
    return partial(f, m).scale(scale)


def dexp_components(
    f: PSeries,
    coeff: Coeff | Callable[[int], Coeff] = -1,
    *,
    odd_only: bool = False,
    stride: int = 1,
) -> list[PSeries]:
    """Graded pieces of ``exp(Σ_j c_j ∂/∂p_{stride·j} z^{-j}) f``.

    ``j`` runs over positive integers (odd ones only if ``odd_only``).  Returns
    ``[D_0 f, D_1 f, ..., D_N f]`` where ``D_i f`` is the coefficient of
    ``z^{-i}`` and ``N = deg(f) // stride``; higher pieces vanish.

    On a monomial the exponential acts by choosing a sub-multiset of parts to
    remove: removing ``k`` copies of ``p_{stride·j}`` out of ``n`` available
    contributes ``c_j^k * C(n, k)`` (the ``1/k!`` of the exponential cancels
    the falling factorial of the derivative).
    """
    if stride < 1:
        raise ValueError("stride must be positive")
    cfun = coeff if callable(coeff) else (lambda j, _c=coeff: _c)
    top = max(f.degree(), 0) // stride
    out: list[dict[Partition, TRational]] = [dict() for _ in range(top + 1)]
    cache: dict[int, TRational] = {}

    def c_of(j: int) -> TRational:
        if j not in cache:
            cache[j] = as_trational(cfun(j))
        return cache[j]

    for lam, c in f.terms.items():
        mult = Counter(lam)
        # removable parts: value = stride*j with j allowed
        slots = []
        for part, n in mult.items():
            if part % stride:
                continue
            j = part // stride
            if odd_only and j % 2 == 0:
                continue
            cj = c_of(j)
            if not cj:
                continue
            slots.append((part, j, n, cj))

        def rec(idx: int, weight: int, factor: TRational, removed: list[tuple[int, int]]):
            if idx == len(slots):
                rest = Counter(mult)
                for part, k in removed:
                    rest[part] -= k
                key = tuple(sorted(rest.elements(), reverse=True))
                v = c * factor
                bucket = out[weight]
                bucket[key] = bucket[key] + v if key in bucket else v
                return
            part, j, n, cj = slots[idx]
            power = ONE
            for k in range(n + 1):
                if k:
                    power = power * cj
                rec(idx + 1, weight + k * j, factor * power * comb(n, k),
                    removed + [(part, k)] if k else removed)

        rec(0, 0, ONE, [])
    return [PSeries._raw(d) for d in out]
