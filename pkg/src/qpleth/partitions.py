"""Partitions, strict/odd partitions, compositions and their statistics.

Partitions are plain tuples of positive ints in weakly decreasing order; zero
parts are never stored.  Compositions are arbitrary int tuples.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .exact import ONE_POLY, TPoly, TRational, one_minus_t_power

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize to a partition tuple, dropping zero parts."""
    p = tuple(int(x) for x in parts if x != 0)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not weakly decreasing")
    return p


def as_strict(parts: Iterable[int]) -> Partition:
    p = as_partition(parts)
    if not is_strict(p):
        raise ValueError(f"{p} is not a strict partition")
    return p


def is_partition(c: Sequence[int]) -> bool:
    return all(c[i] >= c[i + 1] for i in range(len(c) - 1)) and all(x > 0 for x in c)


def is_strict(p: Sequence[int]) -> bool:
    return all(p[i] > p[i + 1] for i in range(len(p) - 1))


def is_odd(p: Sequence[int]) -> bool:
    return all(x % 2 for x in p)


def multiplicities(p: Sequence[int]) -> Counter:
    return Counter(p)


def z_of(p: Sequence[int]) -> int:
    """``z_λ = ∏ i^{m_i} m_i!``."""
    return prod(i ** m * factorial(m) for i, m in Counter(p).items())


@lru_cache(maxsize=None)
def z_t_of(p: Partition) -> TRational:
    """``z_λ(t) = z_λ / ∏ (1 - t^i)^{m_i}``."""
    den = ONE_POLY
    for i, m in Counter(p).items():
        den = den * one_minus_t_power(i) ** m
    return TRational(TPoly.const(z_of(p)), den)


@lru_cache(maxsize=None)
def inv_z_t_of(p: Partition) -> TPoly:
    """``1 / z_λ(t)``, always a polynomial."""
    num = ONE_POLY
    for i, m in Counter(p).items():
        num = num * one_minus_t_power(i) ** m
    return num.scale(Fraction(1, z_of(p)))


def t_factorial(n: int) -> TPoly:
    """``[n]! = ∏_{j≤n} (1 - t^j)/(1 - t)``."""
    out = ONE_POLY
    for j in range(1, n + 1):
        out = out * TPoly.from_dense([1] * j)
    return out


@lru_cache(maxsize=None)
def b_t_of(p: Partition) -> TPoly:
    """``b_λ(t) = (1-t)^{l(λ)} ∏ [m_i(λ)]!``."""
    out = one_minus_t_power(1) ** len(p)
    for m in Counter(p).values():
        out = out * t_factorial(m)
    return out


@dataclass(frozen=True)
class ResidueDecomposition:
    """Parts of a partition split by residue mod ``s``; ``classes[r]`` is decreasing."""

    s: int
    classes: tuple[tuple[int, ...], ...]

    def count(self, r: int) -> int:
        return len(self.classes[r])


def residues(p: Sequence[int], s: int) -> ResidueDecomposition:
    if s < 1:
        raise ValueError("s must be positive")
    classes: list[list[int]] = [[] for _ in range(s)]
    for x in sorted(p, reverse=True):
        classes[x % s].append(x)
    return ResidueDecomposition(s, tuple(tuple(c) for c in classes))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``μ ⊆ λ`` as Young diagrams."""
    if len(mu) > len(lam):
        return all(x == 0 for x in mu[len(lam):]) and all(m <= l for m, l in zip(mu, lam))
    return all(m <= l for m, l in zip(mu, lam))


def is_horizontal_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``μ ⊆ λ`` and ``λ_i ≥ μ_i ≥ λ_{i+1}`` for all i."""
    n = max(len(lam), len(mu))
    lam = list(lam) + [0] * (n + 1 - len(lam))
    mu = list(mu) + [0] * (n + 1 - len(mu))
    return all(lam[i] >= mu[i] >= lam[i + 1] for i in range(n))


def a_number(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of columns ``i`` holding a box of ``λ/μ`` while column ``i+1`` holds none."""
    if not is_horizontal_strip(lam, mu):
        raise ValueError("not a horizontal strip")
    cols: set[int] = set()
    for i, l in enumerate(lam):
        m = mu[i] if i < len(mu) else 0
        cols.update(range(m + 1, l + 1))
    return sum(1 for c in cols if c + 1 not in cols)


def _partitions(n: int, maxpart: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _strict(n: int, maxpart: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _strict(n - first, first - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    return tuple(_partitions(n, n))


@lru_cache(maxsize=None)
def strict_partitions(n: int) -> tuple[Partition, ...]:
    return tuple(_strict(n, n))


@lru_cache(maxsize=None)
def odd_partitions(n: int) -> tuple[Partition, ...]:
    return tuple(p for p in partitions(n) if is_odd(p))


def enumerate_partitions(kind: str, n: int) -> list[Partition]:
    """All partitions of ``n`` of the given kind in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = {"partitions": partitions, "strict": strict_partitions, "odd": odd_partitions}
    try:
        return list(table[kind](n))
    except KeyError:
        raise ValueError(f"unknown partition kind {kind!r}") from None


@lru_cache(maxsize=None)
def weak_compositions(k: int, length: int) -> tuple[Composition, ...]:
    """Nonnegative integer vectors of the given length summing to ``k``.

    Ordered lexicographically decreasing, e.g. ``(2,0), (1,1), (0,2)``.
    """
    if length == 0:
        return ((),) if k == 0 else ()
    if length == 1:
        return ((k,),)
    out = []
    for first in range(k, -1, -1):
        for rest in weak_compositions(k - first, length - 1):
            out.append((first,) + rest)
    return tuple(out)


def positive_count(c: Sequence[int]) -> int:
    """``l(ν)``: the number of strictly positive entries."""
    return sum(1 for x in c if x > 0)


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance ``λ ⊵ μ`` on compositions of equal sum (prefix sums)."""
    n = max(len(lam), len(mu))
    a = b = 0
    for i in range(n):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return a == b


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))
