"""Exact Pfaffians of small antisymmetric integer matrices."""
from __future__ import annotations

from typing import Iterator, Sequence


class AntisymMatrix:
    """Square antisymmetric matrix with exact (int or Fraction) entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError("matrix is not square")
            if r[i] != 0:
                raise ValueError("nonzero diagonal entry")
            for j in range(i + 1, n):
                if r[j] != -rows[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not antisymmetric")
        self.rows = rows

    @classmethod
    def from_upper(cls, n: int, upper) -> "AntisymMatrix":
        """Build from a function ``upper(i, j)`` giving entries with ``i < j`` (0-based)."""
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = upper(i, j)
                rows[i][j] = v
                rows[j][i] = -v
        return cls(rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def minor(self, drop: Sequence[int]) -> "AntisymMatrix":
        """Delete the given rows and the same columns."""
        keep = [k for k in range(self.n) if k not in set(drop)]
        return AntisymMatrix([[self.rows[a][b] for b in keep] for a in keep])

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, AntisymMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"AntisymMatrix({self.tolist()})"


def pfaffian(a: AntisymMatrix):
    """Pfaffian via first-row Laplace expansion, memoized over index subsets."""
    n = a.n
    if n % 2:
        raise ValueError("Pfaffian needs an even dimension")
    rows = a.rows
    memo: dict[int, object] = {0: 1}

    def pf(mask: int):
        if mask in memo:
            return memo[mask]
        idx = [k for k in range(n) if mask >> k & 1]
        i = idx[0]
        total = 0
        # (-1)^j with j the 1-based position of the partner inside the submatrix
        for pos in range(1, len(idx)):
            j = idx[pos]
            v = rows[i][j]
            if not v:
                continue
            sub = pf(mask & ~(1 << i) & ~(1 << j))
            if sub:
                total += v * sub if pos % 2 else -v * sub
        memo[mask] = total
        return total

    return pf((1 << n) - 1)


def perfect_matchings(items: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """All pairings of ``items`` with pairs ``(a, b)``, ``a`` before ``b``."""
    items = list(items)
    if not items:
        yield []
        return
    first = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k + 1:]
        for m in perfect_matchings(rest):
            yield [(first, items[k])] + m


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def pfaffian_by_shuffles(a: AntisymMatrix):
    """Pfaffian as the signed sum over 2-shuffles (perfect matchings)."""
    n = a.n
    if n % 2:
        raise ValueError("Pfaffian needs an even dimension")
    total = 0
    for m in perfect_matchings(range(n)):
        perm = [x for pair in m for x in pair]
        term = _perm_sign(perm)
        for i, j in m:
            term *= a.rows[i][j]
            if not term:
                break
        total += term
    return total


def pfaffian_row_expansion(a: AntisymMatrix, i: int):
    """Expansion along the (1-based) row ``i``:
    ``Pf(A) = (-1)^{i-1} Σ_{j≠i} (-1)^j :a_ij: Pf(A_ij)`` with ``:a_ij:`` the upper-triangle entry.
    """
    n = a.n
    if n % 2:
        raise ValueError("Pfaffian needs an even dimension")
    if not 1 <= i <= n:
        raise ValueError("row index out of range")
    total = 0
    for j in range(1, n + 1):
        if j == i:
            continue
        v = a.rows[i - 1][j - 1] if i < j else a.rows[j - 1][i - 1]
        if not v:
            continue
        term = v * pfaffian(a.minor([i - 1, j - 1]))
        total += term if j % 2 == 0 else -term
    return total if (i - 1) % 2 == 0 else -total


def determinant(a: AntisymMatrix):
    """Exact determinant (fraction-free Bareiss elimination via sympy)."""
    from sympy import Matrix

    if a.n == 0:
        return 1
    return int(Matrix(a.tolist()).det(method="bareiss"))
