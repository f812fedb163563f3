"""Plethystic Murnaghan-Nakayama rule for Schur Q-functions.

Two independent routes expand ``(p_s ∘ q_k) Q_μ`` in the Q-basis for odd ``s``:

* :func:`pleth_expand_pf` sums ``2^{l(μ)-l(λ)} Pf(M̃(λ/μ))`` over strict ``λ ⊇ μ``;
* :func:`pleth_expand_comb` sums ``sgn(σ) 2^{A(λ/μ)} 2^{l(μ)-l(λ)}`` over the
  symmetric horizontal ``(s, k)``-strips.

When ``l(λ) + l(μ)`` is odd, ``μ`` is padded with one zero part.  The zero is
a genuine member of the residue-0 class of ``μ``: it enters the strip
conditions, the σ matching and the top row of ``M̃``.  The exponent
``l(μ) - l(λ)`` always uses the unpadded length.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import TRational, as_trational
from .partitions import (
    Partition,
    a_number,
    as_strict,
    contains,
    is_horizontal_strip,
    positive_count,
    residues,
    strict_partitions,
    weak_compositions,
)
from .pfaffian import AntisymMatrix, pfaffian
from .schurq import QExpansion, normalize_q_word, q_one_row
from .symfunc import PSeries, dexp_components, pleth_ps


def _check_odd(s: int) -> None:
    if s < 1 or s % 2 == 0:
        raise ValueError(f"s must be an odd positive integer, got {s}")


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def f_scalar(j: int, s: int) -> int:
    if j == 0:
        return 1
    if j > 0 and j % s == 0:
        return 2
    return 0


def f_pair(m: int, n: int, s: int) -> int:
    """``f_{(m,n)} = f_m f_n + 2 Σ_{j=1}^{n} (-1)^j f_{m+j} f_{n-j}`` (``f_m`` when n = 0)."""
    if m < 0 or n < 0:
        raise ValueError("f_pair needs nonnegative arguments")
    if n == 0:
        return f_scalar(m, s)
    total = f_scalar(m, s) * f_scalar(n, s)
    for j in range(1, n + 1):
        term = 2 * f_scalar(m + j, s) * f_scalar(n - j, s)
        total += -term if j % 2 else term
    return total


def f_pair_closed(m: int, n: int, s: int) -> int:
    """Closed form of :func:`f_pair` for ``m + n ≥ 1``, with ``r = n mod s``."""
    if m < 0 or n < 0 or m + n == 0:
        raise ValueError("closed form needs m, n ≥ 0 and m + n ≥ 1")
    r = n % s
    if (m + n) % s == 0 and r > 0:
        return -4 if r % 2 else 4
    if n == 0 and m % s == 0:
        return 2
    if m == 0 and n % s == 0:
        return -2
    return 0


def padded(lam: Sequence[int], mu: Sequence[int]) -> tuple[int, ...]:
    """``μ`` with a trailing zero appended when ``l(λ) + l(μ)`` is odd."""
    mu = tuple(mu)
    return mu + (0,) if (len(lam) + len(mu)) % 2 else mu


def build_m_tilde(lam: Sequence[int], mu: Sequence[int], s: int, *, check: bool = True) -> AntisymMatrix:
    """The antisymmetric block matrix ``M̃(λ/μ)``.

    Rows/columns ``1..a`` are ``μ`` reversed (``μ_a`` first, the padding zero if
    any), then ``λ_1..λ_b``.  The ``μ×μ`` block is zero, the ``μ×λ`` block holds
    ``f_{λ_j - μ_{a-i+1}}`` and the ``λ×λ`` block holds ``f_{(λ_i, λ_j)}``.
    With ``check=False``, ``λ`` may be any composition of positive parts.
    """
    _check_odd(s)
    lam = tuple(lam)
    if check:
        lam, mu = as_strict(lam), as_strict(mu)
        if not contains(lam, mu):
            raise ValueError(f"{mu} is not contained in {lam}")
    mup = padded(lam, mu)
    a, b = len(mup), len(lam)
    top = mup[::-1]

    def upper(i: int, j: int) -> int:
        if j < a:
            return 0
        if i < a:
            return f_scalar(lam[j - a] - top[i], s)
        return f_pair(lam[i - a], lam[j - a], s)

    return AntisymMatrix.from_upper(a + b, upper)


def pf_m_tilde(lam: Sequence[int], mu: Sequence[int], s: int) -> int:
    """``Pf(M̃(λ/μ))`` with no degree bookkeeping (includes the degenerate ``λ = μ``)."""
    return pfaffian(build_m_tilde(lam, mu, s))


def _infer_k(lam: Sequence[int], mu: Sequence[int], s: int) -> int:
    diff = sum(lam) - sum(mu)
    if diff <= 0 or diff % s:
        raise ValueError(f"degree mismatch: |λ| - |μ| = {diff} is not a positive multiple of {s}")
    return diff // s


def coeff_pfaffian(lam: Sequence[int], mu: Sequence[int], s: int) -> int:
    """Coefficient of ``Q_μ`` in ``T^{(s)-}_k Q_λ``, i.e. ``Pf(M̃(λ/μ))``."""
    _check_odd(s)
    lam, mu = as_strict(lam), as_strict(mu)
    _infer_k(lam, mu, s)
    return pfaffian(build_m_tilde(lam, mu, s))


# --- symmetric horizontal strips -----------------------------------------------


def _strip_conditions(lam: Partition, mu: Partition, s: int) -> bool:
    if not contains(lam, mu):
        return False
    rl = residues(lam, s).classes
    rm = residues(padded(lam, mu), s).classes
    if len(rl[0]) != len(rm[0]):
        return False
    for r in range(1, s):
        d, e = len(rl[r]) - len(rm[r]), len(rl[s - r]) - len(rm[s - r])
        if not (0 <= d <= 1 and d == e):
            return False
    return all(is_horizontal_strip(rl[r], rm[r]) for r in range(s))


def is_strip(lam: Sequence[int], mu: Sequence[int], s: int, k: int) -> bool:
    """Membership of ``(λ, μ)`` in the symmetric horizontal ``(s, k)``-strips."""
    _check_odd(s)
    _check_k(k)
    lam, mu = as_strict(lam), as_strict(mu)
    if sum(lam) != sum(mu) + s * k:
        raise ValueError("degree mismatch: |λ| must equal |μ| + s·k")
    return _strip_conditions(lam, mu, s)


def _require_strip(lam: Partition, mu: Partition, s: int) -> None:
    _check_odd(s)
    if not _strip_conditions(lam, mu, s):
        raise ValueError(f"{lam}/{mu} is not a symmetric horizontal strip for s={s}")


def a_number_normalized(lam: Sequence[int], mu: Sequence[int], s: int) -> int:
    """``A(λ/μ) = Σ_r a(N_r(λ)_> / N_r(μ)_>)``."""
    lam, mu = as_strict(lam), as_strict(mu)
    _require_strip(lam, mu, s)
    rl = residues(lam, s).classes
    rm = residues(padded(lam, mu), s).classes
    return sum(a_number(rl[r], [x for x in rm[r] if x]) for r in range(s))


def _inversions(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def reordered(lam: Sequence[int], mu: Sequence[int], s: int) -> tuple[int, ...]:
    """``λ̃ = σ(λ)``: λ's parts matched to μ by residue-class rank, then the leftover
    parts in pairs ``(N_j, N_{s-j})`` for odd ``j`` ascending."""
    lam, mu = as_strict(lam), as_strict(mu)
    _require_strip(lam, mu, s)
    mup = padded(lam, mu)
    rl = residues(lam, s).classes
    rm = residues(mup, s).classes
    front = []
    for m in mup:
        r = m % s
        front.append(rl[r][rm[r].index(m)])
    rest = [x for x in lam if x not in front]
    rr = residues(rest, s).classes
    if rr[0]:
        raise ValueError("unmatched residue-0 part")  # excluded by the strip conditions
    tail = []
    for j in range(1, s - 1, 2):
        a, b = rr[j], rr[s - j]
        if len(a) != len(b) or len(a) > 1:
            raise ValueError("leftover residues are not paired")
        if a:
            tail += [a[0], b[0]]
    return tuple(front + tail)


def sigma_of(lam: Sequence[int], mu: Sequence[int], s: int) -> tuple[tuple[int, ...], int]:
    """The permutation σ (1-based images, ``λ_{σ(i)} = λ̃_i``) and its sign."""
    lam = as_strict(lam)
    tl = reordered(lam, mu, s)
    sigma = tuple(lam.index(x) + 1 for x in tl)
    return sigma, -1 if _inversions(sigma) % 2 else 1


def cycle_notation(perm: Sequence[int]) -> str:
    """Disjoint cycles of a 1-based permutation, fixed points omitted, e.g. ``(1243)(69)``."""
    n = len(perm)
    sep = "" if n < 10 else " "
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start] or perm[start - 1] == start:
            seen[start] = True
            continue
        cyc, j = [], start
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j))
            j = perm[j - 1]
        out.append("(" + sep.join(cyc) + ")")
    return "".join(out) or "()"


def sign_graphical(lam: Sequence[int], mu: Sequence[int], s: int) -> int:
    """Sign from the crossing count of the two-line matching diagram.

    Top line: ``λ``.  Bottom line: ``μ`` (padded) followed by the unconnected
    parts of ``λ``.  ``μ_{r,i}`` is joined to ``λ_{r,i}``; unconnected parts
    are joined to their copies.
    """
    lam, mu = as_strict(lam), as_strict(mu)
    _require_strip(lam, mu, s)
    mup = padded(lam, mu)
    top_pos = {x: i for i, x in enumerate(lam)}
    edges = []  # (top x, bottom x)
    used = set()
    for r in range(s):
        lam_r = [x for x in lam if x % s == r]
        mu_r = [x for x in mup if x % s == r]
        for rank, m in enumerate(mu_r):
            x = lam_r[rank]
            used.add(x)
            edges.append((top_pos[x], mup.index(m)))
    loose = [x for x in lam if x not in used]
    by_res = {x % s: x for x in loose}
    bottom = len(mup)
    for j in range(1, s - 1, 2):
        if j in by_res and (s - j) in by_res:
            for x in (by_res[j], by_res[s - j]):
                edges.append((top_pos[x], bottom))
                bottom += 1
    crossings = sum(
        1
        for i in range(len(edges))
        for j in range(i + 1, len(edges))
        if (edges[i][0] - edges[j][0]) * (edges[i][1] - edges[j][1]) < 0
    )
    return -1 if crossings % 2 else 1


@dataclass(frozen=True)
class StripCertificate:
    s: int
    k: int
    lam: Partition
    mu: Partition
    padded: bool
    A_value: int
    sigma: tuple[int, ...]
    sign: int

    @property
    def sigma_cycles(self) -> str:
        return cycle_notation(self.sigma)

    @property
    def coefficient(self) -> Fraction:
        """``sgn(σ) 2^{A + l(μ) - l(λ)}``."""
        return self.sign * Fraction(2) ** (self.A_value + len(self.mu) - len(self.lam))

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "k": self.k,
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "padded": self.padded,
            "A": self.A_value,
            "sigma": self.sigma_cycles,
            "sigma_images": list(self.sigma),
            "sign": self.sign,
            "coeff": str(self.coefficient),
        }


def strip_certificate(lam: Sequence[int], mu: Sequence[int], s: int) -> StripCertificate:
    lam, mu = as_strict(lam), as_strict(mu)
    _check_odd(s)
    k = _infer_k(lam, mu, s)
    if not is_strip(lam, mu, s, k):
        raise ValueError(f"{lam}/{mu} is not a symmetric horizontal ({s},{k})-strip")
    sigma, sign = sigma_of(lam, mu, s)
    return StripCertificate(
        s=s,
        k=k,
        lam=lam,
        mu=mu,
        padded=len(padded(lam, mu)) > len(mu),
        A_value=a_number_normalized(lam, mu, s),
        sigma=sigma,
        sign=sign,
    )


# --- expansions ---------------------------------------------------------------


def _candidates(s: int, k: int, mu: Partition):
    return [lam for lam in strict_partitions(sum(mu) + s * k) if contains(lam, mu)]


def pleth_expand_comb(s: int, k: int, mu: Sequence[int]) -> QExpansion:
    """``(p_s ∘ q_k) Q_μ`` by the combinatorial rule."""
    _check_odd(s)
    _check_k(k)
    mu = as_strict(mu)
    out: QExpansion = {}
    for lam in _candidates(s, k, mu):
        if not _strip_conditions(lam, mu, s):
            continue
        _, sign = sigma_of(lam, mu, s)
        e = a_number_normalized(lam, mu, s) + len(mu) - len(lam)
        out[lam] = as_trational(sign * Fraction(2) ** e)
    return out


def pleth_expand_pf(s: int, k: int, mu: Sequence[int], *, prune: bool = True) -> QExpansion:
    """``(p_s ∘ q_k) Q_μ`` via Pfaffians.

    ``prune`` skips candidates failing :func:`is_strip` before any Pfaffian
    work; ``prune=False`` evaluates every strict ``λ ⊇ μ``.
    """
    _check_odd(s)
    _check_k(k)
    mu = as_strict(mu)
    out: QExpansion = {}
    for lam in _candidates(s, k, mu):
        if prune and not _strip_conditions(lam, mu, s):
            continue
        pf = pfaffian(build_m_tilde(lam, mu, s))
        if not pf:
            continue
        c = pf * Fraction(2) ** (len(mu) - len(lam))
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {c} at λ={lam}")
        out[lam] = as_trational(c)
    return out


def adjoint_T_expand(s: int, k: int, lam: Sequence[int]) -> QExpansion:
    """``T^{(s)-}_k Q_λ.1 = Σ_ν 2^{l(ν)} Q_{λ - sν}.1`` over weak compositions ν of k."""
    _check_odd(s)
    _check_k(k)
    lam = as_strict(lam)
    acc: dict[Partition, TRational] = {}
    for nu in weak_compositions(k, len(lam)):
        word = tuple(l - s * n for l, n in zip(lam, nu))
        w = 2 ** positive_count(nu)
        for mu, c in normalize_q_word(word).items():
            acc[mu] = acc[mu] + c * w if mu in acc else c * w
    return {mu: c for mu, c in acc.items() if c}


def t_apply(s: int, k: int, f: PSeries) -> PSeries:
    """``T^{(s)}_k f = (p_s ∘ q_k) · f``."""
    return pleth_ps(q_one_row(k), s) * f


def t_minus_apply(s: int, k: int, f: PSeries) -> PSeries:
    """``T^{(s)-}_k f``: the ``z^{-k}`` piece of ``exp(Σ_{m odd} s ∂/∂p_{sm} z^{-m})``."""
    pieces = dexp_components(f, s, odd_only=True, stride=s)
    return pieces[k] if k < len(pieces) else PSeries()
