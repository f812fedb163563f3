"""Hall-Littlewood functions ``Q_λ(t) = H_{λ_1} ... H_{λ_l}.1`` and the t-plethystic rule.

``H_m f = Σ_i q_{m+i}(t) · D_i f`` with ``D_i`` the graded pieces of
``exp(-Σ_j ∂/∂p_j z^{-j})``.  Words ``H_μ`` over arbitrary integer
compositions are rewritten in the basis ``H_λ.1`` by canonical straightening:
always branch at the leftmost adjacent inversion.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .exact import ONE_POLY, ZERO_POLY, T, TPoly, TRational, as_trational, one_minus_t_power
from .partitions import (
    Composition,
    Partition,
    as_partition,
    b_t_of,
    contains,
    inv_z_t_of,
    partitions,
)
from .symfunc import PSeries, dexp_components, inner_t, tpleth_ps

HExpansion = dict  # partition -> TRational


@lru_cache(maxsize=None)
def q_t(m: int) -> PSeries:
    """``q_m(t) = Σ_{λ⊢m} p_λ / z_λ(t)``; zero for negative m."""
    if m < 0:
        return PSeries()
    return PSeries._raw({lam: as_trational(inv_z_t_of(lam)) for lam in partitions(m)})


@lru_cache(maxsize=None)
def hstar_vacuum(m: int) -> PSeries:
    """``H*_{-m}.1 = Σ_{λ⊢m} (-1)^{l(λ)} p_λ / z_λ(t)``."""
    if m < 0:
        return PSeries()
    return PSeries._raw(
        {lam: as_trational(inv_z_t_of(lam).scale(-1 if len(lam) % 2 else 1)) for lam in partitions(m)}
    )


def h_apply(m: int, f: PSeries) -> PSeries:
    out = PSeries()
    for i, piece in enumerate(dexp_components(f, -1)):
        if piece and m + i >= 0:
            out = out + q_t(m + i) * piece
    return out


def hstar_apply(n: int, f: PSeries) -> PSeries:
    """Component ``H*_n`` (coefficient of ``z^{-n}``) of the adjoint operator."""
    out = PSeries()
    for i, piece in enumerate(dexp_components(f, 1)):
        if piece and i - n >= 0:
            out = out + hstar_vacuum(i - n) * piece
    return out


def h_word(word: Sequence[int]) -> PSeries:
    """``H_{w_1} ... H_{w_r}.1`` evaluated directly with the vertex operator."""
    f = PSeries.one()
    for m in reversed(list(word)):
        f = h_apply(m, f)
    return f


@lru_cache(maxsize=None)
def _hl(lam: Partition) -> PSeries:
    if not lam:
        return PSeries.one()
    return h_apply(lam[0], _hl(lam[1:]))


def hl_function(lam: Sequence[int]) -> PSeries:
    return _hl(as_partition(lam))


def expand_in_h(f: PSeries) -> HExpansion:
    """Coefficients ``<f, H_λ.1>_t / b_λ(t)``, degree by degree."""
    out: HExpansion = {}
    for d in sorted(f.degrees()):
        fd = f.homogeneous_part(d)
        for lam in partitions(d):
            c = inner_t(fd, _hl(lam))
            if c:
                out[lam] = c / as_trational(b_t_of(lam))
    return out


def assemble_h(expansion: HExpansion) -> PSeries:
    out = PSeries()
    for lam, c in expansion.items():
        out = out + _hl(tuple(lam)).scale(c)
    return out


def l_op_vacuum(s: int, m: int) -> PSeries:
    """``L^{(s)}_m = p_s ⋄ q_m(t)``."""
    return tpleth_ps(q_t(m), s)


def l_star_apply(s: int, k: int, f: PSeries) -> PSeries:
    """``L^{(s)*}_k f``: the ``z^{-k}`` piece of ``exp(Σ_m s ∂/∂p_{sm} z^{-m})``."""
    pieces = dexp_components(f, s, stride=s)
    return pieces[k] if k < len(pieces) else PSeries()


# --- straightening ------------------------------------------------------------


@lru_cache(maxsize=None)
def _c_coeff(d: int, a: int) -> TPoly:
    fl = d // 2
    if a == 0:
        return TPoly.monomial(1)
    if a < fl:
        return TPoly.monomial(a + 1) - TPoly.monomial(a - 1)
    return TPoly.monomial(a + d % 2) - TPoly.monomial(a - 1)


def c_coeff(gap_low: int, gap_high: int, a: int) -> TPoly:
    """Coefficient of ``H_{S_{i,a} μ}`` when ``μ_i = gap_low < μ_{i+1} = gap_high``."""
    d = gap_high - gap_low
    if d <= 0:
        raise ValueError("need gap_low < gap_high")
    if not 0 <= a <= d // 2:
        raise ValueError(f"a={a} outside 0..{d // 2}")
    return _c_coeff(d, a)


def first_inversion(word: Sequence[int]) -> int | None:
    """0-based index ``i`` of the leftmost ``word[i] < word[i+1]``."""
    for i in range(len(word) - 1):
        if word[i] < word[i + 1]:
            return i
    return None


def moves(word: Composition) -> list[tuple[int, int, Composition, TPoly]]:
    """Canonical moves ``(i, a, S_{i,a} word, C)`` with ``i`` 1-based; empty on partitions."""
    i = first_inversion(word)
    if i is None:
        return []
    lo, hi = word[i], word[i + 1]
    out = []
    for a in range((hi - lo) // 2 + 1):
        nxt = word[:i] + (hi - a, lo + a) + word[i + 2:]
        out.append((i + 1, a, nxt, _c_coeff(hi - lo, a)))
    return out


def _terminal(word: Composition) -> Partition | None:
    """Weakly decreasing word acting on 1: strip zeros; any negative entry kills it."""
    if word and word[-1] < 0:
        return None
    return tuple(x for x in word if x)


def _add(acc: dict, key, val: TPoly) -> None:
    if key in acc:
        s = acc[key] + val
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s
    elif not val.is_zero():
        acc[key] = val


@lru_cache(maxsize=None)
def _straighten(word: Composition, vacuum: bool) -> tuple[tuple[Partition, TPoly], ...]:
    if vacuum:
        # H_{-n}.1 = 0 and H_0.1 = 1 act on the rightmost letter of any state
        while word and word[-1] == 0:
            word = word[:-1]
        if word and word[-1] < 0:
            return ()
    steps = moves(word)
    if not steps:
        lam = _terminal(word)
        return () if lam is None else ((lam, ONE_POLY),)
    acc: dict[Partition, TPoly] = {}
    for _, _, nxt, c in steps:
        for lam, b in _straighten(nxt, vacuum):
            _add(acc, lam, c * b)
    return tuple(acc.items())


def straighten(word: Sequence[int], *, vacuum_shortcut: bool = True) -> dict[Partition, TPoly]:
    """``H_μ.1 = Σ_λ B(λ, μ) H_λ.1`` for any integer composition ``μ``.

    ``vacuum_shortcut`` also drops trailing zeros and kills trailing negative
    letters at intermediate states; without it only terminal states are
    simplified.  Both give the same result.
    """
    return dict(_straighten(tuple(int(x) for x in word), vacuum_shortcut))


def _prefix_ok(word: Composition, bound: tuple[int, ...]) -> bool:
    acc = 0
    for i, w in enumerate(word):
        acc += w
        if acc > (bound[i] if i < len(bound) else bound[-1] if bound else 0):
            return False
    return True


@lru_cache(maxsize=None)
def _b_target(word: Composition, bound: tuple[int, ...], lam: Partition) -> TPoly:
    while word and word[-1] == 0:
        word = word[:-1]
    if word and word[-1] < 0:
        return ZERO_POLY
    # moves only raise prefix sums, so once above λ's they stay above
    if not _prefix_ok(word, bound):
        return ZERO_POLY
    steps = moves(word)
    if not steps:
        return ONE_POLY if word == lam else ZERO_POLY
    total = ZERO_POLY
    for _, _, nxt, c in steps:
        b = _b_target(nxt, bound, lam)
        if b:
            total = total + c * b
    return total


def _prefix_sums(lam: Partition) -> tuple[int, ...]:
    out, acc = [], 0
    for x in lam:
        acc += x
        out.append(acc)
    return tuple(out)


def b_coefficient(lam: Sequence[int], word: Sequence[int]) -> TPoly:
    """``B(λ, μ)`` alone, skipping every branch that cannot reach ``λ``."""
    lam = as_partition(lam)
    return _b_target(tuple(int(x) for x in word), _prefix_sums(lam), lam)


@dataclass(frozen=True)
class StraighteningPath:
    states: tuple[Composition, ...]
    moves: tuple[tuple[int, int], ...]
    coefficient: TPoly

    @property
    def target(self) -> Composition:
        return self.states[-1]


def straightening_paths(word: Sequence[int]) -> Iterator[StraighteningPath]:
    """All canonical paths from ``word`` to a weakly decreasing composition, depth first."""
    start = tuple(int(x) for x in word)

    def walk(states, mv, coeff):
        steps = moves(states[-1])
        if not steps:
            yield StraighteningPath(tuple(states), tuple(mv), coeff)
            return
        for i, a, nxt, c in steps:
            yield from walk(states + [nxt], mv + [(i, a)], c * coeff)

    yield from walk([start], [], ONE_POLY)


def straightening_tree(word: Sequence[int]) -> dict:
    """Nested JSON-ready tree of canonical moves, like the usual hand diagram."""

    def node(w: Composition) -> dict:
        children = [
            {"move": [i, a], "C": str(c), "node": node(nxt)} for i, a, nxt, c in moves(w)
        ]
        out = {"state": list(w), "children": children}
        if not children:
            lam = _terminal(w)
            out["basis"] = None if lam is None else list(lam)
        return out

    return node(tuple(int(x) for x in word))


def tree_states(tree: dict) -> list[Composition]:
    """Every state below the root of :func:`straightening_tree`, in DFS order."""
    out = []
    for ch in tree["children"]:
        out.append(tuple(ch["node"]["state"]))
        out.extend(tree_states(ch["node"]))
    return out


# --- t-plethystic Murnaghan-Nakayama rule -------------------------------------


def _shifted_words(lam: Partition, s: int, k: int, target: Partition | None):
    """Yield ``(λ - sν, l(ν))`` over weak compositions ν of k.

    With a ``target``, skip words whose prefix sums exceed the target's:
    straightening only raises prefix sums, so those never reach it.
    """
    n = len(lam)
    bound = None
    if target is not None:
        bound, acc = [], 0
        for i in range(n):
            acc += target[i] if i < len(target) else 0
            bound.append(acc)

    def rec(i: int, left: int, prefix: int, word: tuple, pos: int):
        if i == n:
            if left == 0:
                yield word, pos
            return
        choices = (left,) if i == n - 1 else range(left + 1)
        for v in choices:
            w = lam[i] - s * v
            if bound is not None and prefix + w > bound[i]:
                continue
            yield from rec(i + 1, left - v, prefix + w, word + (w,), pos + (v > 0))

    yield from rec(0, k, 0, (), 0)


def l_star_expand(s: int, k: int, lam: Sequence[int]) -> HExpansion:
    """``L^{(s)*}_k H_λ.1 = Σ_ν (1-t^s)^{l(ν)} H_{λ-sν}.1`` in the ``H``-basis."""
    if s < 1 or k < 1:
        raise ValueError("s and k must be positive")
    lam = as_partition(lam)
    base = one_minus_t_power(s)
    acc: dict[Partition, TPoly] = {}
    for word, pos in _shifted_words(lam, s, k, None):
        w = base ** pos
        for mu, b in straighten(word).items():
            _add(acc, mu, w * b)
    return {mu: as_trational(c) for mu, c in acc.items()}


def pleth_expand_hl(s: int, k: int, mu: Sequence[int], *, prune: bool = True) -> HExpansion:
    """``(p_s ⋄ q_k(t)) H_μ.1`` via ``c_λ = b_μ/b_λ · Σ_ν (1-t^s)^{l(ν)} B(μ, λ-sν)``.

    ``prune`` drops every word and straightening state whose prefix sums
    exceed those of ``μ``; the result is the same either way.
    """
    if s < 1 or k < 1:
        raise ValueError("s and k must be positive")
    mu = as_partition(mu)
    base = one_minus_t_power(s)
    b_mu = b_t_of(mu)
    out: HExpansion = {}
    for lam in partitions(sum(mu) + s * k):
        if not contains(lam, mu):
            continue
        total = TPoly.const(0)
        for word, pos in _shifted_words(lam, s, k, mu if prune else None):
            b = b_coefficient(mu, word) if prune else straighten(word).get(mu)
            if b:
                total = total + base ** pos * b
        if not total.is_zero():
            out[lam] = TRational(total * b_mu, b_t_of(lam))
    return out


def pleth_ps_qkt(s: int, k: int) -> HExpansion:
    """``p_s ⋄ q_k(t)`` in the ``H``-basis."""
    return pleth_expand_hl(s, k, ())


def p2_qk_closed_form(k: int) -> HExpansion:
    """``(-1)^k H_{(k,k)} + (t+1) Σ_{i<k} (-1)^i H_{(2k-i,i)}``."""
    out: HExpansion = {(k, k): as_trational((-1) ** k)}
    for i in range(k):
        lam = (2 * k - i, i) if i else (2 * k,)
        out[lam] = (T + 1) * (-1) ** i
    return out


def specialize_expansion(expansion: HExpansion, t0) -> dict:
    """Evaluate every coefficient at ``t = t0``, dropping zeros."""
    out = {}
    for lam, c in expansion.items():
        v = c(t0)
        if v:
            out[lam] = v
    return out

