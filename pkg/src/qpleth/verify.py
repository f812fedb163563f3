"""Property sweeps that tie each identity to an exhaustive or seeded check.

Each suite enumerates picklable cases in a fixed order and runs one
module-level checker per case, serially or in a process pool.  A checker
returns ``None`` on success or an ``(expected, actual)`` pair.
"""
from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from . import hall_littlewood as hl
from . import spin_mn
from .oracles import oracle_hl, oracle_q
from .partitions import (
    a_number,
    contains,
    dominates,
    is_horizontal_strip,
    partitions,
    strict_partitions,
)
from .pfaffian import (
    AntisymMatrix,
    determinant,
    pfaffian,
    pfaffian_by_shuffles,
    pfaffian_row_expansion,
)
from .schurq import assemble_q, expand_in_q_basis, normalize_q_word, q_one_row, q_word_value
from .symfunc import PSeries, pleth_ps, specialize

HARD_CAP = 14
SYMBOLIC_CAP = 10


@dataclass
class SweepConfig:
    s_values: Optional[list[int]] = None  # None: the suite's own default
    k_max: Optional[int] = None
    degree_max: Optional[int] = None
    parallel: bool = False
    seed: int = 20240601

    def __post_init__(self):
        if self.degree_max is not None and self.degree_max > HARD_CAP:
            raise ValueError(f"degree_max {self.degree_max} exceeds the hard cap {HARD_CAP}")
        if self.k_max is not None and self.k_max < 1:
            raise ValueError("k_max must be positive")

    def degree(self, default: int) -> int:
        return default if self.degree_max is None else min(self.degree_max, default)

    def s_list(self, default: list[int]) -> list[int]:
        return list(default if self.s_values is None else self.s_values)

    def k_ok(self, k: int) -> bool:
        return self.k_max is None or k <= self.k_max

    @classmethod
    def from_text(cls, text: str) -> "SweepConfig":
        """Parse ``key=value`` lines; ``#`` starts a comment."""
        kw: dict = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep:
                raise ValueError(f"expected key=value, got {raw!r}")
            if key == "s_values":
                kw[key] = [int(x) for x in value.replace(",", " ").split()]
            elif key in ("k_max", "degree_max", "seed"):
                kw[key] = int(value)
            elif key == "parallel":
                if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
                    raise ValueError(f"bad boolean {value!r}")
                kw[key] = value.lower() in ("true", "1", "yes")
            else:
                raise ValueError(f"unknown config key {key!r}")
        return cls(**kw)

    @classmethod
    def from_file(cls, path: str | Path) -> "SweepConfig":
        return cls.from_text(Path(path).read_text())


@dataclass
class VerifyReport:
    suite: str
    cases_total: int = 0
    cases_failed: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return self.cases_failed == 0

    def to_json(self) -> dict:
        return asdict(self)


def _show(x):
    if isinstance(x, dict):
        return {str(list(k)) if isinstance(k, tuple) else str(k): _show(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_show(v) for v in x]
    if isinstance(x, (int, bool)) or x is None:
        return x
    return str(x)


# --- checkers (module level so the pool can pickle them) ----------------------


def _check_spin(case):
    s, k, mu = case
    comb = spin_mn.pleth_expand_comb(s, k, mu)
    pf = spin_mn.pleth_expand_pf(s, k, mu, prune=False)
    truth = oracle_q(s, k, mu)
    if comb == pf == truth:
        return None
    return truth, {"comb": comb, "pf": pf}


def _check_hl(case):
    s, k, mu = case
    rule = hl.pleth_expand_hl(s, k, mu)
    truth = oracle_hl(s, k, mu)
    return None if rule == truth else (truth, rule)


def _check_pf_square(case):
    n, seed = case
    a = _random_antisym(n, random.Random(seed))
    pf = pfaffian(a)
    det = determinant(a)
    return None if pf * pf == det else (det, pf * pf)


def _check_pf_rows(case):
    n, seed = case
    a = _random_antisym(n, random.Random(seed))
    ref = pfaffian_by_shuffles(a)
    rows = [pfaffian_row_expansion(a, i) for i in range(1, n + 1)]
    return None if all(r == ref for r in rows) else (ref, rows)


def _check_f_lemma(case):
    m, n, s = case
    rec = spin_mn.f_pair(m, n, s)
    if m + n == 0:
        return None if rec == 1 else (1, rec)
    closed = spin_mn.f_pair_closed(m, n, s)
    if rec != closed:
        return closed, rec
    if rec != -spin_mn.f_pair(n, m, s):
        return -spin_mn.f_pair(n, m, s), rec
    if m > 0 and n > 0 and n % s == 0 and rec != 0:
        return 0, rec
    return None


def _check_clifford(word):
    expected = q_word_value(word)
    actual = assemble_q(normalize_q_word(word))
    return None if expected == actual else (expected, actual)


def _check_straighten(word):
    expected = hl.h_word(word)
    terms = hl.straighten(word)
    actual = PSeries()
    for lam, c in terms.items():
        actual = actual + hl.hl_function(lam).scale(c)
    if expected != actual:
        return expected, actual
    if terms != hl.straighten(word, vacuum_shortcut=False):
        return terms, hl.straighten(word, vacuum_shortcut=False)
    for lam in terms:
        if not dominates(lam, word):
            return "dominance", lam
        if hl.b_coefficient(lam, word) != terms[lam]:
            return terms[lam], hl.b_coefficient(lam, word)
    return None


def _check_straighten_fixture(_case):
    word, lam = (8, 7, 2, 5, 6), (8, 7, 5, 4, 4)
    expected = "t^5 - t^3 - t^2 + t"
    b = hl.straighten(word)[lam]
    return None if str(b) == expected else (expected, str(b))


def pieri_expansion(k: int, mu) -> dict:
    """``q_k Q_μ = Σ 2^{a(λ/μ)} 2^{l(μ)-l(λ)} Q_λ`` over horizontal k-strips."""
    out = {}
    for lam in strict_partitions(sum(mu) + k):
        if contains(lam, mu) and is_horizontal_strip(lam, mu):
            out[lam] = Fraction(2) ** (a_number(lam, mu) + len(mu) - len(lam))
    return out


def _check_pieri(case):
    k, mu = case
    expected = pieri_expansion(k, mu)
    oracle = oracle_q(1, k, mu)
    comb = spin_mn.pleth_expand_comb(1, k, mu)
    if oracle == expected and comb == expected:
        return None
    return expected, {"oracle": oracle, "comb": comb}


def _check_qt_minus_one(m):
    expected = q_one_row(m)
    actual = specialize(hl.q_t(m), -1)
    return None if expected == actual else (expected, actual)


def hl_at_minus_one_in_q(s: int, k: int) -> dict:
    """``p_s ⋄ q_k(t)`` rebuilt from its H-expansion, set to t = -1, read in the Q-basis.

    Each ``c_λ(t) H_λ.1`` is formed before specializing, since ``c_λ`` alone
    can have a pole at -1 when λ has repeated parts.
    """
    total = PSeries()
    for lam, c in hl.pleth_ps_qkt(s, k).items():
        total = total + hl.hl_function(lam).scale(c)
    return expand_in_q_basis(specialize(total, -1))


def _check_bridge(case):
    s, k = case
    expected = spin_mn.pleth_expand_comb(s, k, ())
    actual = hl_at_minus_one_in_q(s, k)
    return None if expected == actual else (expected, actual)


def schur_two_row(a: int, b: int) -> PSeries:
    """``s_{(a,b)} = h_a h_b - h_{a+1} h_{b-1}`` with ``h_m = q_m(0)``."""

    def h(m):
        return specialize(hl.q_t(m), 0)

    return h(a) * h(b) - h(a + 1) * h(b - 1)


def _check_littlewood(k):
    expected = PSeries()
    for j in range(k + 1):
        expected = expected + schur_two_row(2 * k - j, j).scale((-1) ** j)
    direct = pleth_ps(specialize(hl.q_t(k), 0), 2)
    via_rule = PSeries()
    for lam, c in hl.pleth_ps_qkt(2, k).items():
        via_rule = via_rule + specialize(hl.hl_function(lam), 0).scale(c(0))
    if expected == direct == via_rule:
        return None
    return expected, {"direct": direct, "rule_at_0": via_rule}


# --- case generators ----------------------------------------------------------


def _random_antisym(n: int, rng: random.Random) -> AntisymMatrix:
    return AntisymMatrix.from_upper(n, lambda i, j: rng.randint(-5, 5))


def _spin_cases(cfg: SweepConfig):
    deg = cfg.degree(HARD_CAP)
    for s in cfg.s_list([1, 3, 5]):
        if s % 2 == 0:
            raise ValueError(f"spin suites need odd s, got {s}")
        for k in itertools.count(1):
            if s * k > deg or not cfg.k_ok(k):
                break
            for m in range(deg - s * k + 1):
                for mu in strict_partitions(m):
                    yield (s, k, mu)


def _hl_cases(cfg: SweepConfig):
    deg = cfg.degree(SYMBOLIC_CAP)
    for s in cfg.s_list([1, 2, 3]):
        for k in itertools.count(1):
            if s * k > deg or not cfg.k_ok(k):
                break
            for m in range(deg - s * k + 1):
                for mu in partitions(m):
                    yield (s, k, mu)


def _pfaffian_cases(cfg: SweepConfig):
    rng = random.Random(cfg.seed)
    sizes = [2, 4, 6, 8, 10]
    for i in range(200):
        yield _check_pf_square, (sizes[i % len(sizes)], rng.randrange(2**32))
    for n in (6, 8):
        for _ in range(5):
            yield _check_pf_rows, (n, rng.randrange(2**32))


def _f_cases(cfg: SweepConfig):
    for s in cfg.s_list([3, 5, 7]):
        for m in range(31):
            for n in range(31):
                yield (m, n, s)


def _clifford_cases(cfg: SweepConfig):
    deg = cfg.degree(8)
    for length in range(1, 5):
        for word in itertools.product(range(-3, 7), repeat=length):
            if 0 <= sum(word) <= deg:
                yield word


def _straighten_cases(cfg: SweepConfig):
    yield _check_straighten_fixture, None
    deg = cfg.degree(8)
    for length in range(1, 5):
        for word in itertools.product(range(-2, 7), repeat=length):
            if 0 <= sum(word) <= deg:
                yield _check_straighten, word


def _pieri_cases(cfg: SweepConfig):
    deg = cfg.degree(HARD_CAP)
    for k in range(1, deg + 1):
        if not cfg.k_ok(k):
            break
        for m in range(deg - k + 1):
            for mu in strict_partitions(m):
                yield (k, mu)


def _specialize_cases(cfg: SweepConfig):
    for m in range(9):
        yield _check_qt_minus_one, m
    deg = cfg.degree(SYMBOLIC_CAP)
    for s in cfg.s_list([1, 3]):
        for k in range(1, deg // s + 1):
            if cfg.k_ok(k):
                yield _check_bridge, (s, k)
    for k in range(1, 9):
        if cfg.k_ok(k):
            yield _check_littlewood, k


def _uniform(checker: Callable, gen: Callable):
    return lambda cfg: ((checker, case) for case in gen(cfg))


SUITES: dict[str, Callable] = {
    "spin-mn": _uniform(_check_spin, _spin_cases),
    "hl-mn": _uniform(_check_hl, _hl_cases),
    "pfaffian": _pfaffian_cases,
    "f-lemma": _uniform(_check_f_lemma, _f_cases),
    "clifford": _uniform(_check_clifford, _clifford_cases),
    "straighten": _straighten_cases,
    "pieri": _uniform(_check_pieri, _pieri_cases),
    "specialize": _specialize_cases,
}


def _run_one(job):
    checker, case = job
    try:
        return checker(case)
    except Exception as exc:  # a crash is a failure of that case
        return "no exception", f"{type(exc).__name__}: {exc}"


def run_suite(name: str, config: SweepConfig | None = None) -> VerifyReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = config or SweepConfig()
    jobs = list(SUITES[name](cfg))
    start = time.perf_counter()
    if cfg.parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_run_one, jobs, chunksize=8))
    else:
        results = [_run_one(j) for j in jobs]
    report = VerifyReport(suite=name, cases_total=len(jobs))
    for (checker, case), res in zip(jobs, results):
        if res is None:
            continue
        expected, actual = res
        report.failures.append(
            {"input": f"{checker.__name__[len('_check_'):]}{_show(case)}",
             "expected": _show(expected), "actual": _show(actual)}
        )
    report.cases_failed = len(report.failures)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report
