from fractions import Fraction

from qpleth.partitions import strict_partitions
from qpleth.schurq import (
    assemble_q,
    expand_in_q_basis,
    normalize_q_word,
    q_apply,
    q_one_row,
    q_word_value,
    qminus_apply,
    schur_q,
)
from qpleth.symfunc import PSeries, inner_spin

p = PSeries.p


def test_one_row():
    assert q_one_row(1) == p(1, coeff=2)
    assert q_one_row(2) == p(1, 1, coeff=2)
    assert q_one_row(3) == p(3, coeff=Fraction(2, 3)) + p(1, 1, 1, coeff=Fraction(4, 3))
    assert q_one_row(0) == PSeries.one()


def test_vertex_operator_components():
    assert q_apply(3, PSeries.one()) == q_one_row(3)
    assert q_apply(2, q_one_row(1)) == p(1, 1, 1, coeff=Fraction(4, 3)) - p(3, coeff=Fraction(4, 3))
    assert q_apply(-1, q_one_row(1)) == PSeries.one() * -2
    for m in range(1, 5):
        assert q_apply(-m, PSeries.one()) == PSeries()


def test_schur_q_values():
    assert schur_q((3,)) == q_one_row(3)
    assert schur_q((2, 1)) == p(1, 1, 1, coeff=Fraction(4, 3)) - p(3, coeff=Fraction(4, 3))
    assert inner_spin(schur_q((2, 1)), schur_q((2, 1))) == 4


def test_orthogonality():
    for n in range(11):
        basis = strict_partitions(n)
        for lam in basis:
            for mu in basis:
                want = 2 ** len(lam) if lam == mu else 0
                assert inner_spin(schur_q(lam), schur_q(mu)) == want


def test_two_row_raising_formula():
    q = q_one_row
    for total in range(3, 13):
        for n in range(1, total):
            m = total - n
            if m <= n:
                continue
            want = q(m) * q(n)
            for i in range(1, n + 1):
                want = want + (q(m + i) * q(n - i)).scale(2 * (-1) ** i)
            assert schur_q((m, n)) == want


def test_expansion():
    assert expand_in_q_basis(p(3, coeff=2)) == {(3,): 1, (2, 1): -1}
    assert expand_in_q_basis(schur_q((2, 1))) == {(2, 1): 1}
    assert expand_in_q_basis(q_one_row(2)) == {(2,): 1}
    f = schur_q((4, 1)) * 3 + schur_q((2,)) - schur_q(())
    assert assemble_q(expand_in_q_basis(f)) == f


def test_normalize_examples():
    assert normalize_q_word((1, 2)) == {(2, 1): -1}
    assert normalize_q_word((2, 2)) == {}
    assert normalize_q_word((2, -1)) == {}
    assert normalize_q_word((-1, 1)) == {(): -2}
    assert normalize_q_word((0,)) == {(): 1}
    assert normalize_q_word((0, 0)) == {(): 1}


def test_normalize_agrees_with_operator():
    import itertools

    for length in range(1, 4):
        for word in itertools.product(range(-3, 5), repeat=length):
            if sum(word) < 0:
                continue
            assert assemble_q(normalize_q_word(word)) == q_word_value(word), word


def test_strict_words_are_fixed():
    for n in range(9):
        for lam in strict_partitions(n):
            assert normalize_q_word(lam) == ({lam: 1})


def test_adjoint_component():
    # Q⁻_m is adjoint to Q_m for the spin form
    for m in (1, 2, 3):
        for n in range(0, 6):
            for lam in strict_partitions(n):
                for mu in strict_partitions(n + m):
                    f, g = schur_q(lam), schur_q(mu)
                    assert inner_spin(q_apply(m, f), g) == inner_spin(f, qminus_apply(m, g))
