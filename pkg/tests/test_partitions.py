import pytest

from qpleth.exact import TPoly, TRational, one_minus_t_power
from qpleth.partitions import (
    a_number,
    as_partition,
    as_strict,
    b_t_of,
    conjugate,
    dominates,
    enumerate_partitions,
    is_horizontal_strip,
    partitions,
    residues,
    weak_compositions,
    z_of,
    z_t_of,
)


def test_z():
    assert z_of((1, 1)) == 2
    assert z_of((3,)) == 3
    assert z_of((3, 3)) == 18
    assert z_of(()) == 1


def test_z_t():
    assert z_t_of((1,)) == TRational(1, one_minus_t_power(1))
    assert z_t_of((2,)) == TRational(2, one_minus_t_power(2))
    assert z_t_of(()) == 1


def test_b_t():
    assert b_t_of((1,)) == one_minus_t_power(1)
    assert b_t_of((2, 2)) == one_minus_t_power(1) ** 2 * TPoly.from_dense([1, 1])
    assert b_t_of(()) == TPoly.const(1)


def test_residues_of_worked_example():
    r = residues((24, 23, 20, 18, 17, 16, 6, 5, 1), 7)
    assert r.classes[3] == (24, 17)
    assert r.classes[2] == (23, 16)
    assert r.classes[6] == (20, 6)
    assert r.classes[4] == (18,)
    assert r.classes[5] == (5,)
    assert r.classes[1] == (1,)
    assert r.classes[0] == ()


def test_residues_small():
    r = residues((2, 1), 3)
    assert r.classes == ((), (1,), (2,))
    assert all(c == () for c in residues((), 5).classes)


def test_residues_partition_the_parts():
    for n in range(13):
        for lam in partitions(n):
            r = residues(lam, 4)
            assert sum(r.count(i) for i in range(4)) == len(lam)
            assert tuple(sorted(sum(r.classes, ()), reverse=True)) == lam


def test_horizontal_strip():
    assert is_horizontal_strip((2, 1), (1,))
    assert is_horizontal_strip((3, 1), (1,))
    assert not is_horizontal_strip((2, 2), (1,))
    assert is_horizontal_strip((4, 2), (4, 2))


def test_a_number():
    # (2,1)/(1) has boxes in columns 1 and 2, forming one run
    assert a_number((2, 1), (1,)) == 1
    assert a_number((3,), (1,)) == 1
    assert a_number((3, 1), (3, 1)) == 0
    assert a_number((5, 2), (3,)) == 2
    with pytest.raises(ValueError):
        a_number((2, 2), (1,))


def test_a_number_bounds():
    # at least the number of new rows, at most the number of rows holding a box
    for n in range(13):
        for lam in partitions(n):
            for m in range(n + 1):
                for mu in partitions(m):
                    if not is_horizontal_strip(lam, mu):
                        continue
                    a = a_number(lam, mu)
                    rows = sum(1 for i, x in enumerate(lam) if x > (mu[i] if i < len(mu) else 0))
                    assert len(lam) - len(mu) <= a <= rows


def test_enumerate():
    assert enumerate_partitions("strict", 3) == [(3,), (2, 1)]
    assert enumerate_partitions("odd", 4) == [(3, 1), (1, 1, 1, 1)]
    assert enumerate_partitions("partitions", 0) == [()]
    with pytest.raises(ValueError):
        enumerate_partitions("even", 3)


def test_euler_identity():
    for n in range(21):
        assert len(enumerate_partitions("strict", n)) == len(enumerate_partitions("odd", n))


def test_weak_compositions():
    assert weak_compositions(1, 2) == ((1, 0), (0, 1))
    assert weak_compositions(0, 3) == ((0, 0, 0),)
    assert weak_compositions(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert weak_compositions(2, 0) == ()


def test_validation():
    assert as_partition([3, 0, 1]) == (3, 1)
    with pytest.raises(ValueError):
        as_partition([1, 2])
    with pytest.raises(ValueError):
        as_strict([2, 2])
    with pytest.raises(ValueError):
        as_partition([2, -1])


def test_dominance_and_conjugate():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert dominates((2, 1, 1), (1, 2, 1))
    assert not dominates((2, 0, 2), (1, 2, 1))
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(conjugate((5, 3, 3, 1))) == (5, 3, 3, 1)
