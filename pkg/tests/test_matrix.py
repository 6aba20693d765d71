import random
from itertools import product

import pytest

from tropmat.matrix import (
    TropMatrix,
    TropVector,
    is_monomial,
    left_residual,
    mat_vec,
    monomial_inverse,
    parse_matrix,
    right_residual,
    scale,
    solves_right,
)
from tropmat.sampling import sample_matrix
from tropmat.semiring import BOTTOM, ProjPoint, TropScalar

SEED = 20260808

I2 = TropMatrix.identity(2)
Z2 = TropMatrix.zero(2)


def test_mat_mul_examples():
    a = TropMatrix([[0, 1], [2, 3]])
    assert I2 @ a == a
    assert a @ I2 == a
    assert a @ a == TropMatrix([[3, 4], [5, 6]])
    assert Z2 @ a == Z2


def test_mat_add_examples():
    a = TropMatrix([[0, "-inf"], [1, 2]])
    b = TropMatrix([[-1, 3], [0, "-inf"]])
    assert a + a == a
    assert a + Z2 == a
    assert a + b == TropMatrix([[0, 3], [1, 2]])


def test_transpose():
    a = TropMatrix([[0, 1], [2, 3]])
    assert a.transpose() == TropMatrix([[0, 2], [1, 3]])
    assert a.transpose().transpose() == a


def test_transpose_preserves_monomial_patterns():
    # every 2x2 monomial pattern, exhaustively
    for diag, a, b in product([True, False], [-2, 0, 3], [1, -1]):
        if diag:
            m = TropMatrix([[a, "-inf"], ["-inf", b]])
        else:
            m = TropMatrix([["-inf", a], [b, "-inf"]])
        assert m.is_monomial()
        assert m.transpose().is_monomial()


def test_is_monomial():
    assert I2.is_monomial()
    assert TropMatrix([["-inf", 3], [5, "-inf"]]).is_monomial()
    assert not TropMatrix([[0, 0], ["-inf", 0]]).is_monomial()
    assert not Z2.is_monomial()


def test_monomial_inverse_is_two_sided():
    rng = random.Random(SEED)
    for _ in range(300):
        m = sample_matrix(rng, "with-neginf")
        if not m.is_monomial():
            with pytest.raises(ValueError):
                monomial_inverse(m)
            continue
        inv = monomial_inverse(m)
        assert m @ inv == I2
        assert inv @ m == I2


def test_mat_vec_and_scale():
    v = TropVector([2, 5])
    assert scale(0, v) == v
    assert scale("-inf", v) == TropVector.zero(2)
    assert mat_vec(TropMatrix([[0, "-inf"], [1, 0]]), v) == TropVector([2, 5])


def test_left_residual_of_identity_is_the_matrix():
    rng = random.Random(SEED + 1)
    for _ in range(200):
        a = sample_matrix(rng, "with-neginf")
        r = left_residual(I2, a)
        assert all(
            r[i, j] == ProjPoint(a[i, j]) for i in range(2) for j in range(2)
        )


def test_residual_is_greatest_solution_brute_force():
    """B\\B is the maximum of B @ X <= B over an exhaustive grid of X."""
    b = TropMatrix([[0, 1], [2, 3]])
    r = left_residual(b, b)
    assert b @ r.witness() == b
    grid = [BOTTOM] + [TropScalar(v) for v in range(-4, 3)]
    for entries in product(grid, repeat=4):
        x = TropMatrix([entries[:2], entries[2:]])
        if (b @ x).leq(b):
            assert r.dominates(x)


def test_solves_right_examples():
    b = TropMatrix([[0, 0], [0, 3]])
    a = TropMatrix([[0, 0], [1, 2]])
    assert solves_right(b, b)
    assert solves_right(b, a)
    assert b @ left_residual(b, a).witness() == a
    assert not solves_right(Z2, a)
    assert solves_right(Z2, Z2)


def test_galois_connection():
    """B @ X <= A entrywise iff X <= left_residual(B, A), +inf maximal."""
    rng = random.Random(SEED + 2)
    for i in range(500):
        n = 2 if i % 3 else 3  # residuation is dimension-generic
        a = sample_matrix(rng, "with-neginf", n)
        b = sample_matrix(rng, "with-neginf", n)
        x = sample_matrix(rng, "with-neginf", n)
        r = left_residual(b, a)
        assert (b @ x).leq(a) == r.dominates(x)


def test_solves_right_matches_brute_force_in_3x3():
    """Solvability of A = B X decided by residuation agrees with a direct
    search over a coarse grid when the true solution lives on that grid."""
    rng = random.Random(SEED + 6)
    grid = [BOTTOM] + [TropScalar(v) for v in range(-2, 3)]
    for _ in range(40):
        b = TropMatrix(
            [[grid[rng.randrange(len(grid))] for _ in range(3)] for _ in range(3)]
        )
        x = TropMatrix(
            [[grid[rng.randrange(len(grid))] for _ in range(3)] for _ in range(3)]
        )
        a = b @ x
        assert solves_right(b, a)
        assert b @ left_residual(b, a).witness() == a


def test_right_residual_galois():
    rng = random.Random(SEED + 3)
    for _ in range(300):
        a = sample_matrix(rng, "with-neginf")
        b = sample_matrix(rng, "with-neginf")
        x = sample_matrix(rng, "with-neginf")
        r = right_residual(a, b)
        assert (x @ b).leq(a) == r.dominates(x)


def test_product_laws_on_random_triples():
    rng = random.Random(SEED + 4)
    for _ in range(400):
        a = sample_matrix(rng, "with-neginf")
        b = sample_matrix(rng, "with-neginf")
        c = sample_matrix(rng, "with-neginf")
        assert (a @ b) @ c == a @ (b @ c)
        assert a @ (b + c) == a @ b + a @ c
        assert (b + c) @ a == b @ a + c @ a


def test_dimension_mismatch_rejected():
    a3 = TropMatrix.identity(3)
    with pytest.raises(ValueError):
        a3 @ I2
    with pytest.raises(ValueError):
        a3 + I2
    with pytest.raises(ValueError):
        left_residual(a3, I2)
    with pytest.raises(ValueError):
        I2 @ TropVector([0, 0, 0])


def test_general_n_arithmetic():
    a = TropMatrix([[0, "-inf", 2], [1, 0, "-inf"], ["-inf", "-inf", 0]])
    assert TropMatrix.identity(3) @ a == a
    assert a + TropMatrix.zero(3) == a
    assert solves_right(a, a)


def test_parse_matrix_round_trip_and_errors():
    text = '[["0","-inf"],["1/2","3"]]'
    m = parse_matrix(text)
    assert m == TropMatrix([[0, "-inf"], ["1/2", 3]])
    assert parse_matrix(str(m)) == m
    with pytest.raises(ValueError, match="offset"):
        parse_matrix("[[")
    with pytest.raises(ValueError, match=r"entry \(1,0\)"):
        parse_matrix('[["0","1"],["nope","2"]]')
    with pytest.raises(ValueError, match="square"):
        parse_matrix('[["0","1"]]')
