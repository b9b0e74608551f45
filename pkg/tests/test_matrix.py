import random
from fractions import Fraction

import pytest

from minorsum import (
    ZZ,
    QQ,
    IndexRangeError,
    IndexSet,
    Matrix,
    PolynomialRing,
    RingMismatchError,
    ScalarParseError,
    ShapeError,
    SkewSymmetryError,
    augment_hat,
    concat_columns,
    det_bareiss,
    det_cofactor,
    matrix_from_json_dict,
    matrix_to_json_dict,
    outer_product,
    pfaffian_laplace,
    pfaffian_matchings,
    structured,
)
from minorsum.matrix import all_ones, identity, lower_ones, upper_ones


def rand_int_matrix(rng, m, n, bound=9):
    return Matrix(ZZ, [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)])


def rand_skew(rng, n, bound=9):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-bound, bound)
            rows[i][j] = v
            rows[j][i] = -v
    return Matrix(ZZ, rows)


def symbolic_skew(n, prefix="y"):
    names = [f"{prefix}{i}{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    ring = PolynomialRing(names)
    rows = [[ring.zero for _ in range(n)] for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            g = ring.gen(names[k])
            k += 1
            rows[i][j] = g
            rows[j][i] = -g
    return ring, Matrix(ring, rows)


# -- construction and accessors -------------------------------------------


def test_construction_validation():
    with pytest.raises(ShapeError):
        Matrix(ZZ, [[1, 2], [3]])
    with pytest.raises(RingMismatchError):
        Matrix(ZZ, [[True]])
    with pytest.raises(ShapeError):
        Matrix(ZZ, [[1, 2]], ncols=3)
    empty = Matrix(ZZ, [], ncols=4)
    assert (empty.nrows, empty.ncols) == (0, 4)
    assert Matrix.zeros(ZZ, 2, 3) == Matrix(ZZ, [[0, 0, 0], [0, 0, 0]])


def test_entry_row_column_one_based():
    M = Matrix(ZZ, [[1, 2, 3], [4, 5, 6]])
    assert M.entry(1, 1) == 1
    assert M.entry(2, 3) == 6
    assert M.row(2) == (4, 5, 6)
    assert M.column(2) == (2, 5)
    for bad in ((0, 1), (1, 0), (3, 1), (1, 4)):
        with pytest.raises(IndexRangeError):
            M.entry(*bad)


def test_arithmetic_and_shape_checks():
    A = Matrix(ZZ, [[1, 2], [3, 4]])
    B = Matrix(ZZ, [[5, 6], [7, 8]])
    assert A + B == Matrix(ZZ, [[6, 8], [10, 12]])
    assert B - A == Matrix(ZZ, [[4, 4], [4, 4]])
    assert -A == Matrix(ZZ, [[-1, -2], [-3, -4]])
    assert A @ B == Matrix(ZZ, [[19, 22], [43, 50]])
    assert A.scale(3) == Matrix(ZZ, [[3, 6], [9, 12]])
    assert A.T == Matrix(ZZ, [[1, 3], [2, 4]])
    assert A.T.T == A
    with pytest.raises(ShapeError):
        A + Matrix(ZZ, [[1, 2]])
    with pytest.raises(ShapeError):
        A @ Matrix(ZZ, [[1, 2]])
    with pytest.raises(RingMismatchError):
        A + Matrix(QQ, [[1, 2], [3, 4]])


def test_matmul_generic_ring_path():
    ring = PolynomialRing(("a", "b"))
    a, b = ring.gens()
    M = Matrix(ring, [[a, b]])
    N = Matrix(ring, [[a], [b]])
    assert (M @ N).entry(1, 1) == a * a + b * b


def test_submatrix_and_selection():
    M = Matrix(ZZ, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert M.submatrix((1, 3), (2, 3)) == Matrix(ZZ, [[2, 3], [8, 9]])
    assert M.columns_at(IndexSet(3, (1, 3))) == Matrix(ZZ, [[1, 3], [4, 6], [7, 9]])
    assert M.delete_rc((2,)) == Matrix(ZZ, [[1, 3], [7, 9]])
    assert M.submatrix((), ()) == Matrix(ZZ, [], ncols=0)
    with pytest.raises(ShapeError):
        Matrix(ZZ, [[1, 2]]).delete_rc((1,))


def test_structured_builders():
    assert upper_ones(3, ZZ) == Matrix(ZZ, [[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    assert lower_ones(3, ZZ) == upper_ones(3, ZZ).T
    assert all_ones(2, ZZ) == Matrix(ZZ, [[1, 1], [1, 1]])
    assert identity(3, ZZ).entry(2, 2) == 1
    assert structured("U", 3, ZZ) == upper_ones(3, ZZ)
    assert structured("Id", 2, ZZ) == identity(2, ZZ)
    with pytest.raises(ShapeError):
        structured("V", 3, ZZ)


def test_concat_augment_outer():
    A = Matrix(ZZ, [[1], [2]])
    B = Matrix(ZZ, [[3, 4], [5, 6]])
    assert concat_columns([A, B]) == Matrix(ZZ, [[1, 3, 4], [2, 5, 6]])
    with pytest.raises(ShapeError):
        concat_columns([A, Matrix(ZZ, [[1, 2]])])
    with pytest.raises(RingMismatchError):
        concat_columns([A, Matrix(QQ, [[1], [2]])])
    with pytest.raises(ShapeError):
        concat_columns([])
    assert augment_hat(Matrix(ZZ, [[1, 2, 3]])) == Matrix(
        ZZ, [[1, 2, 3, 0], [0, 0, 0, 1]]
    )
    assert outer_product(ZZ, (1, 2), (3, 4)) == Matrix(ZZ, [[3, 4], [6, 8]])


def test_is_skew_symmetric():
    assert Matrix(ZZ, [[0, 2], [-2, 0]]).is_skew_symmetric()
    assert not Matrix(ZZ, [[1, 2], [-2, 0]]).is_skew_symmetric()
    assert not Matrix(ZZ, [[0, 2], [2, 0]]).is_skew_symmetric()
    assert not Matrix(ZZ, [[0, 1]]).is_skew_symmetric()
    assert Matrix(ZZ, [], ncols=0).is_skew_symmetric()


# -- determinants -----------------------------------------------------------


def test_det_small_frozen_values():
    assert det_cofactor(Matrix(ZZ, [], ncols=0)) == 1
    assert det_bareiss(Matrix(ZZ, [], ncols=0)) == 1
    assert det_cofactor(Matrix(ZZ, [[7]])) == 7
    assert det_cofactor(Matrix(ZZ, [[1, 1], [1, 2]])) == 1
    assert det_bareiss(identity(5, ZZ)) == 1
    assert det_bareiss(Matrix(ZZ, [[0, 1], [1, 0]])) == -1
    assert det_bareiss(Matrix(ZZ, [[2, 0, 1], [1, 1, 0], [0, 3, 1]])) == 5


def test_det_requires_square():
    with pytest.raises(ShapeError):
        det_cofactor(Matrix(ZZ, [[1, 2]]))
    with pytest.raises(ShapeError):
        det_bareiss(Matrix(ZZ, [[1, 2]]))


def test_bareiss_matches_cofactor_random_int():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 6)
        M = rand_int_matrix(rng, n, n, bound=6)
        assert det_bareiss(M) == det_cofactor(M)


def test_bareiss_matches_cofactor_singular_heavy():
    # duplicated rows/columns force zero pivots somewhere in elimination
    rng = random.Random(12)
    for _ in range(80):
        n = rng.randint(2, 6)
        M = rand_int_matrix(rng, n, n, bound=3)
        rows = M.rows_as_lists()
        i, j = rng.sample(range(n), 2)
        rows[i] = rows[j][:]
        S = Matrix(ZZ, rows)
        assert det_bareiss(S) == 0
        assert det_cofactor(S) == 0
    col0 = Matrix(ZZ, [[0, 5], [0, 7]])
    assert det_bareiss(col0) == 0


def test_bareiss_matches_cofactor_polynomial():
    ring = PolynomialRing(("a", "b", "c", "d"))
    a, b, c, d = ring.gens()
    rng = random.Random(13)
    pool = [a, b, c, d, a + b, c - d, ring.one, ring.zero, a * b - 1]
    for _ in range(25):
        n = rng.randint(1, 4)
        M = Matrix(ring, [[pool[rng.randrange(len(pool))] for _ in range(n)] for _ in range(n)])
        assert det_bareiss(M) == det_cofactor(M)
    # singular symbolic: repeated row
    S = Matrix(ring, [[a, b], [a, b]])
    assert det_bareiss(S) == ring.zero


def test_det_rational_entries():
    M = Matrix(QQ, [[Fraction(1, 2), 1], [1, Fraction(2, 3)]])
    assert det_bareiss(M) == Fraction(1, 3) - 1
    assert det_cofactor(M) == det_bareiss(M)


def test_det_row_swap_antisymmetry():
    rng = random.Random(14)
    for _ in range(40):
        n = rng.randint(2, 5)
        M = rand_int_matrix(rng, n, n)
        rows = M.rows_as_lists()
        i, j = rng.sample(range(n), 2)
        rows[i], rows[j] = rows[j], rows[i]
        S = Matrix(ZZ, rows)
        assert det_bareiss(S) == -det_bareiss(M)
        assert det_cofactor(S) == -det_cofactor(M)


def test_det_transpose_invariance():
    rng = random.Random(15)
    for _ in range(40):
        n = rng.randint(1, 5)
        M = rand_int_matrix(rng, n, n)
        assert det_bareiss(M.T) == det_bareiss(M)


# -- pfaffians ---------------------------------------------------------------


def test_pfaffian_empty_and_2x2():
    assert pfaffian_matchings(Matrix(ZZ, [], ncols=0)) == 1
    assert pfaffian_laplace(Matrix(ZZ, [], ncols=0)) == 1
    assert pfaffian_matchings(Matrix(ZZ, [[0, 5], [-5, 0]])) == 5
    ring, Y = symbolic_skew(2)
    assert ring.format(pfaffian_laplace(Y)) == "y12"


def test_pfaffian_4x4_symbolic_formula():
    ring, Y = symbolic_skew(4)
    g = ring.gen
    expect = g("y12") * g("y34") - g("y13") * g("y24") + g("y14") * g("y23")
    assert pfaffian_matchings(Y) == expect
    assert pfaffian_laplace(Y) == expect


def test_pfaffian_input_validation():
    with pytest.raises(SkewSymmetryError):
        pfaffian_matchings(Matrix(ZZ, [[0]]))
    with pytest.raises(SkewSymmetryError):
        pfaffian_laplace(Matrix(ZZ, [[0, 1], [1, 0]]))
    with pytest.raises(ShapeError):
        pfaffian_matchings(Matrix(ZZ, [[0, 1]]))


def test_pfaffian_two_algorithms_agree_up_to_10():
    rng = random.Random(16)
    for n in range(0, 11, 2):
        for _ in range(12):
            Y = rand_skew(rng, n)
            assert pfaffian_matchings(Y) == pfaffian_laplace(Y)


def test_pfaffian_square_is_determinant():
    rng = random.Random(17)
    for n in range(0, 9, 2):
        for _ in range(12):
            Y = rand_skew(rng, n)
            pf = pfaffian_laplace(Y)
            assert pf * pf == det_bareiss(Y)


def test_odd_skew_determinant_vanishes():
    rng = random.Random(18)
    for n in (3, 5, 7):
        for _ in range(10):
            Y = rand_skew(rng, n)
            assert det_bareiss(Y) == 0
            assert det_cofactor(Y) == 0


# -- JSON interchange ---------------------------------------------------------


def test_json_round_trip_int_rat_poly():
    M = Matrix(ZZ, [[1, -2], [3, 4]])
    assert matrix_from_json_dict(matrix_to_json_dict(M)) == M
    Q = Matrix(QQ, [[Fraction(1, 3), 2]])
    assert matrix_from_json_dict(matrix_to_json_dict(Q)) == Q
    ring, Y = symbolic_skew(3)
    assert matrix_from_json_dict(matrix_to_json_dict(Y)) == Y


def test_json_errors():
    with pytest.raises(ShapeError):
        matrix_from_json_dict({"ring": "int"})
    with pytest.raises(ShapeError):
        matrix_from_json_dict(
            {"ring": "int", "rows": 2, "cols": 1, "entries": [[1]]}
        )
    with pytest.raises(ScalarParseError):
        matrix_from_json_dict(
            {"ring": "complex", "rows": 1, "cols": 1, "entries": [[1]]}
        )
