import unittest
from fractions import Fraction

from homhopf.linear import (DimensionMismatchError, LinearMap, NotInvertibleError,
                            add, basis_vector, compose, covector, dual_bases,
                            first_difference, flat_index, flip, identity, invert,
                            is_identity, kron, multi_index, permutation, permute,
                            permute_domain, power, rank, scalar, scalar_value, scale,
                            subtract, transpose, vector, zero)

__author__ = "The homhopf developers"


def naive_product(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    return [[sum(Fraction(a[r][k]) * Fraction(b[k][c]) for k in range(inner))
             for c in range(cols)] for r in range(rows)]


def naive_kron(a, b):
    return [[Fraction(a[r // len(b)][c // len(b[0])]) * Fraction(b[r % len(b)][c % len(b[0])])
             for c in range(len(a[0]) * len(b[0]))]
            for r in range(len(a) * len(b))]


class TestScalar(unittest.TestCase):

    def test_scalar_integer(self):
        self.assertEqual(scalar(3), Fraction(3))

    def test_scalar_string_ratio(self):
        self.assertEqual(scalar("-2/6"), Fraction(-1, 3))

    def test_scalar_float_rejected(self):
        self.assertRaises(TypeError, lambda: scalar(0.5))

    def test_scalar_decimal_string_rejected(self):
        self.assertRaises(ValueError, lambda: scalar("0.5"))

    def test_scalar_zero_denominator(self):
        self.assertRaises(ValueError, lambda: scalar("1/0"))

    def test_scalar_bool_rejected(self):
        self.assertRaises(TypeError, lambda: scalar(True))


class TestLinearMap(unittest.TestCase):

    def test_shape(self):
        f = LinearMap([[1, 2, 3], [4, 5, 6]])
        self.assertEqual(f.shape, (2, 3))
        self.assertEqual(f.cod_dim, 2)
        self.assertEqual(f.dom_dim, 3)

    def test_entries_dense(self):
        f = LinearMap([[1, 0], [0, "1/2"]])
        self.assertEqual(f.entries, ((1, 0), (0, Fraction(1, 2))))
        self.assertEqual(f.entry(1, 1), Fraction(1, 2))
        self.assertEqual(f.column(0), (1, 0))

    def test_ragged(self):
        self.assertRaises(DimensionMismatchError, lambda: LinearMap([[1, 2], [3]]))

    def test_empty(self):
        self.assertRaises(DimensionMismatchError, lambda: LinearMap([]))

    def test_from_columns(self):
        f = LinearMap.from_columns(2, [{0: 1}, {1: 2, 0: 0}])
        self.assertEqual(f, LinearMap([[1, 0], [0, 2]]))
        self.assertEqual(f.nonzeros(1), [(1, 2)])

    def test_columns_stored_dense(self):
        f = LinearMap.from_columns(3, [{}, {1: 2}])
        self.assertEqual(f.column(0), (0, 0, 0))
        self.assertTrue(all(isinstance(value, Fraction) for value in f.column(0)))
        self.assertEqual(f.nonzeros(0), [])
        self.assertEqual(f.entries, ((0, 0), (0, 2), (0, 0)))

    def test_from_columns_row_out_of_range(self):
        self.assertRaises(DimensionMismatchError,
                          lambda: LinearMap.from_columns(2, [{2: 1}]))

    def test_apply(self):
        f = LinearMap([[1, 2], [3, 4]])
        self.assertEqual(f.apply([1, 1]), (3, 7))

    def test_apply_wrong_length(self):
        f = LinearMap([[1, 2], [3, 4]])
        self.assertRaises(DimensionMismatchError, lambda: f.apply([1]))

    def test_equality_and_hash(self):
        f = LinearMap([[1, 2], [3, 4]])
        g = LinearMap([["1", "4/2"], [3, 4]])
        self.assertEqual(f, g)
        self.assertEqual(hash(f), hash(g))
        self.assertNotEqual(f, LinearMap([[1, 2], [3, 5]]))

    def test_str(self):
        self.assertEqual(str(LinearMap([[1, "-1/2"]])), "1 -1/2")


class TestOperations(unittest.TestCase):

    def test_compose_matches_naive(self):
        a = [[1, 2, 0], [0, -1, 3]]
        b = [[2, 1], [0, "1/3"], [5, -2]]
        self.assertEqual(compose(LinearMap(a), LinearMap(b)),
                         LinearMap(naive_product(a, b)))

    def test_compose_three(self):
        a = LinearMap([[1, 1], [0, 1]])
        self.assertEqual(compose(a, a, a), LinearMap([[1, 3], [0, 1]]))

    def test_compose_mismatch(self):
        self.assertRaises(DimensionMismatchError,
                          lambda: compose(identity(2), identity(3)))

    def test_kron_matches_naive(self):
        a = [[1, 2], [3, 4]]
        b = [[0, 5, 1], [6, 7, -1]]
        self.assertEqual(kron(LinearMap(a), LinearMap(b)),
                         LinearMap(naive_kron(a, b)))

    def test_kron_three_is_associative(self):
        a = LinearMap([[1, 2], [3, 4]])
        b = LinearMap([[0, 1], [1, 0]])
        c = LinearMap([[2]])
        self.assertEqual(kron(a, b, c), kron(a, kron(b, c)))

    def test_multi_index(self):
        self.assertEqual(multi_index(5, (2, 3)), (1, 2))
        self.assertEqual(flat_index((1, 2), (2, 3)), 5)

    def test_flat_index_out_of_range(self):
        self.assertRaises(ValueError, lambda: flat_index((2, 0), (2, 3)))

    def test_flip(self):
        f = flip(2, 3)
        # e_1 (x) e_2 has index 5 and goes to e_2 (x) e_1, index 2 * 2 + 1
        self.assertEqual(f.nonzeros(5), [(5, 1)])
        self.assertEqual(f.nonzeros(1 * 3 + 0), [(0 * 2 + 1, 1)])

    def test_flip_involution(self):
        self.assertEqual(compose(flip(3, 2), flip(2, 3)), identity(6))

    def test_permutation_cycle(self):
        p = permutation((2, 2, 2), (2, 0, 1))
        # output factors are (x2, x0, x1)
        self.assertEqual(p.nonzeros(flat_index((1, 0, 0), (2, 2, 2))),
                         [(flat_index((0, 1, 0), (2, 2, 2)), 1)])

    def test_permutation_invalid(self):
        self.assertRaises(ValueError, lambda: permutation((2, 2), (0, 0)))


    def test_permute_matches_permutation(self):
        f = LinearMap([[r * 2 + c + 1 for c in range(2)] for r in range(6)])
        for dims, order in (((2, 3), (1, 0)), ((3, 2), (1, 0)),
                            ((1, 2, 3), (2, 0, 1)), ((2, 3, 1), (1, 2, 0))):
            self.assertEqual(permute(f, dims, order),
                             compose(permutation(dims, order), f))

    def test_permute_domain_matches_permutation(self):
        f = LinearMap([[c * 3 - r for c in range(6)] for r in range(2)])
        for dims, order in (((2, 3), (1, 0)), ((3, 2), (1, 0)),
                            ((1, 2, 3), (2, 0, 1)), ((2, 3, 1), (1, 2, 0))):
            self.assertEqual(permute_domain(f, dims, order),
                             compose(f, permutation(dims, order)))

    def test_permute_mismatch(self):
        f = identity(6)
        self.assertRaises(DimensionMismatchError, lambda: permute(f, (2, 2), (1, 0)))
        self.assertRaises(DimensionMismatchError,
                          lambda: permute_domain(f, (2, 2), (1, 0)))
        self.assertRaises(ValueError, lambda: permute(f, (2, 3), (0, 0)))
    def test_permutation_intertwines_kron(self):
        f = LinearMap([[1, 2], [3, 4]])
        g = LinearMap([[0, 1, 1], [1, 0, 2], [5, 0, 0]])
        self.assertEqual(compose(flip(2, 3), kron(f, g)),
                         compose(kron(g, f), flip(2, 3)))

    def test_transpose(self):
        self.assertEqual(transpose(LinearMap([[1, 2, 3]])), vector([1, 2, 3]))

    def test_add_subtract_scale(self):
        f = LinearMap([[1, 2], [3, 4]])
        self.assertEqual(add(f, f), scale(2, f))
        self.assertEqual(subtract(f, f), zero(2, 2))
        self.assertEqual(scale(0, f), zero(2, 2))

    def test_invert(self):
        f = LinearMap([[2, 1], [1, 1]])
        self.assertEqual(invert(f), LinearMap([[1, -1], [-1, 2]]))
        self.assertTrue(is_identity(compose(f, invert(f))))

    def test_invert_rational(self):
        f = LinearMap([[2, 0], [0, 3]])
        self.assertEqual(invert(f), LinearMap([["1/2", 0], [0, "1/3"]]))


    def test_invert_non_unit_pivots(self):
        f = LinearMap([[2, 1, 1], [1, 3, 2], [1, 0, 0]])
        self.assertEqual(invert(f), LinearMap([[0, 0, 1], [-2, 1, 3], [3, -1, -5]]))
        g = LinearMap([[1, 2, 3], [0, 1, 4], [5, 6, 0]])
        self.assertEqual(invert(g), LinearMap([[-24, 18, 5], [20, -15, -4], [-5, 4, 1]]))

    def test_invert_fractions_and_swaps(self):
        f = LinearMap([[0, "1/2", 1], ["2/3", 0, 0], [1, 1, "1/4"]])
        self.assertTrue(is_identity(compose(f, invert(f))))
        self.assertTrue(is_identity(compose(invert(f), f)))
    def test_invert_singular(self):
        try:
            invert(LinearMap([[1, 2], [2, 4]]))
        except NotInvertibleError as e:
            self.assertEqual(e.rank, 1)
            self.assertEqual(e.dim, 2)
            self.assertTrue('not invertible' in str(e))
        else:
            self.fail("Expected NotInvertibleError")

    def test_invert_non_square(self):
        self.assertRaises(DimensionMismatchError, lambda: invert(LinearMap([[1, 2]])))

    def test_rank(self):
        self.assertEqual(rank(LinearMap([[1, 2], [2, 4]])), 1)
        self.assertEqual(rank(identity(3)), 3)

    def test_power(self):
        f = LinearMap([[1, 1], [0, 1]])
        self.assertEqual(power(f, 3), LinearMap([[1, 3], [0, 1]]))
        self.assertEqual(power(f, -2), LinearMap([[1, -2], [0, 1]]))
        self.assertEqual(power(f, 0), identity(2))

    def test_power_non_integer(self):
        self.assertRaises(TypeError, lambda: power(identity(2), 1.0))

    def test_first_difference(self):
        f = LinearMap([[1, 2, 3]])
        g = LinearMap([[1, 2, 4]])
        self.assertEqual(first_difference(f, g), 2)
        self.assertEqual(first_difference(f, f), None)

    def test_first_difference_shapes(self):
        self.assertRaises(DimensionMismatchError,
                          lambda: first_difference(identity(2), identity(3)))

    def test_dual_bases(self):
        basis, cobasis = dual_bases(3)
        for i in range(3):
            for j in range(3):
                self.assertEqual(scalar_value(compose(cobasis[i], basis[j])),
                                 1 if i == j else 0)

    def test_basis_vector(self):
        self.assertEqual(basis_vector(3, 1), vector([0, 1, 0]))
        self.assertRaises(ValueError, lambda: basis_vector(3, 3))

    def test_covector(self):
        self.assertEqual(scalar_value(compose(covector([1, 2]), vector([3, 4]))), 11)
