import math
from fractions import Fraction

import pytest

from balseq.engines import (
    Engine,
    ITERATIVE_CAP_DEFAULT,
    IterativeCapError,
    Mat2,
    a_matrix,
    b_table,
    c_table,
    mat_pow,
    matrix_power,
    power_sum,
    r_base_matrix,
    r_matrix,
    term_b,
    term_b_negative,
    term_c,
)
from balseq.ring import SequenceParams

from conftest import oracle_b, oracle_b_negative, oracle_c

ALL_ENGINES = list(Engine)


class TestTermB:
    @pytest.mark.parametrize("engine", ALL_ENGINES)
    @pytest.mark.parametrize(
        "k,n,expected",
        [
            (2, 3, 35),       # value table
            (1, 4, 27),       # recurrence: 0,1,3,9,27 (the printed 3^n column is off)
            (4, 5, 19449),    # value table
            (2, 4, 204),      # recurrence; printed 1189 is the n=5 value
        ],
    )
    def test_known_values(self, engine, k, n, expected):
        assert term_b(SequenceParams(k), n, engine) == expected

    @pytest.mark.parametrize("engine", ALL_ENGINES)
    def test_negative_index_rejected(self, engine):
        with pytest.raises(ValueError, match="term_b_negative"):
            term_b(SequenceParams(2), -1, engine)

    def test_iterative_cap(self):
        with pytest.raises(IterativeCapError, match="cap"):
            term_b(SequenceParams(2), 101, Engine.ITERATIVE, iterative_cap=100)
        assert term_b(SequenceParams(2), 100, Engine.ITERATIVE, iterative_cap=100) \
            == oracle_b(2, 100)[100]

    def test_default_cap_value(self):
        assert ITERATIVE_CAP_DEFAULT == 100_000


class TestTermC:
    @pytest.mark.parametrize("engine", ALL_ENGINES)
    @pytest.mark.parametrize(
        "k,n,expected",
        [
            (3, 3, 219),   # value table; also 24k^2+3
            (2, 4, 577),
            (1, 5, 243),   # 3^n
        ],
    )
    def test_known_values(self, engine, k, n, expected):
        assert term_c(SequenceParams(k), n, engine) == expected

    @pytest.mark.parametrize("engine", ALL_ENGINES)
    def test_negative_index_rejected(self, engine):
        with pytest.raises(ValueError):
            term_c(SequenceParams(2), -3, engine)


class TestEngineAgreement:
    @pytest.mark.parametrize("k", range(1, 9))
    def test_all_engines_agree_small(self, k):
        params = SequenceParams(k)
        b, c = oracle_b(k, 120), oracle_c(k, 120)
        for n in range(121):
            for engine in ALL_ENGINES:
                assert term_b(params, n, engine) == b[n]
                assert term_c(params, n, engine) == c[n]

    @pytest.mark.parametrize("k", range(1, 9))
    def test_doubling_pair_formulas_to_500(self, k):
        # division-free doubling: B_2n = 2 B_n B_{n+1} - 3k B_n^2,
        #                         B_{2n+1} = B_{n+1}^2 + (1-k) B_n^2
        b = oracle_b(k, 1001)
        for n in range(1, 501):
            assert b[2 * n] == 2 * b[n] * b[n + 1] - 3 * k * b[n] ** 2
            assert b[2 * n + 1] == b[n + 1] ** 2 + (1 - k) * b[n] ** 2
            assert term_b(SequenceParams(k), 2 * n, Engine.FAST_DOUBLING) == b[2 * n]

    def test_growth_digits_monotone(self):
        for k in (1, 2, 7, 12):
            digits = [len(str(x)) for x in oracle_b(k, 400)[1:]]
            assert digits == sorted(digits)

    def test_log_engines_reach_one_million(self):
        # the cross-check among the three O(log n) routes at a ~765k-digit term
        params = SequenceParams(2)
        values = {
            engine: term_b(params, 1_000_000, engine)
            for engine in (Engine.FAST_DOUBLING, Engine.BINET, Engine.MATRIX)
        }
        assert len(set(values.values())) == 1
        assert next(iter(values.values())).bit_length() == 2_543_105

    def test_classical_square_property_k2(self):
        # 8*B_n^2 + 1 is a perfect square for the classical (k=2) sequence
        for n, b in enumerate(oracle_b(2, 30)):
            target = 8 * b * b + 1
            root = math.isqrt(target)
            assert root * root == target, n


class TestSeedIdentity:
    @pytest.mark.parametrize("k", range(1, 11))
    def test_c_from_b_seeds(self, k):
        # C_n = 3 B_n + (1-k) B_{n-1}: the general solution in terms of seeds
        b, c = oracle_b(k, 200), oracle_c(k, 200)
        for n in range(1, 201):
            assert c[n] == 3 * b[n] + (1 - k) * b[n - 1]


class TestTermBNegative:
    def test_k2_is_negated_positive_term(self):
        assert term_b_negative(SequenceParams(2), 2) == -6
        assert term_b_negative(SequenceParams(2), 2).denominator == 1

    def test_k3_small_values(self):
        assert term_b_negative(SequenceParams(3), 1) == Fraction(-1, 2)
        assert term_b_negative(SequenceParams(3), 2) == Fraction(-9, 4)

    @pytest.mark.parametrize("k", range(2, 7))
    def test_matches_backward_recurrence_to_20(self, k):
        oracle = oracle_b_negative(k, 20)
        params = SequenceParams(k)
        for n in range(1, 21):
            assert term_b_negative(params, n) == oracle[-n]

    @pytest.mark.parametrize("k", range(2, 7))
    def test_satisfies_backward_recurrence_directly(self, k):
        params = SequenceParams(k)
        values = {n: Fraction(term_b(params, n)) for n in (0, 1)}
        values.update({-n: term_b_negative(params, n) for n in range(1, 22)})
        for m in range(1, -19, -1):
            assert values[m - 2] == (values[m] - 3 * k * values[m - 1]) / (1 - k)

    def test_degenerate_k1_rejected(self):
        with pytest.raises(ValueError, match="k=1"):
            term_b_negative(SequenceParams(1), 3)

    @pytest.mark.parametrize("n", [0, -2])
    def test_nonpositive_n_rejected(self, n):
        with pytest.raises(ValueError, match="n must be >= 1"):
            term_b_negative(SequenceParams(3), n)


class TestPowerSum:
    def test_zeroth(self):
        assert power_sum(SequenceParams(9), 0) == 2

    def test_known_values(self):
        assert power_sum(SequenceParams(2), 2) == 34    # 35 - 1
        assert power_sum(SequenceParams(3), 2) == 77    # 79 - 2
        assert power_sum(SequenceParams(3), 3) == 675   # (3k)^3 - 3(k-1)(3k)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_equals_b_combination(self, k):
        b = oracle_b(k, 202)
        params = SequenceParams(k)
        for n in range(1, 201):
            assert power_sum(params, n) == b[n + 1] - (k - 1) * b[n - 1]


class TestMatrices:
    def test_a_matrix_first_power(self):
        assert matrix_power(SequenceParams(2), 1) == Mat2(6, -1, 1, 0)

    def test_a_matrix_square_k2(self):
        assert matrix_power(SequenceParams(2), 2) == Mat2(35, -6, 6, -1)

    def test_a_matrix_square_k3(self):
        assert matrix_power(SequenceParams(3), 2) == Mat2(79, -18, 9, -2)

    def test_r_matrix_square_k2(self):
        assert r_matrix(SequenceParams(2), 2) == Mat2(99, -17, 17, -3)

    def test_r_matrix_square_k3(self):
        assert r_matrix(SequenceParams(3), 2) == Mat2(219, -50, 25, -6)

    @pytest.mark.parametrize("bad_n", [0, -1])
    def test_index_below_one_rejected(self, bad_n):
        with pytest.raises(ValueError):
            matrix_power(SequenceParams(2), bad_n)
        with pytest.raises(ValueError):
            r_matrix(SequenceParams(2), bad_n)

    def test_a_and_r_commute(self):
        for k in (1, 2, 5, 11):
            a, r = a_matrix(SequenceParams(k)), r_base_matrix(SequenceParams(k))
            assert a @ r == r @ a

    @pytest.mark.parametrize("k", range(1, 11))
    def test_determinant_power_law(self, k):
        params = SequenceParams(k)
        for n in range(1, 101):
            assert matrix_power(params, n).det() == (k - 1) ** n

    @pytest.mark.parametrize("k", range(1, 9))
    def test_entries_match_terms(self, k):
        params = SequenceParams(k)
        b, c = oracle_b(k, 62), oracle_c(k, 62)
        for n in range(1, 61):
            assert matrix_power(params, n) == Mat2(
                b[n + 1], (1 - k) * b[n], b[n], (1 - k) * b[n - 1]
            )
            assert r_matrix(params, n) == Mat2(
                c[n + 1], (1 - k) * c[n], c[n], (1 - k) * c[n - 1]
            )

    def test_mat_pow_identity(self):
        assert mat_pow(Mat2(3, 1, 4, 1), 0) == Mat2.identity()


class TestTables:
    def test_b_table_prefixes(self):
        assert b_table(SequenceParams(2), 5) == [0, 1, 6, 35, 204, 1189]
        assert b_table(SequenceParams(2), 0) == [0]
        assert b_table(SequenceParams(2), 1) == [0, 1]

    def test_c_table_prefixes(self):
        assert c_table(SequenceParams(3), 3) == [1, 3, 25, 219]
        assert c_table(SequenceParams(3), 0) == [1]
