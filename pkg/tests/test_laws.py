import pytest

from pascalfib.core import mat_pow
from pascalfib.fib import fib
from pascalfib.laws import (
    recurrence_coefficients,
    verify_border_formulas,
    verify_cube_recurrence,
    verify_fib_recurrence,
    verify_row_expansion_23,
    verify_row_propagation,
    verify_square_recurrence,
)
from pascalfib.pascal import build_right


class TestSquareRecurrence:
    def test_n2_hand_computed(self):
        # R_2**2 = [[1,1],[1,2]]: cell (2,2): 2 = 1 + 2 - 1.
        report = verify_square_recurrence(2)
        assert report.passed
        assert report.checked_cells == 1

    @pytest.mark.parametrize("n", range(3, 11))
    def test_zero_failures(self, n):
        report = verify_square_recurrence(n)
        assert report.passed
        assert report.checked_cells == (n - 1) * (n - 1)

    def test_n1_precondition(self):
        with pytest.raises(ValueError):
            verify_square_recurrence(1)


class TestCubeRecurrence:
    def test_n2_hand_computed(self):
        # R_2**3 = [[1,2],[2,3]]: cell (2,2): 3 = 4 + 3 - 4.
        report = verify_cube_recurrence(2)
        assert report.passed
        assert report.checked_cells == 1

    @pytest.mark.parametrize("n", range(3, 11))
    def test_zero_failures(self, n):
        report = verify_cube_recurrence(n)
        assert report.passed
        assert report.checked_cells == (n - 1) * (n - 1)


class TestFibRecurrence:
    def test_e1_degenerates_to_pascal_recurrence(self):
        assert verify_fib_recurrence(6, 1).passed

    def test_e2_matches_square_coefficients(self):
        # (delta, alpha, beta, gamma) = (1, 1, 2, -1) at e = 2.
        assert recurrence_coefficients(2) == (1, 1, 2, -1)
        assert verify_fib_recurrence(3, 2).passed

    def test_e3_matches_cube_coefficients(self):
        assert recurrence_coefficients(3) == (1, 2, 3, -2)
        assert verify_fib_recurrence(3, 3).passed

    @pytest.mark.parametrize("n", range(2, 11))
    def test_grid_zero_failures(self, n):
        for e in range(1, 13):
            report = verify_fib_recurrence(n, e)
            assert report.passed, (n, e, report.failures[:3])
            assert report.checked_cells == (n - 1) * (n - 1)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            verify_fib_recurrence(1, 2)
        with pytest.raises(ValueError):
            verify_fib_recurrence(3, 0)


class TestCoefficientSystem:
    def test_seed(self):
        assert recurrence_coefficients(1) == (0, 1, 1, -1)

    def test_generates_fibonacci_quadruple(self):
        for e in range(1, 31):
            assert recurrence_coefficients(e) == (
                fib(e - 1), fib(e), fib(e + 1), -fib(e))


class TestBorderFormulas:
    def test_n2_e5_fibonacci_corner(self):
        report = verify_border_formulas(2, 5)
        assert report.passed
        a = mat_pow(build_right(2), 5)
        assert (a.entry(1, 1), a.entry(1, 2)) == (3, 5)

    def test_e1_concentrates_on_last_column(self):
        # At e = 1 the first-row form is nonzero only at j = n.
        report = verify_border_formulas(5, 1)
        assert report.passed

    @pytest.mark.parametrize("n", range(1, 13))
    def test_grid_zero_failures(self, n):
        for e in range(1, 13):
            report = verify_border_formulas(n, e)
            assert report.passed, (n, e)
            assert report.checked_cells == 2 * n


class TestRowExpansion:
    def test_n2_hand_computed(self):
        report = verify_row_expansion_23(2)
        assert report.passed

    @pytest.mark.parametrize("n", range(2, 11))
    def test_full_grid_zero_failures(self, n):
        report = verify_row_expansion_23(n)
        assert report.passed
        assert report.checked_cells == 2 * (n - 1) * n

    def test_j1_base_case(self):
        # Empty sums: first column follows b[i+1][1] = b[i][1].
        b = mat_pow(build_right(4), 2)
        for i in range(1, 4):
            assert b.entry(i + 1, 1) == b.entry(i, 1)


class TestRowPropagation:
    def test_e2_n2_hand_computed(self):
        report = verify_row_propagation(2, 2)
        assert report.passed

    @pytest.mark.parametrize("n", range(2, 9))
    def test_full_grid_zero_failures(self, n):
        for e in range(2, 11):
            report = verify_row_propagation(n, e)
            assert report.passed, (n, e)
            assert report.checked_cells == (n - 1) * n

    def test_e1_rejected(self):
        with pytest.raises(ValueError):
            verify_row_propagation(4, 1)


class TestReportShape:
    def test_failure_witnesses_pinpoint_cells(self):
        report = verify_square_recurrence(6)
        assert report.law_id == "square-recurrence"
        assert report.failures == ()

    def test_checked_cells_matches_declared_range(self):
        report = verify_fib_recurrence(7, 4)
        assert report.checked_cells == 36
