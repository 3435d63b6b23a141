"""
Thomas solver and natural cubic spline reconstruction
"""
import numpy as np
import pytest

from src.core.errors import DimensionMismatch, SingularSystem
from src.core.trajectory import Trajectory
from src.interpolation.spline import (
    build_spline_system,
    evaluate,
    evaluate_batch,
    fit_spline,
    sample_uniform,
)
from src.interpolation.tridiagonal import TridiagonalSystem, solve_tridiagonal


def random_dominant_system(rng, m, columns=None):
    sub = rng.uniform(-1, 1, m - 1)
    sup = rng.uniform(-1, 1, m - 1)
    off = np.zeros(m)
    off[1:] += np.abs(sub)
    off[:-1] += np.abs(sup)
    diag = (off + rng.uniform(0.1, 2.0, m)) * rng.choice([-1.0, 1.0], m)
    shape = (m,) if columns is None else (m, columns)
    return TridiagonalSystem(sub, diag, sup, rng.normal(size=shape))


def random_knots(rng, m, dimension=3):
    knots = np.cumsum(rng.uniform(0.1, 2.0, m))
    return Trajectory(rng.normal(size=(m, dimension)), knots)


class TestSolveTridiagonal:

    def test_small_example(self):
        system = TridiagonalSystem([1, 1], [2, 2, 2], [1, 1], [1, 2, 3])
        np.testing.assert_allclose(solve_tridiagonal(system), [0.5, 0.0, 1.5], atol=1e-15)

    def test_identity(self):
        b = np.array([3.0, -1.0, 7.5, 0.25])
        system = TridiagonalSystem(np.zeros(3), np.ones(4), np.zeros(3), b)
        np.testing.assert_array_equal(solve_tridiagonal(system), b)

    def test_scalar_system(self):
        system = TridiagonalSystem([], [4.0], [], [2.0])
        np.testing.assert_allclose(solve_tridiagonal(system), [0.5])

    def test_matches_dense_solve(self):
        rng = np.random.default_rng(0)
        for _ in range(1000):
            system = random_dominant_system(rng, int(rng.integers(1, 51)))
            expected = np.linalg.solve(system.to_dense(), system.rhs)
            got = solve_tridiagonal(system)
            assert np.linalg.norm(got - expected) <= 1e-9 * np.linalg.norm(expected)

    def test_several_right_hand_sides(self):
        rng = np.random.default_rng(1)
        system = random_dominant_system(rng, 20, columns=3)
        expected = np.linalg.solve(system.to_dense(), system.rhs)
        np.testing.assert_allclose(solve_tridiagonal(system), expected, rtol=1e-9, atol=1e-12)

    def test_vanishing_pivot(self):
        system = TridiagonalSystem([1.0], [1.0, 1.0], [1.0], [1.0, 2.0])
        with pytest.raises(SingularSystem) as info:
            solve_tridiagonal(system)
        assert info.value.row == 1

    def test_zero_leading_pivot(self):
        with pytest.raises(SingularSystem) as info:
            solve_tridiagonal(TridiagonalSystem([1.0], [0.0, 1.0], [1.0], [1.0, 1.0]))
        assert info.value.row == 0

    def test_bad_lengths(self):
        with pytest.raises(DimensionMismatch):
            TridiagonalSystem([1.0, 1.0], [2.0, 2.0], [1.0], [1.0, 1.0])

    def test_diagonal_dominance(self):
        assert TridiagonalSystem([1.0], [3.0, 3.0], [1.0], [0.0, 0.0]).is_diagonally_dominant()
        assert not TridiagonalSystem([2.0], [1.0, 3.0], [1.0], [0.0, 0.0]).is_diagonally_dominant()


class TestFitSpline:

    def test_two_points_give_a_segment(self):
        spline = fit_spline(Trajectory(np.array([[0.0, 1.0], [2.0, 5.0]]), np.array([0.0, 4.0])))
        np.testing.assert_allclose(evaluate(spline, 2.0), [1.0, 3.0], atol=1e-12)
        np.testing.assert_array_equal(spline.accelerations, 0.0)

    def test_linear_reproduction(self):
        rng = np.random.default_rng(2)
        knots = np.cumsum(rng.uniform(0.05, 3.0, 12))
        slope = np.array([1.5, -0.25, 4.0])
        offset = np.array([2.0, 0.5, -1.0])
        spline = fit_spline(Trajectory(offset + np.outer(knots, slope), knots))
        queries = np.sort(rng.uniform(knots[0], knots[-1], 100))
        np.testing.assert_allclose(evaluate_batch(spline, queries), offset + np.outer(queries, slope), atol=1e-9)

    def test_sine_interpolation_error(self):
        knots = np.linspace(0.0, np.pi, 11)
        spline = fit_spline(Trajectory(np.column_stack([np.sin(knots), 0.5 * knots]), knots))
        mids = (knots[:-1] + knots[1:]) / 2
        values = evaluate_batch(spline, mids)
        assert np.max(np.abs(values[:, 0] - np.sin(mids))) < 2e-3
        np.testing.assert_allclose(values[:, 1], 0.5 * mids, atol=1e-9)

    def test_accelerations_match_dense_solve(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            kept = random_knots(rng, int(rng.integers(3, 30)))
            system = build_spline_system(kept.timestamps, kept.points)
            expected = np.linalg.solve(system.to_dense(), system.rhs)
            np.testing.assert_allclose(fit_spline(kept).accelerations, expected, rtol=1e-9, atol=1e-9)

    def test_interpolation_smoothness_and_natural_ends(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            kept = random_knots(rng, int(rng.integers(2, 30)), dimension=int(rng.choice([2, 3])))
            spline = fit_spline(kept)
            a, b, c, d = (spline.coefficients[..., j] for j in range(4))
            h = np.diff(spline.knots)
            scale = 1.0 + np.abs(spline.coefficients).max() * (1.0 + h.max() ** 3)
            tol = 1e-9 * scale

            np.testing.assert_allclose(a.T, kept.points[:-1], atol=tol)
            end_value = a + b * h + c * h ** 2 + d * h ** 3
            np.testing.assert_allclose(end_value.T, kept.points[1:], atol=tol)

            first = b + 2 * c * h + 3 * d * h ** 2
            second = 2 * c + 6 * d * h
            np.testing.assert_allclose(first[:, :-1], b[:, 1:], atol=tol)
            np.testing.assert_allclose(second[:, :-1], 2 * c[:, 1:], atol=tol)

            np.testing.assert_allclose(2 * c[:, 0], 0.0, atol=tol)
            np.testing.assert_allclose(second[:, -1], 0.0, atol=tol)

    def test_slope_continuity_by_finite_differences(self):
        rng = np.random.default_rng(5)
        kept = random_knots(rng, 8, dimension=2)
        spline = fit_spline(kept)
        curvature = np.abs(spline.accelerations).max()
        for k in range(1, 7):
            step = 1e-6 * (kept.timestamps[k + 1] - kept.timestamps[k - 1])
            t = kept.timestamps[k]
            left = evaluate_batch(spline, [t - step, t])
            right = evaluate_batch(spline, [t, t + step])
            slope_left = (left[1] - left[0]) / step
            slope_right = (right[1] - right[0]) / step
            bound = 1e-4 * (1.0 + np.abs(slope_left)) + curvature * step
            assert np.all(np.abs(slope_left - slope_right) <= bound)


class TestEvaluate:

    @pytest.fixture
    def line(self):
        return fit_spline(Trajectory(np.array([[0.0, 0.0], [2.0, 4.0]]), np.array([0.0, 1.0])))

    def test_knots_return_kept_points(self):
        rng = np.random.default_rng(6)
        kept = random_knots(rng, 10)
        spline = fit_spline(kept)
        for t, p in zip(kept.timestamps, kept.points):
            np.testing.assert_allclose(evaluate(spline, t), p, atol=1e-9)
        np.testing.assert_allclose(evaluate_batch(spline, kept.timestamps), kept.points, atol=1e-9)

    def test_midpoint_of_segment(self, line):
        np.testing.assert_allclose(line(0.5), [1.0, 2.0])

    def test_extrapolates_boundary_polynomial(self, line):
        np.testing.assert_allclose(evaluate(line, 1.5), [3.0, 6.0])
        np.testing.assert_allclose(evaluate(line, -0.5), [-1.0, -2.0])

    def test_batch_identical_to_pointwise(self):
        rng = np.random.default_rng(7)
        kept = random_knots(rng, 15)
        spline = fit_spline(kept)
        knots = kept.timestamps
        times = np.sort(np.concatenate([
            rng.uniform(knots[0] - 1.0, knots[-1] + 1.0, 200), knots,
        ]))
        pointwise = np.array([evaluate(spline, t) for t in times])
        np.testing.assert_array_equal(evaluate_batch(spline, times), pointwise)

    def test_empty_batch(self, line):
        assert evaluate_batch(line, []).shape == (0, 2)

    def test_unsorted_batch_rejected(self, line):
        with pytest.raises(ValueError):
            evaluate_batch(line, [0.5, 0.2])

    def test_sample_uniform(self, line):
        times, positions = sample_uniform(line, 5)
        np.testing.assert_allclose(times, [0.0, 0.25, 0.5, 0.75, 1.0])
        np.testing.assert_allclose(positions[:, 1], 4 * times)
        empty_times, empty_positions = sample_uniform(line, 0)
        assert len(empty_times) == 0 and empty_positions.shape == (0, 2)
