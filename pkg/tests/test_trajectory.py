"""
Trajectory model: validation, rebasing, parameters and results
"""
import numpy as np
import pytest

from src.core.errors import (
    ConfigError,
    DimensionMismatch,
    EmptyTrajectory,
    NonFiniteValue,
    NonMonotonicTime,
    ParameterRangeWarning,
    TrajectoryError,
)
from src.core.trajectory import (
    CoefficientKind,
    CoefficientSeries,
    SimplifyParams,
    SimplifyResult,
    Trajectory,
    validate_trajectory,
)


class TestValidateTrajectory:

    def test_minimal_valid_input(self):
        traj = validate_trajectory([(0, 0, 0), (1, 0, 0)], [0, 1])
        assert len(traj) == 2
        assert traj.dimension == 3

    def test_repeated_timestamp_rejected(self):
        with pytest.raises(NonMonotonicTime) as info:
            validate_trajectory([(0, 0, 0), (1, 0, 0)], [1, 1])
        assert info.value.index == 1

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(DimensionMismatch):
            validate_trajectory([(0, 0), (1, 0, 0)], [0, 1])

    def test_unsupported_dimension_rejected(self):
        with pytest.raises(DimensionMismatch):
            validate_trajectory([(0, 0, 0, 0), (1, 0, 0, 0)], [0, 1])

    @pytest.mark.parametrize('points', [[1.0, 2.0], [(0, 0), None], [(0, 0), 3]])
    def test_non_vector_points_rejected(self, points):
        with pytest.raises(DimensionMismatch):
            validate_trajectory(points, [0, 1])

    @pytest.mark.parametrize('points', [[], [(0.0, 0.0)]])
    def test_fewer_than_two_points(self, points):
        with pytest.raises(EmptyTrajectory):
            validate_trajectory(points, [0.0] * len(points))

    def test_nan_rejected(self):
        with pytest.raises(NonFiniteValue):
            validate_trajectory([(0, 0), (float('nan'), 1)], [0, 1])

    def test_infinite_time_rejected(self):
        with pytest.raises(NonFiniteValue):
            validate_trajectory([(0, 0), (1, 1)], [0, float('inf')])

    def test_decreasing_time_reports_index(self):
        with pytest.raises(NonMonotonicTime) as info:
            validate_trajectory([(0, 0), (1, 0), (2, 0)], [0, 2, 1])
        assert info.value.index == 2

    def test_time_is_rebased_and_offset_kept(self):
        traj = validate_trajectory([(0, 0), (1, 1), (2, 0)], [100.0, 100.5, 101.0])
        np.testing.assert_array_equal(traj.timestamps, [0.0, 0.5, 1.0])
        assert traj.time_offset == 100.0
        assert traj.duration == 1.0

    def test_revalidation_is_identity(self):
        traj = validate_trajectory([(0, 0), (1, 1), (2, 0)], [3.0, 4.0, 6.0])
        again = validate_trajectory(traj.points, traj.timestamps, traj.time_offset)
        np.testing.assert_array_equal(again.points, traj.points)
        np.testing.assert_array_equal(again.timestamps, traj.timestamps)
        assert again.time_offset == traj.time_offset

    def test_errors_share_one_base(self):
        with pytest.raises(TrajectoryError):
            validate_trajectory([], [])
        with pytest.raises(ValueError):
            validate_trajectory([], [])


class TestTrajectory:

    @pytest.fixture
    def traj(self):
        return Trajectory(np.array([[0.0, 0.0], [1.0, 2.0], [2.0, 1.0], [3.0, 3.0]]),
                          np.array([0.0, 1.0, 2.5, 3.0]))

    def test_arrays_are_read_only(self, traj):
        with pytest.raises(ValueError):
            traj.points[0, 0] = 5.0
        with pytest.raises(ValueError):
            traj.timestamps[0] = 5.0

    def test_input_arrays_are_copied(self):
        points = np.zeros((2, 2))
        traj = Trajectory(points, np.array([0.0, 1.0]))
        points[0, 0] = 9.0
        assert traj.points[0, 0] == 0.0

    def test_subset_keeps_samples(self, traj):
        sub = traj.subset([0, 2, 3])
        np.testing.assert_array_equal(sub.points, traj.points[[0, 2, 3]])
        np.testing.assert_array_equal(sub.timestamps, [0.0, 2.5, 3.0])

    def test_subset_must_stay_monotone(self, traj):
        with pytest.raises(NonMonotonicTime):
            traj.subset([2, 1])

    def test_with_points_keeps_time(self, traj):
        moved = traj.with_points(traj.points + 1.0)
        np.testing.assert_array_equal(moved.timestamps, traj.timestamps)
        np.testing.assert_array_equal(moved.points, traj.points + 1.0)

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatch):
            Trajectory(np.zeros((3, 2)), np.array([0.0, 1.0]))


class TestSimplifyParams:

    def test_defaults(self):
        params = SimplifyParams()
        assert (params.alpha, params.beta, params.gamma) == (1, 2, 2)
        assert params.coefficient is CoefficientKind.CORRELATION

    @pytest.mark.parametrize('kwargs', [
        {'alpha': -1}, {'beta': 0}, {'gamma': 0}, {'gamma': 1.5}, {'alpha': True},
    ])
    def test_out_of_range_rejected(self, kwargs):
        with pytest.raises(ConfigError):
            SimplifyParams(**kwargs)

    def test_alpha_zero_allowed(self):
        assert SimplifyParams(alpha=0).alpha == 0

    def test_large_values_warn(self):
        with pytest.warns(ParameterRangeWarning):
            SimplifyParams(gamma=11)

    def test_coefficient_name_coerced(self):
        assert SimplifyParams(coefficient='direction').coefficient is CoefficientKind.DIRECTION

    def test_unknown_coefficient_rejected(self):
        with pytest.raises(ValueError):
            SimplifyParams(coefficient='curvature')


class TestSimplifyResult:

    @pytest.fixture
    def traj(self):
        return validate_trajectory([(i, i % 2) for i in range(5)], list(range(5)))

    def test_kept_count(self, traj):
        result = SimplifyResult(traj.subset([0, 2, 4]), np.array([0, 2, 4]),
                                CoefficientSeries(np.ones(5)), 5)
        assert result.kept_count == 3
        assert result.source_count == 5

    def test_must_start_at_zero(self, traj):
        with pytest.raises(TrajectoryError):
            SimplifyResult(traj.subset([1, 4]), np.array([1, 4]), CoefficientSeries(np.ones(5)), 5)

    def test_must_end_at_last(self, traj):
        with pytest.raises(TrajectoryError):
            SimplifyResult(traj.subset([0, 3]), np.array([0, 3]), CoefficientSeries(np.ones(5)), 5)

    def test_negative_coefficients_rejected(self):
        with pytest.raises(TrajectoryError):
            CoefficientSeries(np.array([1.0, -0.5]))
