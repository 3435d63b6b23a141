"""
Chart generation for simplified trajectories: original samples, the fitted
spline and the kept points on one figure
"""
from typing import Optional, Sequence
import logging
import io

import numpy as np

from ..core.trajectory import SimplifyResult, Trajectory
from ..interpolation.spline import CubicSpline, sample_uniform

logger = logging.getLogger(__name__)

CURVE_SAMPLES_PER_KNOT = 20


def _pyplot():
    import matplotlib
    matplotlib.use('Agg')  # Use non-interactive backend
    import matplotlib.pyplot as plt
    return plt


def _finish(plt, fig, output_path: Optional[str]) -> Optional[bytes]:
    plt.tight_layout()
    if output_path:
        fig.savefig(output_path, dpi=150, bbox_inches='tight')
        plt.close(fig)
        return None
    buf = io.BytesIO()
    fig.savefig(buf, format='png', dpi=150, bbox_inches='tight')
    buf.seek(0)
    plt.close(fig)
    return buf.getvalue()


class TrajectoryChart:
    """Render simplification results with matplotlib (imported on first use)"""

    def __init__(self):
        self.plt = _pyplot()

    def render_overlay(self, original: Trajectory, result: SimplifyResult, spline: CubicSpline,
                       output_path: Optional[str] = None) -> Optional[bytes]:
        """
        Plot the original samples, the spline and the kept points

        2D trajectories are drawn in the plane; 3D ones as one panel per
        coordinate against time.

        Args:
            original: input samples
            result: simplification of original
            spline: spline fitted through result.simplified
            output_path: Optional path to save image (if None, returns bytes)

        Returns:
            PNG bytes if output_path is None, otherwise None
        """
        plt = self.plt
        fig = None
        try:
            count = max(2, CURVE_SAMPLES_PER_KNOT * len(spline.knots))
            times, curve = sample_uniform(spline, count)
            kept = result.simplified
            title = f"{len(original)} -> {result.kept_count} points"

            if original.dimension == 2:
                fig, ax = plt.subplots(figsize=(8, 8))
                ax.plot(original.points[:, 0], original.points[:, 1], '.', color='gray',
                        markersize=3, alpha=0.6, label='Original')
                ax.plot(curve[:, 0], curve[:, 1], color='tab:blue', linewidth=1.5, label='Spline')
                ax.plot(kept.points[:, 0], kept.points[:, 1], 'o', color='tab:red',
                        markersize=5, label='Kept')
                ax.set_xlabel('x')
                ax.set_ylabel('y')
                ax.set_aspect('equal', adjustable='datalim')
                ax.grid(True, alpha=0.3)
                ax.legend()
                ax.set_title(title, fontweight='bold')
            else:
                fig, axes = plt.subplots(original.dimension, 1, figsize=(10, 8), sharex=True)
                for d, ax in enumerate(axes):
                    ax.plot(original.timestamps, original.points[:, d], '.', color='gray',
                            markersize=3, alpha=0.6, label='Original')
                    ax.plot(times, curve[:, d], color='tab:blue', linewidth=1.5, label='Spline')
                    ax.plot(kept.timestamps, kept.points[:, d], 'o', color='tab:red',
                            markersize=4, label='Kept')
                    ax.set_ylabel('xyz'[d])
                    ax.grid(True, alpha=0.3)
                axes[0].legend(loc='upper right')
                axes[0].set_title(title, fontweight='bold')
                axes[-1].set_xlabel('Time (s)')

            return _finish(plt, fig, output_path)
        except Exception as e:
            logger.error(f"Error rendering trajectory overlay: {e}")
            if fig is not None:
                plt.close(fig)
            return None

    def render_sweep(self, reports: Sequence, output_path: Optional[str] = None) -> Optional[bytes]:
        """
        Kept-point count and synchronous error against gamma

        Args:
            reports: EvaluationReports of a gamma sweep
            output_path: Optional path to save image

        Returns:
            PNG bytes if output_path is None, otherwise None
        """
        if not reports:
            return None

        plt = self.plt
        fig = None
        try:
            gammas = np.array([r.gamma for r in reports])
            counts = np.array([r.simplified_count for r in reports])
            errors = np.array([r.synchronous_error for r in reports])

            fig, ax1 = plt.subplots(figsize=(8, 5))
            ax1.plot(gammas, counts, 'o-', color='tab:blue')
            ax1.set_xlabel('gamma')
            ax1.set_ylabel('Kept points', color='tab:blue')
            ax1.grid(True, alpha=0.3)

            ax2 = ax1.twinx()
            ax2.plot(gammas, errors, 's--', color='tab:red')
            ax2.set_ylabel('Synchronous error', color='tab:red')
            ax1.set_title('Gamma sweep', fontweight='bold')

            return _finish(plt, fig, output_path)
        except Exception as e:
            logger.error(f"Error rendering sweep chart: {e}")
            if fig is not None:
                plt.close(fig)
            return None
