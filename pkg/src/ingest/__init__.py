"""Trajectory input and result output"""
from .csv_reader import ColumnSpec, format_csv, parse_csv
from .geolife import GeoPoint, LocalProjection, drop_duplicate_timestamps, haversine_distance, parse_plt, project_to_local
from .writer import build_result_document, write_plot_data, write_result

__all__ = [
    'ColumnSpec', 'parse_csv', 'format_csv',
    'GeoPoint', 'LocalProjection', 'parse_plt', 'drop_duplicate_timestamps',
    'haversine_distance', 'project_to_local',
    'build_result_document', 'write_result', 'write_plot_data',
]
