"""
GeoLife PLT parsing and local metric projection of GPS fixes
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, TextIO, Union

import numpy as np

from ..core.errors import EmptyTrajectory, OutOfRangeCoordinate, ParseError
from ..core.trajectory import Trajectory, validate_trajectory

logger = logging.getLogger(__name__)

PLT_HEADER_LINES = 6
SECONDS_PER_DAY = 86400.0
METERS_PER_DEGREE = 111320.0
EARTH_RADIUS_M = 6371000.0
# GeoLife marks missing altitude with this value (feet)
INVALID_ALTITUDE = -777.0


def _check_range(latitude: float, longitude: float, line: Optional[int] = None):
    if not -90.0 <= latitude <= 90.0:
        raise OutOfRangeCoordinate(f"latitude {latitude} outside [-90, 90]", line)
    if not -180.0 <= longitude <= 180.0:
        raise OutOfRangeCoordinate(f"longitude {longitude} outside [-180, 180]", line)


@dataclass(frozen=True)
class GeoPoint:
    """One GPS fix; timestamp in seconds since the first fix of its file"""
    latitude: float
    longitude: float
    altitude: Optional[float]
    timestamp: float

    def __post_init__(self):
        _check_range(self.latitude, self.longitude)


def haversine_distance(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance in meters"""
    lat1, lon1, lat2, lon2 = map(math.radians, (a.latitude, a.longitude, b.latitude, b.longitude))
    h = math.sin((lat2 - lat1) / 2) ** 2 + math.cos(lat1) * math.cos(lat2) * math.sin((lon2 - lon1) / 2) ** 2
    return 2 * EARTH_RADIUS_M * math.asin(math.sqrt(h))


def parse_plt(text: Union[str, TextIO]) -> List[GeoPoint]:
    """
    Parse a GeoLife .plt file

    Layout: 6 header lines, then records
    lat,lon,0,altitude_ft,fractional_days,date,time

    Args:
        text: file content or an open text stream

    Returns:
        GeoPoints in file order, timestamps rebased to 0 at the first record
    """
    content = text if isinstance(text, str) else text.read()
    lines = content.splitlines()

    records = []
    first_days = None
    for number, raw in enumerate(lines[PLT_HEADER_LINES:], start=PLT_HEADER_LINES + 1):
        if not raw.strip():
            continue
        fields = raw.split(',')
        if len(fields) < 5:
            raise ParseError(f"expected at least 5 fields, found {len(fields)}", number)
        try:
            latitude = float(fields[0])
            longitude = float(fields[1])
            altitude = float(fields[3])
            days = float(fields[4])
        except ValueError as e:
            raise ParseError(f"invalid number ({e})", number) from e
        if not all(map(math.isfinite, (latitude, longitude, days))):
            raise ParseError("non-finite coordinate or time", number)
        _check_range(latitude, longitude, number)
        if first_days is None:
            first_days = days
        records.append(GeoPoint(
            latitude=latitude,
            longitude=longitude,
            altitude=None if altitude == INVALID_ALTITUDE else altitude,
            timestamp=(days - first_days) * SECONDS_PER_DAY,
        ))

    logger.debug(f"Parsed {len(records)} PLT records")
    return records


def drop_duplicate_timestamps(geo: List[GeoPoint]) -> List[GeoPoint]:
    """Keep only fixes strictly later than the last kept one"""
    kept = []
    for point in geo:
        if not kept or point.timestamp > kept[-1].timestamp:
            kept.append(point)
    dropped = len(geo) - len(kept)
    if dropped:
        logger.warning(f"Dropped {dropped} GPS fixes with repeated or decreasing timestamps")
    return kept


@dataclass(frozen=True)
class LocalProjection:
    """Equirectangular projection about an origin, in meters"""
    origin_latitude: float
    origin_longitude: float
    meters_per_degree_lat: float
    meters_per_degree_lon: float

    def __post_init__(self):
        _check_range(self.origin_latitude, self.origin_longitude)
        if self.meters_per_degree_lat <= 0 or self.meters_per_degree_lon < 0:
            raise ValueError("meters per degree must be positive (latitude) and non-negative (longitude)")

    @classmethod
    def about(cls, latitude: float, longitude: float) -> 'LocalProjection':
        return cls(
            origin_latitude=latitude,
            origin_longitude=longitude,
            meters_per_degree_lat=METERS_PER_DEGREE,
            meters_per_degree_lon=METERS_PER_DEGREE * math.cos(math.radians(latitude)),
        )

    def project(self, latitudes, longitudes) -> np.ndarray:
        """(K, 2) local x (east), y (north) in meters"""
        x = (np.asarray(longitudes, dtype=np.float64) - self.origin_longitude) * self.meters_per_degree_lon
        y = (np.asarray(latitudes, dtype=np.float64) - self.origin_latitude) * self.meters_per_degree_lat
        return np.column_stack([x, y])


def project_to_local(geo: List[GeoPoint]) -> Trajectory:
    """
    Project GPS fixes to a planar 2D Trajectory about the first fix

    Altitude is discarded.
    """
    if not geo:
        raise EmptyTrajectory("no GPS fixes to project")
    projection = LocalProjection.about(geo[0].latitude, geo[0].longitude)
    points = projection.project([g.latitude for g in geo], [g.longitude for g in geo])
    return validate_trajectory(points, [g.timestamp for g in geo])
