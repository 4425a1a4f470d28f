"""Named, duplicate-free point collections and their JSON file format."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .geometry import GeometryError, Point, format_scalar, integer_coordinates, point

FORMAT_VERSION = 1

# int64 products stay exact while |x*y| summed over d coords is below this
_INT64_SAFE = 2**62


class DuplicatePointError(GeometryError):
    def __init__(self, first: int, second: int):
        super().__init__(f"duplicate point at indices {first} and {second}")
        self.indices = (first, second)


class PointSetFormatError(GeometryError):
    pass


@dataclass(frozen=True)
class PointSet:
    name: str
    points: Tuple[Point, ...]
    provenance: Dict[str, Any] = field(default_factory=lambda: {"generator": "external"})

    def __post_init__(self):
        pts = tuple(point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise GeometryError("a point set needs at least one point")
        dim = len(pts[0])
        seen: Dict[Point, int] = {}
        for i, p in enumerate(pts):
            if len(p) != dim:
                raise GeometryError(f"point {i} has dimension {len(p)}, expected {dim}")
            if p in seen:
                raise DuplicatePointError(seen[p], i)
            seen[p] = i

    @property
    def dim(self) -> int:
        return len(self.points[0])

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def scaled(self, factor) -> "PointSet":
        factor = Fraction(factor)
        prov = dict(self.provenance)
        prov["scaled_by"] = format_scalar(factor)
        return PointSet(self.name, tuple(tuple(c * factor for c in p) for p in self.points), prov)

    def with_point(self, p) -> "PointSet":
        return PointSet(self.name, self.points + (point(p),), dict(self.provenance))

    def integer_matrix(self) -> Tuple[np.ndarray, int]:
        """Coordinates times their common denominator, as an integer array.

        The array is int64 when Gram-matrix entries provably fit, and an
        object array of Python ints otherwise.
        """
        rows, scale = integer_coordinates(self.points)
        biggest = max(abs(v) for row in rows for v in row)
        dtype = np.int64 if self.dim * biggest * biggest * 4 < _INT64_SAFE else object
        return np.array(rows, dtype=dtype), scale

    def gram(self) -> Tuple[np.ndarray, int]:
        """Integer Gram matrix ``G`` and ``s`` with ``dot(P_i, P_j) == G[i, j] / s``."""
        m, scale = self.integer_matrix()
        return m @ m.T, scale * scale

    # -- serialization -------------------------------------------------
    def to_record(self) -> Dict[str, Any]:
        return {
            "format_version": FORMAT_VERSION,
            "name": self.name,
            "dim": self.dim,
            "points": [[format_scalar(c) for c in p] for p in self.points],
            "provenance": self.provenance,
        }

    @classmethod
    def from_record(cls, rec: Dict[str, Any]) -> "PointSet":
        try:
            version = rec["format_version"]
            name = rec["name"]
            dim = rec["dim"]
            raw = rec["points"]
        except (KeyError, TypeError) as exc:
            raise PointSetFormatError(f"missing point set field: {exc}") from None
        if version != FORMAT_VERSION:
            raise PointSetFormatError(f"unsupported format_version {version!r}")
        if not isinstance(raw, list):
            raise PointSetFormatError("'points' must be a list")
        pts: List[Point] = []
        for i, coords in enumerate(raw):
            if not isinstance(coords, list) or not all(isinstance(c, str) for c in coords):
                raise PointSetFormatError(f"point {i} must be an array of rational strings")
            if len(coords) != dim:
                raise PointSetFormatError(f"point {i} has dimension {len(coords)}, file says {dim}")
            pts.append(point(*coords))
        return cls(name, tuple(pts), rec.get("provenance") or {"generator": "external"})

    def dumps(self) -> str:
        return json.dumps(self.to_record(), indent=2)

    @classmethod
    def loads(cls, text: str) -> "PointSet":
        try:
            rec = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PointSetFormatError(f"invalid JSON: {exc}") from None
        return cls.from_record(rec)

    def save(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.dumps() + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: Union[str, Path]) -> "PointSet":
        return cls.loads(Path(path).read_text(encoding="utf-8"))


def make_pointset(points: Iterable, name: str = "points",
                  provenance: Optional[Dict[str, Any]] = None) -> PointSet:
    return PointSet(name, tuple(point(p) for p in points), provenance or {"generator": "external"})
