"""Point-file parsing and the JSON fit report."""

from __future__ import annotations

import csv
import enum
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import IO

import numpy as np

from linefit3d._version import __version__
from linefit3d.eigen3 import SpectrumClass
from linefit3d.errors import EmptyCloudError, ParseError
from linefit3d.fitter import FitResult
from linefit3d.nonlinearity import PointCloud

STDIN = "-"

# plain decimal or scientific notation; no thousands separators, no inf/nan
_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


class InputFormat(enum.Enum):
    CSV = "csv"
    WHITESPACE = "ws"
    AUTO = "auto"


def _split(line: str, fmt: InputFormat) -> list[str]:
    if fmt is InputFormat.CSV:
        return [f.strip() for f in next(csv.reader([line]))]
    return line.split()


def _is_number(field: str) -> bool:
    return _NUMBER.fullmatch(field) is not None


def parse_text(text: str, fmt: InputFormat = InputFormat.AUTO, source: str = "<string>") -> PointCloud:
    rows: list[tuple[float, float, float]] = []
    seen_first = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if fmt is InputFormat.AUTO:
            fmt = InputFormat.CSV if "," in line else InputFormat.WHITESPACE
        fields = _split(line, fmt)
        if not seen_first:
            seen_first = True
            if not all(_is_number(f) for f in fields):
                continue
        if len(fields) != 3:
            raise ParseError(f"expected 3 fields, found {len(fields)}", lineno, source)
        for f in fields:
            if not _is_number(f):
                raise ParseError(f"non-numeric field {f!r}", lineno, source)
        values = tuple(float(f) for f in fields)
        if not all(np.isfinite(values)):
            raise ParseError("value out of floating-point range", lineno, source)
        rows.append(values)
    if not rows:
        raise EmptyCloudError()
    return PointCloud(np.array(rows, dtype=np.float64))


def parse_points(
    source: str | Path | IO[str], fmt: InputFormat | str = InputFormat.AUTO
) -> PointCloud:
    """Read a point cloud from a path, ``"-"`` for standard input, or an open text stream.

    Lines starting with ``#`` and blank lines are skipped. If the first
    remaining line is not all numeric it is taken as a header.
    """
    fmt = InputFormat(fmt)
    if hasattr(source, "read"):
        return parse_text(source.read(), fmt, getattr(source, "name", "<stream>"))
    if str(source) == STDIN:
        return parse_text(sys.stdin.read(), fmt, "<stdin>")
    path = Path(source)
    with path.open(encoding="utf-8-sig") as f:
        text = f.read()
    return parse_text(text, fmt, str(path))


@dataclass(frozen=True)
class FitReport:
    n_points: int
    centroid: tuple[float, float, float]
    direction: tuple[float, float, float]
    moment: tuple[float, float, float]
    eigenvalues: tuple[float, float, float]
    mean_square_distance: float
    rms_distance: float
    classification: str
    source: str
    version: str = __version__

    @classmethod
    def from_result(cls, result: FitResult, source: str) -> "FitReport":
        def triple(v):
            return tuple(float(x) for x in v)

        return cls(
            n_points=int(result.n_points),
            centroid=triple(result.centroid),
            direction=triple(result.direction),
            moment=triple(result.moment),
            eigenvalues=triple(result.eigenvalues),
            mean_square_distance=float(result.mean_square_distance),
            rms_distance=float(result.rms_distance),
            classification=result.classification.value,
            source=source,
        )

    def to_dict(self) -> dict:
        return {
            "n_points": self.n_points,
            "centroid": list(self.centroid),
            "direction": list(self.direction),
            "moment": list(self.moment),
            "eigenvalues": list(self.eigenvalues),
            "mean_square_distance": self.mean_square_distance,
            "rms_distance": self.rms_distance,
            "classification": self.classification,
            "source": self.source,
            "version": self.version,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FitReport":
        SpectrumClass(d["classification"])
        return cls(
            n_points=int(d["n_points"]),
            centroid=tuple(float(x) for x in d["centroid"]),
            direction=tuple(float(x) for x in d["direction"]),
            moment=tuple(float(x) for x in d["moment"]),
            eigenvalues=tuple(float(x) for x in d["eigenvalues"]),
            mean_square_distance=float(d["mean_square_distance"]),
            rms_distance=float(d["rms_distance"]),
            classification=d["classification"],
            source=str(d["source"]),
            version=str(d["version"]),
        )


def emit_report(report: FitReport, pretty: bool = False) -> str:
    # json writes floats with repr(): the shortest string that round-trips, at most 17 digits
    return json.dumps(report.to_dict(), indent=2 if pretty else None, allow_nan=False)


def load_report(text: str) -> FitReport:
    return FitReport.from_dict(json.loads(text))
