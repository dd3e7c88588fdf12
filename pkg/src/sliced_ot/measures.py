"""Discrete measures on R^d, projections to the line, generators, and CSV I/O.

A measure is a weighted point cloud.  Weights are validated (nonnegative,
summing to one within 1e-9) and then renormalized exactly so downstream
cumulative sums close at 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

WEIGHT_SUM_TOL = 1e-9
UNIT_NORM_TOL = 1e-9


def _validated_weights(weights, n: int) -> np.ndarray:
    w = np.ascontiguousarray(weights, dtype=np.float64)
    if w.shape != (n,):
        raise ValueError(f"expected {n} weights, got shape {w.shape}")
    if not np.all(np.isfinite(w)):
        raise ValueError("weights must be finite")
    if np.any(w < 0):
        raise ValueError("weights must be nonnegative")
    total = w.sum()
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise ValueError(f"weights must sum to 1 within {WEIGHT_SUM_TOL}, got {total}")
    return w / total


@dataclass(frozen=True)
class DiscreteMeasure:
    """Empirical probability measure with support ``points`` (n, d) and ``weights`` (n,)."""

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        pts = np.ascontiguousarray(self.points, dtype=np.float64)
        if pts.ndim != 2:
            raise ValueError("points must be a 2-D array of shape (n, d)")
        n, d = pts.shape
        if n < 1 or d < 1:
            raise ValueError("measure needs n >= 1 points of dimension d >= 1")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points must be finite")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", _validated_weights(self.weights, n))

    @classmethod
    def uniform(cls, points) -> "DiscreteMeasure":
        pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
        n = pts.shape[0]
        return cls(pts, np.full(n, 1.0 / n))

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def is_uniform(self) -> bool:
        return bool(np.all(self.weights == self.weights[0]))


@dataclass(frozen=True)
class Measure1D:
    """One-dimensional discrete measure; values need not be sorted."""

    values: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=np.float64)
        if vals.ndim != 1 or vals.size < 1:
            raise ValueError("values must be a nonempty 1-D array")
        if not np.all(np.isfinite(vals)):
            raise ValueError("values must be finite")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "weights", _validated_weights(self.weights, vals.size))

    @classmethod
    def uniform(cls, values) -> "Measure1D":
        vals = np.asarray(values, dtype=np.float64).ravel()
        return cls(vals, np.full(vals.size, 1.0 / vals.size))

    @property
    def n(self) -> int:
        return self.values.size

    def is_uniform(self) -> bool:
        return bool(np.all(self.weights == self.weights[0]))


@dataclass(frozen=True)
class Direction:
    """Unit vector on S^{d-1}."""

    components: np.ndarray = field()

    def __post_init__(self):
        c = np.ascontiguousarray(self.components, dtype=np.float64)
        if c.ndim != 1 or c.size < 1:
            raise ValueError("direction must be a 1-D vector")
        norm = float(np.linalg.norm(c))
        if not np.isfinite(norm) or abs(norm - 1.0) > UNIT_NORM_TOL:
            raise ValueError(f"direction must have unit norm within {UNIT_NORM_TOL}, got {norm}")
        object.__setattr__(self, "components", c)

    @property
    def dim(self) -> int:
        return self.components.size


def as_direction_array(theta) -> np.ndarray:
    """Coerce a Direction or array-like into a validated unit vector."""
    if isinstance(theta, Direction):
        return theta.components
    return Direction(np.asarray(theta, dtype=np.float64)).components


def project(measure: DiscreteMeasure, theta) -> Measure1D:
    """Push ``measure`` forward through x -> theta . x.

    Weights are copied unchanged; only support locations move.
    """
    t = as_direction_array(theta)
    if t.size != measure.dim:
        raise ValueError(f"direction dimension {t.size} != measure dimension {measure.dim}")
    return Measure1D(measure.points @ t, measure.weights)


def gen_gaussian(n: int, d: int, mean=0.0, scale: float = 1.0,
                 rng: np.random.Generator | None = None) -> DiscreteMeasure:
    """n i.i.d. isotropic Gaussian samples with uniform weights."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if scale <= 0:
        raise ValueError("scale must be positive")
    rng = rng if rng is not None else np.random.default_rng()
    mu = np.broadcast_to(np.asarray(mean, dtype=np.float64), (d,))
    pts = mu + scale * rng.standard_normal((n, d))
    return DiscreteMeasure.uniform(pts)


def gen_s_curve(n: int, noise: float = 0.0,
                rng: np.random.Generator | None = None) -> DiscreteMeasure:
    """Uniform-weight 2-D cloud tracing an S shape.

    Parametrized as (x, y) = (sin t, sign(t) * (cos t - 1)) for t uniform on
    [-3*pi/2, 3*pi/2], plus isotropic Gaussian noise; so x spans [-1, 1] and
    y spans [-2, 2] before noise.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = rng if rng is not None else np.random.default_rng()
    t = rng.uniform(-1.5 * np.pi, 1.5 * np.pi, size=n)
    pts = np.column_stack([np.sin(t), np.sign(t) * (np.cos(t) - 1.0)])
    if noise > 0:
        pts = pts + noise * rng.standard_normal((n, 2))
    return DiscreteMeasure.uniform(pts)


def gen_ring(n: int, noise: float = 0.0,
             rng: np.random.Generator | None = None) -> DiscreteMeasure:
    """Uniform-weight 2-D cloud on the unit circle plus isotropic noise."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = rng if rng is not None else np.random.default_rng()
    phi = rng.uniform(0.0, 2.0 * np.pi, size=n)
    pts = np.column_stack([np.cos(phi), np.sin(phi)])
    if noise > 0:
        pts = pts + noise * rng.standard_normal((n, 2))
    return DiscreteMeasure.uniform(pts)


def save_csv(measure: DiscreteMeasure, path) -> None:
    """Write a measure as CSV with header ``x0,...,x{d-1},w``.

    Coordinates use 17 significant digits so save -> load round-trips exactly.
    """
    d = measure.dim
    header = ",".join([f"x{k}" for k in range(d)] + ["w"])
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(header + "\n")
        for row, w in zip(measure.points, measure.weights):
            cells = [format(v, ".17g") for v in row] + [format(w, ".17g")]
            fh.write(",".join(cells) + "\n")


def load_csv(path) -> DiscreteMeasure:
    """Read a measure from CSV.

    Rows hold d numeric coordinates plus an optional trailing weight column
    (header ``x0,...,x{d-1}[,w]``).  Lines starting with ``#`` are ignored.
    Absent weights default to uniform; present weights are normalized.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.readlines()

    rows = []
    header: list[str] | None = None
    for lineno, line in enumerate(raw, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        cells = [c.strip() for c in text.split(",")]
        if header is None and cells and cells[0].startswith("x"):
            header = cells
            continue
        rows.append((lineno, cells))

    if not rows:
        raise ValueError(f"{path}: no data rows")

    has_weight = header is not None and header[-1] == "w"
    ncols = len(rows[0][1])
    if header is not None and ncols != len(header):
        raise ValueError(f"{path}: row 1 has {ncols} columns, header has {len(header)}")

    points = []
    weights = []
    for lineno, cells in rows:
        if len(cells) != ncols:
            raise ValueError(f"{path}: row at line {lineno} has {len(cells)} columns, expected {ncols}")
        try:
            vals = [float(c) for c in cells]
        except ValueError as exc:
            raise ValueError(f"{path}: malformed value at line {lineno}: {exc}") from None
        if not all(np.isfinite(v) for v in vals):
            raise ValueError(f"{path}: nonfinite value at line {lineno}")
        if has_weight:
            if vals[-1] < 0:
                raise ValueError(f"{path}: negative weight at line {lineno}")
            points.append(vals[:-1])
            weights.append(vals[-1])
        else:
            points.append(vals)

    pts = np.asarray(points, dtype=np.float64)
    if has_weight:
        w = np.asarray(weights, dtype=np.float64)
        total = w.sum()
        if total <= 0:
            raise ValueError(f"{path}: weights sum to {total}, must be positive")
        return DiscreteMeasure(pts, w / total)
    return DiscreteMeasure.uniform(pts)
