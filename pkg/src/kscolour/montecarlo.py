"""Monte Carlo oracle for the colouring: samples vectors and bases
uniformly and measures the coloured fractions empirically.

Sampling is organised in fixed-size chunks of 65536 draws.  Chunk j of
a run with seed s uses its own counter-based generator keyed by
(s, j), so the stream for a chunk depends only on the seed and the
chunk index.  Results are integer counts summed over chunks, which
makes every estimate bit-identical no matter how the chunks are
partitioned into shards.

Bases are drawn Haar-uniformly: a square Gaussian matrix is
orthonormalized column by column (modified Gram-Schmidt with a second
pass), which realizes the QR decomposition with positive diagonal and
therefore the invariant distribution.
"""

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .colouring import ColouringParams, OrthonormalBasis, UnitVector

__all__ = [
    "CHUNK_SAMPLES",
    "RNG_FAMILY",
    "Estimate",
    "ViolationReport",
    "sample_unit_vector",
    "sample_basis",
    "axis_component_samples",
    "estimate_vector_fractions",
    "estimate_basis_fraction",
    "verify_constraints",
]

CHUNK_SAMPLES = 1 << 16
RNG_FAMILY = "philox4x64"

_SEED_LIMIT = 1 << 64
_DEGENERATE = 1e-8
_SE_TOL = 1e-12


@dataclass(frozen=True)
class Estimate:
    """A Bernoulli Monte Carlo estimate with its exact-formula standard error."""

    value: float
    std_error: float
    samples: int
    seed: int

    def __post_init__(self) -> None:
        if not (0.0 <= self.value <= 1.0):
            raise ValueError(f"value {self.value!r} outside [0, 1]")
        if self.samples < 1:
            raise ValueError("samples must be positive")
        _check_seed(self.seed)
        expected = math.sqrt(self.value * (1.0 - self.value) / self.samples)
        if abs(self.std_error - expected) > _SE_TOL:
            raise ValueError(
                f"std_error {self.std_error!r} inconsistent with "
                f"sqrt(value*(1-value)/samples) = {expected!r}"
            )


@dataclass(frozen=True)
class ViolationReport:
    """Counts of colouring-constraint violations over sampled bases."""

    samples: int
    black_pair_count: int
    all_white_count: int
    full_without_one_black_count: int

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError("samples must be positive")
        for name in ("black_pair_count", "all_white_count", "full_without_one_black_count"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    @property
    def total_violations(self) -> int:
        return self.black_pair_count + self.all_white_count + self.full_without_one_black_count

    @property
    def clean(self) -> bool:
        return self.total_violations == 0


def _check_seed(seed: int) -> None:
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ValueError("seed must be an integer")
    if not (0 <= seed < _SEED_LIMIT):
        raise ValueError("seed must fit in an unsigned 64-bit integer")


def _check_counts(dim: int, samples: int, shards: int) -> None:
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ValueError("dimension must be an integer")
    if dim < 3:
        raise ValueError("dimension must be at least 3")
    if not isinstance(samples, int) or isinstance(samples, bool):
        raise ValueError("samples must be an integer")
    if samples < 1:
        raise ValueError("samples must be positive")
    if not isinstance(shards, int) or isinstance(shards, bool):
        raise ValueError("shards must be an integer")
    if shards < 1:
        raise ValueError("shards must be positive")


def _chunk_rng(seed: int, index: int) -> np.random.Generator:
    key = np.array([seed, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _chunks(samples: int) -> Iterator[tuple[int, int]]:
    start = 0
    index = 0
    while start < samples:
        count = min(CHUNK_SAMPLES, samples - start)
        yield index, count
        index += 1
        start += count


def _mgs(mats: np.ndarray) -> np.ndarray:
    """Orthonormalize the columns of each matrix in place; flag degenerates."""
    count, _, dim = mats.shape
    bad = np.zeros(count, dtype=bool)
    for j in range(dim):
        col = mats[:, :, j]
        for _ in range(2):
            for i in range(j):
                prev = mats[:, :, i]
                col -= np.einsum("ij,ij->i", prev, col)[:, None] * prev
        norms = np.linalg.norm(col, axis=1)
        small = norms < _DEGENERATE
        bad |= small
        col /= np.where(small, 1.0, norms)[:, None]
    return bad


def _haar_matrices(dim: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """(count, dim, dim) stack of Haar-uniform orthogonal matrices."""
    mats = rng.standard_normal((count, dim, dim))
    bad = _mgs(mats)
    while bad.any():
        idx = np.flatnonzero(bad)
        fresh = rng.standard_normal((idx.size, dim, dim))
        bad_sub = _mgs(fresh)
        mats[idx] = fresh
        bad = np.zeros(count, dtype=bool)
        bad[idx[bad_sub]] = True
    return mats


def _unit_rows(dim: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """(count, dim) rows of uniformly distributed unit vectors."""
    rows = rng.standard_normal((count, dim))
    norms = np.linalg.norm(rows, axis=1)
    while (norms < _DEGENERATE).any():
        idx = np.flatnonzero(norms < _DEGENERATE)
        rows[idx] = rng.standard_normal((idx.size, dim))
        norms = np.linalg.norm(rows, axis=1)
    return rows / norms[:, None]


def sample_unit_vector(dim: int, rng: np.random.Generator) -> UnitVector:
    """One uniformly distributed unit vector in R^dim."""
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ValueError("dimension must be a positive integer")
    return UnitVector(_unit_rows(dim, 1, rng)[0])


def sample_basis(dim: int, rng: np.random.Generator) -> OrthonormalBasis:
    """One Haar-uniform ordered orthonormal basis of R^dim."""
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ValueError("dimension must be a positive integer")
    return OrthonormalBasis.from_matrix(_haar_matrices(dim, 1, rng)[0])


def axis_component_samples(dim: int, samples: int, seed: int) -> np.ndarray:
    """Distinguished components of uniformly sampled unit vectors.

    Returns the signed last coordinate of each sampled vector, drawn
    with the same chunked streams the estimators use.  Handy for
    distribution checks against the exact marginal density
    proportional to (1 - t^2)^((dim-3)/2).
    """
    _check_counts(dim, samples, 1)
    _check_seed(seed)
    out = np.empty(samples)
    start = 0
    for index, count in _chunks(samples):
        rows = _unit_rows(dim, count, _chunk_rng(seed, index))
        out[start : start + count] = rows[:, -1]
        start += count
    return out


def estimate_vector_fractions(
    dim: int,
    samples: int,
    seed: int,
    shards: int = 1,
) -> tuple[Estimate, Estimate, Estimate]:
    """Empirical (white, black, uncoloured) area fractions in R^dim.

    Parameters
    ----------
    dim : int
        Dimension, at least 3.  Bounds are the defaults for that
        dimension: belt 1/sqrt(dim), caps 1/sqrt(2), last axis.
    samples : int
        Number of unit vectors to draw.
    seed : int
        Unsigned 64-bit stream seed.
    shards : int
        Number of shards the chunk indices are partitioned into.  Any
        value yields bit-identical estimates; the parameter exists so
        the partition invariance is exercised, not to change results.

    Returns
    -------
    (white, black, uncoloured) Estimates.  The uncoloured value is the
    complement 1 - white - black, so the three values sum to 1 exactly.
    """
    _check_counts(dim, samples, shards)
    _check_seed(seed)
    params = ColouringParams(dim=dim)
    shard_white = [0] * shards
    shard_black = [0] * shards
    for index, count in _chunks(samples):
        rng = _chunk_rng(seed, index)
        t = np.abs(_unit_rows(dim, count, rng)[:, -1])
        shard = index % shards
        shard_white[shard] += int((t < params.white_bound).sum())
        shard_black[shard] += int((t > params.black_bound).sum())
    white_count = sum(shard_white)
    black_count = sum(shard_black)
    white_value = white_count / samples
    black_value = black_count / samples
    uncoloured_value = 1.0 - (white_value + black_value)

    def est(value: float) -> Estimate:
        return Estimate(
            value=value,
            std_error=math.sqrt(value * (1.0 - value) / samples),
            samples=samples,
            seed=seed,
        )

    return est(white_value), est(black_value), est(uncoloured_value)


def _basis_axis_abs(dim: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """(count, dim) abs distinguished components, one row per sampled basis."""
    mats = _haar_matrices(dim, count, rng)
    return np.abs(mats[:, -1, :])


def estimate_basis_fraction(
    dim: int,
    samples: int,
    seed: int,
    shards: int = 1,
) -> Estimate:
    """Empirical fraction of Haar-random bases that are fully coloured.

    A basis counts when every vector is strictly White or strictly
    Black under the default bounds for ``dim``.  Chunking, seeding and
    the shards parameter behave as in estimate_vector_fractions.
    """
    _check_counts(dim, samples, shards)
    _check_seed(seed)
    params = ColouringParams(dim=dim)
    shard_hits = [0] * shards
    for index, count in _chunks(samples):
        rng = _chunk_rng(seed, index)
        t = _basis_axis_abs(dim, count, rng)
        coloured = (t < params.white_bound) | (t > params.black_bound)
        shard_hits[index % shards] += int(coloured.all(axis=1).sum())
    hits = sum(shard_hits)
    value = hits / samples
    return Estimate(
        value=value,
        std_error=math.sqrt(value * (1.0 - value) / samples),
        samples=samples,
        seed=seed,
    )


def verify_constraints(
    dim: int,
    samples: int,
    seed: int,
    shards: int = 1,
) -> ViolationReport:
    """Count colouring-constraint violations over Haar-random bases.

    Checks, per sampled basis: an orthogonal Black pair (two or more
    Black vectors), an all-White basis, and a fully coloured basis
    whose Black count is not exactly one.  Under the default bounds
    all three counts must be zero; any non-zero count falsifies the
    geometry, not the sampler.
    """
    _check_counts(dim, samples, shards)
    _check_seed(seed)
    params = ColouringParams(dim=dim)
    shard_pairs = [0] * shards
    shard_all_white = [0] * shards
    shard_bad_full = [0] * shards
    for index, count in _chunks(samples):
        rng = _chunk_rng(seed, index)
        t = _basis_axis_abs(dim, count, rng)
        white = t < params.white_bound
        black = t > params.black_bound
        blacks_per_basis = black.sum(axis=1)
        full = (white | black).all(axis=1)
        shard = index % shards
        shard_pairs[shard] += int((blacks_per_basis >= 2).sum())
        shard_all_white[shard] += int(white.all(axis=1).sum())
        shard_bad_full[shard] += int((full & (blacks_per_basis != 1)).sum())
    return ViolationReport(
        samples=samples,
        black_pair_count=sum(shard_pairs),
        all_white_count=sum(shard_all_white),
        full_without_one_black_count=sum(shard_bad_full),
    )
