"""Probability distributions on graphs and their entropies.

Two routes induce distributions: orbit partitions (p_i = |X_i|/n) and
strictly positive vertex functionals (p(v) = f(v)/sum f). Functional values
are carried in natural-log space so the exponential j-sphere functional
cannot overflow; normalization goes through log-sum-exp.
All entropies are base 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import logsumexp

from .errors import DomainError
from .graph import DistanceData, Graph, distance_matrix, sphere_counts_matrix
from .orbits import OrbitPartition

LN2 = math.log(2.0)

PROB_SUM_TOL = 1e-12

# renyi_entropy switches to the Shannon limit inside this band around 1.
ALPHA_ONE_BAND = 1e-9

# Linear rendering of log-space values is exposed only below this magnitude.
SAFE_LOG_RANGE = 700.0

FUNCTIONAL_KINDS = ("linear", "exponential")


@dataclass(frozen=True)
class Distribution:
    """Strictly positive probability vector."""

    p: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.p, dtype=float).reshape(-1)
        if arr.size == 0:
            raise DomainError("distribution needs at least one atom")
        if not np.all(arr > 0.0):
            raise DomainError("probabilities must be strictly positive")
        if abs(float(arr.sum()) - 1.0) > PROB_SUM_TOL:
            raise DomainError(
                f"probabilities sum to {arr.sum()!r}, expected 1 within {PROB_SUM_TOL}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "p", arr)

    @property
    def size(self) -> int:
        return int(self.p.size)


@dataclass(frozen=True)
class DistributionStats:
    """rho = max p_i/p_k and epsilon = max (p_i - p_k); both 1/0 iff uniform."""

    rho: float
    epsilon: float


@dataclass(frozen=True)
class FunctionalSpec:
    """Rule generating j-sphere functional values.

    coeffs holds c_1..c_eta (None defers to default_coefficients at
    evaluation time); beta is the exponential base, required only there.
    """

    kind: str
    coeffs: tuple[float, ...] | None = None
    beta: float | None = None

    def __post_init__(self):
        if self.kind not in FUNCTIONAL_KINDS:
            raise DomainError(f"unknown functional kind {self.kind!r}")
        if self.coeffs is not None:
            coeffs = tuple(float(c) for c in self.coeffs)
            if any(c <= 0.0 for c in coeffs):
                raise DomainError("all sphere coefficients must be positive")
            object.__setattr__(self, "coeffs", coeffs)
        if self.kind == "exponential":
            if self.beta is None or self.beta <= 0.0:
                raise DomainError("exponential functional requires beta > 0")
        elif self.beta is not None:
            raise DomainError("beta only applies to the exponential functional")


@dataclass(frozen=True)
class FunctionalValues:
    """Per-vertex f(v) in natural-log space, with total_log = ln(sum f)."""

    log_values: np.ndarray
    total_log: float = field(init=False)
    values: np.ndarray | None = field(init=False, repr=False)

    def __post_init__(self):
        arr = np.asarray(self.log_values, dtype=float).reshape(-1)
        if arr.size == 0:
            raise DomainError("functional values need at least one vertex")
        if not np.all(np.isfinite(arr)):
            raise DomainError("functional values must be finite and positive")
        arr.setflags(write=False)
        object.__setattr__(self, "log_values", arr)
        object.__setattr__(self, "total_log", float(logsumexp(arr)))
        linear = None
        if float(np.abs(arr).max()) < SAFE_LOG_RANGE:
            linear = np.exp(arr)
            linear.setflags(write=False)
        object.__setattr__(self, "values", linear)

    @classmethod
    def from_values(cls, values) -> "FunctionalValues":
        arr = np.asarray(values, dtype=float).reshape(-1)
        if arr.size and not np.all(arr > 0.0):
            raise DomainError("functional values must be strictly positive")
        return cls(log_values=np.log(arr))

    @property
    def size(self) -> int:
        return int(self.log_values.size)

    @property
    def total(self) -> float:
        """sum f(v) in linear space; may overflow to inf for extreme inputs."""
        return float(math.exp(self.total_log))


def default_coefficients(eta: int) -> tuple[float, ...]:
    """Strictly decreasing all-distinct defaults c_j = eta - j + 1."""
    return tuple(float(eta - j + 1) for j in range(1, eta + 1))


def partition_distribution(part: OrbitPartition) -> Distribution:
    """p_i = |X_i| / n in the partition's deterministic block order."""
    sizes = np.array(part.sizes, dtype=float)
    return Distribution(p=sizes / sizes.sum())


def _resolved_coeffs(spec: FunctionalSpec, eta: int) -> np.ndarray:
    coeffs = spec.coeffs if spec.coeffs is not None else default_coefficients(eta)
    if len(coeffs) != eta:
        raise DomainError(
            f"need one coefficient per sphere radius: got {len(coeffs)}, "
            f"diameter is {eta}"
        )
    return np.asarray(coeffs, dtype=float)


def linear_functional_values(
    g: Graph, spec: FunctionalSpec, distances: DistanceData | None = None
) -> FunctionalValues:
    """f(v) = sum_j c_j |S_j(v)| on a connected graph."""
    if spec.kind != "linear":
        raise DomainError(f"expected a linear spec, got {spec.kind!r}")
    d = distances if distances is not None else distance_matrix(g)
    counts = sphere_counts_matrix(g, d)
    c = _resolved_coeffs(spec, d.eta)
    raw = counts @ c
    if raw.size and not np.all(raw > 0.0):
        raise DomainError("linear functional produced a non-positive value")
    return FunctionalValues(log_values=np.log(raw))


def exponential_functional_values(
    g: Graph, spec: FunctionalSpec, distances: DistanceData | None = None
) -> FunctionalValues:
    """f(v) = beta ** (sum_j c_j |S_j(v)|), held as exponent * ln(beta)."""
    if spec.kind != "exponential":
        raise DomainError(f"expected an exponential spec, got {spec.kind!r}")
    d = distances if distances is not None else distance_matrix(g)
    counts = sphere_counts_matrix(g, d)
    c = _resolved_coeffs(spec, d.eta)
    exponents = counts @ c
    return FunctionalValues(log_values=exponents * math.log(spec.beta))


def distribution_from_values(fv: FunctionalValues) -> Distribution:
    """Normalize via log-sum-exp: p(v) = exp(ln f(v) - ln sum f)."""
    return Distribution(p=np.exp(fv.log_values - fv.total_log))


def shannon_entropy(d: Distribution) -> float:
    """H = -sum p log2 p, in bits."""
    return float(-np.dot(d.p, np.log2(d.p))) + 0.0


def renyi_entropy(d: Distribution, alpha: float) -> float:
    """H_alpha = log2(sum p^alpha) / (1 - alpha), in bits.

    Powers go through log space; alpha within 1e-9 of 1 returns the
    Shannon limit.
    """
    if alpha <= 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if abs(alpha - 1.0) <= ALPHA_ONE_BAND:
        return shannon_entropy(d)
    log_power_sum = float(logsumexp(alpha * np.log(d.p)))
    return log_power_sum / ((1.0 - alpha) * LN2) + 0.0


def log2_power_sum(d: Distribution, alpha: float) -> float:
    """log2(sum p^alpha), the quantity the bound catalog keeps reusing."""
    return float(logsumexp(alpha * np.log(d.p))) / LN2


def distribution_stats(d: Distribution) -> DistributionStats:
    p = d.p
    return DistributionStats(
        rho=float(p.max() / p.min()), epsilon=float(p.max() - p.min())
    )
