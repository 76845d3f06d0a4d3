"""The moment map, its Jacobian, and pattern-level geometry of its zero fiber."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

from .lattice import kernel_basis, rank
from .patterns import Support, SupportPattern
from .torus import WeightData


@dataclass(frozen=True)
class PointCoords:
    z: tuple[Fraction, ...]
    w: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.z) != len(self.w):
            raise ValueError("z and w must have the same length")
        object.__setattr__(self, "z", tuple(Fraction(x) for x in self.z))
        object.__setattr__(self, "w", tuple(Fraction(x) for x in self.w))

    @property
    def n(self) -> int:
        return len(self.z)

    def support(self) -> SupportPattern:
        return SupportPattern.from_sets(
            self.n,
            z=[i for i, x in enumerate(self.z) if x],
            w=[i for i, x in enumerate(self.w) if x],
        )


@dataclass(frozen=True)
class MomentMap:
    """mu(z, w) = A (z_1 w_1, ..., z_n w_n)."""

    weights: WeightData

    @property
    def components(self) -> list[tuple[int, ...]]:
        A = self.weights.A
        return [A.row(i) for i in range(A.rows)]

    def __call__(self, p: PointCoords) -> tuple[Fraction, ...]:
        return evaluate(self, p)


def _check_arity(mu: MomentMap, p: PointCoords):
    if p.n != mu.weights.n:
        raise ValueError(f"point has {p.n} coordinate pairs, expected {mu.weights.n}")


def evaluate(mu: MomentMap, p: PointCoords) -> tuple[Fraction, ...]:
    _check_arity(mu, p)
    products = [z * w for z, w in zip(p.z, p.w)]
    return tuple(sum(a * x for a, x in zip(row, products)) for row in mu.components)


def jacobian(mu: MomentMap, p: PointCoords) -> list[list[Fraction]]:
    """d x 2n matrix: d f_i/d z_j = a_ij w_j, d f_i/d w_j = a_ij z_j."""
    _check_arity(mu, p)
    return [
        [a * w for a, w in zip(row, p.w)] + [a * z for a, z in zip(row, p.z)]
        for row in mu.components
    ]


def jacobian_rank_at(mu: MomentMap, p: PointCoords) -> int:
    return rank(jacobian(mu, p))


def zero_fiber_dimension(wd: WeightData) -> int:
    return 2 * wd.n - rank(wd.A.to_rows())


def local_dimension(wd: WeightData, pattern: SupportPattern) -> int:
    """Dimension of the locus of mu^{-1}(0) with exactly this support.

    Only meaningful for realizable patterns. z-only and w-only indices each
    contribute one free coordinate; on the "both" indices the products
    z_i w_i range over an open part of ker A_B and one factor of each stays
    free.
    """
    both = pattern.both
    kernel_dim = len(both) - rank([[wd.A[i, j] for j in both] for i in range(wd.d)]) if both else 0
    return len(pattern.singles) + len(both) + kernel_dim


@dataclass(frozen=True)
class Stratum:
    support: SupportPattern
    dimension: int


@dataclass(frozen=True)
class SingularLocus:
    strata: tuple[Stratum, ...]
    dimension: int


def singular_strata(wd: WeightData) -> SingularLocus:
    """Strata of Sing(mu^{-1}(0)).

    Under the nonvanishing-minor condition a point is singular exactly when
    at most d - 1 coordinate pairs are active, and on the zero fiber each
    active pair then has exactly one nonzero factor.
    """
    n, d = wd.n, wd.d
    strata = []
    for k in range(d):
        for idx in combinations(range(n), k):
            for choice in product((Support.Z, Support.W), repeat=k):
                states = [Support.NONE] * n
                for i, s in zip(idx, choice):
                    states[i] = s
                strata.append(Stratum(SupportPattern(tuple(states)), k))
    strata.sort(key=lambda s: (s.dimension, str(s.support)))
    return SingularLocus(tuple(strata), max(s.dimension for s in strata))


def sample_point(wd: WeightData, pattern: SupportPattern) -> Optional[PointCoords]:
    """A point of mu^{-1}(0) whose support is exactly ``pattern``, or None.

    On the "both" indices the products x_i = z_i w_i must be a kernel vector
    of A_B with no zero entry. The combination ``sum M^k K_k`` of the kernel
    basis columns works once M exceeds every coordinate's Cauchy root bound,
    so no randomness is involved.
    """
    if pattern.n != wd.n:
        raise ValueError("pattern length mismatch")
    both = pattern.both
    x = {}
    if both:
        K = kernel_basis(wd.A.select_columns(both))
        if K.cols == 0:
            return None
        cols = K.columns()
        if any(not any(c[r] for c in cols) for r in range(len(both))):
            return None
        M = 1 + max(abs(e) for e in K.entries)
        vec = [sum(c[r] * M**k for k, c in enumerate(cols)) for r in range(len(both))]
        assert all(vec)
        x = dict(zip(both, vec))
    z, w = [0] * wd.n, [0] * wd.n
    for i, s in enumerate(pattern.states):
        if s is Support.Z:
            z[i] = 1
        elif s is Support.W:
            w[i] = 1
        elif s is Support.BOTH:
            z[i], w[i] = 1, x[i]
    return PointCoords(tuple(z), tuple(w))
