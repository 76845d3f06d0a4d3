"""Stabilizers, orbit closures and the zero fiber of the quotient map."""
from __future__ import annotations

import enum
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .lattice import IntMatrix, SignSystem, minor_dets, gcd_all, smith_normal_form, strict_feasible
from .moment import sample_point
from .patterns import SupportPattern, all_patterns
from .torus import WeightData


class InconsistentPattern(ValueError):
    pass


class UnrealizablePattern(ValueError):
    pass


@dataclass(frozen=True)
class StabilizerStructure:
    """(C*)^torus_rank x prod Z/t for t in torsion."""

    torus_rank: int
    torsion: tuple[int, ...] = ()

    @property
    def finite(self) -> bool:
        return self.torus_rank == 0

    @property
    def trivial(self) -> bool:
        return self.finite and not self.torsion

    @property
    def order(self) -> Optional[int]:
        if not self.finite:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self) -> str:
        parts = [f"(C*)^{self.torus_rank}"] if self.torus_rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " x ".join(parts) or "1"


@dataclass(frozen=True)
class OnePS:
    """One-parameter subgroup t -> (t^lam_1, ..., t^lam_d)."""

    lam: tuple[int, ...]


def active_columns(wd: WeightData, pattern: SupportPattern) -> IntMatrix:
    return wd.A.select_columns(pattern.active)


def stabilizer(wd: WeightData, pattern: SupportPattern) -> StabilizerStructure:
    """Stabilizer of any point with this support.

    z_i and w_i impose the same character condition t^{a_i} = 1, so only the
    active index set matters; the group is dual to Z^d / (span of active
    columns), read off from the Smith form.
    """
    M = active_columns(wd, pattern)
    if M.cols == 0:
        return StabilizerStructure(wd.d)
    snf = smith_normal_form(M)
    return StabilizerStructure(
        wd.d - snf.rank,
        tuple(s for s in snf.invariant_factors if s > 1),
    )


def finite_stabilizer_order(wd: WeightData, pattern: SupportPattern) -> Optional[int]:
    """gcd of the d x d minors of the active columns (None if they vanish)."""
    M = active_columns(wd, pattern)
    if M.cols < wd.d:
        return None
    g = gcd_all(minor_dets(M, wd.d).values())
    return g or None


def orbit_sign_system(wd: WeightData, pattern: SupportPattern) -> SignSystem:
    cols = wd.columns
    return SignSystem(
        wd.d,
        tuple(cols[i] for i in pattern.z_active),
        tuple(cols[i] for i in pattern.w_active),
    )


def origin_in_orbit_closure(
    wd: WeightData, pattern: SupportPattern, on_zero_fiber: bool = False
) -> tuple[bool, Optional[OnePS]]:
    """Whether lim_{t->0} lam(t).p = 0 for some one-parameter subgroup.

    lam(t) scales z_i by t^<a_i,lam> and w_i by t^-<a_i,lam>, so we need a
    lam pairing positively with every active z column and negatively with
    every active w column. For points of mu^{-1}(0) this is membership in
    the fiber over the image of the origin.
    """
    if on_zero_fiber and pattern.both and len(pattern.active) <= wd.d:
        raise InconsistentPattern(
            f"pattern {pattern} has a nonzero product z_i w_i but only "
            f"{len(pattern.active)} active indices"
        )
    lam = strict_feasible(orbit_sign_system(wd, pattern))
    if lam is None:
        return False, None
    return True, OnePS(lam)


class OrbitType(enum.Enum):
    FREE_SMOOTH = "FreeSmooth"
    FINITE_STABILIZER_IN_FIBER = "FiniteStabilizerInFiber"
    POSITIVE_DIM_STABILIZER = "PositiveDimStabilizer"


def classify(wd: WeightData, pattern: SupportPattern) -> OrbitType:
    if sample_point(wd, pattern) is None:
        raise UnrealizablePattern(f"no point of mu^-1(0) has support {pattern}")
    stab = stabilizer(wd, pattern)
    if not stab.finite:
        return OrbitType.POSITIVE_DIM_STABILIZER
    if stab.trivial:
        return OrbitType.FREE_SMOOTH
    return OrbitType.FINITE_STABILIZER_IN_FIBER


def _classify_or_none(args):
    wd, pattern = args
    try:
        return classify(wd, pattern)
    except UnrealizablePattern:
        return None


def census(wd: WeightData, jobs: int = 1) -> dict[str, int]:
    """Count realizable support patterns by orbit type over all 4^n patterns."""
    tasks = [(wd, p) for p in all_patterns(wd.n)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_classify_or_none, tasks))
    else:
        results = [_classify_or_none(t) for t in tasks]
    counts = Counter(r.value for r in results if r is not None)
    out = {t.value: counts.get(t.value, 0) for t in OrbitType}
    out["unrealizable"] = sum(1 for r in results if r is None)
    return out
