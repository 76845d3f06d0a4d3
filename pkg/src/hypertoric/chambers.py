"""Semistability, unstable loci, chambers in character space, exceptional fibers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from typing import Optional, Sequence, Union

from .lattice import determinant, gcd_all, in_rational_cone, primitive
from .moment import sample_point
from .patterns import SupportPattern, all_patterns
from .torus import WeightData, canonicalize_tuple

Character = Union[int, Sequence[int]]


def _character(wd: WeightData, alpha: Character) -> tuple[int, ...]:
    alpha = (alpha,) if isinstance(alpha, int) else tuple(alpha)
    if len(alpha) != wd.d:
        raise ValueError(f"character must have {wd.d} entries")
    return alpha


def is_semistable(wd: WeightData, alpha: Character, pattern: SupportPattern) -> bool:
    """Some l*alpha-equivariant monomial is nonzero on points with this support.

    A monomial z^u w^v has character A(u - v) and is nonzero at p iff it only
    uses the active z's and w's, so this is rational cone membership of alpha
    in the cone on {a_i : z_i active} and {-a_j : w_j active}.
    """
    alpha = _character(wd, alpha)
    cols = wd.columns
    gens = [cols[i] for i in pattern.z_active]
    gens += [tuple(-x for x in cols[j]) for j in pattern.w_active]
    return in_rational_cone(alpha, gens)


@dataclass(frozen=True, order=True)
class CoordinateSubspace:
    """{z_i = 0 for i in zero_z, w_j = 0 for j in zero_w} (0-based indices)."""

    zero_z: tuple[int, ...]
    zero_w: tuple[int, ...]

    def label(self, n: int) -> Optional[str]:
        full = tuple(range(n))
        if self.zero_z == full and not self.zero_w:
            return "F"
        if self.zero_w == full and not self.zero_z:
            return "G"
        return None

    def describe(self) -> str:
        eqs = [f"z{i + 1}=0" for i in self.zero_z] + [f"w{j + 1}=0" for j in self.zero_w]
        return "{" + ", ".join(eqs) + "}"


@dataclass(frozen=True)
class UnstableLocus:
    alpha: tuple[int, ...]
    subspaces: tuple[CoordinateSubspace, ...]
    patterns: tuple[SupportPattern, ...]


def unstable_locus(wd: WeightData, alpha: Character) -> UnstableLocus:
    """Realizable patterns on mu^{-1}(0) that are not alpha-semistable.

    The locus is reported as the maximal coordinate subspaces spanned by
    those patterns; the sweep is over all 4^n patterns.
    """
    alpha = _character(wd, alpha)
    n = wd.n
    bad = [
        p for p in all_patterns(n)
        if sample_point(wd, p) is not None and not is_semistable(wd, alpha, p)
    ]
    spans = {(frozenset(p.z_active), frozenset(p.w_active)) for p in bad}
    maximal = [
        s for s in spans
        if not any(t != s and s[0] <= t[0] and s[1] <= t[1] for t in spans)
    ]
    subspaces = sorted(
        CoordinateSubspace(
            tuple(i for i in range(n) if i not in z),
            tuple(j for j in range(n) if j not in w),
        )
        for z, w in maximal
    )
    return UnstableLocus(alpha, tuple(subspaces), tuple(bad))


@dataclass(frozen=True)
class Chamber:
    sample: tuple[int, ...]
    walls: tuple[tuple[int, ...], ...]  # wall normals

    def __post_init__(self):
        for wall in self.walls:
            if sum(a * b for a, b in zip(wall, self.sample)) == 0:
                raise ValueError(f"sample {self.sample} lies on wall {wall}")


@dataclass(frozen=True)
class ChamberDecomposition:
    walls: tuple[tuple[int, ...], ...]
    chambers: Optional[tuple[Chamber, ...]]  # None when not enumerated (d >= 3)

    @property
    def enumerated(self) -> bool:
        return self.chambers is not None

    @property
    def count(self) -> Optional[int]:
        return None if self.chambers is None else len(self.chambers)


def _sign_normalize(v: Sequence[int]) -> tuple[int, ...]:
    v = primitive(v)
    lead = next(x for x in v if x)
    return tuple(-x for x in v) if lead < 0 else v


def _hyperplane_normal(vectors: Sequence[Sequence[int]], d: int) -> tuple[int, ...]:
    """Normal of the span of d - 1 vectors in Z^d, by cofactor expansion."""
    normal = []
    for k in range(d):
        minor = [[v[j] for j in range(d) if j != k] for v in vectors]
        normal.append((-1) ** k * determinant(minor))
    return tuple(normal)


def walls(wd: WeightData) -> tuple[tuple[int, ...], ...]:
    """Sign-normalized primitive normals of the hyperplanes spanned by d - 1 columns."""
    d = wd.d
    if d == 1:
        return ((1,),)
    found = set()
    for sub in combinations(wd.columns, d - 1):
        normal = _hyperplane_normal(sub, d)
        if any(normal):
            found.add(_sign_normalize(normal))
    return tuple(sorted(found))


def _angle_cmp(p, q) -> int:
    def half(v):
        return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1

    hp, hq = half(p), half(q)
    if hp != hq:
        return hp - hq
    cross = p[0] * q[1] - p[1] * q[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def chambers(wd: WeightData) -> ChamberDecomposition:
    """Connected components of character space minus the walls.

    d = 1 gives the two half-lines. For d = 2 the rays +-(column directions)
    are sorted by angle and each chamber is sampled by the sum of two
    consecutive rays. Higher d only reports the walls.
    """
    ws = walls(wd)
    if wd.d == 1:
        return ChamberDecomposition(ws, (Chamber((-1,), ws), Chamber((1,), ws)))
    if wd.d > 2:
        return ChamberDecomposition(ws, None)
    dirs = {_sign_normalize(c) for c in wd.columns}
    rays = sorted(
        [r for v in dirs for r in (v, tuple(-x for x in v))], key=cmp_to_key(_angle_cmp)
    )
    out = []
    for k, r in enumerate(rays):
        s = rays[(k + 1) % len(rays)]
        if r[0] * s[1] - r[1] * s[0] == 0:
            # only one line: the rays are opposite
            sample = (-r[1], r[0])
        else:
            sample = primitive((r[0] + s[0], r[1] + s[1]))
        bounding = tuple(sorted({_sign_normalize((-r[1], r[0])), _sign_normalize((-s[1], s[0]))}))
        out.append(Chamber(sample, bounding))
    return ChamberDecomposition(ws, tuple(out))


@dataclass(frozen=True)
class WeightedProjectiveSpace:
    weights: tuple[int, ...]

    def __post_init__(self):
        if not self.weights or any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "weights", tuple(sorted(self.weights)))

    def normalized(self) -> WeightedProjectiveSpace:
        """Well-formed model: P(q) is isomorphic to P(q / gcd) and to the
        space obtained by dividing all other weights by the gcd of all but one."""
        q = list(self.weights)
        g = gcd_all(q)
        q = [x // g for x in q]
        changed = True
        while changed and len(q) > 1:
            changed = False
            for i in range(len(q)):
                h = gcd_all(q[:i] + q[i + 1:])
                if h > 1:
                    q = [x if k == i else x // h for k, x in enumerate(q)]
                    changed = True
        return WeightedProjectiveSpace(tuple(q))

    def __str__(self) -> str:
        return "P(" + ",".join(map(str, self.weights)) + ")"


def exceptional_fiber(wd: WeightData, side: str = "+") -> WeightedProjectiveSpace:
    """Fiber over the singular point of the partial resolution at m(alpha) > 0 or < 0.

    Over the origin the semistable points are F minus 0 (side -) or G minus 0
    (side +) up to the action, which is P(a_1, ..., a_n) in both cases.
    """
    if wd.d != 1:
        raise ValueError("exceptional fibers are only computed for d = 1")
    if side not in ("+", "-"):
        raise ValueError("side must be '+' or '-'")
    return WeightedProjectiveSpace(wd.weights)


def distinguish(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when the two tuples give non-isomorphic quotients.

    Both are canonicalized first; the exceptional fibers P(a) and P(b) are
    well-formed, so they differ exactly when the sorted weights differ.
    """
    ca, _ = canonicalize_tuple(a)
    cb, _ = canonicalize_tuple(b)
    pa, pb = WeightedProjectiveSpace(ca), WeightedProjectiveSpace(cb)
    return pa.normalized() != pb.normalized()
