"""Invariant monomials: Hilbert basis of the invariant monoid and gradings."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .torus import WeightData, build


class CapExceeded(RuntimeError):
    """The completion did not finish below the requested total degree."""


@dataclass(frozen=True, order=True)
class InvariantMonomial:
    """z^u w^v with A u = A v."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.u) + sum(self.v)

    @property
    def sort_key(self):
        return (self.degree, self.u, self.v)

    def is_invariant(self, wd: WeightData) -> bool:
        return wd.A.apply(self.u) == wd.A.apply(self.v)

    def __str__(self) -> str:
        factors = []
        for name, exps in (("z", self.u), ("w", self.v)):
            for i, e in enumerate(exps, 1):
                if e:
                    factors.append(f"{name}{i}" + (f"^{e}" if e > 1 else ""))
        return "*".join(factors) or "1"


def _dominates_any(y, by_var, j) -> bool:
    # y = x + e_j and x dominates nothing found so far, so only basis
    # elements using variable j can lie below y
    for b in by_var[j]:
        if all(bi <= yi for bi, yi in zip(b, y)):
            return True
    return False


def _completion(columns: Sequence[tuple[int, ...]], safety_cap: int) -> list[tuple[int, ...]]:
    """Minimal nonzero solutions x in N^N of sum_j x_j c_j = 0.

    Contejean-Devie completion: start from the unit vectors and grow a
    candidate x by e_j only when the defect sum x_j c_j points against c_j.
    Candidates that dominate a known solution are dropped. The frontier
    empties after finitely many levels, and at that point every minimal
    solution has been found.
    """
    N = len(columns)
    d = len(columns[0]) if columns else 0
    zero = (0,) * d
    basis: list[tuple[int, ...]] = []
    by_var: list[list[tuple[int, ...]]] = [[] for _ in range(N)]
    frontier = {}
    for j in range(N):
        e = tuple(int(i == j) for i in range(N))
        frontier[e] = tuple(columns[j])
    level = 1
    while frontier:
        if level > safety_cap:
            raise CapExceeded(
                f"completion still has {len(frontier)} open candidates at total degree {level}"
            )
        solved = sorted(x for x, defect in frontier.items() if defect == zero)
        for x in solved:
            basis.append(x)
            for j, xj in enumerate(x):
                if xj:
                    by_var[j].append(x)
        nxt = {}
        for x, defect in frontier.items():
            if defect == zero:
                continue
            for j in range(N):
                c = columns[j]
                if sum(a * b for a, b in zip(defect, c)) >= 0:
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1:]
                if y in nxt or _dominates_any(y, by_var, j):
                    continue
                nxt[y] = tuple(a + b for a, b in zip(defect, c))
        frontier = nxt
        level += 1
    return basis


def hilbert_basis(wd: WeightData, safety_cap: int = 64) -> tuple[InvariantMonomial, ...]:
    """Minimal generators of the monoid {(u, v) in N^2n : A u = A v}.

    Sorted by total degree, then lexicographically on (u, v). Raises
    :class:`CapExceeded` rather than returning a truncated list.
    """
    n = wd.n
    cols = wd.columns
    lifted = cols + [tuple(-x for x in c) for c in cols]
    sols = _completion(lifted, safety_cap)
    out = [InvariantMonomial(x[:n], x[n:]) for x in sols]
    return tuple(sorted(out, key=lambda m: m.sort_key))


@dataclass(frozen=True)
class GradingInfo:
    generator_weights: tuple[tuple[InvariantMonomial, int], ...]
    maximal_weight: int
    half_gradable: bool
    half_weights: Optional[tuple[tuple[InvariantMonomial, int], ...]]
    omega_weight: int

    @property
    def weight_set(self) -> tuple[int, ...]:
        return tuple(sorted({w for _, w in self.generator_weights}))

    @property
    def half_maximal_weight(self) -> Optional[int]:
        if self.half_weights is None:
            return None
        return max(w for _, w in self.half_weights)


def grading(wd: WeightData, basis: Sequence[InvariantMonomial]) -> GradingInfo:
    """Scaling weights |u| + |v|, and the halved grading when all are even.

    The symplectic form has weight 2 under scaling and weight 1 after halving.
    """
    weights = tuple((m, m.degree) for m in basis)
    half = all(w % 2 == 0 for _, w in weights)
    return GradingInfo(
        generator_weights=weights,
        maximal_weight=max(w for _, w in weights),
        half_gradable=half,
        half_weights=tuple((m, w // 2) for m, w in weights) if half else None,
        omega_weight=1 if half else 2,
    )


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def family_generators(n: int, m: int) -> list[InvariantMonomial]:
    """Explicit generators for weights (1, ..., 1, m).

    z_i w_j and z_n w_n (weight 2), plus z^d w_n and z_n w^d for every
    exponent vector d on the first n - 1 variables with |d| = m.
    """
    k = n - 1
    out = []
    for i in range(k):
        for j in range(k):
            u, v = [0] * n, [0] * n
            u[i] += 1
            v[j] += 1
            out.append(InvariantMonomial(tuple(u), tuple(v)))
    unit_n = tuple(int(i == k) for i in range(n))
    out.append(InvariantMonomial(unit_n, unit_n))
    for dvec in _compositions(m, k):
        full = dvec + (0,)
        out.append(InvariantMonomial(full, unit_n))
        out.append(InvariantMonomial(unit_n, full))
    return out


@dataclass(frozen=True)
class FamilyCheck:
    n: int
    m: int
    equal: bool
    expected_count: int
    missing: tuple[InvariantMonomial, ...]
    extra: tuple[InvariantMonomial, ...]


def verify_family_generators(n: int, m: int, safety_cap: int = 64) -> FamilyCheck:
    if n < 3:
        raise ValueError("n must be at least 3")
    if m < 1:
        raise ValueError("m must be positive")
    expected = set(family_generators(n, m))
    got = set(hilbert_basis(build([1] * (n - 1) + [m]), safety_cap))
    key = lambda x: x.sort_key  # noqa: E731
    return FamilyCheck(
        n=n,
        m=m,
        equal=expected == got,
        expected_count=(n - 1) ** 2 + 1 + 2 * comb(m + n - 2, n - 2),
        missing=tuple(sorted(expected - got, key=key)),
        extra=tuple(sorted(got - expected, key=key)),
    )


@dataclass(frozen=True)
class Relation:
    """sum_i coefficients[i] * generators[i] = 0 on the zero fiber."""

    coefficients: tuple[int, ...]
    generators: tuple[InvariantMonomial, ...]
    matches_moment_map: bool

    def __str__(self) -> str:
        terms = []
        for c, g in zip(self.coefficients, self.generators):
            terms.append(str(g) if c == 1 else f"{c}*{g}")
        return " + ".join(terms).replace("+ -", "- ") + " = 0"


def footnote_relation(wd: WeightData) -> Relation:
    """Linear relation among the diagonal generators z_i w_i for d = 1.

    The relation sum a_i (z_i w_i) is rebuilt as a bilinear form and compared
    coefficient by coefficient with the single moment-map component.
    """
    if wd.d != 1:
        raise ValueError("only defined for a single weight row")
    n = wd.n
    gens = []
    for i in range(n):
        e = tuple(int(k == i) for k in range(n))
        gens.append(InvariantMonomial(e, e))
    coeffs = wd.weights
    assert all(g.is_invariant(wd) for g in gens)
    form: dict[tuple[int, int], int] = {}
    for c, g in zip(coeffs, gens):
        key = (g.u.index(1), g.v.index(1))
        form[key] = form.get(key, 0) + c
    mu_form = {(j, j): a for j, a in enumerate(wd.A.row(0)) if a}
    return Relation(tuple(coeffs), tuple(gens), {k: v for k, v in form.items() if v} == mu_form)
