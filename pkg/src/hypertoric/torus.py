"""Weight data for a diagonal torus action on C^{2n} and its validation."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence, Union

from .lattice import IntMatrix, gcd_all, kernel_basis, minor_dets, smith_normal_form


class WeightDataError(ValueError):
    """Input weight data cannot be used."""


class ZeroEntry(WeightDataError):
    pass


class TooShort(WeightDataError):
    pass


class ValidationFailed(WeightDataError):
    def __init__(self, verdict: ValidationVerdict):
        self.verdict = verdict
        super().__init__("; ".join(f.describe() for f in verdict.failures))


@dataclass(frozen=True)
class Canonicalization:
    """How a signed tuple was turned into a sorted positive one.

    ``permutation[k]`` is the raw index that lands in canonical slot ``k``;
    ``flipped`` lists raw indices whose weight was negated, which swaps the
    roles of z and w at that index.
    """

    permutation: tuple[int, ...]
    flipped: tuple[int, ...] = ()

    @property
    def is_identity(self) -> bool:
        return not self.flipped and self.permutation == tuple(range(len(self.permutation)))

    def to_canonical(self, z: Sequence, w: Sequence) -> tuple[tuple, tuple]:
        """Map raw coordinates to canonical ones.

        A flipped index sends (z, w) to (w, -z), which preserves both the
        moment map and the symplectic form.
        """
        flipped = set(self.flipped)
        cz, cw = [], []
        for i in self.permutation:
            if i in flipped:
                cz.append(w[i])
                cw.append(-z[i])
            else:
                cz.append(z[i])
                cw.append(w[i])
        return tuple(cz), tuple(cw)

    def to_dict(self) -> dict:
        return {"permutation": list(self.permutation), "flipped": list(self.flipped)}


def canonicalize_tuple(raw: Sequence[int]) -> tuple[tuple[int, ...], Canonicalization]:
    """Make every weight positive and sort ascending (stable)."""
    raw = tuple(raw)
    if any(a == 0 for a in raw):
        raise ZeroEntry(f"weights must be nonzero: {list(raw)}")
    if len(raw) < 3:
        raise TooShort(f"need at least 3 weights, got {len(raw)}")
    perm = tuple(sorted(range(len(raw)), key=lambda i: abs(raw[i])))
    flipped = tuple(i for i, a in enumerate(raw) if a < 0)
    return tuple(abs(raw[i]) for i in perm), Canonicalization(perm, flipped)


@dataclass(frozen=True)
class Failure:
    condition: str
    columns: tuple[int, ...] = ()  # 1-based
    value: Optional[int] = None
    message: str = ""

    def describe(self) -> str:
        text = self.condition
        if self.columns:
            text += " at columns {" + ",".join(map(str, self.columns)) + "}"
        if self.message:
            text += ": " + self.message
        return text

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "columns": list(self.columns),
            "value": self.value,
            "message": self.message,
        }


@dataclass(frozen=True)
class ValidationVerdict:
    failures: tuple[Failure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"ok": self.ok, "failures": [f.to_dict() for f in self.failures]}


def validate(A: IntMatrix) -> ValidationVerdict:
    """Check the hypotheses the construction needs, collecting every failure.

    In order: n >= d + 2; every d x d column minor is nonzero; in every
    d x (d+1) column block the d x d minors are coprime; A maps Z^n onto Z^d.
    """
    d, n = A.rows, A.cols
    failures = []
    if d < 1:
        return ValidationVerdict((Failure("shape", message="need at least one row"),))
    if n < d + 2:
        failures.append(Failure("shape", message=f"need n >= d + 2, got n={n}, d={d}"))
    if n < d:
        return ValidationVerdict(tuple(failures))
    dets = minor_dets(A, d)
    for cols, det in dets.items():
        if det == 0:
            failures.append(Failure("nonzero_minors", tuple(c + 1 for c in cols), 0, "minor vanishes"))
    for block in combinations(range(n), d + 1):
        g = gcd_all(dets[sub] for sub in combinations(block, d))
        if g != 1:
            failures.append(
                Failure("coprime_minors", tuple(c + 1 for c in block), g, f"gcd of minors is {g}")
            )
    factors = smith_normal_form(A).invariant_factors
    if any(s != 1 for s in factors):
        failures.append(
            Failure("surjective", message="invariant factors " + str(list(factors)) + " are not all 1")
        )
    return ValidationVerdict(tuple(failures))


@dataclass(frozen=True)
class WeightData:
    """Validated weight matrix A (d x n) with integer kernel basis B."""

    A: IntMatrix
    B: IntMatrix
    canonicalization: Optional[Canonicalization] = None
    raw: tuple = field(default=(), compare=False)

    @property
    def d(self) -> int:
        return self.A.rows

    @property
    def n(self) -> int:
        return self.A.cols

    @property
    def columns(self) -> list[tuple[int, ...]]:
        return self.A.columns()

    @property
    def weights(self) -> tuple[int, ...]:
        """The weight tuple when d = 1."""
        if self.d != 1:
            raise ValueError("weights tuple only exists for d = 1")
        return self.A.row(0)


WeightInput = Union[IntMatrix, Sequence[int], Sequence[Sequence[int]]]


def build(data: WeightInput) -> WeightData:
    """Validate weight data and attach the kernel basis.

    A flat sequence, or a single-row matrix, is treated as a weight tuple and
    canonicalized; larger matrices are used as given. Validation runs on the
    raw input so that failure witnesses use the caller's column numbers.
    """
    if isinstance(data, IntMatrix):
        A = data
    elif len(data) and all(isinstance(x, int) and not isinstance(x, bool) for x in data):
        A = IntMatrix.from_rows([list(data)])
    else:
        A = IntMatrix.from_rows(data)
    raw = tuple(map(tuple, A.to_rows()))
    record = None
    if A.rows == 1:
        weights, record = canonicalize_tuple(A.row(0))
        verdict = validate(A)
        A = IntMatrix.from_rows([weights])
    else:
        verdict = validate(A)
    if not verdict.ok:
        raise ValidationFailed(verdict)
    B = kernel_basis(A)
    assert (A @ B).is_zero() and B.cols == A.cols - A.rows
    return WeightData(A, B, record, raw)

