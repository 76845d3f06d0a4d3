"""Certificates and full analysis reports."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Optional, Union

from .chambers import chambers, exceptional_fiber
from .invariants import footnote_relation, grading, hilbert_basis
from .lattice import smith_normal_form
from .moment import sample_point, singular_strata, zero_fiber_dimension
from .orbits import census, origin_in_orbit_closure, stabilizer
from .patterns import SupportPattern, all_patterns
from .torus import WeightData, WeightDataError, build

SCHEMA_VERSION = 1
CENSUS_MAX_N = 6

MILNOR = "J. Milnor, Singular points of complex hypersurfaces (1968), Thm 5.2"
HAMM_LE = "H. Hamm and Le D.T., Rectified homotopical depth and Grothendieck conjectures (1990), Cor 3.2.2"
BEAUVILLE = "A. Beauville, Symplectic singularities, Invent. Math. 139 (2000)"


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class CertificateStep:
    name: str
    claim: str
    role: str  # "computed" or "premise"
    citation: str
    passed: Optional[bool]  # None for premises

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "role": self.role,
            "citation": self.citation,
            "passed": self.passed,
        }


def _computed(name, claim, ok, citation="computed here") -> CertificateStep:
    return CertificateStep(name, claim, "computed", citation, bool(ok))


def _premise(name, claim, citation) -> CertificateStep:
    return CertificateStep(name, claim, "premise", citation, None)


def _generic_one_ps(wd: WeightData) -> tuple[int, ...]:
    # (1, M, M^2, ...) misses every hyperplane <a_i, lam> = 0 once M exceeds
    # the Cauchy bound 1 + max|a_ij|
    M = 1 + max(abs(e) for e in wd.A.entries)
    return tuple(M**k for k in range(wd.d))


def _free_off_fiber(wd: WeightData) -> bool:
    """Every point of mu^{-1}(0) outside the null fiber has trivial stabilizer.

    Blocks of d + 1 columns generate Z^d, which settles |I(p)| > d; the
    remaining patterns have at most d active indices and are checked one by one.
    """
    for block in combinations(range(wd.n), wd.d + 1):
        if any(s != 1 for s in smith_normal_form(wd.A.select_columns(block)).invariant_factors):
            return False
    for p in all_patterns(wd.n):
        if len(p.active) > wd.d or sample_point(wd, p) is None:
            continue
        if not origin_in_orbit_closure(wd, p)[0] and not stabilizer(wd, p).trivial:
            return False
    return True


def pi1_certificate(wd: WeightData) -> tuple[CertificateStep, ...]:
    """Exact inequalities and labelled premises giving pi_1(Y(A,0)_reg) = 1."""
    n, d = wd.n, wd.d
    steps = []
    steps.append(_computed("intake", f"n - d = {n - d} >= 2", n - d >= 2))

    dim_mu = zero_fiber_dimension(wd)
    steps.append(_computed(
        "zero_fiber_dimension",
        f"dim mu^-1(0) = 2n - rank A = {dim_mu} = 2n - d >= 3, cut out by d = {d} quadrics "
        "(complete intersection)",
        dim_mu == 2 * n - d and dim_mu >= 3,
    ))

    sing = singular_strata(wd)
    if d == 1:
        steps.append(_computed(
            "isolated_hypersurface",
            f"Sing(mu^-1(0)) = origin (dimension {sing.dimension}); hypersurface of dimension "
            f"{dim_mu} >= 3",
            sing.dimension == 0 and len(sing.strata) == 1 and dim_mu >= 3,
        ))
        steps.append(_premise(
            "milnor_local_pi1",
            "an isolated hypersurface singularity of dimension >= 3 has trivial local "
            "fundamental group",
            MILNOR,
        ))
    else:
        codim = dim_mu - sing.dimension
        steps.append(_computed(
            "singular_codimension",
            f"codim Sing(mu^-1(0)) = {dim_mu} - {sing.dimension} = {codim} = 2(n-d)+1 >= 5",
            codim == 2 * (n - d) + 1 and codim >= 5,
        ))
        steps.append(_premise(
            "homotopical_depth",
            "a local complete intersection has rectified homotopical depth equal to its "
            "dimension, so removing a singular locus of codimension >= 3 keeps pi_1",
            HAMM_LE,
        ))
    steps.append(_premise(
        "scaling_contraction",
        "the scaling action t.(z, w) = (tz, tw) retracts mu^-1(0) onto a small contractible "
        "neighbourhood of the origin",
        "standard (conical affine variety)",
    ))

    lam = _generic_one_ps(wd)
    fiber_pattern = SupportPattern.from_sets(
        n,
        z=[i for i, c in enumerate(wd.columns) if sum(a * b for a, b in zip(c, lam)) > 0],
        w=[i for i, c in enumerate(wd.columns) if sum(a * b for a, b in zip(c, lam)) < 0],
    )
    in_fiber, _ = origin_in_orbit_closure(wd, fiber_pattern)
    fiber_dim = n if in_fiber and len(fiber_pattern.active) == n else None
    label = "codim(F u G)" if d == 1 else "codim pi^-1(0)"
    steps.append(_computed(
        "null_fiber_codimension",
        f"pi^-1(0) lies in {{z_i w_i = 0 for all i}} of dimension n = {n} and contains the "
        f"n-dimensional stratum {fiber_pattern} (1-PS {list(lam)}); "
        f"{label} = {dim_mu} - {n} = {dim_mu - n} >= 2",
        fiber_dim == n and dim_mu - n == n - d and n - d >= 2,
    ))
    steps.append(_computed(
        "free_action_off_null_fiber",
        "every stabilizer outside pi^-1(0) is trivial",
        _free_off_fiber(wd),
    ))
    steps.append(_premise(
        "torus_bundle_surjection",
        "off the null fiber the quotient map is a principal torus bundle, which is surjective "
        "on pi_1",
        "long exact homotopy sequence of a fibration",
    ))
    steps.append(_premise(
        "symplectic_singularities",
        "Y(A,alpha) for generic alpha has symplectic quotient singularities, hence so does Y(A,0)",
        BEAUVILLE,
    ))
    issued = all(s.passed for s in steps if s.role == "computed")
    steps.append(_computed(
        "conclusion",
        "pi_1(Y(A,0)_reg) = 1 given the premises above",
        issued,
        "all computed steps",
    ))
    return tuple(steps)


def certificate_issued(steps) -> bool:
    return all(s.passed for s in steps if s.role == "computed")


# -- input documents ---------------------------------------------------------

def _int_list(x, what) -> list[int]:
    if not isinstance(x, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in x):
        raise ParseError(f"{what} must be an array of integers")
    return x


def parse_document(doc: Union[str, bytes, dict]) -> dict:
    """Check the input schema: exactly one of "a" (integer array) or "A"
    (array of equal-length integer arrays)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("input must be a JSON object")
    keys = set(doc) & {"a", "A"}
    if len(keys) != 1 or set(doc) - keys:
        raise ParseError('input must have exactly one key, "a" or "A"')
    if "a" in doc:
        return {"a": _int_list(doc["a"], '"a"')}
    A = doc["A"]
    if not isinstance(A, list) or not A:
        raise ParseError('"A" must be a non-empty array of rows')
    rows = [_int_list(r, "each row of A") for r in A]
    if len({len(r) for r in rows}) != 1 or not rows[0]:
        raise ParseError('rows of "A" must be non-empty and of equal length')
    return {"A": rows}


def weight_data(doc) -> WeightData:
    parsed = parse_document(doc)
    return build(parsed["a"] if "a" in parsed else parsed["A"])


# -- reports -----------------------------------------------------------------

@dataclass
class AnalysisReport:
    input: dict
    validation: dict
    dimensions: dict = field(default_factory=dict)
    generators: list = field(default_factory=list)
    grading: dict = field(default_factory=dict)
    chambers: dict = field(default_factory=dict)
    fibers: dict = field(default_factory=dict)
    stabilizers: Optional[dict] = None
    relation: Optional[str] = None
    pi1_certificate: list = field(default_factory=list)
    remarks: list = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "input": self.input,
            "validation": self.validation,
            "dimensions": self.dimensions,
            "generators": self.generators,
            "grading": self.grading,
            "chambers": self.chambers,
            "fibers": self.fibers,
            "stabilizers": self.stabilizers,
            "relation": self.relation,
            "pi1_certificate": self.pi1_certificate,
            "remarks": self.remarks,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @property
    def certified(self) -> bool:
        return bool(self.pi1_certificate) and all(
            s["passed"] for s in self.pi1_certificate if s["role"] == "computed"
        )

    def to_text(self) -> str:
        return render_text(self.to_dict())


def analyze(doc, safety_cap: int = 64, jobs: int = 1) -> AnalysisReport:
    """Run every computation on one input document.

    Raises :class:`ParseError` for malformed input and
    :class:`~hypertoric.torus.ValidationFailed` when the hypotheses fail.
    """
    parsed = parse_document(doc)
    wd = build(parsed["a"] if "a" in parsed else parsed["A"])
    n, d = wd.n, wd.d
    echo = dict(parsed)
    echo["canonical_A"] = wd.A.to_rows()
    echo["canonicalization"] = wd.canonicalization.to_dict() if wd.canonicalization else None

    dim_mu = zero_fiber_dimension(wd)
    sing = singular_strata(wd)
    basis = hilbert_basis(wd, safety_cap)
    grad = grading(wd, basis)
    ch = chambers(wd)
    steps = pi1_certificate(wd)

    rep = AnalysisReport(input=echo, validation={"ok": True, "failures": []})
    rep.dimensions = {
        "n": n,
        "d": d,
        "Y": dim_mu - d,
        "mu_fiber": dim_mu,
        "sing": sing.dimension,
        "sing_strata": len(sing.strata),
        "codims": {
            "sing_in_mu_fiber": dim_mu - sing.dimension,
            "null_fiber_in_mu_fiber": dim_mu - n,
        },
    }
    rep.generators = [
        {"u": list(m.u), "v": list(m.v), "weight": w, "monomial": str(m)}
        for m, w in grad.generator_weights
    ]
    rep.grading = {
        "weights": list(grad.weight_set),
        "maximal_weight": grad.maximal_weight,
        "half_gradable": grad.half_gradable,
        "half_maximal_weight": grad.half_maximal_weight,
        "omega_weight": grad.omega_weight,
    }
    rep.chambers = {
        "count": ch.count,
        "enumerated": ch.enumerated,
        "samples": [list(c.sample) for c in ch.chambers] if ch.enumerated else None,
        "walls": [list(w) for w in ch.walls],
    }
    if d == 1:
        rep.fibers = {"plus": str(exceptional_fiber(wd, "+")), "minus": str(exceptional_fiber(wd, "-"))}
        rep.relation = str(footnote_relation(wd))
    else:
        rep.fibers = {"plus": None, "minus": None}
    if n <= CENSUS_MAX_N:
        rep.stabilizers = census(wd, jobs)
    rep.pi1_certificate = [s.to_dict() for s in steps]
    rep.remarks = _remarks(wd)
    return rep


def _remarks(wd: WeightData) -> list[str]:
    d = wd.d
    out = [
        "Y(A,0) is not Q-factorial: it has nontrivial projective Q-factorial terminalizations "
        "Y(A,alpha) -> Y(A,0) for generic alpha.",
        "The generator table is the Hilbert basis of the invariant monoid. Modulo the "
        "moment-map relations (one per row of A) among the diagonal generators z_i w_i, "
        f"{d} of them are redundant, so the list generates the coordinate ring but is not minimal.",
        "The null-fiber codimension uses dim pi^-1(0) <= dim {z_i w_i = 0 for all i} = n.",
        "Maximal weight is reported for the scaling grading and, when every generator weight is "
        "even, for the halved grading; other conical gradings are not explored.",
    ]
    if d == 1:
        out.append(
            "The two chambers m(alpha) > 0 and m(alpha) < 0 give the two Q-factorial "
            "terminalizations; both exceptional fibers are P(a_1,...,a_n)."
        )
    else:
        out.append("Chambers are not matched with Q-factorial terminalizations for d >= 2.")
    return out


def render_text(data: dict) -> str:
    lines = []
    inp = data["input"]
    src = f"a = {inp['a']}" if "a" in inp else f"A = {inp['A']}"
    lines.append(f"input: {src}")
    lines.append(f"canonical A: {inp['canonical_A']}")
    dims = data["dimensions"]
    lines.append(f"n = {dims['n']}, d = {dims['d']}")
    lines.append(f"dim Y(A,0) = {dims['Y']}")
    lines.append(f"dim mu^-1(0) = {dims['mu_fiber']}")
    lines.append(f"dim Sing(mu^-1(0)) = {dims['sing']} ({dims['sing_strata']} strata)")
    for k, v in dims["codims"].items():
        lines.append(f"codim {k} = {v}")
    g = data["grading"]
    lines.append(f"generators: {len(data['generators'])}, weights {g['weights']}, "
                 f"maximal weight {g['maximal_weight']}")
    if g["half_gradable"]:
        lines.append(f"half grading: maximal weight {g['half_maximal_weight']}, "
                     f"omega weight {g['omega_weight']}")
    else:
        lines.append("half grading: not available (odd weights present)")
    for gen in data["generators"]:
        lines.append(f"  {gen['monomial']:<24} weight {gen['weight']}")
    if data["relation"]:
        lines.append(f"relation: {data['relation']}")
    ch = data["chambers"]
    lines.append(f"chambers: {ch['count'] if ch['enumerated'] else 'not enumerated'}"
                 f" ({len(ch['walls'])} walls)")
    if data["fibers"]["plus"]:
        lines.append(f"exceptional fibers: + {data['fibers']['plus']}, - {data['fibers']['minus']}")
    if data["stabilizers"]:
        lines.append("stabilizer census: " + ", ".join(f"{k} {v}" for k, v in data["stabilizers"].items()))
    lines.append("pi_1 certificate:")
    for s in data["pi1_certificate"]:
        mark = "assume" if s["role"] == "premise" else ("ok" if s["passed"] else "FAIL")
        lines.append(f"  [{mark:>6}] {s['name']}: {s['claim']}")
        if s["role"] == "premise":
            lines.append(f"           ({s['citation']})")
    lines.append("remarks:")
    lines += [f"  - {r}" for r in data["remarks"]]
    return "\n".join(lines) + "\n"


__all__ = [
    "AnalysisReport",
    "CertificateStep",
    "ParseError",
    "WeightDataError",
    "analyze",
    "certificate_issued",
    "parse_document",
    "pi1_certificate",
    "render_text",
    "weight_data",
]
