"""End-to-end embedding-obstruction certificates.

Given a plat word for a base knot K and an even twist vector, this module
assembles the obstruction argument for the twisted mirror double J.  The
slice-curve premise places the branched double cover of J inside an integer
homology 4-sphere (the cover of the spun sphere); the remaining premises
rule out the stronger configuration in which both complementary sides are
contractible, i.e. they obstruct J's cover from sitting the same way in any
homotopy 4-sphere.  The argument mixes two kinds of premises:

* machine-checked ones -- the slice-curve criterion, determinant-1 of J,
  definiteness of the twist cobordism, hom-count collapse evidence, the
  order-120 branched cover of the base knot with its quotient structure,
  and the unit-quaternion representability facts;
* cited analytic/algebraic inputs that are not desk-computable, carried as
  explicitly labeled axioms.

A certificate records every premise with its status and evidence, the
three-way case analysis on the image of the cobordism group in a
complementary homology ball, and a single final verdict.  Certificates
serialize to a line-oriented text report and to a versioned JSON document;
both are byte-deterministic for fixed input and configuration (timing data
is kept out of the deterministic forms).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Mapping

from .covers import (
    alexander_det,
    cobordism_linking_matrix,
    goeritz_determinant,
    is_definite,
    surgery_description,
)
from .decker import DEFAULT_RESOLUTION, criterion_report, spin_plat, symmetric_union_curve
from .diagrams import (
    PlatError,
    PlatWord,
    TwistVector,
    build_symmetric_union,
    plat_to_pd,
    validate_plat,
)
from .groups import (
    FiniteGroup,
    GroupError,
    abelianization,
    alternating_group,
    branched_cover_presentation,
    cobordism_presentation,
    collapse_check,
    cyclic_group,
    icosian_group,
    icosian_involution_lemma,
    iso_check,
    regular_representation,
    sl2_f5,
    structure_report,
    su2_obstruction,
    symmetric_group,
    todd_coxeter,
    wirtinger,
)
from .groups.homcount import DEFAULT_NODE_BUDGET
from .groups.toddcoxeter import DEFAULT_MAX_COSETS

SCHEMA_VERSION = 1

VERDICT_VERIFIED = "obstruction-premises-verified"

#: Machine-checked premises, in execution order.
CHECKED_PREMISES = (
    "slice-criterion",
    "homology-sphere",
    "definite-cobordism",
    "cobordism-collapse",
    "base-cover-binary-icosahedral",
    "quotient-structure",
    "su2-obstruction-cases",
)

#: Cited inputs.  This list is part of the certificate format: every
#: certificate carries exactly these four axiom records, and any change to
#: the list is a breaking format change.
AXIOMS = (
    "slice-criterion-geometric-conclusion",
    "taubes-definite-filling",
    "daemi-su2-obstruction",
    "amalgam-normal-form",
)

_AXIOM_EVIDENCE = {
    "slice-criterion-geometric-conclusion": {
        "statement": (
            "a separating curve on the doubled spun-sphere diagram whose "
            "double points satisfy the one-sided containment test is "
            "realized as an equatorial cross-section of the knotted "
            "sphere, so its branched double cover embeds in the branched "
            "double cover of the sphere, an integer homology 4-sphere"
        ),
        "reference": "geometric input; stated without machine proof",
    },
    "taubes-definite-filling": {
        "statement": (
            "an integer homology 3-sphere bounding a simply connected "
            "4-manifold with a nonstandard definite intersection form "
            "admits no simply connected definite filling of its connected "
            "sum with its own mirror"
        ),
        "reference": "Taubes, J. Differential Geom. 25 (1987) 363-430",
    },
    "daemi-su2-obstruction": {
        "statement": (
            "any definite 4-manifold bounded by that connected sum carries "
            "a nontrivial SU(2) representation of its fundamental group "
            "that restricts nontrivially to the boundary"
        ),
        "reference": (
            "Daemi, Chern-Simons functional and the homology cobordism "
            "group, Duke Math. J. 169 (2020)"
        ),
    },
    "amalgam-normal-form": {
        "statement": (
            "in a free product amalgamated over injective edge maps the "
            "factors embed into the amalgam, so an amalgam of nontrivial "
            "factors is nontrivial"
        ),
        "reference": "Lyndon & Schupp, Combinatorial Group Theory, ch. IV",
    },
}

#: Display order of premise records: machine checks interleaved with the
#: axioms at the point of the argument where each axiom is consumed.
RECORD_ORDER = (
    "slice-criterion",
    "slice-criterion-geometric-conclusion",
    "homology-sphere",
    "definite-cobordism",
    "cobordism-collapse",
    "base-cover-binary-icosahedral",
    "taubes-definite-filling",
    "daemi-su2-obstruction",
    "quotient-structure",
    "su2-obstruction-cases",
    "amalgam-normal-form",
)


class CertifyError(ValueError):
    """Invalid input to the certificate pipeline (CLI exit code 3)."""


def battery_group(name: str) -> FiniteGroup:
    """Resolve a battery group name (S3, A4, S4, A5, C<n>, SL2F5)."""
    key = name.strip().upper()
    if key.startswith("S") and key[1:].isdigit():
        return symmetric_group(int(key[1:]))
    if key.startswith("A") and key[1:].isdigit():
        return alternating_group(int(key[1:]))
    if key.startswith("C") and key[1:].isdigit():
        return cyclic_group(int(key[1:]))
    if key == "SL2F5":
        return sl2_f5()
    raise CertifyError(f"unknown battery group {name!r}")


DEFAULT_BATTERY = ("S3", "A4", "S4", "A5")


@dataclass(frozen=True)
class CertifyConfig:
    """Tunable search limits and the finite-quotient battery."""

    resolution: int = DEFAULT_RESOLUTION
    max_cosets: int = DEFAULT_MAX_COSETS
    node_budget: int = DEFAULT_NODE_BUDGET
    battery: tuple[str, ...] = DEFAULT_BATTERY

    def battery_groups(self) -> list[FiniteGroup]:
        return [battery_group(n) for n in self.battery]


@dataclass(frozen=True)
class PremiseRecord:
    """One premise of the argument.

    status is "checked" (machine-verified, green), "axiom" (cited input),
    "failed" (machine-verified red), "inconclusive" (a search budget was
    exhausted), or "skipped" (not evaluated because an earlier premise
    already decided the verdict).
    """

    name: str
    status: str
    evidence: Mapping[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class CaseRecord:
    """One branch of the case analysis on the image group."""

    name: str
    hypothesis: str
    resolution: str
    relies_on: tuple[str, ...]
    status: str  # "closed" when the branch ends in a contradiction


@dataclass(frozen=True)
class Certificate:
    schema: int
    tool_version: str
    plat: PlatWord
    tv: TwistVector
    config: CertifyConfig
    premises: tuple[PremiseRecord, ...]
    cases: tuple[CaseRecord, ...]
    case_basis: str  # premise that makes the case list exhaustive ("" if unset)
    verdict: str
    timing: Mapping[str, float]

    @property
    def exit_code(self) -> int:
        if self.verdict == VERDICT_VERIFIED:
            return 0
        if self.verdict.startswith("failed:"):
            return 1
        return 2

    def premise(self, name: str) -> PremiseRecord:
        for rec in self.premises:
            if rec.name == name:
                return rec
        raise KeyError(name)


# ---------------------------------------------------------------------------
# individual premise checks
#
# Each returns (status, evidence, payload) where payload carries data needed
# by later premises.  status is "checked" / "failed" / "inconclusive".


def _check_slice_criterion(plat: PlatWord, tv: TwistVector, cfg: CertifyConfig):
    ds = spin_plat(plat, m=cfg.resolution)
    curve = symmetric_union_curve(ds, tv)
    rep = criterion_report(ds, curve)
    evidence = {
        "verdict": rep.verdict,
        "passes-forward": rep.forward,
        "passes-reverse": rep.reverse,
        "double-point-circles": ds.l,
        "resolution": ds.m,
        "curve-vertices": len(curve.vertices),
    }
    status = "checked" if rep.verdict != "fail" else "failed"
    return status, evidence, None


def _check_homology_sphere(su, cfg: CertifyConfig):
    pd = plat_to_pd(su.knot)
    det_g = goeritz_determinant(pd)
    det_a = alexander_det(pd)
    evidence = {
        "goeritz-determinant": det_g,
        "alexander-determinant": det_a,
        "crossings": pd.n_crossings,
    }
    status = "checked" if det_g == 1 and det_a == 1 else "failed"
    return status, evidence, None


def _check_definite_cobordism(su, cfg: CertifyConfig):
    sd = surgery_description(su)
    matrix = cobordism_linking_matrix(sd)
    verdict = is_definite(matrix)
    diagonal = [matrix[i][i] for i in range(len(matrix))]
    unit = all(abs(d) == 1 for d in diagonal)
    evidence = {
        "bands": len(sd.bands),
        "framings": [b.framing for b in sd.bands],
        "linking-diagonal": diagonal,
        "definiteness": verdict,
    }
    status = "checked" if unit and verdict in ("positive", "negative", "empty") else "failed"
    return status, evidence, None


def _check_cobordism_collapse(su, base_pd, cfg: CertifyConfig):
    cob = cobordism_presentation(su)
    target = wirtinger(base_pd)
    report = collapse_check(cob, target, cfg.battery_groups(), node_budget=cfg.node_budget)
    evidence = {
        "verdict": report.verdict,
        "hom-counts": [
            {"group": name, "cobordism": a, "base-knot": b}
            for name, a, b in report.rows
        ],
    }
    status = {
        "consistent-collapse": "checked",
        "distinguished": "failed",
        "inconclusive": "inconclusive",
    }[report.verdict]
    return status, evidence, None


def _check_base_cover(base_pd, cfg: CertifyConfig):
    pres = branched_cover_presentation(wirtinger(base_pd))
    h1 = abelianization(pres)
    enum = todd_coxeter(pres, (), max_cosets=cfg.max_cosets)
    evidence: dict[str, object] = {
        "cover-h1": h1.describe(),
        "cosets-defined": enum.cosets_defined,
    }
    if not enum.complete:
        evidence["order"] = None
        return "inconclusive", evidence, None
    evidence["order"] = enum.index
    if enum.index != 120 or h1.order != 1:
        return "failed", evidence, None
    cover = FiniteGroup(regular_representation(enum), name="coverG")
    model = sl2_f5()
    found = iso_check(cover, model) is not None
    evidence["iso-to-sl2f5"] = found
    if not found:
        return "failed", evidence, None
    return "checked", evidence, cover


def _check_quotient_structure(cover: FiniteGroup, cfg: CertifyConfig):
    rep = structure_report(cover)
    a5 = alternating_group(5)
    a5_rep = structure_report(a5)
    proper = rep.quotients
    quotient_is_a5 = len(proper) == 1 and iso_check(proper[0][0], a5) is not None
    evidence = {
        "order": rep.order,
        "perfect": rep.perfect,
        "center-order": rep.center_order,
        "involutions": rep.involution_count,
        "normal-subgroup-orders": list(rep.normal_subgroup_orders),
        "proper-nontrivial-quotients": [q.order for q, _ in proper],
        "quotient-is-a5": quotient_is_a5,
        "a5-simple": a5_rep.simple,
        "a5-involutions": a5_rep.involution_count,
    }
    ok = (
        rep.order == 120
        and rep.perfect
        and rep.center_order == 2
        and rep.involution_count == 1
        and rep.normal_subgroup_orders == (1, 2, 120)
        and quotient_is_a5
        and a5_rep.simple
        and a5_rep.involution_count == 15
    )
    return ("checked" if ok else "failed"), evidence, (a5 if ok else None)


def _check_su2_cases(cover: FiniteGroup, a5: FiniteGroup, cfg: CertifyConfig):
    verdict_a5 = su2_obstruction(a5)
    verdict_cover = su2_obstruction(cover)
    lemma = icosian_involution_lemma()
    quaternion_model = icosian_group()
    embeds = iso_check(quaternion_model, cover) is not None
    evidence = {
        "a5-su2": verdict_a5,
        "cover-su2": verdict_cover,
        "unique-involution-in-unit-quaternions": lemma,
        "icosian-order": quaternion_model.order,
        "icosian-iso-to-cover": embeds,
    }
    ok = (
        verdict_a5 == "no-nontrivial-rep"
        and verdict_cover == "embeds-possible"
        and lemma
        and embeds
    )
    return ("checked" if ok else "failed"), evidence, None


def _case_records() -> tuple[CaseRecord, ...]:
    return (
        CaseRecord(
            name="case-1-trivial-image",
            hypothesis=(
                "the cobordism group maps to the trivial group inside a "
                "complementary homology ball's filling"
            ),
            resolution=(
                "that filling is then a definite manifold with trivial "
                "fundamental group (the image normally generates it), so "
                "it carries no nontrivial representation at all, against "
                "the representation the cited obstruction guarantees"
            ),
            relies_on=("definite-cobordism", "daemi-su2-obstruction"),
            status="closed",
        ),
        CaseRecord(
            name="case-2-simple-image",
            hypothesis="the image is the order-60 simple quotient",
            resolution=(
                "the machine checks show that quotient is simple with 15 "
                "involutions, hence admits no nontrivial unit-quaternion "
                "representation; a representation extending nontrivially "
                "from the boundary would restrict nontrivially to the "
                "image, a contradiction"
            ),
            relies_on=(
                "quotient-structure",
                "su2-obstruction-cases",
                "daemi-su2-obstruction",
            ),
            status="closed",
        ),
        CaseRecord(
            name="case-3-full-image",
            hypothesis="both images are the full order-120 cover group",
            resolution=(
                "both legs of the two fillings' pushout are then injective, "
                "so the pushout is nontrivial by the amalgam normal form; "
                "but gluing both complementary balls rebuilds a simply "
                "connected space, a contradiction"
            ),
            relies_on=("quotient-structure", "amalgam-normal-form"),
            status="closed",
        ),
    )


# ---------------------------------------------------------------------------
# orchestration


def certify(plat: PlatWord, tv: TwistVector, config: CertifyConfig | None = None) -> Certificate:
    """Run every premise in order and fold the results into a Certificate.

    The verdict is "obstruction-premises-verified" exactly when all seven
    machine premises come back green; the first red premise yields
    "failed: <name>" and the first exhausted search yields
    "inconclusive: <name>".  Later machine premises are recorded as
    skipped once the verdict is decided.  Invalid input raises
    CertifyError instead of producing a certificate.
    """
    from . import __version__

    cfg = config or CertifyConfig()
    if cfg.resolution < 4 or cfg.resolution % 2:
        raise CertifyError("resolution must be an even integer >= 4")
    if not isinstance(tv, TwistVector):
        tv = TwistVector(tuple(tv))
    try:
        diagram = validate_plat(plat)
        if diagram.components != 1:
            raise CertifyError("plat closure must be a knot, not a link")
        tv.require_even()
        su = build_symmetric_union(plat, tv)
        cfg.battery_groups()
    except (PlatError, GroupError) as exc:
        raise CertifyError(str(exc)) from exc

    base_pd = plat_to_pd(plat)
    timing: dict[str, float] = {}
    results: dict[str, PremiseRecord] = {}
    payloads: dict[str, object] = {}
    decided: str | None = None

    def run(name: str, thunk):
        nonlocal decided
        if decided is not None:
            results[name] = PremiseRecord(name, "skipped", {"reason": decided})
            return
        start = time.perf_counter()
        status, evidence, payload = thunk()
        timing[name] = time.perf_counter() - start
        results[name] = PremiseRecord(name, status, evidence)
        payloads[name] = payload
        if status == "failed":
            decided = f"failed: {name}"
        elif status == "inconclusive":
            decided = f"inconclusive: {name}"

    run("slice-criterion", lambda: _check_slice_criterion(plat, tv, cfg))
    run("homology-sphere", lambda: _check_homology_sphere(su, cfg))
    run("definite-cobordism", lambda: _check_definite_cobordism(su, cfg))
    run("cobordism-collapse", lambda: _check_cobordism_collapse(su, base_pd, cfg))
    run("base-cover-binary-icosahedral", lambda: _check_base_cover(base_pd, cfg))
    run(
        "quotient-structure",
        lambda: _check_quotient_structure(payloads["base-cover-binary-icosahedral"], cfg),
    )
    run(
        "su2-obstruction-cases",
        lambda: _check_su2_cases(
            payloads["base-cover-binary-icosahedral"],
            payloads["quotient-structure"],
            cfg,
        ),
    )

    for name in AXIOMS:
        results[name] = PremiseRecord(name, "axiom", dict(_AXIOM_EVIDENCE[name]))

    if decided is None:
        verdict = VERDICT_VERIFIED
        cases = _case_records()
        case_basis = "quotient-structure"
    else:
        verdict = decided
        cases = ()
        case_basis = ""

    return Certificate(
        schema=SCHEMA_VERSION,
        tool_version=__version__,
        plat=plat,
        tv=tv,
        config=cfg,
        premises=tuple(results[name] for name in RECORD_ORDER),
        cases=cases,
        case_basis=case_basis,
        verdict=verdict,
        timing=timing,
    )


# ---------------------------------------------------------------------------
# serialization


def _json_safe(value):
    if isinstance(value, Mapping):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return round(value, 6)
    return str(value)


def certificate_dict(cert: Certificate, include_timing: bool = False) -> dict:
    """A JSON-ready dict.  Timing is opt-in so the default bytes are
    deterministic for fixed input, configuration, and tool version."""
    doc = {
        "schema": cert.schema,
        "tool": {"name": "spunslice", "version": cert.tool_version},
        "input": {
            "plat": {
                "strands": cert.plat.strands,
                "word": [[k, s] for k, s in cert.plat.word],
            },
            "twists": list(cert.tv),
        },
        "config": {
            "resolution": cert.config.resolution,
            "max-cosets": cert.config.max_cosets,
            "node-budget": cert.config.node_budget,
            "battery": list(cert.config.battery),
        },
        "premises": [
            {"name": p.name, "status": p.status, "evidence": _json_safe(p.evidence)}
            for p in cert.premises
        ],
        "case-basis": cert.case_basis,
        "cases": [
            {
                "name": c.name,
                "hypothesis": c.hypothesis,
                "resolution": c.resolution,
                "relies-on": list(c.relies_on),
                "status": c.status,
            }
            for c in cert.cases
        ],
        "verdict": cert.verdict,
    }
    if include_timing:
        doc["timing"] = {k: round(v, 3) for k, v in cert.timing.items()}
    return doc


def certificate_json(cert: Certificate, include_timing: bool = False) -> str:
    doc = certificate_dict(cert, include_timing=include_timing)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _flat(value) -> str:
    value = _json_safe(value)
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def format_certificate(cert: Certificate, include_timing: bool = False) -> str:
    """Line-oriented human-readable report, deterministic by default."""
    lines = [
        f"certificate schema {cert.schema}",
        f"tool spunslice {cert.tool_version}",
        f"plat strands {cert.plat.strands} letters "
        + (" ".join(f"{k}{'+' if s == 1 else '-'}" for k, s in cert.plat.word) or "-"),
        "twists " + (",".join(str(t) for t in cert.tv) or "-"),
        f"config resolution {cert.config.resolution} max-cosets {cert.config.max_cosets}"
        f" node-budget {cert.config.node_budget} battery {','.join(cert.config.battery)}",
    ]
    for p in cert.premises:
        lines.append(f"premise {p.name} {p.status}")
        for key in sorted(p.evidence):
            lines.append(f"  {key} {_flat(p.evidence[key])}")
    if cert.cases:
        lines.append(f"cases exhaustive-by {cert.case_basis}")
        for c in cert.cases:
            lines.append(f"case {c.name} {c.status} relies-on {','.join(c.relies_on)}")
            lines.append(f"  given {c.hypothesis}")
            lines.append(f"  then {c.resolution}")
    if include_timing:
        for name in sorted(cert.timing):
            lines.append(f"timing {name} {cert.timing[name]:.3f}s")
        lines.append(f"timing total {sum(cert.timing.values()):.3f}s")
    lines.append(f"verdict {cert.verdict}")
    return "\n".join(lines) + "\n"
