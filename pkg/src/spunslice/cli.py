"""Command-line interface.

Subcommands cover single-object utilities (validate, det, goeritz, pi1,
cover-h1, symunion, cobordism, slice-check, groups), the end-to-end
certificate (certify), figure output (render), and the batch determinant
regression (corpus).

Exit codes: 0 success / verified, 1 failed check or premise, 2 inconclusive
search, 3 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .certificate import (
    CertifyConfig,
    CertifyError,
    certificate_json,
    certify,
    format_certificate,
)
from .corpus import CorpusError, corpus_run, format_corpus_report, shipped_manifest_path
from .covers import (
    alexander_det,
    cobordism_linking_matrix,
    goeritz,
    goeritz_determinant,
    is_definite,
    surgery_description,
)
from .decker import criterion_report, spin_plat, symmetric_union_curve, trace_double_curve
from .diagrams import (
    PlatError,
    PlatWord,
    TwistVector,
    build_symmetric_union,
    chord_diagram_of_tangle,
    format_plat,
    parse_plat,
    plat_to_pd,
    validate_plat,
)
from .groups import (
    GroupError,
    abelianization,
    alternating_group,
    branched_cover_presentation,
    format_presentation,
    icosian_group,
    icosian_involution_lemma,
    iso_check,
    sl2_f5,
    structure_report,
    su2_obstruction,
    wirtinger,
)
from .render import render_chord_diagram, render_decker, render_pd, render_plat


class CliInputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are input errors (exit 3)
        raise CliInputError(message)


def _load_plat(path: str) -> PlatWord:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliInputError(f"cannot read plat file {path}: {exc}") from exc
    plat = parse_plat(text)
    validate_plat(plat)
    return plat


def _twist_vector(args) -> TwistVector | None:
    if args.twists is None:
        return None
    try:
        return TwistVector(tuple(int(t) for t in args.twists.split(",")))
    except ValueError:
        raise CliInputError(f"bad --twists value {args.twists!r}") from None


def _knot(args) -> PlatWord:
    plat = _load_plat(args.platfile)
    tv = _twist_vector(args)
    if tv is None:
        return plat
    return build_symmetric_union(plat, tv).knot


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommand bodies


def _cmd_validate(args) -> int:
    plat = _load_plat(args.platfile)
    diagram = validate_plat(plat)
    print(
        f"strands {plat.strands} letters {len(plat.word)} "
        f"bridges {plat.strands // 2} components {diagram.components}"
    )
    return 0


def _cmd_det(args) -> int:
    pd = plat_to_pd(_knot(args))
    det_g = goeritz_determinant(pd)
    det_a = alexander_det(pd)
    print(f"checkerboard {det_g} fox {det_a}")
    if det_g != det_a:
        print("MISMATCH between determinant routes")
        return 1
    print(f"determinant {det_g}")
    return 0


def _cmd_goeritz(args) -> int:
    pd = plat_to_pd(_knot(args))
    data = goeritz(pd)
    for row in data.matrix:
        print(" ".join(f"{v:4d}" for v in row))
    print(f"determinant {abs(data.determinant)}")
    return 0


def _cmd_slice_check(args) -> int:
    plat = _load_plat(args.platfile)
    tv = _twist_vector(args)
    ds = spin_plat(plat, m=args.resolution)
    if tv is None:
        curve = trace_double_curve(ds)
    else:
        curve = symmetric_union_curve(ds, tv)
    rep = criterion_report(ds, curve)
    print(f"circles {ds.l} resolution {ds.m} curve-vertices {len(curve.vertices)}")
    print(f"forward {rep.forward} reverse {rep.reverse}")
    print(f"verdict {rep.verdict}")
    return 0 if rep.verdict != "fail" else 1


def _cmd_symunion(args) -> int:
    plat = _load_plat(args.platfile)
    tv = _twist_vector(args)
    if tv is None:
        raise CliInputError("symunion requires --twists")
    su = build_symmetric_union(plat, tv)
    lines = [format_plat(su.knot).rstrip("\n")]
    for site in su.sites:
        lines.append(
            f"# band bridge {site.bridge} half-twists {site.half_twists} "
            f"letter-index {site.letter_index} columns {site.columns[0]},{site.columns[1]}"
        )
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_pi1(args) -> int:
    pres = wirtinger(plat_to_pd(_knot(args))).simplified()
    sys.stdout.write(format_presentation(pres))
    print(f"abelianization {abelianization(pres).describe()}")
    return 0


def _cmd_cover_h1(args) -> int:
    knot = _knot(args)
    pd = plat_to_pd(knot)
    pres = branched_cover_presentation(wirtinger(pd))
    inv = abelianization(pres)
    order = inv.order
    print(f"cover-h1 {inv.describe()}")
    print(f"cover-h1-order {order if order is not None else 'infinite'}")
    det = goeritz_determinant(pd)
    print(f"determinant {det}")
    if order != det:
        print("MISMATCH between cover homology and determinant")
        return 1
    return 0


def _cmd_cobordism(args) -> int:
    plat = _load_plat(args.platfile)
    tv = _twist_vector(args)
    if tv is None:
        raise CliInputError("cobordism requires --twists")
    su = build_symmetric_union(plat, tv)
    sd = surgery_description(su)
    for band in sd.bands:
        print(
            f"band bridge {band.bridge} framing {band.framing} "
            f"half-twists {band.half_twists} arcs {band.arcs[0]},{band.arcs[1]}"
        )
    matrix = cobordism_linking_matrix(sd)
    diag = [matrix[i][i] for i in range(len(matrix))]
    print("linking-diagonal " + (",".join(str(d) for d in diag) if diag else "-"))
    print(f"definiteness {is_definite(matrix)}")
    return 0


_GROUP_CHOICES = ("sl2f5", "a5", "icosian")


def _cmd_groups(args) -> int:
    names = args.names or list(_GROUP_CHOICES)
    for name in names:
        key = name.lower()
        if key == "sl2f5":
            G = sl2_f5()
        elif key == "a5":
            G = alternating_group(5)
        elif key == "icosian":
            G = icosian_group()
        else:
            raise CliInputError(f"unknown group {name!r} (choices: {', '.join(_GROUP_CHOICES)})")
        print(f"group {key}: {structure_report(G).describe()}")
        print(f"  su2 {su2_obstruction(G)}")
        if key == "icosian":
            print(f"  unique-involution {icosian_involution_lemma()}")
            print(f"  iso-to-sl2f5 {iso_check(G, sl2_f5()) is not None}")
    return 0


def _cmd_certify(args) -> int:
    plat = _load_plat(args.platfile)
    tv = _twist_vector(args)
    if tv is None:
        raise CliInputError("certify requires --twists")
    battery = tuple(args.battery.split(",")) if args.battery else CertifyConfig().battery
    cfg = CertifyConfig(
        resolution=args.resolution,
        max_cosets=args.max_cosets,
        battery=battery,
    )
    cert = certify(plat, tv, cfg)
    sys.stdout.write(format_certificate(cert, include_timing=args.timing))
    if args.out:
        Path(args.out).write_text(certificate_json(cert, include_timing=args.timing))
    return cert.exit_code


def _cmd_render(args) -> int:
    plat = _load_plat(args.platfile)
    tv = _twist_vector(args)
    kind = args.kind
    if kind == "chord":
        svg = render_chord_diagram(chord_diagram_of_tangle(plat))
    elif kind == "decker":
        ds = spin_plat(plat, m=args.resolution)
        curve = trace_double_curve(ds) if tv is None else symmetric_union_curve(ds, tv)
        svg = render_decker(ds, curve)
    elif kind == "plat":
        knot = plat if tv is None else build_symmetric_union(plat, tv).knot
        svg = render_plat(knot)
    elif kind == "pd":
        knot = plat if tv is None else build_symmetric_union(plat, tv).knot
        svg = render_pd(plat_to_pd(knot))
    else:  # argparse choices guard this
        raise CliInputError(f"unknown render kind {kind!r}")
    _emit(args, svg)
    return 0


def _cmd_corpus(args) -> int:
    manifest = Path(args.manifest) if args.manifest else shipped_manifest_path()
    report = corpus_run(manifest)
    sys.stdout.write(format_corpus_report(report))
    return report.exit_code


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--twists", help="comma-separated half-twist counts, one per bridge")
    common.add_argument("--battery", help="comma-separated finite-group battery (default S3,A4,S4,A5)")
    common.add_argument("--max-cosets", type=int, default=2_000_000, help="coset enumeration budget")
    common.add_argument("--resolution", type=int, default=24, help="longitudes per latitude circle")
    common.add_argument("--out", help="write primary output to this file")

    parser = _Parser(prog="spunslice", description=__doc__)
    parser.add_argument("--version", action="version", version=f"spunslice {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, *, platfile=True, extra=None):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if platfile:
            p.add_argument("platfile", help="plat word file")
        if extra:
            extra(p)
        p.set_defaults(func=func)
        return p

    add("validate", _cmd_validate, "check a plat word file")
    add("det", _cmd_det, "knot determinant along two independent routes")
    add("goeritz", _cmd_goeritz, "checkerboard form and its determinant")
    add("slice-check", _cmd_slice_check, "run the slice-curve side test on the doubled sphere")
    add("symunion", _cmd_symunion, "emit the twisted mirror double as a plat word")
    add("pi1", _cmd_pi1, "knot group presentation and abelianization")
    add("cover-h1", _cmd_cover_h1, "first homology of the branched double cover")
    add("cobordism", _cmd_cobordism, "surgery bands and linking form of the twist cobordism")
    add(
        "groups",
        _cmd_groups,
        "structure reports for the certificate's finite groups",
        platfile=False,
        extra=lambda p: p.add_argument("names", nargs="*", help="sl2f5 a5 icosian"),
    )
    add(
        "certify",
        _cmd_certify,
        "assemble the full embedding-obstruction certificate",
        extra=lambda p: p.add_argument(
            "--timing", action="store_true", help="include (nondeterministic) timing lines"
        ),
    )
    add(
        "render",
        _cmd_render,
        "draw a chord diagram, doubled sphere, plat ladder, or PD schematic",
        platfile=False,
        extra=lambda p: (
            p.add_argument("kind", choices=("chord", "decker", "plat", "pd")),
            p.add_argument("platfile", help="plat word file"),
        ),
    )
    add(
        "corpus",
        _cmd_corpus,
        "run the determinant regression manifest",
        platfile=False,
        extra=lambda p: p.add_argument(
            "manifest", nargs="?", help="manifest path (default: shipped corpus)"
        ),
    )
    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        return args.func(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (PlatError, CertifyError, CorpusError, GroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
