"""Command-line front end.

Subcommands: annihilator, rank-bound, monomial, certify, verify. Each run
prints a short human summary (or, with `--json -`, only the JSON report)
and exits 0 on success, 2 on parse errors, 3 on domain errors, 4 on
certificate failures. Field scalars are serialized as exact strings such
as "5/2"; JSON output is byte-stable across runs.
"""

import argparse
import json
import re
import sys

from . import __version__
from .annihilator import (
    GradedIdeal,
    hilbert_function,
    minimal_generators,
    verify_apolar_ideal,
)
from .errors import (
    ApolarError,
    CertificateFailedError,
    NoRootOfUnityError,
    ParseError,
)
from .fields import field_create, is_prime
from .poly import RING_S, ProjectivePoint, parse_form
from .ranks import (
    ci_degree,
    generator_degree_bound,
    monomial_apolar_ci,
    monomial_rank,
    monomial_rank_certificate,
    waring_fit,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_CERTIFICATE = 4

_VAR_INDEX = re.compile(r"[xy](\d+)")


def _infer_nvars(text: str, override):
    """Number of variables: highest index present plus one, unless the
    --nvars flag names a larger top index n (variables run x0..xn)."""
    indices = [int(m.group(1)) for m in _VAR_INDEX.finditer(text)]
    top = max(indices, default=0)
    if override is not None:
        if override < top:
            raise ParseError(
                f"--nvars {override} is smaller than the highest variable index {top}"
            )
        top = override
    return top + 1


def smallest_certificate_prime(m: int) -> int:
    """The smallest prime congruent to 1 mod m (so GF(p) has m-th roots)."""
    candidate = m + 1
    while True:
        if is_prime(candidate):
            return candidate
        candidate += m


def _serialize_report(report):
    return {
        "length": report.length,
        "max_generator_degree": report.max_gen_degree,
        "bound_exact": str(report.bound_exact),
        "bound_ceiling": report.bound_ceiling,
    }


def cmd_annihilator(args):
    field = field_create(args.field)
    nvars = _infer_nvars(args.form, args.nvars)
    F = parse_form(args.form, nvars, field)
    hilbert = hilbert_function(F)
    ideal = minimal_generators(F)
    results = {
        "form": str(F),
        "nvars": nvars,
        "hilbert_function": list(hilbert.values),
        "length": hilbert.length,
        "generators": [{"degree": g.degree, "form": str(g)} for g in ideal.generators],
    }
    summary = [
        f"F = {F}  over {field!r}",
        f"hilbert function: {list(hilbert.values)}",
        f"length of the annihilator quotient: {hilbert.length}",
        "minimal generators: " + ", ".join(str(g) for g in ideal.generators),
    ]
    return results, summary


def cmd_rank_bound(args):
    field = field_create(args.field)
    nvars = _infer_nvars(args.form, args.nvars)
    F = parse_form(args.form, nvars, field)
    report = generator_degree_bound(F)
    results = {"form": str(F), "nvars": nvars}
    results.update(_serialize_report(report))
    summary = [
        f"F = {F}  over {field!r}",
        f"length {report.length}, generated in degree {report.max_gen_degree}",
        f"cactus rank >= {report.bound_exact} (ceiling {report.bound_ceiling})",
    ]
    return results, summary


def cmd_monomial(args):
    field = field_create(args.field)
    try:
        exponents = [int(part) for part in args.exponents.split(",")]
    except ValueError as ex:
        raise ParseError(f"bad exponent list {args.exponents!r}") from ex
    data = monomial_rank(exponents)
    results = {
        "exponents": list(data.exponents),
        "cactus_rank": data.cactus_rank,
        "smoothable_rank": data.smoothable_rank,
        "waring_rank": data.waring_rank,
    }
    summary = [
        f"monomial exponents (sorted): {list(data.exponents)}",
        f"cactus rank = smoothable rank = {data.cactus_rank}",
    ]
    if data.waring_rank is not None:
        summary.append(f"waring rank = {data.waring_rank}")
    if len(data.exponents) >= 2:
        ideal = monomial_apolar_ci(data.exponents, field)
        ci = ci_degree(ideal)
        results["apolar_ideal"] = {
            "generators": [str(g) for g in ideal.generators],
            "degree": ci.degree,
        }
        summary.append(
            "apolar complete intersection: ("
            + ", ".join(str(g) for g in ideal.generators)
            + f"), degree {ci.degree}"
        )
    else:
        summary.append("single variable: the scheme is one point")
    return results, summary


def cmd_certify(args):
    field = field_create(args.field)
    try:
        certificate = monomial_rank_certificate(args.n, args.d, field)
    except NoRootOfUnityError as ex:
        hint = smallest_certificate_prime(args.d + 1)
        raise NoRootOfUnityError(f"{ex}; try --field Fp:{hint}") from ex
    dec = certificate.decomposition
    results = {
        "n": args.n,
        "d": args.d,
        "form": str(certificate.form),
        "rank": certificate.rank,
        "lower_bound": _serialize_report(certificate.lower_bound),
        "points": [p.format() for p in dec.points],
        "coefficients": [field.to_str(c) for c in dec.coefficients],
        "decomposition_kind": dec.kind,
        "notes": list(certificate.notes),
    }
    summary = [
        f"F = {certificate.form}  over {field!r}",
        f"certified rank: {certificate.rank}",
        f"lower bound {certificate.lower_bound.bound_exact} from generator degrees",
        f"decomposition over {len(dec.points)} points ({dec.kind})",
    ]
    summary.extend(certificate.notes)
    return results, summary


def _load_points(path, field):
    points = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.split("#", 1)[0].strip()
            if line:
                points.append(ProjectivePoint.parse(line, field))
    return points


def cmd_verify(args):
    field = field_create(args.field)
    nvars = _infer_nvars(args.form, args.nvars)
    F = parse_form(args.form, nvars, field)
    results = {"form": str(F), "nvars": nvars}
    summary = [f"F = {F}  over {field!r}"]
    if args.ideal is not None:
        generators = [
            parse_form(piece, nvars, field, ring=RING_S)
            for piece in args.ideal.split(";")
            if piece.strip()
        ]
        ideal = GradedIdeal(nvars, field, generators)
        apolar = verify_apolar_ideal(ideal, F)
        results["ideal"] = [str(g) for g in ideal.generators]
        results["apolar"] = apolar
        summary.append(
            "ideal (" + ", ".join(str(g) for g in ideal.generators) + ")"
        )
        summary.append(f"apolar to F: {apolar}")
    else:
        points = _load_points(args.points, field)
        if any(p.nvars != nvars for p in points):
            raise ApolarError("points do not match the number of variables")
        decomposition = waring_fit(F, points)
        results["points"] = [p.format() for p in points]
        results["apolar"] = decomposition is not None
        summary.append(f"{len(points)} points")
        if decomposition is not None:
            results["decomposition"] = {
                "coefficients": [field.to_str(c) for c in decomposition.coefficients],
                "kind": decomposition.kind,
            }
            summary.append("apolar to F: True, with power-sum decomposition")
        else:
            summary.append("apolar to F: False")
    return results, summary


def build_parser():
    parser = argparse.ArgumentParser(
        prog="apolar",
        description="Exact apolarity annihilators, Hilbert functions, and rank certificates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, form=True):
        p.add_argument("--field", default="QQ", help="coefficient field: QQ or Fp:<prime>")
        p.add_argument("--json", help="write the JSON report to this path ('-' for stdout)")
        if form:
            p.add_argument("--form", required=True, help="polynomial in x-variables")
            p.add_argument(
                "--nvars",
                type=int,
                help="highest variable index n (variables x0..xn); inferred by default",
            )

    p = sub.add_parser("annihilator", help="Hilbert function, length, minimal generators")
    common(p)
    p.set_defaults(handler=cmd_annihilator)

    p = sub.add_parser("rank-bound", help="cactus-rank lower bound from generator degrees")
    common(p)
    p.set_defaults(handler=cmd_rank_bound)

    p = sub.add_parser("monomial", help="closed-form monomial ranks and apolar scheme")
    common(p, form=False)
    p.add_argument("--exponents", required=True, help="comma-separated exponents, e.g. 1,2,3")
    p.set_defaults(handler=cmd_monomial)

    p = sub.add_parser("certify", help="machine-verified rank certificate for (x0*...*xn)^d")
    common(p, form=False)
    p.add_argument("-n", type=int, required=True, help="number of variables minus one")
    p.add_argument("-d", type=int, required=True, help="common exponent")
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser("verify", help="check apolarity of an ideal or a point set")
    common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--ideal", help="semicolon-separated dual-form generators, e.g. 'y0^2;y1^3'")
    group.add_argument("--points", help="file with one point per line, coordinates ':'-separated")
    p.set_defaults(handler=cmd_verify)

    return parser


def _emit(report, summary, args):
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    json_target = getattr(args, "json", None)
    if json_target == "-":
        sys.stdout.write(text)
        return
    for line in summary:
        print(line)
    if json_target:
        with open(json_target, "w", encoding="utf-8") as handle:
            handle.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = {
        "command": args.command,
        "version": __version__,
        "field": getattr(args, "field", "QQ"),
    }
    try:
        results, summary = args.handler(args)
    except ParseError as ex:
        code, error = EXIT_PARSE, ex
    except CertificateFailedError as ex:
        code, error = EXIT_CERTIFICATE, ex
    except ApolarError as ex:
        code, error = EXIT_DOMAIN, ex
    else:
        report["results"] = results
        _emit(report, summary, args)
        return EXIT_OK
    report["error"] = {"type": type(error).__name__, "message": str(error)}
    _emit(report, [f"error: {type(error).__name__}: {error}"], args)
    return code


if __name__ == "__main__":
    sys.exit(main())
