"""Command-line front end.

Exit status: 0 success / HOLDS, 1 property fails, 2 INDETERMINATE,
3 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import presets
from .errors import InputError, PreconditionError
from .lattice import image_lattice
from .linalg import IntMat, gcd_maximal_minors, hnf, kernel_basis
from .poly import Poly, parse_poly
from .stci import (
    StciCertificate,
    certificate_from_text,
    curve_46_certificate,
    curve_ab_certificate,
    power_family_certificate,
    verify_certificate,
)
from .toric import FAILS, HOLDS, FalsifierConfig, is_projection, presentation, radical_criterion

EXIT_OK, EXIT_FAIL, EXIT_INDETERMINATE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _bundled_matrices() -> dict[str, IntMat]:
    ex55 = presets.ex55_data()
    rem = presets.rem33_case()
    return {
        "ex55-N": IntMat.from_json(ex55["N"]),
        "ex55-M": IntMat.from_json(ex55["M"]),
        "rem33-N": presets.rem33_matrix_N(),
        "rem33-M": rem.m,
        "rem33-D": rem.n,
        "id2": IntMat.identity(2),
    }


def _read_source(src: str, field: str):
    """Inline JSON, a path to a JSON file, or None if neither."""
    s = src.strip()
    if s[:1] in "{[":
        try:
            return json.loads(s)
        except json.JSONDecodeError as exc:
            raise InputError(f"--{field}: invalid inline JSON ({exc})") from None
    p = Path(src)
    if p.is_file():
        try:
            return json.loads(p.read_text())
        except json.JSONDecodeError as exc:
            raise InputError(f"--{field}: {p} is not valid JSON ({exc})") from None
    return None


def load_matrix(src: str, field: str = "matrix") -> IntMat:
    obj = _read_source(src, field)
    if obj is None:
        name = Path(src).name
        name = name[:-5] if name.endswith(".json") else name
        bundled = _bundled_matrices()
        if name in bundled:
            return bundled[name]
        raise InputError(f"--{field}: {src!r} is neither JSON, a readable file, nor one of {sorted(bundled)}")
    try:
        if isinstance(obj, list):
            return IntMat.from_rows(obj)
        return IntMat.from_json(obj)
    except InputError as exc:
        raise InputError(f"--{field}: {exc}") from None


def load_polys(src: str, nvars: int, field: str) -> list[Poly]:
    obj = _read_source(src, field)
    if obj is None:
        items = [t for t in src.split(";") if t.strip()]
    else:
        items = obj if isinstance(obj, list) else obj.get("polys", [])
    out = []
    for j, it in enumerate(items):
        try:
            out.append(parse_poly(it, nvars) if isinstance(it, str) else Poly.from_json(it))
        except InputError as exc:
            raise InputError(f"--{field}[{j}]: {exc}") from None
    return out


def _emit(obj, args):
    text = json.dumps(obj, indent=2)
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def cmd_kernel(args):
    m = load_matrix(args.matrix)
    _emit(kernel_basis(m).to_json(), args)
    return EXIT_OK


def cmd_hnf(args):
    _emit(hnf(load_matrix(args.matrix)).to_json(), args)
    return EXIT_OK


def cmd_minors(args):
    m = load_matrix(args.matrix)
    _emit({"rows": str(m.rows), "cols": str(m.cols), "gcd": str(gcd_maximal_minors(m))}, args)
    return EXIT_OK


def cmd_height(args):
    pres = presentation(load_matrix(args.matrix))
    _emit({"height": str(pres.height), "kernel": pres.kernel.to_json()}, args)
    return EXIT_OK


def cmd_project(args):
    rep = is_projection(load_matrix(args.n, "n"), load_matrix(args.m, "m"))
    _emit(rep.to_json(), args)
    return EXIT_OK if rep.holds else EXIT_FAIL


def cmd_image_lattice(args):
    _emit(image_lattice(load_matrix(args.n, "n"), load_matrix(args.m, "m")).to_json(), args)
    return EXIT_OK


def _criterion_case(args):
    if args.example:
        if args.example == "ex46":
            if args.a is None:
                raise InputError("--example ex46 needs --a")
            d_case, n_case = presets.ex46_cases(args.a)
            return n_case if args.projection == "N" else d_case
        if args.example == "rem33":
            return presets.rem33_case()
        raise InputError(f"--example {args.example!r} has no criterion data; use ex46 or rem33")
    if not (args.n and args.m and args.fs and args.gens_im):
        raise InputError("criterion needs --n, --m, --gens-im and --fs (or --example)")
    n = load_matrix(args.n, "n")
    m = load_matrix(args.m, "m")
    return presets.CriterionCase("custom", n, m,
                                 tuple(load_polys(args.gens_im, m.cols, "gens-im")),
                                 tuple(load_polys(args.fs, m.cols, "fs")))


def cmd_criterion(args):
    case = _criterion_case(args)
    cfg = FalsifierConfig(seed=args.seed)
    if args.primes:
        cfg.primes = tuple(int(p) for p in args.primes.split(","))
    if args.budget is not None:
        cfg.budget = args.budget
    if args.samples is not None:
        cfg.samples = args.samples
    rep = radical_criterion(case.n, case.m, case.gens_im, case.fs, args.char, cfg)
    out = rep.to_json()
    out["case"] = case.name
    _emit(out, args)
    return {HOLDS: EXIT_OK, FAILS: EXIT_FAIL}.get(rep.overall, EXIT_INDETERMINATE)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def build_certificate(args) -> StciCertificate:
    family = args.family or ("ex55" if args.example == "ex55" else None)
    if args.example == "ex46":
        if args.a is None:
            raise InputError("--example ex46 needs --a")
        family = "thm63"
    if family is None:
        raise InputError("stci needs --family or --example ex55")
    if family == "thm61":
        if args.m is None or args.d is None or args.c is None:
            raise InputError("--family thm61 needs --m, --d and --c")
        extra = load_polys(args.base_gens, args.m + args.d, "base-gens") if args.base_gens else ()
        return power_family_certificate(args.m, args.d, _ints(args.c), extra)
    if family == "thm62":
        if args.a is None or args.b is None:
            raise InputError("--family thm62 needs --a and --b")
        return curve_ab_certificate(args.a, args.b)
    if family == "thm63":
        if args.a is None:
            raise InputError("--family thm63 needs --a")
        return curve_46_certificate(args.a)
    if family == "ex55":
        return presets.ex55_certificate()
    raise InputError(f"unknown family {family!r}")


def cmd_stci(args):
    cert = build_certificate(args)
    tr = verify_certificate(cert) if args.verify else None
    _emit(cert.to_json(tr), args)
    if tr is not None:
        print(str(tr), file=sys.stderr)
        return EXIT_OK if tr.passed else EXIT_FAIL
    return EXIT_OK


def cmd_verify(args):
    src = Path(args.cert)
    if not src.is_file():
        raise InputError(f"--cert: cannot read {args.cert}")
    cert = certificate_from_text(src.read_text())
    tr = verify_certificate(cert)
    _emit({"transcript": tr.to_json()}, args)
    print(str(tr), file=sys.stderr)
    return EXIT_OK if tr.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="toricproj", description="Projections of toric ideals and STCI certificates.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--out", help="write JSON here instead of stdout")
        return sp

    for verb, fn, helptext in (("kernel", cmd_kernel, "canonical basis of ker_Z(matrix)"),
                               ("hnf", cmd_hnf, "Hermite normal form of the row lattice"),
                               ("minors", cmd_minors, "gcd of maximal minors"),
                               ("height", cmd_height, "height of the toric ideal")):
        sp = common(sub.add_parser(verb, help=helptext))
        sp.add_argument("--matrix", required=True)
        sp.set_defaults(func=fn)

    for verb, fn, helptext in (("project", cmd_project, "is ker_Z(N) inside ker_Z(M)? gives D with DN = M"),
                               ("image-lattice", cmd_image_lattice, "image of ker_Z(M) under the map given by N")):
        sp = common(sub.add_parser(verb, help=helptext))
        sp.add_argument("--n", required=True)
        sp.add_argument("--m", required=True)
        sp.set_defaults(func=fn)

    sp = common(sub.add_parser("criterion", help="decide I_M = rad(I_N + (fs)) for binomials fs"))
    sp.add_argument("--n")
    sp.add_argument("--m")
    sp.add_argument("--gens-im", dest="gens_im", help="generators of I_M: JSON list or 'f1; f2; ...'")
    sp.add_argument("--fs", help="the binomials f_j: JSON list or 'f1; f2; ...'")
    sp.add_argument("--example", choices=("ex46", "rem33"))
    sp.add_argument("--a", type=int)
    sp.add_argument("--projection", choices=("D", "N"), default="D")
    sp.add_argument("--char", type=int, default=0)
    sp.add_argument("--primes")
    sp.add_argument("--budget", type=int)
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_criterion)

    sp = common(sub.add_parser("stci", help="build (and optionally verify) a certificate"))
    sp.add_argument("--family", choices=("thm61", "thm62", "thm63", "ex55"))
    sp.add_argument("--example", choices=("ex55", "ex46"))
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--c", help="comma-separated c1,...,c_{m+1}")
    sp.add_argument("--base-gens", dest="base_gens")
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_stci)

    sp = common(sub.add_parser("verify", help="re-verify a certificate JSON file"))
    sp.add_argument("--cert", required=True)
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except PreconditionError as exc:
        for prob in exc.problems:
            print(f"precondition: {prob}", file=sys.stderr)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
