"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (error class name on stderr),
2 on malformed input.  Floats are printed with 12 digits after the point.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import formats
from .errors import HilbertSpecError, ParseError
from .exact import parse_poly
from .exact.mpoly import MPoly
from .exact.ring import format_scalar
from .exact.unipoly import format_poly
from .hilbert import hilbert_distance
from .rootratio import common_root_ratio_poly, has_common_root_ratio, root_ratio_poly
from .spectral import (
    DEFAULT_TOL,
    classify_proximal,
    common_eigenvalue_ratio,
    duality_map,
    eigen_ratios,
    hilbert_translation_length,
)
from .structures import (
    TriangleGroupParams,
    compare_spectra,
    marked_spectrum,
    self_duality_witness,
    triangle_rep,
)
from .structures.spectrum import COMPARE_TOL

DIGITS = 12


class UsageError(Exception):
    """Malformed command-line input (exit 2)."""


def fmt_float(x: float) -> str:
    out = f"{x:.{DIGITS}f}"
    # no "-0.000000000000"
    return out[1:] if out.startswith("-") and float(out) == 0 else out


def fmt_complex(z: complex) -> str:
    if abs(z.imag) <= 1e-10 * max(1.0, abs(z)):
        return fmt_float(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{fmt_float(z.real)}{sign}{fmt_float(abs(z.imag))}i"


def fmt_exact(c) -> str:
    return str(c) if isinstance(c, MPoly) else format_scalar(c)


def _existing(path: str) -> Path:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    return p


def _matrix(path):
    return formats.matrix_from_json(formats.load_json(_existing(path)))


def _spectrum_or_rep(path, args):
    obj = formats.load_json(_existing(path))
    if isinstance(obj, list):
        return formats.spectrum_from_json(obj)
    return marked_spectrum(formats.rep_from_json(obj), args.max_len, args.tol)


# -- subcommands --------------------------------------------------------------
# Each returns (json_value, text) and the dispatcher picks by --format.


def cmd_rrpoly(args):
    p = parse_poly(args.poly, args.var, symbolic=args.symbolic)
    out = format_poly(root_ratio_poly(p).poly)
    return {"poly": out}, out


def cmd_crrpoly(args):
    p = parse_poly(args.p, args.var, symbolic=args.symbolic)
    q = parse_poly(args.q, args.var, symbolic=args.symbolic)
    out = fmt_exact(common_root_ratio_poly(p, q))
    if args.symbolic:
        return {"resultant": out}, out
    shared = has_common_root_ratio(p, q)
    return {"resultant": out, "common_ratio": shared}, f"{out}\ncommon_ratio: {str(shared).lower()}"


def cmd_charpoly(args):
    out = format_poly(_matrix(args.matrix).char_poly("x"))
    return {"poly": out}, out


def cmd_eigenratios(args):
    ratios = eigen_ratios(_matrix(args.matrix), args.root_tol)
    ratios = sorted(ratios, key=lambda z: (-abs(z), -z.real, -z.imag))
    return [{"re": z.real, "im": z.imag} for z in ratios], "\n".join(fmt_complex(z) for z in ratios)


def cmd_classify(args):
    cls = classify_proximal(_matrix(args.matrix), args.tol)
    data = {
        "class": cls.tag.value,
        "lambda_plus": cls.lambda_plus,
        "lambda_minus": cls.lambda_minus,
        "gap": cls.gap,
        "reason": cls.reason,
    }
    lines = [cls.tag.value]
    for key in ("lambda_plus", "lambda_minus", "gap"):
        if data[key] is not None:
            lines.append(f"{key}: {fmt_float(data[key])}")
    if cls.reason:
        lines.append(f"reason: {cls.reason}")
    return data, "\n".join(lines)


def cmd_length(args):
    val = hilbert_translation_length(_matrix(args.matrix), args.tol)
    return {"length": val}, fmt_float(val)


def cmd_commonratio(args):
    shared = common_eigenvalue_ratio(_matrix(args.m1), _matrix(args.m2))
    return {"common_ratio": shared}, str(shared).lower()


def cmd_dual(args):
    d = formats.matrix_to_json(duality_map(_matrix(args.matrix)))
    text = "\n".join(" ".join(str(v) if isinstance(v, str) else fmt_float(v) for v in r) for r in d["entries"])
    return d, text


def cmd_distance(args):
    dom = formats.domain_from_json(formats.load_json(_existing(args.domain)))
    val = hilbert_distance(dom, np.array(args.p), np.array(args.q))
    return {"distance": val}, fmt_float(val)


def cmd_triangle(args):
    p, q, r = args.orders
    rep = triangle_rep(TriangleGroupParams(p, q, r, args.param), rotation=not args.reflection)
    data = formats.rep_to_json(rep)
    return data, formats.dumps(data).rstrip("\n")


def cmd_spectrum(args):
    rep = formats.rep_from_json(formats.load_json(_existing(args.rep)))
    table = marked_spectrum(rep, args.max_len, args.tol)
    text = "\n".join(f"{e.word or '1'}\t{fmt_float(e.length)}" for e in table.entries)
    return formats.spectrum_to_json(table), text, formats.spectrum_to_tsv(table, DIGITS)


def cmd_compare(args):
    a = _spectrum_or_rep(args.first, args)
    b = _spectrum_or_rep(args.second, args)
    res = compare_spectra(a, b, args.compare_tol)
    data = {
        "verdict": res.verdict.value,
        "depth": res.depth,
        "max_delta": res.max_delta,
        "word": res.word,
        "delta": res.delta,
    }
    if res.isospectral:
        text = f"isospectral to depth {res.depth} (max delta {res.max_delta:.3e})"
    else:
        text = f"mismatch at word {res.word} (delta {fmt_float(res.delta)})"
    return data, text


def cmd_selfdual(args):
    rep = formats.rep_from_json(formats.load_json(_existing(args.rep)))
    word, defect = self_duality_witness(rep, args.max_len)
    return {"defect": defect, "word": word}, f"{fmt_float(defect)}\nword: {word or '1'}"


# -- parser -----------------------------------------------------------------


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


def _global_flags(parser, suppress: bool):
    def default(v):
        return argparse.SUPPRESS if suppress else v

    parser.add_argument("--tol", type=_positive, default=default(DEFAULT_TOL), help="proximality gap tolerance")
    parser.add_argument("--compare-tol", type=_positive, default=default(COMPARE_TOL), help="spectrum comparison tolerance")
    parser.add_argument("--root-tol", type=_positive, default=default(1e-12), help="polynomial root residual tolerance")
    parser.add_argument("--max-len", type=_positive_int, default=default(8), help="maximum word length")
    parser.add_argument("--format", choices=("text", "json", "tsv"), default=default("text"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbertspec", description="Hilbert lengths, root ratios and length spectra.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=fn)
        return sp

    sp = add("rrpoly", cmd_rrpoly, "root-ratio polynomial of a polynomial")
    sp.add_argument("poly")
    sp.add_argument("--var", default="x")
    sp.add_argument("--symbolic", action="store_true", help="treat other identifiers as coefficient names")

    sp = add("crrpoly", cmd_crrpoly, "resultant of two root-ratio polynomials")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("--var", default="x")
    sp.add_argument("--symbolic", action="store_true")

    for name, fn, text in (
        ("charpoly", cmd_charpoly, "characteristic polynomial"),
        ("eigenratios", cmd_eigenratios, "ratios of eigenvalues"),
        ("classify", cmd_classify, "proximality class"),
        ("length", cmd_length, "Hilbert translation length"),
        ("dual", cmd_dual, "dual matrix (M^t)^-1"),
    ):
        add(name, fn, text).add_argument("matrix")

    sp = add("commonratio", cmd_commonratio, "exact shared eigenvalue-ratio test")
    sp.add_argument("m1")
    sp.add_argument("m2")

    sp = add("distance", cmd_distance, "Hilbert distance in a convex domain")
    sp.add_argument("domain")
    sp.add_argument("--p", type=float, nargs="+", required=True)
    sp.add_argument("--q", type=float, nargs="+", required=True)

    sp = add("triangle", cmd_triangle, "triangle group representation")
    sp.add_argument("--orders", type=int, nargs=3, required=True, metavar=("P", "Q", "R"))
    sp.add_argument("--param", type=_positive, default=1.0)
    sp.add_argument("--reflection", action="store_true", help="emit the reflection group instead of the rotation subgroup")

    add("spectrum", cmd_spectrum, "marked length spectrum").add_argument("rep")

    sp = add("compare", cmd_compare, "compare two spectra (spectrum or representation files)")
    sp.add_argument("first")
    sp.add_argument("second")

    add("selfdual", cmd_selfdual, "self-duality trace defect").add_argument("rep")
    return parser


def _render(result, fmt: str) -> str:
    data, text, *rest = result
    if fmt == "json":
        return formats.dumps(data)
    if fmt == "tsv" and rest:
        return rest[0]
    return text + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, ParseError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except HilbertSpecError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(_render(result, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
