"""``linfield`` command-line frontend.

Every command reads a field document (``--field``), runs one library call and
prints a single canonical JSON document.  Exit status: 0 on success, 1 on a
domain error (payload ``{"error": ClassName, "message": ...}``), 2 on malformed
input.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from typing import Any, Callable

from linfield import io
from linfield.dickson import (
    DicksonMatrix,
    adjugate,
    adjugate_poly,
    determinant,
    inverse_poly,
    matrix_rep,
)
from linfield.errors import LinFieldError, MalformedInput
from linfield.linearized import LinPoly, compose, evaluate, image_basis, kernel_basis, monomial_basis, rank_bruteforce
from linfield.moore_trace import compact_form, dual_basis, to_trace_form_dualside, to_trace_form_full
from linfield.skew import SkewPoly, factor_chain, rgcd
from linfield.subfield import SubfieldContext, alpha_pattern_holds, b_matrix, blocks, is_block_circulant, is_subfield_poly


@dataclass
class Request:
    doc: io.FieldDoc
    args: argparse.Namespace

    @property
    def tower(self):
        return self.doc.tower

    def poly(self, attr: str = "poly") -> LinPoly:
        text = getattr(self.args, attr)
        if text is None:
            raise MalformedInput(f"--{attr.replace('_', '-')} is required")
        return io.parse_poly(self.doc, io.read_operand(text))

    def basis(self) -> list[int]:
        if self.args.basis is None:
            return monomial_basis(self.tower)
        return io.parse_elems(self.doc, io.read_operand(self.args.basis))


def _poly_out(L: LinPoly) -> dict[str, Any]:
    return {"poly": io.dump_poly(L)}


def cmd_eval(r: Request) -> dict[str, Any]:
    if r.args.x is None:
        raise MalformedInput("--x is required")
    x = io.parse_elem(r.doc, io.read_operand(r.args.x))
    r.tower.check(x)
    return {"value": io.dump_elem(r.tower, evaluate(r.poly(), x))}


def cmd_compose(r: Request) -> dict[str, Any]:
    return _poly_out(compose(r.poly(), r.poly("poly2")))


def cmd_rank(r: Request) -> dict[str, Any]:
    return {"rank": rank_bruteforce(r.poly())}


def cmd_det(r: Request) -> dict[str, Any]:
    return {"det": io.dump_elem(r.tower, determinant(DicksonMatrix.from_poly(r.poly())))}


def cmd_invert(r: Request) -> dict[str, Any]:
    return _poly_out(inverse_poly(r.poly()))


def cmd_adjugate(r: Request) -> dict[str, Any]:
    L = r.poly()
    return {
        "poly": io.dump_poly(adjugate_poly(L)),
        "matrix": io.dump_matrix(r.tower, adjugate(DicksonMatrix.from_poly(L)).full()),
    }


def cmd_kernel(r: Request) -> dict[str, Any]:
    basis = kernel_basis(r.poly())
    return {"basis": io.dump_elems(r.tower, basis), "dimension": len(basis)}


def cmd_image(r: Request) -> dict[str, Any]:
    basis = image_basis(r.poly())
    return {"basis": io.dump_elems(r.tower, basis), "dimension": len(basis)}


def cmd_trace_rep(r: Request) -> dict[str, Any]:
    L = r.poly()
    form = r.args.form
    if form == 1:
        tf = to_trace_form_full(L, r.basis())
    elif form == 2:
        tf = to_trace_form_dualside(L, r.basis())
    else:
        tf = compact_form(L)
    return {"form": form, "pairs": io.dump_trace_form(tf)}


def cmd_factor(r: Request) -> dict[str, Any]:
    chain = factor_chain(r.poly())
    F = r.tower
    return {
        "permutation": io.dump_poly(chain.permutation),
        "gammas": io.dump_elems(F, chain.gammas),
        "factors": [io.dump_poly(K) for K in chain.factors()],
    }


def cmd_skew_gcd(r: Request) -> dict[str, Any]:
    F = r.tower
    if r.args.poly is None:
        raise MalformedInput("--poly is required")
    f = io.parse_skew(r.doc, io.read_operand(r.args.poly))
    if r.args.poly2 is None:
        g = SkewPoly.x_pow_minus_one(F, F.n)
    else:
        g = io.parse_skew(r.doc, io.read_operand(r.args.poly2))
    d = rgcd(f, g)
    return {"gcd": io.dump_skew(d), "degree": d.degree}


def cmd_dual_basis(r: Request) -> dict[str, Any]:
    return {"dual": io.dump_elems(r.tower, dual_basis(r.tower, r.basis()))}


def cmd_subfield_check(r: Request) -> dict[str, Any]:
    F = r.tower
    if r.args.m is None:
        raise MalformedInput("--m is required")
    if r.args.beta is None:
        ctx = SubfieldContext.default(F, r.args.m)
    else:
        ctx = SubfieldContext(F, r.args.m, io.parse_elem(r.doc, io.read_operand(r.args.beta)))
    L = r.poly()
    B = b_matrix(L, ctx.basis, ctx.dual)
    return {
        "beta": io.dump_elem(F, ctx.beta),
        "subfield": is_subfield_poly(L, ctx.m),
        "alpha_pattern": alpha_pattern_holds(L, ctx),
        "block_circulant": is_block_circulant(B, ctx.t, ctx.m),
        "matrix": io.dump_matrix(F, B),
        "blocks": [io.dump_matrix(F, blk) for blk in blocks(B, ctx.t, ctx.m)],
    }


def cmd_matrix_rep(r: Request) -> dict[str, Any]:
    return {"matrix": io.dump_matrix(r.tower, matrix_rep(r.poly(), r.basis()))}


COMMANDS: dict[str, Callable[[Request], dict[str, Any]]] = {
    "eval": cmd_eval,
    "compose": cmd_compose,
    "rank": cmd_rank,
    "det": cmd_det,
    "invert": cmd_invert,
    "adjugate": cmd_adjugate,
    "kernel": cmd_kernel,
    "image": cmd_image,
    "trace-rep": cmd_trace_rep,
    "factor": cmd_factor,
    "skew-gcd": cmd_skew_gcd,
    "dual-basis": cmd_dual_basis,
    "subfield-check": cmd_subfield_check,
    "matrix-rep": cmd_matrix_rep,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 2 with a JSON payload, like other malformed input
        raise MalformedInput(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linfield", description="Exact algebra of linearized polynomials over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--field", required=True, help="field document (JSON)")
        p.add_argument("--poly", help="polynomial: JSON, @file, identity, zero or a name from the field file")
        p.add_argument("--poly2", help="second operand for compose / skew-gcd")
        p.add_argument("--x", help="element to evaluate at")
        p.add_argument("--basis", help="JSON list of basis elements (default: monomial basis)")
        p.add_argument("--beta", help="normal basis generator for subfield-check")
        p.add_argument("--m", type=int, help="subfield degree for subfield-check")
        p.add_argument("--form", type=int, choices=(1, 2, 3), default=1, help="trace form: 1 full, 2 dual-side, 3 compact")
        p.add_argument("--json-indent", type=int, default=None)
    st = sub.add_parser("selftest", help="run the law suite")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--scale", type=float, default=1.0, help="sample-size multiplier")
    st.add_argument("--law", action="append", help="run only the named law (repeatable)")
    st.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def _emit(payload: dict[str, Any], indent: int | None) -> None:
    print(io.dumps(payload, indent))
    if "error" in payload:
        print(f"linfield: {payload['error']}: {payload['message']}", file=sys.stderr)


def run_selftest(args: argparse.Namespace) -> int:
    from linfield.laws import LAWS, SuiteConfig, run_suite

    try:
        config = SuiteConfig(args.seed, args.scale, tuple(args.law or LAWS), args.jobs)
    except KeyError as exc:
        raise MalformedInput(f"unknown law(s): {exc.args[0]}") from None
    t0 = time.perf_counter()
    results = run_suite(config, on_result=lambda res: print(res.line(), flush=True))
    failed = [r.name for r in results if not r.passed]
    summary = f"{len(results) - len(failed)}/{len(results)} laws passed in {time.perf_counter() - t0:.1f} s"
    print(summary if not failed else summary + "; failed: " + ", ".join(failed), flush=True)
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except MalformedInput as exc:
        _emit({"error": "MalformedInput", "message": str(exc)}, None)
        return 2
    if args.command == "selftest":
        try:
            return run_selftest(args)
        except MalformedInput as exc:
            _emit({"error": "MalformedInput", "message": str(exc)}, None)
            return 2
    try:
        doc = io.load_field(args.field)
        payload = COMMANDS[args.command](Request(doc, args))
    except MalformedInput as exc:
        _emit({"error": "MalformedInput", "message": str(exc)}, args.json_indent)
        return 2
    except LinFieldError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, args.json_indent)
        return 1
    _emit(payload, args.json_indent)
    return 0


if __name__ == "__main__":
    sys.exit(main())
