"""Command-line front end.

Exit codes: 0 success or "true", 1 "false", 2 malformed input,
3 resource guard hit, 4 any other library error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from . import io
from .embed import distortion_estimate, embed, orbit_distance, separating_set
from .errors import ResourceError, TropInvError, ValidationError
from .groups import PermGroup, transfer
from .invariants import (
    edge_directions,
    elementary_symmetric,
    finite_generators,
    sn_decompose,
    strict_partitions,
)
from .poly import canonicalize, evaluate, format_poly, trop_equals, witness_point
from .polytope import newton_polytope
from .rational import Add, Gen, Mul, Pow, expr_to_json, factor_boolean_univariate, rewrite_transfer

EXIT_OK, EXIT_FALSE, EXIT_SCHEMA, EXIT_RESOURCE, EXIT_SEMANTIC = 0, 1, 2, 3, 4


def parse_vector(text: str, integer: bool = False) -> tuple:
    try:
        items = [tok.strip() for tok in text.split(",")]
        if integer:
            return tuple(int(tok) for tok in items)
        return tuple(Fraction(tok) for tok in items)
    except (ValueError, ZeroDivisionError):
        kind = "integers" if integer else "rationals"
        raise ValidationError(f"expected comma-separated {kind}, got {text!r}") from None


def fmt_vector(v: Sequence) -> str:
    return ",".join(str(x) for x in v)


def expr_to_text(e) -> str:
    if isinstance(e, Gen):
        return "T[" + ",".join(map(str, e.alpha)) + "]"
    if isinstance(e, Add):
        return "(" + " ⊕ ".join(expr_to_text(a) for a in e.args) + ")"
    if isinstance(e, Mul):
        return "(" + " ⊙ ".join(expr_to_text(a) for a in e.args) + ")"
    if isinstance(e, Pow):
        return f"{expr_to_text(e.arg)}^{e.m}"
    return f"{expr_to_text(e.num)} / {expr_to_text(e.den)}"


class Output:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, obj, text: str):
        print(io.dumps(obj) if self.fmt == "json" else text, file=self.stream)


def _group(path):
    return io.group_from_json(io.load_json(path))


def _poly(path):
    return io.poly_from_json(io.load_json(path))


def cmd_canon(a, out):
    f = canonicalize(_poly(a.poly))
    out.emit(io.poly_to_json(f), format_poly(f))
    return EXIT_OK


def cmd_equal(a, out):
    f, g = _poly(a.f), _poly(a.g)
    if trop_equals(f, g):
        out.emit({"equal": True}, "equal")
        return EXIT_OK
    x = witness_point(f, g)
    vf, vg = evaluate(f, x), evaluate(g, x)
    out.emit(
        {"equal": False, "witness": [str(c) for c in x], "f": str(vf), "g": str(vg)},
        f"different at ({fmt_vector(x)}): f = {vf}, g = {vg}",
    )
    return EXIT_FALSE


def cmd_eval(a, out):
    f = _poly(a.poly)
    val = evaluate(f, parse_vector(a.at))
    s = "-inf" if val == float("-inf") else str(val)
    out.emit({"value": s}, s)
    return EXIT_OK


def cmd_newton(a, out):
    P = newton_polytope(_poly(a.poly))
    out.emit(io.polytope_to_json(P), "\n".join(fmt_vector(v) for v in P.sorted_vertices()))
    return EXIT_OK


def cmd_transfer(a, out):
    G = _group(a.group)
    f = _poly(a.poly)
    t = transfer(G, f)
    out.emit(io.poly_to_json(t), format_poly(t))
    return EXIT_OK


def cmd_efun(a, out):
    f = elementary_symmetric(a.n, a.k)
    out.emit(io.poly_to_json(f), format_poly(f))
    return EXIT_OK


def cmd_decompose(a, out):
    d = sn_decompose(parse_vector(a.gamma, integer=True))
    text = " ⊙ ".join(f"e{k}^{c}" for k, c in enumerate(d.c, start=1) if c) or "0"
    out.emit(d.to_json(), text)
    return EXIT_OK


def cmd_generators(a, out):
    gens = finite_generators(_group(a.group))
    out.emit([io.poly_to_json(f) for f in gens], "\n".join(format_poly(f) for f in gens))
    return EXIT_OK


def cmd_separating(a, out):
    spec = separating_set(_group(a.group))
    text = [f"m = {spec.m}"] + [format_poly(f) for f in spec.polynomials]
    out.emit(io.spec_to_json(spec), "\n".join(text))
    return EXIT_OK


def cmd_embed(a, out):
    spec = io.spec_from_json(io.load_json(a.spec))
    phi = embed(spec, parse_vector(a.at))
    out.emit([str(x) for x in phi], fmt_vector(phi))
    return EXIT_OK


def cmd_distance(a, out):
    d2 = orbit_distance(_group(a.group), parse_vector(a.v), parse_vector(a.w))
    out.emit({"squared_distance": str(d2)}, str(d2))
    return EXIT_OK


def cmd_distortion(a, out):
    spec = io.spec_from_json(io.load_json(a.spec))
    report = distortion_estimate(spec, a.samples, a.seed)
    out.emit(report.to_json(), report.to_text())
    return EXIT_OK


def cmd_rewrite(a, out):
    e = rewrite_transfer(_group(a.group), parse_vector(a.beta, integer=True), a.max_nodes)
    out.emit(expr_to_json(e), expr_to_text(e))
    return EXIT_OK


def cmd_factor_bx(a, out):
    r = io.rational_from_json(io.load_json(a.rational))
    x, y = factor_boolean_univariate(r)
    out.emit({"a": x, "b": y}, f"x^{x} ⊙ (0 ⊕ x)^{y}")
    return EXIT_OK


def census_table(G: PermGroup, bound: int) -> list:
    """Cumulative direction counts for every B in 0..bound."""
    by_total = {}
    for alpha in strict_partitions(G.n, bound):
        by_total.setdefault(sum(alpha), []).append(alpha)
    dirs, rows = set(), []
    for B in range(bound + 1):
        for alpha in by_total.get(B, ()):
            dirs |= edge_directions(G, alpha)
        rows.append((B, len(dirs)))
    return rows


def cmd_census(a, out):
    rows = census_table(_group(a.group), a.bound)
    text = ["B  count"] + [f"{B:<2} {c}" for B, c in rows]
    out.emit([{"B": B, "count": c} for B, c in rows], "\n".join(text))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropinv", description="Tropical invariant theory toolkit.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[fmt], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("canon", cmd_canon, "canonical form of a polynomial")
    sp.add_argument("poly")
    sp = add("equal", cmd_equal, "functional equality; exit 1 with a witness point if different")
    sp.add_argument("f")
    sp.add_argument("g")
    sp = add("eval", cmd_eval, "evaluate at a rational point")
    sp.add_argument("poly")
    sp.add_argument("--at", required=True, help="comma-separated rationals, e.g. 1,-1/2")
    sp = add("newton", cmd_newton, "vertices of the Newton polytope")
    sp.add_argument("poly")
    sp = add("transfer", cmd_transfer, "orbit sum of a polynomial")
    sp.add_argument("--group", required=True)
    sp.add_argument("poly")
    sp = add("efun", cmd_efun, "elementary symmetric polynomial e_k")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp = add("decompose", cmd_decompose, "write Tr_Sn(x^gamma) as a product of e_k powers")
    sp.add_argument("--gamma", required=True)
    sp = add("generators", cmd_generators, "finite generating set of the invariants")
    sp.add_argument("--group", required=True)
    sp = add("separating", cmd_separating, "separating invariants of a group")
    sp.add_argument("--group", required=True)
    sp = add("embed", cmd_embed, "evaluate the orbit embedding at a point")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--at", required=True)
    sp = add("distance", cmd_distance, "squared orbit distance")
    sp.add_argument("--group", required=True)
    sp.add_argument("--v", required=True)
    sp.add_argument("--w", required=True)
    sp = add("distortion", cmd_distortion, "empirical Lipschitz ratios of the embedding")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp = add("rewrite", cmd_rewrite, "rewrite a transfer through small-exponent transfers")
    sp.add_argument("--group", required=True)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--max-nodes", type=int, default=10**5)
    sp = add("factor-bx", cmd_factor_bx, "factor a Boolean univariate rational function")
    sp.add_argument("rational")
    sp = add("census", cmd_census, "edge-direction counts of orbit polytopes")
    sp.add_argument("--group", required=True)
    sp.add_argument("--bound", type=int, required=True)
    return p


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_SCHEMA
    try:
        return args.func(args, Output(args.format, stdout))
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_SCHEMA
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=stderr)
        return EXIT_RESOURCE
    except TropInvError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_SEMANTIC


def main() -> None:
    sys.exit(run())
