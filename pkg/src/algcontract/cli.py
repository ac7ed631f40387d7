"""Command-line interface: ``algcontract {analyze,dualgraph,classify,construct,eval}``.

Exit status is 0 whenever an analysis completes (whatever the verdict) and
1 on input or usage errors, which are printed as a JSON object on stdout.
"""
import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .degreefun import Semidegree, Valuation, semidegree_eval, valuation_eval
from .errors import AlgContractError, InputParse, NotPositive, NotTangent
from .exact import BiLaurent
from .keyforms import decide_algebraic, key_forms, local_key_polynomials, wp_weights
from .puiseux import (
    PuiseuxPairs,
    PuiseuxPoly,
    generic_series_from_germ,
    newton_puiseux_truncated,
    polydromy_order,
    puiseux_pairs,
    to_global,
)
from .resolution import alpha, dual_graph, emit_dot, is_contractible, resolve
from .semigroups import (
    check_conditions,
    classify,
    construct_delta_curve,
    virtual_poles,
)
from .textpoly import parse_poly

try:
    import tomllib as _toml
except ModuleNotFoundError:  # Python < 3.11
    import tomli as _toml


# ----------------------------------------------------------------------
# curve specifications
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CurveSpec:
    """Exactly one of ``series`` / ``weierstrass`` (tuples of 4-tuples) and ``r``."""

    r: int
    series: tuple = None
    weierstrass: tuple = None


def _rows(raw, key):
    if not isinstance(raw, list) or not raw:
        raise InputParse(f"{key} must be a non-empty list of 4-element rows")
    rows = []
    for row in raw:
        if (not isinstance(row, list) or len(row) != 4
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in row)):
            raise InputParse(f"each {key} row must hold four integers, got {row!r}")
        rows.append(tuple(row))
    return tuple(rows)


def parse_spec(data):
    """Validate a decoded TOML/JSON mapping into a CurveSpec."""
    if not isinstance(data, dict):
        raise InputParse("curve spec must be a table/object")
    unknown = set(data) - {"r", "series", "weierstrass"}
    if unknown:
        raise InputParse(f"unknown keys: {sorted(unknown)}")
    r = data.get("r")
    if not isinstance(r, int) or isinstance(r, bool) or r < 0:
        raise InputParse("r must be a non-negative integer")
    has_s, has_w = "series" in data, "weierstrass" in data
    if has_s == has_w:
        raise InputParse("give exactly one of 'series' or 'weierstrass'")
    if has_s:
        rows = _rows(data["series"], "series")
        prev = None
        for cn, cd, en, ed in rows:
            if cd == 0 or ed == 0 or cn == 0:
                raise InputParse("series coefficients must be nonzero with nonzero denominators")
            e = Fraction(en, ed)
            if e <= 0 or (prev is not None and e <= prev):
                raise InputParse("series exponents must be positive and strictly increasing")
            prev = e
        spec = CurveSpec(r, series=rows)
    else:
        rows = _rows(data["weierstrass"], "weierstrass")
        for cn, cd, a, b in rows:
            if cd == 0 or a < 0 or b < 0:
                raise InputParse("weierstrass rows need nonzero denominators and exponents >= 0")
        spec = CurveSpec(r, weierstrass=rows)
        f = spec_polynomial(spec)
        n = f.degree_y()
        if n < 1 or f.coeff_y(n) != BiLaurent.const(1):
            raise InputParse("weierstrass polynomial must be monic in v")
    return spec


def load_spec(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputParse(f"cannot read {path}: {exc.strerror}") from exc
    if path.suffix.lower() == ".json":
        loaders = [json.loads]
    elif path.suffix.lower() == ".toml":
        loaders = [_toml.loads]
    else:
        loaders = [json.loads, _toml.loads]
    errors = []
    for load in loaders:
        try:
            return parse_spec(load(text))
        except (ValueError, _toml.TOMLDecodeError) as exc:
            errors.append(str(exc))
    raise InputParse("cannot parse curve spec: " + "; ".join(errors))


def spec_polynomial(spec):
    return BiLaurent({(a, b): Fraction(cn, cd) for cn, cd, a, b in spec.weierstrass})


def spec_germ(spec, r=None):
    """Local series of the germ, long enough to carry every characteristic exponent
    and the generic truncation for the given ``r``."""
    r = spec.r if r is None else r
    if spec.series is not None:
        return PuiseuxPoly([(Fraction(en, ed), Fraction(cn, cd)) for cn, cd, en, ed in spec.series])
    f = spec_polynomial(spec)
    n = f.degree_y()
    bound = Fraction(1)
    # a unibranch germ of v-degree n has polydromy order n
    phi = newton_puiseux_truncated(f, bound)
    while polydromy_order(phi) != n:
        bound *= 2
        if bound > 1 << 12:
            raise InputParse("could not isolate the Puiseux pairs of the input")
        phi = newton_puiseux_truncated(f, bound)
    pairs = puiseux_pairs(phi)
    if pairs.l:
        q_last = pairs.characteristic_exponents()[-1] * pairs.polydromy
        need = (q_last + r) / pairs.polydromy + 1
        if need > bound:
            phi = newton_puiseux_truncated(f, need)
    return phi


# ----------------------------------------------------------------------
# analysis
# ----------------------------------------------------------------------

def _seq_dict(seq):
    return {
        "forms": seq.texts(),
        "values": list(seq.values),
        "shift": seq.shift.to_text() if seq.shift is not None else None,
    }


def analyze(spec):
    """Build the report dictionary for a curve spec."""
    r = spec.r
    phi = spec_germ(spec)
    pairs = puiseux_pairs(phi)
    notes = []
    tangent = phi.leading()[0] < 1
    report = {
        "r": r,
        "puiseux_pairs": pairs.as_list(),
        "polydromy": polydromy_order(phi),
        "alpha": alpha(pairs, r) if pairs.l else None,
        "contractible": False,
        "virtual_poles": None,
        "semigroup_report": None,
        "classification": None,
    }
    notes.append("contractibility requires the first exponent to be below 1 (tangency to L)")
    if not tangent:
        notes.append("the germ is not tangent to L, so the configuration is not contractible")
    contractible = bool(pairs.l) and tangent and is_contractible(pairs, r)
    report["contractible"] = contractible
    if pairs.l:
        vp = virtual_poles(pairs, r)
        report["virtual_poles"] = vp.to_dict()
        if contractible:
            report["semigroup_report"] = check_conditions(vp, pairs).to_list()
            report["classification"] = classify(pairs, r).kind
    if pairs.l <= 1:
        report["key_forms"] = None
        seq_global = None
        if tangent and pairs.l:
            local = local_key_polynomials(phi, r)
            local_sigma = generic_series_from_germ(phi, r)
            sigma = to_global(local_sigma)
            if any(e.denominator == 1 for e, _ in local_sigma.fixed.terms):
                notes.append("integer local terms c*u^k map to c*x^(1-k) under u = 1/x, y = x*v")
            try:
                seq_global = key_forms(Semidegree(sigma))
                report["key_forms"] = {"local": _seq_dict(local), "global": _seq_dict(seq_global)}
            except NotPositive:
                notes.append("the semidegree is not positive, so no global key forms are reported")
                report["key_forms"] = {"local": _seq_dict(local)}
        if contractible:
            curve = phi if spec.series is not None else spec_polynomial(spec)
            verdict = decide_algebraic(curve, r)
            report["verdict"] = {
                "contractible": verdict.contractible,
                "algebraic": verdict.algebraic,
                "witness": verdict.witness,
            }
            if verdict.algebraic and seq_global is not None:
                report["wp_weights"] = list(wp_weights(seq_global))
    else:
        notes.append("key forms are only computed for at most one Puiseux pair")
    report["notes"] = notes
    return report


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------

class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser():
    parser = _Parser(prog="algcontract", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full JSON report for a curve spec")
    p.add_argument("input")

    p = sub.add_parser("dualgraph", help="dual graph of the boundary configuration")
    p.add_argument("input")
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("classify", help="semigroup classification from Puiseux pairs")
    p.add_argument("--pairs", required=True, help="e.g. 3/5,23/2")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("construct", help="polynomial built from the virtual poles")
    p.add_argument("--pairs", required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("eval", help="value of a polynomial under the valuation or semidegree")
    p.add_argument("input")
    p.add_argument("--mode", choices=("local", "global"), required=True)
    p.add_argument("--poly", required=True)

    sub.add_parser("schema", help="print the JSON schema of the analyze report")
    return parser


def _check_r(r):
    if r < 0:
        raise InputParse("--r must be non-negative")
    return r


def run(argv, out):
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        out.write(json.dumps(analyze(load_spec(args.input)), indent=2) + "\n")
    elif args.command == "dualgraph":
        spec = load_spec(args.input)
        phi = spec_germ(spec)
        if phi.leading()[0] >= 1:
            raise NotTangent("the germ is not tangent to L")
        graph = dual_graph(resolve(phi, spec.r))
        out.write(emit_dot(graph) if args.format == "dot" else graph.to_json() + "\n")
    elif args.command == "classify":
        pairs = PuiseuxPairs.parse(args.pairs)
        r = _check_r(args.r)
        if not pairs.l:
            raise InputParse("--pairs must list at least one pair")
        if not is_contractible(pairs, r):
            out.write("not-contractible\n")
            if args.verbose:
                detail = {"pairs": pairs.as_list(), "r": r, "alpha": alpha(pairs, r),
                          "classification": None}
                out.write(json.dumps(detail, indent=2) + "\n")
            return 0
        result = classify(pairs, r)
        out.write(result.cli_name + "\n")
        if args.verbose:
            detail = {
                "pairs": pairs.as_list(),
                "r": r,
                "alpha": alpha(pairs, r),
                "virtual_poles": virtual_poles(pairs, r).to_dict(),
                "classification": result.kind,
                "semigroup_report": result.report.to_list(),
            }
            out.write(json.dumps(detail, indent=2) + "\n")
    elif args.command == "construct":
        pairs = PuiseuxPairs.parse(args.pairs)
        if not pairs.l:
            raise InputParse("--pairs must list at least one pair")
        out.write(construct_delta_curve(pairs, _check_r(args.r)).to_text() + "\n")
    elif args.command == "eval":
        spec = load_spec(args.input)
        phi = spec_germ(spec)
        sigma = generic_series_from_germ(phi, spec.r)
        if args.mode == "local":
            value = valuation_eval(Valuation(sigma), parse_poly(args.poly, ("u", "v")))
        else:
            value = semidegree_eval(Semidegree(to_global(sigma)), parse_poly(args.poly, ("x", "y")))
        out.write(f"{value}\n")
    elif args.command == "schema":
        from .schema import REPORT_SCHEMA

        out.write(json.dumps(REPORT_SCHEMA, indent=2) + "\n")
    return 0


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        return run(sys.argv[1:] if argv is None else argv, out)
    except _Usage as exc:
        payload = {"error": "Usage", "message": str(exc)}
    except AlgContractError as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
    out.write(json.dumps(payload) + "\n")
    return 1


if __name__ == "__main__":
    sys.exit(main())
