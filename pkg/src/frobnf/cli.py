"""Command-line front end.

Problem files are JSON:

    {
      "field": {"poly": [-2, 0, 1],            // constant term first, monic
                "basis": [["1", "0"],          // column j = power-basis
                          ["0", "1"]]},        //   coordinates of omega_j
      "generators": [[1, 0], [4, 1], [6, 2]],  // integer coords over the basis
      "beta": [3, 1],                          // optional target
      "s": 1, "t1": "1", "t2": "8", "box": 4   // optional parameters
    }

Reports are JSON on stdout with exact values only: integers as decimal
strings, rationals as "p/q", enclosures as {"lo": ..., "hi": ...}. Exit
codes: 0 success, 1 validation or precondition failure, 2 work-limit
exhaustion, 3 a certified violation of a bound that is proved to hold
(which would mean a bug somewhere, and is loud on purpose).

The s-counting convention everywhere is "at least s distinct
representations"; the alternative convention counting targets with at most
s representations is offset by one from this.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .embeddings import DEFAULT_PRECISION_CAP, embed
from .errors import (
    BoxTooLarge,
    FrobnfError,
    HypothesisNotEstablished,
    NotRepresentable,
    ParseError,
    WorkLimitExceeded,
)
from .frobenius import (
    classical_frobenius,
    corollary_report,
    gs_lower_search,
    recheck_certificate,
    theorem1_bound,
)
from .heights import DEFAULT_EPS, compare_height, height_elem, height_vector
from .linalg import rank_fraction
from .measures import coord_matrix, d_measure, m_measure, minor_list
from .nf_core import NumberField
from .semigroup import (
    DEFAULT_WORK_LIMIT,
    ConeMembership,
    check_generators,
    cone_membership,
    count_by_height,
    enumerate_representations,
    representation_sandwich,
    witness_search,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_WORK_LIMIT = 2
EXIT_RED_ALERT = 3


# --- report formatting -------------------------------------------------

def _fmt_int(v: int) -> str:
    return str(int(v))


def _fmt_frac(v) -> str:
    return str(Fraction(v))


def _fmt_enc(e) -> dict:
    return {"lo": _fmt_frac(e.lo), "hi": _fmt_frac(e.hi)}


def _emit(report: dict):
    print(json.dumps(report, indent=2))


# --- problem file parsing ----------------------------------------------

def _parse_fraction(value, where: str) -> Fraction:
    try:
        if isinstance(value, bool):
            raise ValueError
        if isinstance(value, (int, str)):
            return Fraction(value)
    except (ValueError, ZeroDivisionError):
        pass
    raise ParseError(f"{where}: expected an integer or 'p/q' string, got {value!r}")


def _parse_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    return value


class Problem:
    def __init__(self, path: str, args):
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ParseError(f"{path}: {exc.strerror or exc}")
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}")
        if not isinstance(data, dict):
            raise ParseError(f"{path}: top level must be an object")

        field_spec = data.get("field")
        if not isinstance(field_spec, dict):
            raise ParseError(f"{path}: missing 'field' object")
        poly = field_spec.get("poly")
        if not isinstance(poly, list) or not poly:
            raise ParseError(f"{path}: field.poly must be a nonempty list")
        poly = [_parse_int(c, f"{path}: field.poly[{i}]")
                for i, c in enumerate(poly)]
        basis = field_spec.get("basis")
        if not isinstance(basis, list) or not basis:
            raise ParseError(f"{path}: field.basis must be a nonempty list of columns")
        basis_cols = []
        for j, col in enumerate(basis):
            if not isinstance(col, list):
                raise ParseError(f"{path}: field.basis[{j}] must be a list")
            basis_cols.append([
                _parse_fraction(v, f"{path}: field.basis[{j}][{i}]")
                for i, v in enumerate(col)])
        self.field = NumberField.from_spec(poly, basis_cols)

        gens = data.get("generators")
        if not isinstance(gens, list) or not gens:
            raise ParseError(f"{path}: missing 'generators' list")
        self.generators = []
        for i, coords in enumerate(gens):
            if not isinstance(coords, list) or len(coords) != self.field.degree:
                raise ParseError(
                    f"{path}: generators[{i}] must list {self.field.degree} integers")
            self.generators.append(self.field.element(
                [_parse_int(v, f"{path}: generators[{i}][{j}]")
                 for j, v in enumerate(coords)]))

        def param(name, flag_value, parse, default):
            if flag_value is not None:
                return flag_value
            if name in data:
                return parse(data[name], f"{path}: {name}")
            return default

        self.beta_coords = None
        if getattr(args, "beta", None) is not None:
            try:
                self.beta_coords = [int(v) for v in args.beta.split(",")]
            except ValueError:
                raise ParseError(f"--beta: expected comma-separated integers")
            if len(self.beta_coords) != self.field.degree:
                raise ParseError(
                    f"--beta: expected {self.field.degree} coordinates")
        elif "beta" in data:
            raw = data["beta"]
            if not isinstance(raw, list) or len(raw) != self.field.degree:
                raise ParseError(f"{path}: beta must list {self.field.degree} integers")
            self.beta_coords = [_parse_int(v, f"{path}: beta[{j}]")
                                for j, v in enumerate(raw)]

        self.s = param("s", getattr(args, "s", None), _parse_int, 1)
        self.t1 = param("t1", getattr(args, "t1", None), _parse_fraction, Fraction(1))
        self.t2 = param("t2", getattr(args, "t2", None), _parse_fraction, Fraction(8))
        self.eps = param("eps", getattr(args, "eps", None), _parse_fraction,
                         DEFAULT_EPS)
        self.box = param("box", getattr(args, "box", None), _parse_int, 4)
        self.work_limit = param("work_limit", getattr(args, "work_limit", None),
                                _parse_int, DEFAULT_WORK_LIMIT)
        self.t_max = param("t_max", getattr(args, "t_max", None), _parse_int, None)
        self.shell_limit = param("shell_limit", getattr(args, "shell_limit", None),
                                 _parse_int, 6)

    def beta(self):
        if self.beta_coords is None:
            raise ParseError("this command needs a target beta "
                             "(spec 'beta' or --beta)")
        return self.field.element(self.beta_coords)

    def system(self):
        return check_generators(self.generators)


# --- command handlers ---------------------------------------------------

def cmd_validate(p: Problem) -> int:
    sys_ = p.system()
    report = {
        "degree": _fmt_int(sys_.d),
        "generators": _fmt_int(sys_.n),
        "Delta_K": _fmt_int(p.field.discriminant),
        "spanning": sys_.spanning,
        "totally_positive": sys_.totally_positive,
        "pointed": sys_.pointed,
    }
    _emit(report)
    return EXIT_OK if sys_.all_certified() else EXIT_INVALID


def cmd_measures(p: Problem) -> int:
    a = coord_matrix(p.generators)
    report = {
        "D": _fmt_int(d_measure(p.generators)),
        "Delta_K": _fmt_int(p.field.discriminant),
        "minors": [_fmt_int(m) for m in minor_list(a)],
    }
    if p.beta_coords is not None:
        report["M"] = _fmt_int(m_measure(p.generators, p.beta()))
    _emit(report)
    return EXIT_OK


def cmd_bound(p: Problem) -> int:
    fb = theorem1_bound(p.system(), p.s)
    _emit({
        "s": _fmt_int(fb.s),
        "n": _fmt_int(fb.n),
        "d": _fmt_int(fb.d),
        "D": _fmt_int(fb.d_value),
        "bound": _fmt_enc(fb.bound),
        "ceiling": _fmt_int(fb.bound_ceiling),
    })
    return EXIT_OK


def cmd_height(p: Problem) -> int:
    beta = p.beta()
    h = height_elem(beta, p.eps)
    _emit({
        "beta": [_fmt_int(c) for c in beta.coords],
        "H_K": _fmt_enc(h.enclosure),
        "exact": None if h.exact is None else _fmt_frac(h.exact),
        "absolute": _fmt_enc(h.absolute(p.eps)),
    })
    return EXIT_OK


def cmd_represent(p: Problem) -> int:
    sys_ = p.system()
    beta = p.beta()
    reps = enumerate_representations(sys_, beta, p.work_limit)
    report = {
        "r": _fmt_int(reps.count),
        "complete": reps.complete,
        "box": _fmt_int(reps.box_radius),
        "membership": cone_membership(sys_, beta).value,
        "reps": [[_fmt_int(v) for v in x] for x in reps.reps],
    }
    if reps.reps:
        check = representation_sandwich(sys_, beta, reps, p.eps)
        best = min(reps.reps, key=lambda x: (max(abs(v) for v in x), x))
        report["min_rep"] = [_fmt_int(v) for v in best]
        report["sandwich_lower"] = _fmt_enc(check.lower)
        report["sandwich_holds"] = check.all_hold
    _emit(report)
    return EXIT_OK


def cmd_witness(p: Problem) -> int:
    sys_ = p.system()
    w = witness_search(sys_, p.box)
    report: dict = {"box": _fmt_int(p.box), "found": w is not None}
    if w is not None:
        report["witness"] = [_fmt_int(c) for c in w.coords]
        report["membership"] = cone_membership(sys_, w).value
        report["r"] = "0"
    _emit(report)
    return EXIT_OK


def cmd_count(p: Problem) -> int:
    rep = count_by_height(p.system(), p.s, p.t1, p.t2, p.eps, p.work_limit)
    report = {
        "s": _fmt_int(rep.s),
        "T1": _fmt_frac(rep.t1),
        "T2": _fmt_frac(rep.t2),
        "x_box": _fmt_int(rep.x_box),
        "sum_r": [_fmt_int(rep.sum_r[0]), _fmt_int(rep.sum_r[1])],
        "count_sg_s": [_fmt_int(rep.sg_s_count[0]), _fmt_int(rep.sg_s_count[1])],
        "ambiguous_heights": _fmt_int(len(rep.ambiguous)),
        "members": [{"beta": [_fmt_int(c) for c in coords], "r": _fmt_int(r)}
                    for coords, r in rep.members],
        "upper_bound": _fmt_enc(rep.upper_bound),
        "upper_holds": rep.upper_holds,
        "lower_bound": _fmt_int(rep.lower_bound_value),
        "base_window_sum_r": [_fmt_int(rep.base_window_sum_r[0]),
                              _fmt_int(rep.base_window_sum_r[1])],
        "lower_holds": rep.lower_holds,
    }
    _emit(report)
    if rep.upper_holds is False or rep.lower_holds is False:
        return EXIT_RED_ALERT
    return EXIT_OK


def cmd_frobenius_exact(p: Problem) -> int:
    if p.field.degree != 1:
        raise FrobnfError("exact computation is only available in degree 1")
    a = [g.coords[0] for g in p.generators]
    g = classical_frobenius(a, p.s, p.work_limit)
    fb = theorem1_bound(p.system(), p.s)
    report = {
        "generators": [_fmt_int(v) for v in a],
        "s": _fmt_int(p.s),
        "g": _fmt_int(g),
        "bound_ceiling": _fmt_int(fb.bound_ceiling),
        "bound_respected": g <= fb.bound_ceiling,
    }
    _emit(report)
    return EXIT_OK if g <= fb.bound_ceiling else EXIT_RED_ALERT


def cmd_frobenius_search(p: Problem) -> int:
    sys_ = p.system()
    beta = p.beta()
    fb = theorem1_bound(sys_, p.s)
    t_max = p.t_max if p.t_max is not None else fb.bound_ceiling
    cert = gs_lower_search(sys_, beta, t_max, p.shell_limit, p.s)
    report: dict = {
        "beta": [_fmt_int(c) for c in beta.coords],
        "s": _fmt_int(p.s),
        "t_max": _fmt_int(t_max),
        "shell_limit": _fmt_int(p.shell_limit),
        "bound_ceiling": _fmt_int(fb.bound_ceiling),
        "found": cert is not None,
    }
    red = False
    if cert is not None:
        report["t_falsified"] = _fmt_int(cert.t_falsified)
        report["witness"] = [_fmt_int(c) for c in cert.witness.coords]
        report["recheck"] = recheck_certificate(sys_, cert)
        red = cert.t_falsified >= fb.bound_ceiling
        report["contradicts_upper_bound"] = red
    _emit(report)
    return EXIT_RED_ALERT if red else EXIT_OK


def cmd_verify(p: Problem) -> int:
    sys_ = p.system()
    alerts: list[str] = []
    report: dict = {
        "certificates": {
            "spanning": sys_.spanning,
            "totally_positive": sys_.totally_positive,
            "pointed": sys_.pointed,
        },
    }
    if not sys_.all_certified():
        report["status"] = "invalid"
        _emit(report)
        return EXIT_INVALID

    n, d = sys_.n, sys_.d
    dv = d_measure(p.generators)   # raises on any internal cross-check failure
    rank = rank_fraction([list(r) for r in sys_.matrix.rows])
    rank_ok = (dv == 0) == (rank < d)
    h_alpha = height_vector(p.generators, p.eps)

    import math as _math
    from .intervals import sqrt as _sqrt
    hk2 = h_alpha.enclosure.hi ** 2
    d_upper_ok = (Fraction(dv) <= Fraction(_math.factorial(d) ** 2,
                                           abs(p.field.discriminant))
                  * _math.comb(n, d) * hk2)
    report["measure_checks"] = {
        "D": _fmt_int(dv),
        "cross_checks": "passed",
        "zero_iff_rank_deficient": rank_ok,
        "upper_bound_vs_height": d_upper_ok,
    }
    if not (rank_ok and d_upper_ok):
        alerts.append("measure bound violated")

    # norm sandwich over a deterministic sample of semigroup points
    sandwich_ok = True
    checked = 0
    import itertools as _it
    for x in _it.product(range(2), repeat=n):
        beta = sys_.field.zero()
        for xi, alpha in zip(x, p.generators):
            beta = beta + xi * alpha
        reps = enumerate_representations(sys_, beta, p.work_limit)
        check = representation_sandwich(sys_, beta, reps, p.eps)
        checked += len(reps.reps)
        if not check.all_hold:
            sandwich_ok = False
    report["norm_sandwich"] = {"representations_checked": _fmt_int(checked),
                               "all_hold": sandwich_ok}
    if not sandwich_ok:
        alerts.append("norm sandwich violated")

    cnt = count_by_height(sys_, p.s, p.t1, p.t2, p.eps, p.work_limit)
    report["height_counting"] = {
        "T1": _fmt_frac(p.t1), "T2": _fmt_frac(p.t2),
        "sum_r": [_fmt_int(cnt.sum_r[0]), _fmt_int(cnt.sum_r[1])],
        "upper_holds": cnt.upper_holds,
        "lower_holds": cnt.lower_holds,
    }
    if cnt.upper_holds is False or cnt.lower_holds is False:
        alerts.append("height counting bound violated")

    try:
        cor = corollary_report(sys_, p.box, p.eps)
        report["gap_corollaries"] = {
            "witness": [_fmt_int(c) for c in cor.witness.coords],
            "D_lower_bound": _fmt_enc(cor.d_bound),
            "D_holds": cor.d_holds,
            "height_lower_bound": _fmt_enc(cor.h_bound),
            "height_holds": cor.h_holds,
        }
        if cor.quad_bound is not None:
            report["gap_corollaries"]["quadratic_bound"] = _fmt_enc(cor.quad_bound)
            report["gap_corollaries"]["quadratic_holds"] = cor.quad_holds
        if cor.d_holds is False or cor.h_holds is False or cor.quad_holds is False:
            alerts.append("gap corollary violated")
    except HypothesisNotEstablished:
        report["gap_corollaries"] = {"skipped": f"no gap witness in box {p.box}"}

    if p.beta_coords is not None:
        beta = p.beta()
        if cone_membership(sys_, beta) is ConeMembership.IN_INTERIOR:
            fb = theorem1_bound(sys_, p.s)
            cert = gs_lower_search(sys_, beta, fb.bound_ceiling,
                                   p.shell_limit, p.s)
            entry = {"bound_ceiling": _fmt_int(fb.bound_ceiling),
                     "found": cert is not None}
            if cert is not None:
                entry["t_falsified"] = _fmt_int(cert.t_falsified)
                if cert.t_falsified >= fb.bound_ceiling:
                    alerts.append("falsified shift at or above the proven ceiling")
            report["shift_search"] = entry

    report["red_alerts"] = alerts
    report["status"] = "red-alert" if alerts else "verified"
    _emit(report)
    return EXIT_RED_ALERT if alerts else EXIT_OK


def cmd_plotdata(p: Problem) -> int:
    if p.field.degree != 2:
        raise FrobnfError("plotdata requires a degree-2 field")
    sys_ = p.system()
    eps = Fraction(1, 10**15)
    print("sigma1,sigma2,r")
    for b1 in range(-p.box, p.box + 1):
        for b2 in range(-p.box, p.box + 1):
            beta = sys_.field.element([b1, b2])
            r = enumerate_representations(sys_, beta, p.work_limit).count
            s1 = format(float(embed(beta, 1, eps).mid), ".12g")
            s2 = format(float(embed(beta, 2, eps).mid), ".12g")
            print(f"{s1},{s2},{r}")
    return EXIT_OK


COMMANDS = {
    "validate": (cmd_validate, "check field and generator certificates"),
    "measures": (cmd_measures, "discriminant measures of the generators"),
    "bound": (cmd_bound, "upper bound for the s-Frobenius number"),
    "height": (cmd_height, "certified height of the target"),
    "represent": (cmd_represent, "enumerate all representations of the target"),
    "witness": (cmd_witness, "search for a cone point with no representation"),
    "count": (cmd_count, "count semigroup points in a height window"),
    "frobenius-exact": (cmd_frobenius_exact,
                        "exact s-Frobenius number (degree 1 only)"),
    "frobenius-search": (cmd_frobenius_search,
                         "falsification search for the shift threshold"),
    "verify": (cmd_verify, "run the full invariant suite on the problem"),
    "plotdata": (cmd_plotdata, "CSV of (sigma1, sigma2, r) over a box (degree 2)"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobnf",
        description="Exact semigroup, height and Frobenius-bound computations "
                    "over totally real number fields.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (func, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("spec", help="problem JSON file")
        sp.add_argument("--beta", help="target coordinates, comma separated")
        sp.add_argument("--s", type=int, help="representation multiplicity")
        sp.add_argument("--t1", help="lower height threshold (rational)")
        sp.add_argument("--t2", help="upper height threshold (rational)")
        sp.add_argument("--eps", help="enclosure width target (rational)")
        sp.add_argument("--box", type=int, help="coordinate box for searches")
        sp.add_argument("--t-max", dest="t_max", type=int,
                        help="largest shift to try in frobenius-search")
        sp.add_argument("--shell-limit", dest="shell_limit", type=int,
                        help="largest witness shell in frobenius-search")
        sp.add_argument("--work-limit", dest="work_limit", type=int,
                        help="enumeration node budget")
        sp.add_argument("--precision-cap", dest="precision_cap", type=int,
                        default=DEFAULT_PRECISION_CAP,
                        help="refinement rounds before PrecisionExhausted")
        sp.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        problem = Problem(args.spec, args)
        return args.func(problem)
    except (WorkLimitExceeded, BoxTooLarge) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_WORK_LIMIT
    except NotRepresentable as exc:
        _emit({"error": "NotRepresentable", "message": str(exc)})
        return EXIT_INVALID
    except FrobnfError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
