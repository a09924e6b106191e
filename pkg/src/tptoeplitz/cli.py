"""Command-line interface.

Exit codes: 0 success, 2 validation error, 3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

import mpmath

from . import asymptotics, characters, chart, config, peterson, symfun, toeplitz, tropical
from .errors import ConfigError, ConvergenceError, TPError
from .scalars import DEFAULT_BITS, check_bits, parse_rational, rational_str, to_bigfloat
from .solver import SEEDS, solve_q_report

FORMATS = ("text", "json", "csv")


# -- argument helpers -------------------------------------------------------

def rational_list(s: str) -> list:
    s = s.strip()
    if not s:
        return []
    return [parse_rational(x, field="list") for x in s.split(",")]


def ext_list(s: str) -> list:
    return ["inf" if x.strip() == "inf" else parse_rational(x, field="list") for x in s.split(",")]


def int_list(s: str) -> list:
    out = []
    for part in s.split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..")
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    return out


def _params_args(p):
    g = p.add_argument_group("Schoenberg parameters")
    g.add_argument("--params", metavar="FILE", help="JSON {alpha, beta, gamma}")
    g.add_argument("--alpha", type=rational_list, default=None, help="comma-separated rationals")
    g.add_argument("--beta", type=rational_list, default=None)
    g.add_argument("--gamma", type=parse_rational, default=None)
    g.add_argument("--geometric", metavar="A1,RA,B1,RB,L",
                   help="alpha_i = A1*RA^(i-1), beta_j = B1*RB^(j-1), L terms each")


def get_params(args) -> symfun.SchoenbergParams:
    if args.params:
        obj = config.section(config.load(args.params), "params")
        p = symfun.SchoenbergParams.from_json(obj, path=args.params)
        if args.alpha is None and args.beta is None and args.gamma is None:
            return p
        return symfun.SchoenbergParams(args.alpha if args.alpha is not None else p.alpha,
                                       args.beta if args.beta is not None else p.beta,
                                       args.gamma if args.gamma is not None else p.gamma)
    if args.geometric:
        parts = args.geometric.split(",")
        if len(parts) != 5:
            raise ConfigError("--geometric takes A1,RA,B1,RB,L")
        a1, ra, b1, rb = (parse_rational(x, field="geometric") for x in parts[:4])
        return symfun.SchoenbergParams.geometric(a1, ra, b1, rb, int(parts[4]),
                                                 args.gamma or 0)
    try:
        return symfun.SchoenbergParams(tuple(args.alpha or ()), tuple(args.beta or ()),
                                       args.gamma or Fraction(0))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _backend_args(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", dest="float_mode", action="store_false", default=False,
                   help="exact rational output (default)")
    g.add_argument("--float", dest="float_mode", action="store_true",
                   help="decimal output at --bits precision")
    p.add_argument("--bits", type=int, default=DEFAULT_BITS)


def _out_args(p, default="text"):
    p.add_argument("--out", default=None,
                   help="output path (format from extension) or one of text/json/csv")
    p.add_argument("--format", choices=FORMATS, default=None)
    p.set_defaults(default_format=default)


class Emitter:
    def __init__(self, args):
        self.args = args
        self.float_mode = getattr(args, "float_mode", False)
        self.bits = check_bits(getattr(args, "bits", DEFAULT_BITS))
        out = getattr(args, "out", None)
        fmt = getattr(args, "format", None)
        self.path = None
        if out in FORMATS:
            fmt = fmt or out
        elif out:
            self.path = Path(out)
            if fmt is None:
                fmt = {".json": "json", ".csv": "csv"}.get(self.path.suffix, "text")
        self.fmt = fmt or getattr(args, "default_format", "text")

    def num(self, x) -> str:
        if isinstance(x, str):
            return x
        if isinstance(x, bool):
            return "true" if x else "false"
        if isinstance(x, (Fraction, int)):
            if self.float_mode:
                with mpmath.workprec(self.bits):
                    return mpmath.nstr(to_bigfloat(x), max(15, int(self.bits * 0.30103) - 2))
            return rational_str(x)
        if isinstance(x, mpmath.mpf):
            if mpmath.isinf(x):
                return "inf" if x > 0 else "-inf"
            with mpmath.workprec(self.bits):
                return mpmath.nstr(x, max(15, int(self.bits * 0.30103) - 2))
        if x == float("inf"):
            return "inf"
        return str(x)

    def tree(self, obj):
        if isinstance(obj, dict):
            return {str(k): self.tree(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [self.tree(v) for v in obj]
        if isinstance(obj, (bool, int)) or obj is None:
            return obj
        return self.num(obj)

    def write(self, text: str):
        if not text.endswith("\n"):
            text += "\n"
        if self.path:
            self.path.write_text(text)
        else:
            sys.stdout.write(text)

    def emit(self, obj, text: str | None = None, rows: list | None = None):
        if self.fmt == "csv" and rows is not None:
            self.write(self._rows_csv(rows))
        elif self.fmt == "json" or text is None:
            body = dict(obj) if isinstance(obj, dict) else {"result": obj}
            body.setdefault("schema", config.SCHEMA_VERSION)
            self.write(json.dumps(self.tree(body), indent=2))
        else:
            self.write(text)

    def _rows_csv(self, rows):
        import csv
        import io
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        keys = list(rows[0].keys()) if rows else list(asymptotics.CSV_COLUMNS)
        w.writerow(keys)
        for r in rows:
            w.writerow([self.num(r[k]) if not isinstance(r[k], (tuple, list))
                        else ";".join(self.num(x) for x in r[k]) for k in keys])
        return buf.getvalue()


def _matrix_from(args) -> toeplitz.ToeplitzMatrix:
    if getattr(args, "matrix", None):
        obj = config.section(config.load(args.matrix), "matrix")
        return toeplitz.ToeplitzMatrix.from_json(obj, path=args.matrix)
    if args.n is None:
        raise ConfigError("give --matrix FILE or parameters with -n")
    return toeplitz.truncate(get_params(args), args.n)


# -- subcommands ------------------------------------------------------------

def cmd_expand(args, out):
    c = symfun.edrei_expand(get_params(args), args.n)
    out.emit({"c": c}, "\n".join(out.num(x) for x in c),
             [{"k": k, "c": x} for k, x in enumerate(c, start=1)])


def cmd_truncate(args, out):
    u = toeplitz.truncate(get_params(args), args.n)
    out.emit({"n": u.n, "c": list(u.c)}, None)


def cmd_dq(args, out):
    u = _matrix_from(args)
    fp = toeplitz.d_map(u)
    text = "d: " + ", ".join(out.num(x) for x in fp.d) + "\nq: " + ", ".join(out.num(x) for x in fp.q)
    out.emit({"n": u.n, "d": list(fp.d), "q": list(fp.q)}, text)


def cmd_chart(args, out):
    u = _matrix_from(args)
    ch = chart.toeplitz_chart(u)
    lab = chart.vertex_labels(ch)
    rows = lambda vals: [[vals[(i, j)] for j in range(1, u.n + 2 - i)] for i in range(1, u.n + 1)]
    text = "m:\n" + "\n".join(" ".join(out.num(x) for x in r) for r in rows(ch.m))
    text += "\nv:\n" + "\n".join(" ".join(out.num(x) for x in r) for r in rows(lab.v))
    out.emit({"n": u.n, "m": rows(ch.m), "v": rows(lab.v)}, text)


def cmd_check_toeplitz(args, out):
    if args.chart:
        obj = config.load(args.chart)
        if isinstance(obj, dict) and "v" in obj:
            lab = chart.QuiverLabeling.from_json(obj, path=args.chart)
        else:
            lab = chart.vertex_labels(chart.StandardChart.from_json(obj, path=args.chart))
    else:
        u = _matrix_from(args)
        lab = chart.labelling_of(u)
    ok = chart.is_divergence_free(lab)
    result = {"divergence_free": ok}
    if args.chart and not (isinstance(obj, dict) and "v" in obj):
        m = chart.chart_to_matrix(chart.labels_to_chart(lab))
        result["matrix_is_toeplitz"] = chart.is_toeplitz_matrix(m)
    out.emit(result, "true" if ok else "false")


def cmd_solve_q(args, out):
    if args.q is None:
        raise ConfigError("--q is required")
    res = solve_q_report(args.q, args.tol, bits=args.bits, seed=args.seed, max_iter=args.max_iter)
    obj = {"n": res.matrix.n, "c": list(res.matrix.c), "residual": res.residual,
           "iterations": res.iterations, "bits": res.bits}
    out.emit(obj, "\n".join(out.num(x) for x in res.matrix.c))


def cmd_schubert(args, out):
    w = peterson.Permutation(args.w)
    S = peterson.schubert_poly(w)
    Sq = peterson.quantum_schubert(w)
    obj = {"w": list(w), "schubert": str(S), "quantum": str(Sq)}
    text = f"S_w   = {S}\nS^q_w = {Sq}"
    if args.n is not None:
        u = toeplitz.truncate(get_params(args), args.n)
        obj["value"] = peterson.frak_S_eval(w, u)
        obj["dual_value"] = peterson.dual_eval(w, u)
        text += f"\nvalue = {out.num(obj['value'])}\ndual  = {out.num(obj['dual_value'])}"
    out.emit(obj, text)


def cmd_thoma(args, out):
    p = get_params(args)
    obj = {}
    lines = []
    if args.cycle:
        ct = characters.CycleType(args.cycle)
        obj["value"] = characters.thoma_value(p, ct)
        lines.append(f"chi({','.join(map(str, ct))}) = {out.num(obj['value'])}")
    if args.n:
        avg, cn = characters.thoma_check(p, args.n)
        obj.update({"n": args.n, "average": avg, "c_n": cn, "equal": avg == cn})
        lines.append(f"average over S_{args.n} = {out.num(avg)}; c_{args.n} = {out.num(cn)}")
    if not lines:
        raise ConfigError("give --cycle and/or -n")
    out.emit(obj, "\n".join(lines))


def cmd_vk_sweep(args, out):
    rows = characters.vk_experiment(args.shape, args.cycle, args.n)
    out.emit({"rows": rows}, None, rows)


def _sweep_common(p):
    _params_args(p)
    p.add_argument("--n", type=int_list, required=True, help="e.g. 20,40,80 or 1..60")
    p.add_argument("--jobs", type=int, default=1)
    _backend_args(p)
    _out_args(p, "csv")


def _sweep_emit(out, rows):
    out.emit({"rows": rows}, None, rows)


def cmd_sweep_d(args, out):
    with mpmath.workprec(out.bits):
        rows = asymptotics.sweep_d(get_params(args), args.n, args.i, args.j, bits=out.bits, jobs=args.jobs)
    _sweep_emit(out, rows)


def cmd_sweep_q(args, out):
    with mpmath.workprec(out.bits):
        rows = asymptotics.sweep_q(get_params(args), args.n, args.k, bits=out.bits)
    _sweep_emit(out, rows)


def cmd_sweep_chern(args, out):
    rows = asymptotics.sweep_chern(get_params(args), args.n, args.k)
    _sweep_emit(out, rows)


def cmd_sweep_schubert(args, out):
    rows = asymptotics.sweep_schubert(get_params(args), args.w, args.n)
    _sweep_emit(out, rows)


def _filling_from(args):
    if args.filling:
        obj = config.section(config.load(args.filling), "filling")
        return tropical.MinIdealFilling.from_json(obj, path=args.filling)
    if args.diagonal is not None:
        return tropical.from_diagonal(args.diagonal)
    raise ConfigError("give --filling FILE or --diagonal")


def cmd_trop_weight(args, out):
    f = _filling_from(args)
    lam = tropical.weight(f)
    out.emit({"lambda": list(lam)}, ", ".join(out.num(x) for x in lam))


def cmd_trop_invert(args, out):
    lam = args.lam
    if sum(lam) != 0:
        raise ConfigError("weight entries must sum to zero", field="lambda")
    f = tropical.weight_inverse(lam)
    text = "\n".join(" ".join(out.num(f.M[(i, j)]) for j in range(1, f.n + 2 - i))
                     for i in range(1, f.n + 1))
    out.emit({"filling": f.to_json(), "diagonal": f.diagonal}, text)


def _trop_params(args):
    if args.trop:
        obj = config.section(config.load(args.trop), "trop")
        return tropical.TropParams.from_json(obj, path=args.trop)
    if args.A is None or args.B is None:
        raise ConfigError("give --trop FILE or both --A and --B")
    try:
        return tropical.TropParams(tuple(args.A), tuple(args.B))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def cmd_trop_e(args, out):
    tp = _trop_params(args)
    i_max, j_max = (int(x) for x in args.window.lower().split("x"))
    M = tropical.trop_E(tp, i_max, j_max)
    grid = [[M[(i, j)] for j in range(1, j_max + 1)] for i in range(1, i_max + 1)]
    text = "\n".join(" ".join(out.num(x) for x in row) for row in grid)
    out.emit({"window": grid, "min_ideal": tropical.is_min_ideal_window(M, i_max, j_max)}, text)


def cmd_trop_sweep(args, out):
    tp = _trop_params(args)
    rows = []
    for n in args.n:
        vals = tropical.trop_asymptotics(tp, n, [i for i in args.i if i <= n + 1],
                                         [j for j in args.j if j <= n + 1])
        for (side, k), v in vals.items():
            target = tp.a(k) if side == "A" else tp.b(k)
            rows.append({"n": n, "quantity": f"lambda_{k}/n" if side == "A" else f"-lambda_(n+2-{k})/n",
                         "value": v, "target": target, "abs_err": abs(v - target)})
    out.emit({"rows": rows}, None, rows)


def cmd_detrop_check(args, out):
    tp = _trop_params(args)
    results = {}
    for i in args.i:
        for j in args.j:
            results[f"{i},{j}"] = tropical.detrop_check(tp, i, j, args.L)
    ok = all(results.values())
    out.emit({"checks": results, "ok": ok}, "true" if ok else "false")


def cmd_selftest(args, out):
    from . import selftest
    lines = []
    ok = selftest.run(lines.append)
    out.emit({"ok": ok, "checks": lines}, "\n".join(lines))
    return 0 if ok else 1


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tptoeplitz",
                                 description="Totally positive Toeplitz matrices and their parametrizations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, default="text"):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        return p

    p = add("expand", cmd_expand, "Toeplitz coefficients c_1..c_N")
    _params_args(p)
    p.add_argument("-n", type=int, required=True)
    _backend_args(p)
    _out_args(p)

    p = add("truncate", cmd_truncate, "rank-n truncation as JSON")
    _params_args(p)
    p.add_argument("-n", type=int, required=True)
    _backend_args(p)
    _out_args(p, "json")

    for name, fn, hlp in (("dq", cmd_dq, "d- and q-parameters"),
                          ("chart", cmd_chart, "standard coordinates and vertex labels")):
        p = add(name, fn, hlp)
        _params_args(p)
        p.add_argument("-n", type=int)
        p.add_argument("--matrix", metavar="FILE", help='JSON {"n": .., "c": [..]}')
        _backend_args(p)
        _out_args(p)

    p = add("check-toeplitz", cmd_check_toeplitz, "divergence-free test of a chart or labelling")
    p.add_argument("--chart", metavar="FILE", help="triangular m array, or {\"v\": [...]} labels")
    p.add_argument("--matrix", metavar="FILE")
    _params_args(p)
    p.add_argument("-n", type=int)
    _out_args(p)

    p = add("solve-q", cmd_solve_q, "Toeplitz matrix with given quantum parameters")
    p.add_argument("--q", type=rational_list, help="comma-separated positive rationals")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", choices=SEEDS, default="exp")
    p.add_argument("--max-iter", type=int, default=200)
    _backend_args(p)
    _out_args(p)

    p = add("schubert", cmd_schubert, "Schubert and quantum Schubert polynomials")
    p.add_argument("--w", type=int_list, required=True, help="one-line notation, e.g. 2,3,1")
    _params_args(p)
    p.add_argument("-n", type=int, help="also evaluate on the rank-n truncation")
    _backend_args(p)
    _out_args(p)

    p = add("thoma", cmd_thoma, "Thoma character values and averages")
    _params_args(p)
    p.add_argument("--cycle", type=int_list, help="cycle type, e.g. 2,1,1")
    p.add_argument("-n", type=int)
    _backend_args(p)
    _out_args(p)

    p = add("vk-sweep", cmd_vk_sweep, "normalized characters along a shape rule")
    p.add_argument("--shape", choices=sorted(characters.SHAPE_RULES), default="two-row")
    p.add_argument("--cycle", type=int_list, default=[2], help="nontrivial cycles, padded with fixed points")
    p.add_argument("--n", type=int_list, required=True)
    _backend_args(p)
    _out_args(p, "csv")

    p = add("sweep-d", cmd_sweep_d, "delta_i/n against ln alpha_i and ln beta_j")
    _sweep_common(p)
    p.add_argument("--i", type=int_list, default=[1])
    p.add_argument("--j", type=int_list, default=[1])

    p = add("sweep-q", cmd_sweep_q, "n-th roots of quantum parameters")
    _sweep_common(p)
    p.add_argument("--k", type=int_list, default=[1])

    p = add("sweep-chern", cmd_sweep_chern, "superpotential summands and Chern values")
    _sweep_common(p)
    p.add_argument("--k", type=int_list, default=[1])

    p = add("sweep-schubert", cmd_sweep_schubert, "quantum Schubert evaluations")
    _sweep_common(p)
    p.add_argument("--w", type=int_list, default=[2, 3, 1])

    p = add("trop-weight", cmd_trop_weight, "Lusztig weight of a min-ideal filling")
    p.add_argument("--filling", metavar="FILE")
    p.add_argument("--diagonal", type=rational_list)
    _backend_args(p)
    _out_args(p)

    p = add("trop-invert", cmd_trop_invert, "min-ideal filling with a given weight")
    p.add_argument("--lambda", dest="lam", type=rational_list, required=True,
                   help="zero-sum weight; use --lambda=-1,0,1 when it starts with a minus")
    _backend_args(p)
    _out_args(p)

    def trop_args(p):
        p.add_argument("--trop", metavar="FILE", help='JSON {"A": [...], "B": [...]}')
        p.add_argument("--A", type=ext_list)
        p.add_argument("--B", type=ext_list)

    p = add("trop-e", cmd_trop_e, "window of the tropical Edrei map")
    trop_args(p)
    p.add_argument("--window", default="4x4")
    _backend_args(p)
    _out_args(p)

    p = add("trop-sweep", cmd_trop_sweep, "normalized weights of truncations")
    trop_args(p)
    p.add_argument("--n", type=int_list, required=True)
    p.add_argument("--i", type=int_list, default=[1])
    p.add_argument("--j", type=int_list, default=[1])
    p.add_argument("--jobs", type=int, default=1)
    _backend_args(p)
    _out_args(p, "csv")

    p = add("detrop-check", cmd_detrop_check, "leading-term check of m_ij against min(A_i, B_j)")
    trop_args(p)
    p.add_argument("--i", type=int_list, default=[1, 2, 3])
    p.add_argument("--j", type=int_list, default=[1, 2, 3])
    p.add_argument("--L", type=int, default=3)
    _out_args(p)

    p = add("selftest", cmd_selftest, "run the exact property checks")
    p.add_argument("--jobs", type=int, default=1)
    _out_args(p)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = Emitter(args)
        code = args.func(args, out)
        return code or 0
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (TPError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
