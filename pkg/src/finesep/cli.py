"""Command-line front end.

Exit codes: 0 inconclusive / success, 1 validation failure, 2 usage or
parse error, 3 entanglement certified.
"""

import argparse
import json
import sys

import numpy as np

from . import io
from .bounds import (
    BoundValue,
    best_bound,
    bound_fngef,
    bound_fnmim6,
    bound_qutrit_three,
    named_bound,
)
from .composer import qutrit_suite, suite_names
from .detector import evaluate, ppt_check, ppt_threshold, threshold_bisect
from .errors import FinesepError, NoSignChange
from .measurements import MubSet, max_probability, measure, prime_mub_set, smooth_mum
from .scenarios import PSI_CHOICES, SEP_CHOICES, detection_suite, target_ket, werner_family
from .states import pure_state

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_ENTANGLED = 0, 1, 2, 3
RESIDUAL_TOL = 1e-10


class UsageError(Exception):
    pass


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args):
    if args.what in ("mub", "mum"):
        mubs = prime_mub_set(args.dim)
        count = args.count or len(mubs)
        if not 1 <= count <= len(mubs):
            raise UsageError(f"--count must be in 1..{len(mubs)}")
        mubs = MubSet(mubs.bases[:count])
        if args.what == "mub":
            text = io.dumps(mubs)
        else:
            if args.mu is None:
                raise UsageError("gen mum needs --mu")
            text = io.dumps(smooth_mum(mubs, args.mu), mu=args.mu)
    elif args.what == "suite":
        suite, names, _ = detection_suite(args.dim)
        idx = _parse_indices(args.indices, len(suite))
        text = io.dumps([suite[i] for i in idx], "suite", names=[names[i] for i in idx])
    else:
        state = werner_family(args.dim, args.psi, args.sep)(args.s)
        text = io.dumps(state, psi=args.psi, sep=args.sep, s=args.s)
    _emit(text + "\n", args.out)
    return EXIT_OK


def _parse_indices(spec, n):
    if spec is None:
        return list(range(n))
    try:
        idx = [int(x) for x in spec.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --indices {spec!r}") from exc
    if any(not 0 <= i < n for i in idx) or len(set(idx)) != len(idx):
        raise UsageError(f"--indices must be distinct values in 0..{n - 1}")
    return idx


def cmd_validate(args):
    obj = io.read_raw(args.file)
    if args.kind and obj["kind"] != args.kind:
        raise UsageError(f"file kind is {obj['kind']!r}, expected {args.kind!r}")
    res = io.residuals(obj)
    ok = True
    print(f"kind: {obj['kind']}")
    for name, value in res.items():
        passed = value <= RESIDUAL_TOL
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name}: max residual {value:.3e}")
    return EXIT_OK if ok else EXIT_INVALID


def _load_suite(paths):
    suite, names = [], []
    for path in paths:
        obj = io.read_raw(path)
        if obj["kind"] not in ("povm", "suite"):
            raise UsageError(f"{path}: expected a povm or suite file, got {obj['kind']}")
        loaded = io.from_json(obj)
        loaded = loaded if isinstance(loaded, list) else [loaded]
        for p, n in zip(loaded, io.suite_names_of(obj)):
            suite.append(p)
            names.append(n or f"M{len(names)}")
    return suite, names


def _resolve_bound(name, n, d, kappa):
    if name == "auto":
        return best_bound(n, d, kappa)
    return named_bound(name, n, d, kappa)


def cmd_detect(args):
    state = io.load(args.state)
    if not hasattr(state, "dims"):
        raise UsageError(f"{args.state}: not a state file")
    suite, names = _load_suite(args.measurements)
    for p in suite:
        if p.dim != state.dim:
            raise UsageError(f"measurement dimension {p.dim} does not match state dimension {state.dim}")
    bound = _resolve_bound(args.bound, len(suite), state.dims[0], args.kappa)
    report = evaluate(state, suite, bound, names)
    if args.json:
        print(json.dumps(report.as_dict(), indent=1))
    else:
        for r in report.per_measurement:
            print(f"{r.name:>14}  p_max={r.p_max:.10f}  argmax={','.join(r.argmax)}")
        print(f"sum_pmax={report.sum_pmax:.10f} bound[{bound.name}]={bound.value:.10f} margin={report.margin:+.10f}")
        print(f"verdict: {report.verdict}")
    return EXIT_ENTANGLED if report.violated else EXIT_OK


def _parse_grid(spec):
    try:
        a, b, step = (float(x) for x in spec.split(":"))
    except ValueError as exc:
        raise UsageError(f"bad --grid {spec!r}; use a:b:step") from exc
    if not (0.0 <= a <= b <= 1.0) or step <= 0:
        raise UsageError("--grid needs 0 <= a <= b <= 1 and step > 0")
    n = int(np.floor((b - a) / step + 1e-9)) + 1
    return [a + i * step for i in range(n)]


def _sweep_bound(name, n, d, kappa):
    if name == "auto":
        return best_bound(n, d, kappa, qutrit3=(d == 3))
    return named_bound(name, n, d, kappa)


def _csv_row(s, report):
    return f"{s:.10g},{report.sum_pmax:.17g},{report.bound.value:.17g},{str(report.violated).lower()}\n"


def cmd_sweep(args):
    if args.family != "werner":
        raise UsageError("only the werner family is available")
    family = werner_family(args.dim, args.psi, args.sep)
    suite, names, _ = detection_suite(args.dim, target_ket(args.dim, args.psi), args.keep_all)
    bound = _sweep_bound(args.bound, len(suite), args.dim, args.kappa)
    lines = ["s,sum_pmax,bound,violated\n"]
    if args.grid:
        for s in _parse_grid(args.grid):
            lines.append(_csv_row(s, evaluate(family(s), suite, bound, names)))
        hits = [ln for ln in lines[1:] if ln.endswith("true\n")]
        if not hits:
            lines.append("# no detection over grid\n")
    else:
        for s in (0.0, 1.0):
            lines.append(_csv_row(s, evaluate(family(s), suite, bound, names)))
        try:
            res = threshold_bisect(family, suite, bound, tol=args.tol)
        except NoSignChange:
            lines.append("# no detection over [0,1]\n")
        else:
            lo, hi = res.bracket
            lines.append(_csv_row(lo, evaluate(family(lo), suite, bound, names)))
            lines.append(_csv_row(hi, evaluate(family(hi), suite, bound, names)))
            lines.append(f"# s_star={res.s_star:.9g} bound={bound.name} measurements={'|'.join(names)}\n")
    _emit("".join(lines), args.csv)
    return EXIT_OK


def _fmt_probs(p):
    return " ".join(f"{x:.4f}" for x in np.abs(np.round(p, 12)))


def demo_lines():
    """Text of the two-qutrit reproduction, with every number cross-checked."""
    out = []
    psi = target_ket(3, "mqtr")
    phi = target_ket(3, "mqtr1")
    suite = qutrit_suite()
    names = suite_names(3)
    rho_psi, rho_phi = pure_state(psi, (3, 3)), pure_state(phi, (3, 3))
    out.append("Outcome probabilities (w^0, w^1, w^2)")
    out.append(f"{'measurement':>14}  {'|Psi>':>26}  {'|Phi>':>26}")
    pmax_psi = []
    for name, m in zip(names, suite):
        p, q = measure(m, rho_psi), measure(m, rho_phi)
        pmax_psi.append(max_probability(m, rho_psi)[0])
        out.append(f"{name:>14}  {_fmt_probs(p):>26}  {_fmt_probs(q):>26}")
    assert np.allclose(pmax_psi, [1, 1, 1, 1 / 3], atol=1e-10)

    fngef33, fnmim33, q3 = bound_fngef(3, 3), bound_fnmim6(3, 3), bound_qutrit_three()
    assert q3 < fngef33 < fnmim33
    out.append("")
    out.append("Separability bounds for N=3, d=3")
    out.append(f"  fngef   (N/d)(1+(d-1)/sqrt N)   {fngef33:.4f}")
    out.append(f"  fnmim6  1+sqrt((N^2-N)/d)       {fnmim33:.4f}")
    out.append(f"  qutrit3 1+(2/sqrt3)cos(pi/18)   {q3:.4f}")

    s_ppt = ppt_threshold(werner_family(3, "mqtr", "mixed"))
    assert abs(s_ppt - 0.25) < 1e-6
    assert abs(ppt_check(werner_family(3, "mqtr", "mixed")(0.25))[0]) < 1e-10
    aligned = suite[:3]
    bound = BoundValue("qutrit3", q3, {"N": 3, "d": 3})
    res = threshold_bisect(werner_family(3, "mqtr", "mixed"), aligned, bound)
    res_zz = threshold_bisect(werner_family(3, "mqtr", "zz"), aligned, bound)
    closed = (q3 - 1.0) / 2.0
    assert abs(res.s_star - closed) < 1e-6 and abs(res_zz.s_star - closed) < 1e-6
    out.append("")
    out.append("Werner-type family (1-s) rho_sep + s |Psi><Psi|")
    out.append(f"  PPT separability threshold             s = {s_ppt:.4f}")
    out.append(f"  detection threshold, rho_sep mixed     s = {res.s_star:.4f}")
    out.append(f"  detection threshold, rho_sep diag zz   s = {res_zz.s_star:.4f}")
    out.append(f"  closed form (1/sqrt3) cos(pi/18)         = {closed:.6f}")
    try:
        threshold_bisect(werner_family(3, "mqtr1", "mixed"), suite, best_bound(4, 3))
        phi_line = "detected"
    except NoSignChange:
        phi_line = "no detection over [0,1]"
    out.append(f"  with |Phi> instead of |Psi>: {phi_line}")
    return out


def cmd_demo(args):
    print("\n".join(demo_lines()))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="finesep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write MUB/MUM sets, measurement suites or Werner states")
    g.add_argument("what", choices=("mub", "mum", "suite", "state"))
    g.add_argument("--dim", type=int, default=3)
    g.add_argument("--count", type=int)
    g.add_argument("--mu", type=float)
    g.add_argument("--indices", help="comma-separated suite members, e.g. 0,1,2")
    g.add_argument("--psi", choices=PSI_CHOICES, default="mqtr")
    g.add_argument("--sep", choices=SEP_CHOICES, default="mixed")
    g.add_argument("--s", type=float, default=0.0)
    g.add_argument("--out")
    g.add_argument("--seed", type=int, default=0, help="accepted for uniformity; generation is deterministic")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("validate", help="check a file against its invariants")
    v.add_argument("file")
    v.add_argument("--kind", choices=io.KINDS)
    v.set_defaults(func=cmd_validate)

    d = sub.add_parser("detect", help="evaluate a state against a separability bound")
    d.add_argument("--state", required=True)
    d.add_argument("--measurements", nargs="+", required=True)
    d.add_argument("--bound", default="auto", choices=("auto", "fngef", "fnmim6", "fngpq", "qutrit3"))
    d.add_argument("--kappa", type=float)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_detect)

    s = sub.add_parser("sweep", help="scan or bisect a Werner-type family")
    s.add_argument("--family", default="werner")
    s.add_argument("--dim", type=int, default=3)
    s.add_argument("--psi", choices=PSI_CHOICES, default="mqtr")
    s.add_argument("--sep", choices=SEP_CHOICES, default="mixed")
    s.add_argument("--bound", default="auto", choices=("auto", "fngef", "fnmim6", "fngpq", "qutrit3"))
    s.add_argument("--kappa", type=float)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--bisect", action="store_true")
    mode.add_argument("--grid")
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument("--keep-all", action="store_true", help="do not drop uninformative measurements")
    s.add_argument("--csv", help="write CSV here instead of standard output")
    s.add_argument("--seed", type=int, default=0, help="accepted for uniformity; the sweep is deterministic")
    s.set_defaults(func=cmd_sweep)

    m = sub.add_parser("demo", help="reproduce the two-qutrit example")
    m.set_defaults(func=cmd_demo)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, io.FileFormatError, FinesepError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
