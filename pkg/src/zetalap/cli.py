"""Command-line front end: ``zetalap eval|zeros|verify|plotdata``.

Exit codes: 0 success, 1 numerical or tolerance failure, 2 usage error.
Defaults can be overridden by a ``key=value`` file (``--config PATH``), and
command-line flags override both.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import re
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from . import hardy, laplacian, verify
from .errors import ConfigurationError, ZetalapError
from .records import OutputRecord, fmt
from .specfun import DEFAULT, PrecisionConfig, polygamma, zeta_jet
from .zeros import SweepConfig, cross_check, read_zeros_file, sweep

EXIT_OK, EXIT_NUMERIC, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("zetalap")

# tighter kernel settings used for a posteriori error estimates
REFINED = PrecisionConfig(tail_terms=16, polygamma_shift_threshold=18.0, polygamma_terms=14)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 by default; keep that but make it testable
        raise UsageError(message)


_COMPLEX = re.compile(
    r"^\s*(?:(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*)?"
    r"(?:(?P<sign>[+-])?\s*(?P<im>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij])?\s*$"
)


def parse_complex(text: str) -> complex:
    """'2', '-1.5', '0.5+14.1i', '3 - 2i', 'i', '-2.5e-1i'."""
    m = _COMPLEX.match(text)
    if not m or not text.strip():
        raise UsageError(f"cannot parse number {text!r}")
    re_part, sign, im_part = m.group("re"), m.group("sign"), m.group("im")
    has_imag = text.strip()[-1] in "ij"
    if not has_imag:
        if re_part is None:
            raise UsageError(f"cannot parse number {text!r}")
        return complex(float(re_part), 0.0)
    imag = float(im_part) if im_part is not None else 1.0
    if sign == "-":
        imag = -imag
    real = 0.0
    if re_part is not None:
        if sign is None and im_part is None and re_part is not None:
            # "2i" parsed as re='2' with a bare unit
            return complex(0.0, float(re_part))
        if sign is None:
            raise UsageError(f"cannot parse number {text!r}")
        real = float(re_part)
    return complex(real, imag)


def format_value(v: complex) -> str:
    v = complex(v)
    if v.imag == 0:
        return fmt(v.real)
    sign = "+" if v.imag >= 0 or math.isnan(v.imag) else "-"
    return f"{fmt(v.real)}{sign}{fmt(abs(v.imag))}i"


# --- eval ----------------------------------------------------------------------


def _real_arg(name: str, z: complex) -> float:
    if z.imag != 0:
        raise UsageError(f"{name} takes a real argument")
    return z.real


def _zeta_k(k: int) -> Callable[[complex, PrecisionConfig], complex]:
    return lambda s, cfg: zeta_jet(s, cfg, order=max(k, 1)).derivative(k)


def _tracked(fn):
    def run(z, cfg):
        return fn(_real_arg("this function", z), hardy.UnwindState(cfg=cfg))

    return run


FUNCTIONS: dict[str, Callable[[complex, PrecisionConfig], complex]] = {
    "zeta": _zeta_k(0),
    "zeta1": _zeta_k(1),
    "zeta2": _zeta_k(2),
    "zeta3": _zeta_k(3),
    "digamma": lambda z, cfg: polygamma(0, z, cfg),
    "trigamma": lambda z, cfg: polygamma(1, z, cfg),
    "tetragamma": lambda z, cfg: polygamma(2, z, cfg),
    "theta": hardy.theta,
    "Z": hardy.hardy_z,
    "Q": hardy.q_function,
    "R": _tracked(hardy.r_function),
    "S": _tracked(hardy.s_function),
    "N": _tracked(hardy.backlund_n),
    "G": laplacian.g_function,
    "H": laplacian.h_function,
    "nu": laplacian.nu,
    "chi": laplacian.chi,
    "mu": laplacian.mu,
    "psi": laplacian.psi_fn,
}


def cmd_eval(args, out) -> int:
    if args.function not in FUNCTIONS:
        raise UsageError(f"unknown function {args.function!r}; choose from {', '.join(FUNCTIONS)}")
    z = parse_complex(args.at)
    f = FUNCTIONS[args.function]
    value = complex(f(z, DEFAULT))
    print(format_value(value), file=out)
    if args.jet and args.function.startswith("zeta"):
        jet = zeta_jet(z, DEFAULT, order=3)
        for k, d in enumerate(jet.derivatives()):
            print(f"# d{k} {format_value(d)}", file=out)
    try:
        est = abs(complex(f(z, REFINED)) - value)
        print(f"# error_estimate {fmt(est)}", file=out)
    except ZetalapError:
        pass
    return EXIT_OK


# --- zeros ---------------------------------------------------------------------


def cmd_zeros(args, out) -> int:
    if not args.t_from < args.t_to:
        raise UsageError(f"--from ({args.t_from}) must be below --to ({args.t_to})")
    try:
        cfg = SweepConfig(args.t_from, args.t_to, coarse_step=args.step, workers=args.workers)
    except ConfigurationError as exc:
        raise UsageError(str(exc)) from exc
    result = sweep(cfg)
    matches = {}
    if args.zeros_file:
        for m in cross_check(result.minima, read_zeros_file(args.zeros_file)):
            matches[m.t] = m
    rec = OutputRecord(
        ("index", "kind", "t", "h_residual", "hdot_sign", "z_match", "published_diff"),
        meta={"from": repr(args.t_from), "to": repr(args.t_to), "step": repr(args.step),
              "workers": str(args.workers), "seed": str(args.seed)},
    )
    bad = 0
    for r in result.records:
        if r.kind is None:
            bad += 1
            print(f"warning: {r.flagged}", file=sys.stderr)
            continue
        m = matches.get(r.t)
        rec.append(r.index, r.kind.value, r.t, r.h_residual, 1 if r.hdot > 0 else -1,
                   r.z_signchange_match, None if m is None else m.diff)
        if m is not None and not m.ok:
            print(f"warning: minimum at {fmt(r.t)} has no published zero within 1e-5",
                  file=sys.stderr)
    for lo, hi in result.excluded:
        print(f"# excluded pole band [{fmt(lo)}, {fmt(hi)}]", file=sys.stderr)
    out.write(rec.to_json() + "\n" if args.format == "json" else rec.to_csv())
    print(f"# minima={len(result.minima)} maxima={len(result.maxima)} "
          f"alternating={result.alternates()}", file=sys.stderr)
    return EXIT_NUMERIC if bad or result.failed_points else EXIT_OK


# --- verify ----------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    try:
        rows = verify.run_suite(args.suite, seed=args.seed)
    except ConfigurationError as exc:
        raise UsageError(str(exc)) from exc
    ok = verify.all_passed(rows)
    print(f"# suite={args.suite} seed={args.seed}", file=out)
    for r in rows:
        status = "info" if r.informational else ("PASS" if r.passed else "FAIL")
        print(f"{status:4s}  {r.name:52s} computed={fmt(r.computed):>24s}  "
              f"reference={fmt(r.reference):>24s}  abs_err={r.abs_err:.3e}  "
              f"tol={r.tolerance:.1e}  [{r.provenance.value}]", file=out)
    n_fail = sum(1 for r in rows if not r.informational and not r.passed)
    print(f"# {len(rows)} rows, {n_fail} failing", file=out)
    if args.json:
        doc = {"suite": args.suite, "seed": args.seed, "all_pass": ok,
               "checks": [r.to_json() for r in rows]}
        Path(args.json).write_text(json.dumps(doc, indent=1, allow_nan=False))
    return EXIT_OK if ok else EXIT_NUMERIC


# --- plot data -----------------------------------------------------------------


def _grid(a: float, b: float, n: int) -> list[float]:
    if n < 2:
        raise UsageError("--grid must be at least 2")
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def plot_figure1(ts: Sequence[float]) -> OutputRecord:
    rec = OutputRecord(("t", "re_R", "im_R", "G"))
    state = hardy.UnwindState()
    for t in sorted(ts):
        r = hardy.r_function(t, state)
        rec.append(t, r.real, r.imag, laplacian.g_function(t).real)
    return rec


def plot_figure2(ts: Sequence[float]) -> OutputRecord:
    rec = OutputRecord(("t", "G", "H", "Hdot"))
    for t in ts:
        g, h, hd = laplacian.ghh(t)
        rec.append(t, g.real, h.real, hd.real)
    return rec


def plot_figure3(ts: Sequence[float], ns: Sequence[int]) -> OutputRecord:
    cols = ["t", "nu_norm", "sin2", "diff", "chi_limit"]
    for n in ns:
        cols += [f"nu_scaled_{n}", f"chi_{n}"]
    rec = OutputRecord(tuple(cols))
    # nu is negative on (0, 1) with its extremum at 1/2; normalise to [0, 1]
    peak = laplacian.nu(0.5).real
    for t in ts:
        v = laplacian.nu(t).real / peak + 0.0  # no negative zero
        s2 = laplacian.nu_limit(t)
        row = [t, v, s2, s2 - v, laplacian.chi_limit(t)]
        for n in ns:
            row.append(math.pi / 8 * laplacian.nu_n(n, t))
            row.append(laplacian.chi_n(n, t))
        rec.append(*row)
    return rec


def cmd_plotdata(args, out) -> int:
    fig = args.figure
    lo, hi = args.t_from, args.t_to
    if fig == 3:
        lo = 0.0 if lo is None else lo
        hi = 1.0 if hi is None else hi
    else:
        lo = (0.0 if fig == 1 else 10.0) if lo is None else lo
        hi = (50.0 if fig == 1 else 30.0) if hi is None else hi
    if not lo < hi:
        raise UsageError("--from must be below --to")
    ts = _grid(lo, hi, args.grid)
    if fig == 1:
        rec = plot_figure1(ts)
    elif fig == 2:
        rec = plot_figure2(ts)
    else:
        ns = [int(x) for x in str(args.n_values).split(",") if x.strip()]
        rec = plot_figure3(ts, ns)
    rec.meta.update({"figure": str(fig), "grid": str(args.grid), "seed": str(args.seed)})
    if args.out:
        path = Path(args.out)
        if path.is_dir() or not path.suffix:
            path.mkdir(parents=True, exist_ok=True)
            path = path / f"fig{fig}.csv"
        path.write_text(rec.to_csv())
        print(f"wrote {len(rec)} rows to {path}", file=sys.stderr)
    else:
        out.write(rec.to_csv())
    return EXIT_OK


# --- parser ----------------------------------------------------------------------


def read_config(path: str | Path) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        k, v = line.split("=", 1)
        out[k.strip().replace("-", "_")] = v.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key=value defaults file")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="zetalap", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", parents=[common], help="evaluate one function")
    e.add_argument("function")
    e.add_argument("at", help="real or complex literal such as 0.5+14.1i")
    e.add_argument("--jet", action="store_true", help="also print zeta derivatives")
    e.set_defaults(run=cmd_eval)

    z = sub.add_parser("zeros", parents=[common], help="locate and classify zeros")
    z.add_argument("--from", dest="t_from", type=float, default=0.0)
    z.add_argument("--to", dest="t_to", type=float, default=100.0)
    z.add_argument("--step", type=float, default=0.05)
    z.add_argument("--workers", type=int, default=1)
    z.add_argument("--zeros-file", dest="zeros_file")
    z.add_argument("--format", choices=("csv", "json"), default="csv")
    z.set_defaults(run=cmd_zeros)

    v = sub.add_parser("verify", parents=[common], help="reproduce published values")
    v.add_argument("--suite", default="all", choices=("all", *verify.SUITES))
    v.add_argument("--json", metavar="PATH")
    v.set_defaults(run=cmd_verify)

    pl = sub.add_parser("plotdata", parents=[common], help="emit figure data as CSV")
    pl.add_argument("figure", type=int, choices=(1, 2, 3))
    pl.add_argument("--grid", type=int, default=500)
    pl.add_argument("--from", dest="t_from", type=float, default=None)
    pl.add_argument("--to", dest="t_to", type=float, default=None)
    pl.add_argument("--n-values", dest="n_values", default="2,5,10,20")
    pl.add_argument("--out", metavar="PATH")
    pl.set_defaults(run=cmd_plotdata)
    return p


def _apply_config(parser: argparse.ArgumentParser, argv: Sequence[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not args.config:
        return args
    values = read_config(args.config)
    sub = next(a for a in parser._subparsers._group_actions).choices[args.command]
    known = {}
    for a in sub._actions:
        known[a.dest] = a
        for opt in a.option_strings:
            if opt.startswith("--"):
                known[opt[2:].replace("-", "_")] = a
    for key, raw in values.items():
        action = known.get(key)
        if action is None or action.dest in ("config", "help"):
            raise UsageError(f"unknown config key {key!r} for '{args.command}'")
        if action.type is not None:
            try:
                val = action.type(raw)
            except ValueError as exc:
                raise UsageError(f"bad value for {key}: {raw!r}") from exc
        elif action.const is True:
            val = raw.lower() in ("1", "true", "yes", "on")
        else:
            val = raw
        action.default = val
    return parser.parse_args(argv)


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _apply_config(parser, argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.run(args, out)
    except UsageError as exc:
        print(f"zetalap: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ZetalapError, ArithmeticError, ValueError) as exc:
        print(f"zetalap: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
