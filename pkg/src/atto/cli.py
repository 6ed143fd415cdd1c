"""Command-line front end.

Exit codes: 0 ok, 1 property failure, 2 parse error, 3 numeric failure,
4 numerical inconsistency between two routes.
"""

import argparse
import csv
import io
import json
import os
import sys
import tempfile

import numpy as np

from .blaschke import BlaschkeProduct
from .errors import AttoError, InvariantViolation, PoleOnOrInsideDisk
from .symbols import RationalAnalytic, is_zero_symbol, make_symbol, zero_class_symbol
from .tto import (atto_matrix, crofoot_operator, rank_one_boundary, rank_one_interior_a,
                  rank_one_interior_b, rank_one_outer, transport_symbol)
from .verify import format_report, run_suite

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

EXIT_OK, EXIT_PROPERTY, EXIT_PARSE, EXIT_NUMERIC, EXIT_INCONSISTENT = range(5)

DEFAULT_MATRIX_TOL = 1e-9
DEFAULT_QUADRATURE_TOL = 1e-13
RANK_ONE_TOL = {"rank_one_a": 1e-9, "rank_one_b": 1e-9, "rank_one_boundary": 1e-8}


class ConfigError(Exception):
    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")


# -- config parsing --------------------------------------------------------

def _complex(value, path):
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)):
        raise ConfigError(path, f"expected [re, im], got {value!r}")
    return complex(value[0], value[1])


def _field(data, key, path):
    if not isinstance(data, dict):
        raise ConfigError(path, "expected an object")
    if key not in data:
        raise ConfigError(f"{path}.{key}", "missing")
    return data[key]


def _coeffs(value, path):
    if not isinstance(value, list) or not value:
        raise ConfigError(path, "expected a non-empty list of [re, im] coefficients")
    return [_complex(v, f"{path}[{i}]") for i, v in enumerate(value)]


def parse_blaschke(data, path):
    c = _complex(_field(data, "constant", path), f"{path}.constant")
    if abs(abs(c) - 1) > 1e-14:
        raise ConfigError(f"{path}.constant", f"modulus {abs(c)!r} is not 1")
    zeros = _field(data, "zeros", path)
    if not isinstance(zeros, list) or not zeros:
        raise ConfigError(f"{path}.zeros", "expected a non-empty list")
    parsed = []
    for i, z in enumerate(zeros):
        a = _complex(z, f"{path}.zeros[{i}]")
        if not abs(a) <= 1 - 1e-12:
            raise ConfigError(f"{path}.zeros[{i}]", f"modulus {abs(a)!r} is not < 1")
        parsed.append(a)
    return BlaschkeProduct(c, tuple(parsed))


def parse_rational(data, path):
    num = _coeffs(_field(data, "num", path), f"{path}.num")
    den = _coeffs(data.get("den", [[1.0, 0.0]]), f"{path}.den")
    try:
        return RationalAnalytic(num, den)
    except PoleOnOrInsideDisk as exc:
        raise ConfigError(f"{path}.den", str(exc)) from exc


def parse_symbol(data, alpha, beta, path="symbol"):
    """Return ``(symbol, builder, point)``; ``builder`` is None for explicit symbols."""
    if not isinstance(data, dict):
        raise ConfigError(path, "expected an object")
    builder = data.get("builder")
    try:
        if builder is None:
            g_plus = parse_rational(_field(data, "g_plus", path), f"{path}.g_plus")
            g_minus = (parse_rational(data["g_minus"], f"{path}.g_minus")
                       if "g_minus" in data else RationalAnalytic.zero())
            return make_symbol(g_plus, g_minus), None, None
        if builder == "zero_class":
            h1 = parse_rational(_field(data, "h1", path), f"{path}.h1")
            h2 = parse_rational(_field(data, "h2", path), f"{path}.h2")
            return zero_class_symbol(alpha, beta, h1, h2), builder, None
        if builder in ("rank_one_a", "rank_one_b"):
            w = _complex(_field(data, "w", path), f"{path}.w")
            if not abs(w) <= 1 - 1e-12:
                raise ConfigError(f"{path}.w", f"modulus {abs(w)!r} is not < 1")
            fn = rank_one_interior_a if builder == "rank_one_a" else rank_one_interior_b
            return fn(alpha, beta, w)[0], builder, w
        if builder == "rank_one_boundary":
            eta = _complex(_field(data, "eta", path), f"{path}.eta")
            if abs(abs(eta) - 1) > 1e-14:
                raise ConfigError(f"{path}.eta", f"modulus {abs(eta)!r} is not 1")
            return rank_one_boundary(alpha, beta, eta)[0], builder, eta
    except InvariantViolation as exc:
        raise ConfigError(path, str(exc)) from exc
    raise ConfigError(f"{path}.builder", f"unknown builder {builder!r}")


class Instance:
    def __init__(self, alpha, beta, symbol, builder, point, matrix_tol, quadrature_tol, seed):
        self.alpha, self.beta = alpha, beta
        self.symbol, self.builder, self.point = symbol, builder, point
        self.matrix_tol, self.quadrature_tol, self.seed = matrix_tol, quadrature_tol, seed


def parse_config(data):
    alpha = parse_blaschke(_field(data, "alpha", "config"), "alpha")
    beta = parse_blaschke(data["beta"], "beta") if "beta" in data else alpha
    symbol, builder, point = parse_symbol(_field(data, "symbol", "config"), alpha, beta)
    tols = data.get("tolerances", {})
    if not isinstance(tols, dict):
        raise ConfigError("tolerances", "expected an object")
    out = {}
    for key, default in (("matrix", DEFAULT_MATRIX_TOL), ("quadrature", DEFAULT_QUADRATURE_TOL)):
        v = tols.get(key, default)
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not v > 0:
            raise ConfigError(f"tolerances.{key}", f"expected a positive number, got {v!r}")
        out[key] = float(v)
    seed = data.get("seed", 0)
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ConfigError("seed", f"expected an integer, got {seed!r}")
    return Instance(alpha, beta, symbol, builder, point, out["matrix"], out["quadrature"], seed)


def load_config(path):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ConfigError(path, f"cannot read: {exc.strerror}") from exc
    try:
        if str(path).endswith(".toml"):
            data = tomllib.loads(raw.decode())
        else:
            data = json.loads(raw)
    except (ValueError, UnicodeDecodeError) as exc:
        raise ConfigError(path, f"malformed: {exc}") from exc
    return parse_config(data)


# -- output ------------------------------------------------------------------

def _c(z):
    return [float(z.real), float(z.imag)]


def atomic_write(path, text):
    """Write via a temporary file and rename, so failures leave no partial file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".atto-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(payload, out):
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        atomic_write(out, text)
    else:
        sys.stdout.write(text)


def matrix_csv(entries):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["row", "col", "re", "im"])
    for (j, k), v in np.ndenumerate(entries):
        writer.writerow([j, k, repr(float(v.real)), repr(float(v.imag))])
    return buf.getvalue()


# -- commands --------------------------------------------------------------

def _tol(args, inst):
    return args.tol if args.tol is not None else inst.matrix_tol


def cmd_matrix(args):
    inst = load_config(args.config)
    m = atto_matrix(inst.alpha, inst.beta, inst.symbol, tol=inst.quadrature_tol)
    if args.csv:
        atomic_write(args.csv, matrix_csv(m.entries))
    emit(m.to_json(), args.out)
    return EXIT_OK


def cmd_check_zero(args):
    inst = load_config(args.config)
    tol = _tol(args, inst)
    verdict, cert = is_zero_symbol(inst.alpha, inst.beta, inst.symbol, tol=tol)
    norm = atto_matrix(inst.alpha, inst.beta, inst.symbol, tol=inst.quadrature_tol).norm
    emit({"is_zero": bool(verdict),
          "c": _c(cert.c) if verdict else None,
          "pair_residual": cert.residual,
          "matrix_norm": norm}, args.out)
    if bool(verdict) != (norm < tol):
        print(f"inconsistent: symbol-level verdict {verdict}, matrix norm {norm:.3e}",
              file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def _point(text, default, name):
    if text is None or text == "auto":
        return default
    try:
        w = complex(text.replace(" ", ""))
    except ValueError as exc:
        raise ConfigError(f"--{name}", f"cannot parse {text!r} as a complex number") from exc
    if not abs(w) <= 1 - 1e-12:
        raise ConfigError(f"--{name}", f"modulus {abs(w)!r} is not < 1")
    return w


def cmd_crofoot(args):
    inst = load_config(args.config)
    a = _point(args.a, complex(inst.alpha(0)), "a")
    b = _point(args.b, complex(inst.beta(0)), "b")
    qtol = inst.quadrature_tol
    Ja, Jb = crofoot_operator(inst.alpha, a, tol=qtol), crofoot_operator(inst.beta, b, tol=qtol)
    A = atto_matrix(inst.alpha, inst.beta, inst.symbol, tol=qtol)
    s_hat = transport_symbol(inst.alpha, inst.beta, a, b, inst.symbol)
    A_hat = atto_matrix(Ja.target.alpha, Jb.target.alpha, s_hat, tol=qtol)
    conjugated = Jb.matrix @ A.entries @ Ja.inverse_matrix(tol=qtol)
    residual = float(np.linalg.norm(conjugated - A_hat.entries, 2))
    tol = _tol(args, inst)
    emit({"a": _c(a), "b": _c(b),
          "alpha_a": Ja.target.alpha.to_json(), "beta_b": Jb.target.alpha.to_json(),
          "alpha_a_at_0": _c(complex(Ja.target.alpha(0))),
          "beta_b_at_0": _c(complex(Jb.target.alpha(0))),
          "transported_symbol": s_hat.to_json(),
          "matrix": A.to_json(), "transported_matrix": A_hat.to_json(),
          "residual": residual}, args.out)
    if not residual < tol:
        print(f"conjugation residual {residual:.3e} exceeds {tol:g}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_rank_one(args):
    inst = load_config(args.config)
    if inst.builder not in RANK_ONE_TOL:
        raise ConfigError("symbol.builder", "rank-one needs rank_one_a, rank_one_b "
                          "or rank_one_boundary")
    kind = {"rank_one_a": "a", "rank_one_b": "b", "rank_one_boundary": "boundary"}[inst.builder]
    m = atto_matrix(inst.alpha, inst.beta, inst.symbol, tol=inst.quadrature_tol)
    outer = rank_one_outer(kind, inst.alpha, inst.beta, inst.point, tol=inst.quadrature_tol)
    residual = float(np.max(np.abs(m.entries - outer.entries)))
    tol = args.tol if args.tol is not None else RANK_ONE_TOL[inst.builder]
    if args.csv:
        atomic_write(args.csv, matrix_csv(m.entries))
    emit({"builder": inst.builder, "point": _c(inst.point),
          "symbol": inst.symbol.to_json(), "matrix": m.to_json(),
          "outer_product": outer.to_json(), "residual": residual}, args.out)
    if not residual < tol:
        print(f"rank-one residual {residual:.3e} exceeds {tol:g}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_verify(args):
    if args.trials < 0:
        raise ConfigError("--trials", "must be >= 0")
    report = run_suite(seed=args.seed, trials=args.trials)
    if args.report:
        atomic_write(args.report, json.dumps(report, indent=2) + "\n")
    print(format_report(report))
    if not report["passed"]:
        failed = [r["property"] for r in report["properties"] if not r["passed"]]
        print("failing properties: " + ", ".join(failed), file=sys.stderr)
        return EXIT_PROPERTY
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="atto", description="Asymmetric truncated Toeplitz operators on model spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_config(p):
        p.add_argument("config_path", nargs="?", metavar="CONFIG")
        p.add_argument("--config", dest="config_opt", metavar="PATH")
        p.add_argument("--out", metavar="PATH", help="write JSON here instead of stdout")
        p.add_argument("--tol", type=float, default=None)
        return p

    p = with_config(sub.add_parser("matrix", help="assemble the operator matrix"))
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_matrix)

    p = with_config(sub.add_parser("check-zero", help="decide whether the operator is zero"))
    p.set_defaults(func=cmd_check_zero)

    p = with_config(sub.add_parser("crofoot", help="transport by Crofoot transforms"))
    p.add_argument("--a", default=None, help="complex point or 'auto' (alpha(0))")
    p.add_argument("--b", default=None, help="complex point or 'auto' (beta(0))")
    p.set_defaults(func=cmd_crofoot)

    p = with_config(sub.add_parser("rank-one", help="rank-one builder vs outer product"))
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_rank_one)

    p = sub.add_parser("verify", help="run the randomized property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--report", metavar="PATH")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "verify":
        args.config = args.config_opt or args.config_path
        if not args.config:
            parser.error(f"{args.command}: a config file is required")
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AttoError as exc:
        print(f"numeric failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except np.linalg.LinAlgError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
