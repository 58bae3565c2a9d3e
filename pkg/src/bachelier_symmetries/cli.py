"""Command-line surface: evaluate, tabulate, verify and transform solutions.

Subcommands
    eval       print an expression's value at one (t, S) point
    table      emit a CSV price surface over a rectangular grid
    verify     run a named check suite and print one PASS/FAIL line per check
    transform  append a group element to an expression and print it back

Exit codes: 0 success, 1 a verify check failed, 2 parse/semantic/usage
problems, 3 domain violations (groups 4/5 out of range), 4 exponent
overflow. Standard output carries only data; diagnostics go to standard
error.

A --config file holds flat key=value lines ('#' starts a comment) with the
same keys as the long flags (r, sigma, t, S, expr, t-range, S-range, out,
scope). Config values fill in flags that were not given on the command
line; explicit flags always win.
"""

from __future__ import annotations

import argparse
import sys

from .errors import DomainError, InvalidParameter, ParseError, RangeError, SemanticError
from .pde_verify import GridSpec
from .solutions import ModelParams
from .spec_lang import SolutionExpr, expression_function, format_expr, parse_expr, parse_group_element
from .verification import run_scope

__all__ = ["main"]

DEFAULT_R = 0.05
DEFAULT_SIGMA = 0.2

_CONFIG_KEYS = ("r", "sigma", "t", "S", "expr", "t-range", "S-range", "out", "scope")
_FLOAT_KEYS = ("r", "sigma", "t", "S")


def load_config(path: str) -> dict[str, str]:
    """Read a flat key=value config file; '#' comments and blank lines skipped."""
    values: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise InvalidParameter(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
                key, _, value = line.partition("=")
                key = key.strip()
                if key not in _CONFIG_KEYS:
                    raise InvalidParameter(f"{path}:{lineno}: unknown config key {key!r}")
                values[key] = value.strip()
    except OSError as err:
        raise InvalidParameter(f"cannot read config file {path}: {err}") from err
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bachsym",
        description="Evaluate, tabulate, verify and transform closed-form "
                    "solutions of the Bachelier pricing PDE.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--r", type=float, default=None, help="continuously compounded rate")
        p.add_argument("--sigma", type=float, default=None, help="absolute volatility (> 0)")
        p.add_argument("--config", default=None, help="key=value config file")
        p.add_argument("--out", default=None, help="write output to this path instead of stdout")

    p_eval = sub.add_parser("eval", help="evaluate an expression at one point")
    common(p_eval)
    p_eval.add_argument("--expr", default=None, help="expression text, e.g. '2*C1[0] | G4(0.5)'")
    p_eval.add_argument("--t", type=float, default=None, help="evaluation time")
    p_eval.add_argument("--S", type=float, default=None, help="evaluation price")

    p_table = sub.add_parser("table", help="emit a CSV surface over a grid")
    common(p_table)
    p_table.add_argument("--expr", default=None, help="expression text")
    p_table.add_argument("--t-range", default=None, metavar="LO:HI:N", help="time grid")
    p_table.add_argument("--S-range", default=None, metavar="LO:HI:N", help="price grid")

    p_verify = sub.add_parser("verify", help="run a check suite")
    common(p_verify)
    p_verify.add_argument("--scope", default=None,
                          choices=("theorem1", "theorem2", "groups", "examples", "all"),
                          help="which suite to run (default: all)")

    p_transform = sub.add_parser("transform", help="append a group element to an expression")
    common(p_transform)
    p_transform.add_argument("--expr", default=None, help="expression text")
    p_transform.add_argument("group", help="group element to append, e.g. 'G6(0.2)'")
    return parser


def _merge_config(args: argparse.Namespace) -> set[str]:
    """Fill unset flags from the config file; returns the explicitly set keys."""
    explicit = {
        key for key in _CONFIG_KEYS
        if getattr(args, key.replace("-", "_"), None) is not None
    }
    if args.config is not None:
        for key, text in load_config(args.config).items():
            dest = key.replace("-", "_")
            if not hasattr(args, dest) or getattr(args, dest) is not None:
                continue
            if key in _FLOAT_KEYS:
                try:
                    value = float(text)
                except ValueError:
                    raise InvalidParameter(f"config value for {key} is not a number: {text!r}")
                setattr(args, dest, value)
            else:
                setattr(args, dest, text)
            explicit.add(key)
    return explicit


def _require(args, *keys):
    for key in keys:
        if getattr(args, key.replace("-", "_"), None) is None:
            raise InvalidParameter(f"missing required value --{key}")


def _params(args) -> ModelParams:
    r = args.r if args.r is not None else DEFAULT_R
    sigma = args.sigma if args.sigma is not None else DEFAULT_SIGMA
    return ModelParams(r, sigma)


def _emit(out_path, text: str):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _parse_axis(label: str, text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise InvalidParameter(f"--{label} must be LO:HI:N, got {text!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise InvalidParameter(f"--{label} must be LO:HI:N with numeric fields, got {text!r}")
    return lo, hi, count


def _cmd_eval(args, explicit) -> int:
    _require(args, "expr", "t", "S")
    expr = parse_expr(args.expr)
    value = expression_function(expr, _params(args))(args.t, args.S)
    _emit(args.out, f"{value:.17g}\n")
    return 0


def _cmd_table(args, explicit) -> int:
    _require(args, "expr", "t-range", "S-range")
    expr = parse_expr(args.expr)
    t_lo, t_hi, nt = _parse_axis("t-range", args.t_range)
    s_lo, s_hi, ns = _parse_axis("S-range", args.S_range)
    grid = GridSpec(t_range=(t_lo, t_hi), S_range=(s_lo, s_hi), nt=nt, nS=ns)
    f = expression_function(expr, _params(args))
    lines = ["t,S,C"]
    skipped = 0
    for t in grid.t_points():
        for s in grid.S_points():
            try:
                lines.append(f"{t!r},{s!r},{f(t, s)!r}")
            except DomainError:
                lines.append(f"{t!r},{s!r},")
                skipped += 1
    lines.append(f"# skipped={skipped}")
    _emit(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_verify(args, explicit) -> int:
    scope = args.scope if args.scope is not None else "all"
    params = _params(args) if explicit & {"r", "sigma"} else None
    results = run_scope(scope, params)
    width = max(len(res.name) for res in results)
    lines = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"{status} {res.name:<{width}}  measured={res.measured:<12.3e} tol={res.tolerance:.1e}"
        if res.detail:
            line += f"  ({res.detail})"
        lines.append(line)
    passed = sum(res.passed for res in results)
    lines.append(f"# {passed}/{len(results)} checks passed")
    _emit(args.out, "\n".join(lines) + "\n")
    return 0 if passed == len(results) else 1


def _cmd_transform(args, explicit) -> int:
    _require(args, "expr")
    expr = parse_expr(args.expr)
    element = parse_group_element(args.group)
    _emit(args.out, format_expr(SolutionExpr(expr.combo, expr.pipeline + (element,))) + "\n")
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "transform": _cmd_transform,
}

# numeric and range values routinely start with '-' (negative prices are the
# model's selling point); glue them to their flag so argparse cannot mistake
# them for option names
_VALUE_FLAGS = {"--r", "--sigma", "--t", "--S", "--t-range", "--S-range"}


def _glue_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_glue_values(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        explicit = _merge_config(args)
        return _COMMANDS[args.command](args, explicit)
    except (ParseError, SemanticError, InvalidParameter) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except DomainError as err:
        print(f"domain error: {err}", file=sys.stderr)
        return 3
    except (RangeError, OverflowError) as err:
        print(f"range error: {err}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
