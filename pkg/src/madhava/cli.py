"""Command-line front end.

Every subcommand prints one record, as JSON (default) or CSV::

    madhava pi --terms 1000 --digits 10
    madhava sine-table --step 1/48 --count 24 --digits 6 --format csv
    madhava sqrt --n 95 --seed 9 --method bakshali --iters 2

Numeric cells carry a representation tag: ``rational`` for exact fractions
(printed ``p/q``) and ``decimal:<digits>`` for truncated decimals.  Angles are
rational multiples of pi (``--step 1/48`` is pi/48) unless ``--radians`` is
given.

Exit codes: 0 success, 1 a ``verify`` suite reported failures, 2 usage
error, 3 domain or precondition error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from .arith import PI_50, DomainError, FixedDecimal, isqrt_rational, to_fixed
from .aryabhata import (
    central_first_derivative,
    generate_cosine_table,
    generate_sine_table,
    sample_sine_derivative,
    table_errors,
)
from .samkalitam import (
    abel_identity_check,
    arctan_oracle,
    arctan_series,
    j_limit_deviation,
    madhava_pi,
    madhava_pi_fixed,
    power_sum,
    power_sum_recursive,
    quadrant_geometry,
    quadrant_samples,
    quadrant_sum,
)
from .samskaram import (
    TAYLOR_DELTA3_SINE,
    compare_sqrt_methods,
    cosine_interpolate,
    cosine_interpolation_coefficients,
    reciprocal_remainder,
    refine_reciprocal,
    sqrt_bakshali,
    sqrt_heron,
)
from .series import eval_trig, expansion, sin_pi_multiple
from .verify import SUITES, run_suite

__all__ = ["main", "run", "OutputRecord", "argv_from_parameters"]

EXIT_OK, EXIT_FAILED_CHECKS, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


@dataclass(frozen=True)
class Cell:
    value: str
    tag: str

    def to_json(self) -> dict:
        return {"value": self.value, "repr": self.tag}


def rat(x: Fraction | int) -> Cell:
    return Cell(str(Fraction(x)), "rational")


def dec(x: FixedDecimal) -> Cell:
    return Cell(str(x), f"decimal:{x.precision}")


def _plain(v: Any) -> Any:
    return v.to_json() if isinstance(v, Cell) else v


@dataclass
class OutputRecord:
    command: str
    parameters: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "parameters": self.parameters,
            "rows": [{k: _plain(v) for k, v in row.items()} for row in self.rows],
            "metadata": {k: _plain(v) for k, v in self.metadata.items()},
        }
        return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"

    def to_csv(self) -> str:
        # column tags ride in the header, e.g. "value:decimal:12"
        if not self.rows:
            return ""
        names = list(self.rows[0])
        header = []
        for name in names:
            cell = self.rows[0][name]
            header.append(f"{name}:{cell.tag}" if isinstance(cell, Cell) else name)
        out = io.StringIO()
        out.write(",".join(header) + "\n")
        for row in self.rows:
            out.write(",".join(_csv_cell(row[name]) for name in names) + "\n")
        return out.getvalue()


def _csv_cell(v: Any) -> str:
    if isinstance(v, Cell):
        return f'"{v.value}"' if "/" in v.value else v.value
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


# -- argument types -----------------------------------------------------------


def rational_text(text: str) -> str:
    try:
        Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed number {text!r}") from None
    return text


def int_text(text: str) -> str:
    try:
        int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer {text!r}") from None
    return text


def _angle(text: str, radians: bool) -> Fraction:
    """Radians from a pi-multiple (default) or a literal radian value."""
    value = Fraction(text)
    return value if radians else value * PI_50


def _pi_multiple(text: str, radians: bool) -> Fraction:
    value = Fraction(text)
    return value / PI_50 if radians else value


# -- handlers -----------------------------------------------------------------


def cmd_pi(a: argparse.Namespace) -> OutputRecord:
    M, digits = int(a.terms), int(a.digits)
    if a.method == "exact":
        r = madhava_pi(M, digits)
    else:
        r = madhava_pi_fixed(M, max(30, digits + 10))
    bound = 4 * r.error_bound
    estimate = to_fixed(4 * r.partial_sum, digits)
    row = {"terms": rat(M), "pi_estimate": dec(estimate), "error_bound": rat(bound)}
    if a.show_fraction:
        row["quarter_pi_partial_sum"] = rat(r.partial_sum)
    rec = OutputRecord("pi", {}, [row])
    rec.metadata = {
        "digits": digits,
        "terms": M,
        "method": a.method,
        "error_bound": rat(bound),
        "pi_reference": dec(to_fixed(PI_50, digits)),
        "within_bound": abs(4 * r.partial_sum - PI_50) <= bound,
    }
    return rec


def cmd_arctan(a: argparse.Namespace) -> OutputRecord:
    t, M, digits = Fraction(a.t), int(a.terms), int(a.digits)
    r = arctan_series(t, M)
    oracle = arctan_oracle(t, digits + 10)
    row = {
        "t": rat(t),
        "terms": rat(M),
        "partial_sum": dec(to_fixed(r.partial_sum, digits)),
        "error_bound": rat(r.error_bound),
        "oracle": dec(to_fixed(oracle, digits)),
    }
    if a.show_fraction:
        row["partial_sum_exact"] = rat(r.partial_sum)
    meta = {"digits": digits, "terms": M, "error_bound": rat(r.error_bound), "within_bound": r.contains(oracle)}
    return OutputRecord("arctan", {}, [row], meta)


def cmd_powersum(a: argparse.Namespace) -> OutputRecord:
    N, k = int(a.n), int(a.k)
    direct = power_sum(N, k)
    row = {
        "N": rat(N),
        "k": rat(k),
        "sum": rat(direct.exact_sum),
        "normalized": rat(direct.normalized),
        "limit": rat(direct.limit),
    }
    meta: dict[str, Any] = {"method": a.method}
    if a.method == "recursive":
        row["sum"] = rat(power_sum_recursive(N, k).exact_sum)
    elif a.method == "both":
        recursive = power_sum_recursive(N, k)
        row["recursive_sum"] = rat(recursive.exact_sum)
        meta["agree"] = recursive.exact_sum == direct.exact_sum
    return OutputRecord("powersum", {}, [row], meta)


def cmd_abel(a: argparse.Namespace) -> OutputRecord:
    N, k = int(a.n), int(a.k)
    lhs, rhs = abel_identity_check(N, k)
    row = {"N": rat(N), "k": rat(k), "lhs": rat(lhs), "rhs": rat(rhs), "equal": lhs == rhs}
    return OutputRecord("abel-check", {}, [row], {"equal": lhs == rhs})


def cmd_jk(a: argparse.Namespace) -> OutputRecord:
    N, k, digits = int(a.n), int(a.k), int(a.digits)
    dev = j_limit_deviation(N, k)
    rec = power_sum(N, k)
    row = {
        "N": rat(N),
        "k": rat(k),
        "normalized": dec(to_fixed(rec.normalized, digits)),
        "limit": rat(rec.limit),
        "deviation": dec(to_fixed(dev, digits)),
        "n_times_deviation": dec(to_fixed(N * dev, digits)),
    }
    if a.show_fraction:
        row["deviation_exact"] = rat(dev)
    return OutputRecord("jk-deviation", {}, [row], {"digits": digits, "below_one_over_n": 0 < dev <= Fraction(1, N)})


def _quadrant_row(s, digits: int) -> dict[str, Any]:
    return {
        "n": rat(s.n),
        "oa_prev_sq": rat(s.oa_prev_sq),
        "oa_n_sq": rat(s.oa_n_sq),
        "predicted_sin_delta": rat(s.predicted_sin_delta),
        "refined_prediction": dec(to_fixed(s.refined_prediction, digits)),
        "true_sin_delta": dec(to_fixed(s.true_sin_delta, digits)),
    }


def cmd_quadrant(a: argparse.Namespace) -> OutputRecord:
    N, digits = int(a.n), int(a.digits)
    if a.index is not None:
        rows = [_quadrant_row(quadrant_geometry(N, int(a.index), digits + 4), digits)]
    else:
        rows = [_quadrant_row(s, digits) for s in quadrant_samples(N, digits + 4)]
    total = quadrant_sum(N, digits + 10)
    meta = {
        "digits": digits,
        "segments": N,
        "predicted_sum": dec(to_fixed(total.partial_sum, digits)),
        "quarter_pi": dec(to_fixed(PI_50 / 4, digits)),
        "shortfall": dec(to_fixed(PI_50 / 4 - total.partial_sum, digits)),
    }
    return OutputRecord("quadrant", {}, rows, meta)


def cmd_sine_table(a: argparse.Namespace) -> OutputRecord:
    eps = _pi_multiple(a.step, a.radians)
    count, digits = int(a.count), int(a.digits)
    if a.kind == "cosine":
        table = generate_cosine_table(eps, count, digits)
    else:
        table = generate_sine_table(eps, count, digits, a.seed)
    errors = table_errors(table)
    rows = []
    for entry, err in zip(table.entries, errors):
        ref = entry.angle if a.kind == "sine" else Fraction(1, 2) - entry.angle
        rows.append(
            {
                "n": rat(entry.index),
                "angle_pi": rat(entry.angle),
                "degrees": rat(entry.degrees),
                "arcminutes": rat(entry.arcminutes),
                "value": dec(entry.value.truncate(digits)),
                "oracle": dec(sin_pi_multiple(ref, digits)),
                "abs_error": dec(to_fixed(err, digits)),
            }
        )
    meta = {
        "digits": digits,
        "working_digits": table.working_precision,
        "seed_policy": table.seed_policy,
        "multiplier": dec(table.multiplier.truncate(digits)),
        "max_abs_error": dec(to_fixed(max(errors), digits)),
    }
    return OutputRecord("sine-table", {}, rows, meta)


def cmd_central_diff(a: argparse.Namespace) -> OutputRecord:
    digits = int(a.digits)
    if a.phi is not None:
        if a.h is None:
            raise DomainError("--phi requires --h")
        phi, h = _angle(a.phi, a.radians), _angle(a.h, a.radians)
        sample = sample_sine_derivative(phi, h, digits)
        oracle = eval_trig("cosine", phi, digits)
        row = {
            "f_plus": dec(sample.f_plus.truncate(digits)),
            "f_minus": dec(sample.f_minus.truncate(digits)),
            "window": rat(2 * h) if a.radians else dec(to_fixed(2 * h, digits)),
            "estimate": dec(sample.estimate),
            "second_estimate": dec(sample.second_estimate),
            "oracle_cos": dec(oracle),
        }
        return OutputRecord("central-diff", {}, [row], {"digits": digits})
    if a.plus is None or a.minus is None or a.window is None:
        raise DomainError("give --plus, --minus and --window, or --phi and --h")
    est = central_first_derivative(a.plus, a.minus, a.window, digits + 6)
    row = {
        "f_plus": rat(Fraction(a.plus)),
        "f_minus": rat(Fraction(a.minus)),
        "window": rat(Fraction(a.window)),
        "estimate": dec(est.truncate(digits)),
        "estimate_nearest": dec(est.round_half_even(digits)),
    }
    return OutputRecord("central-diff", {}, [row], {"digits": digits})


def cmd_sqrt(a: argparse.Namespace) -> OutputRecord:
    n, m, iters, digits = Fraction(a.n), Fraction(a.seed), int(a.iters), int(a.digits)
    if n <= 0:
        raise DomainError("n must be positive")
    root = isqrt_rational(n, digits + 20)
    traces = []
    meta: dict[str, Any] = {"digits": digits, "sqrt_reference": dec(to_fixed(root, digits))}
    if a.method in ("bakshali", "compare"):
        traces.append(sqrt_bakshali(n, m, iters))
    if a.method in ("heron", "compare"):
        traces.append(sqrt_heron(n, m, iters))
    if a.method == "compare":
        meta["closer"] = compare_sqrt_methods(n, m, iters, root)["closer"]
    rows = []
    for trace in traces:
        for i, value in enumerate(trace.iterates, start=1):
            rows.append(
                {
                    "method": trace.method,
                    "iteration": rat(i),
                    "value": rat(value),
                    "decimal": dec(to_fixed(value, digits)),
                    "abs_error": dec(to_fixed(abs(value - root), digits)),
                }
            )
    return OutputRecord("sqrt", {}, rows, meta)


def cmd_reciprocal(a: argparse.Namespace) -> OutputRecord:
    x, d, terms, digits = Fraction(a.x), Fraction(a.d), int(a.terms), int(a.digits)
    value = refine_reciprocal(x, d, terms)
    row = {
        "x": rat(x),
        "d": rat(d),
        "terms": rat(terms),
        "value": rat(value),
        "decimal": dec(to_fixed(value, digits)),
        "target": rat(1 / (x - d)),
        "remainder": rat(reciprocal_remainder(x, d, terms)),
    }
    return OutputRecord("reciprocal", {}, [row], {"digits": digits})


def cmd_interpolate(a: argparse.Namespace) -> OutputRecord:
    order, digits = int(a.order), int(a.digits)
    coeffs = cosine_interpolation_coefficients(order)
    rows = []
    for power, (c, s) in enumerate(coeffs.pairs()):
        rows.append({"delta_power": rat(power), "cos_coefficient": rat(c), "sin_coefficient": rat(s)})
    meta: dict[str, Any] = {"order": order, "digits": digits}
    if order == 3:
        meta["taylor_delta3_sine"] = rat(TAYLOR_DELTA3_SINE)
        meta["deviation_from_taylor"] = rat(coeffs.sin_part.coefficient(3) - TAYLOR_DELTA3_SINE)
    if a.theta is not None or a.delta is not None:
        if a.theta is None or a.delta is None:
            raise DomainError("--theta and --delta go together")
        theta, delta = _angle(a.theta, a.radians), _angle(a.delta, a.radians)
        meta["value"] = dec(cosine_interpolate(theta, delta, order, digits))
        meta["oracle"] = dec(eval_trig("cosine", theta + delta, digits))
    return OutputRecord("interpolate", {}, rows, meta)


def cmd_expand(a: argparse.Namespace) -> OutputRecord:
    exp = expansion(a.kind, int(a.order))
    rows = [{"degree": rat(d), "coefficient": rat(c)} for d, c in exp.coefficients().items()]
    return OutputRecord("expand", {}, rows, {"kind": a.kind, "order": exp.order, "polynomial": str(exp.polynomial)})


def cmd_verify(a: argparse.Namespace) -> OutputRecord:
    checks = run_suite(a.suite)
    rows = []
    for suite in dict.fromkeys(c.suite for c in checks):
        mine = [c for c in checks if c.suite == suite]
        passed = sum(c.passed for c in mine)
        rows.append({"suite": suite, "passed": rat(passed), "failed": rat(len(mine) - passed)})
    failed = [f"{c.suite}: {c.name}" for c in checks if not c.passed]
    return OutputRecord("verify", {}, rows, {"all_passed": not failed, "failures": failed})


# -- parser -------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, digits: bool = True) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    if digits:
        p.add_argument("--digits", type=int_text, default="12")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="madhava", description="Kerala-school series, tables and refinements.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, handler: Callable, help: str, digits: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(handler=handler)
        _common(p, digits)
        return p

    p = add("pi", cmd_pi, "partial sums of 1 - 1/3 + 1/5 - ...")
    p.add_argument("--terms", type=int_text, required=True)
    p.add_argument("--method", choices=("exact", "fixed"), default="exact")
    p.add_argument("--show-fraction", action="store_true")

    p = add("arctan", cmd_arctan, "t - t^3/3 + t^5/5 - ... for 0 <= t <= 1")
    p.add_argument("--t", type=rational_text, required=True)
    p.add_argument("--terms", type=int_text, required=True)
    p.add_argument("--show-fraction", action="store_true")

    p = add("powersum", cmd_powersum, "S_N(k) = 1^k + ... + N^k", digits=False)
    p.add_argument("--n", type=int_text, required=True)
    p.add_argument("--k", type=int_text, required=True)
    p.add_argument("--method", choices=("direct", "recursive", "both"), default="both")

    p = add("abel-check", cmd_abel, "both sides of the Abel re-summation identity", digits=False)
    p.add_argument("--n", type=int_text, required=True)
    p.add_argument("--k", type=int_text, required=True)

    p = add("jk-deviation", cmd_jk, "I_N(k) - 1/(k+1)")
    p.add_argument("--n", type=int_text, required=True)
    p.add_argument("--k", type=int_text, required=True)
    p.add_argument("--show-fraction", action="store_true")

    p = add("quadrant", cmd_quadrant, "angle increments along the tangent line")
    p.add_argument("--n", type=int_text, required=True, help="segment count N")
    p.add_argument("--index", type=int_text, default=None, help="single segment (default: all)")

    p = add("sine-table", cmd_sine_table, "finite-difference sine (or cosine) table")
    p.add_argument("--step", type=rational_text, required=True, help="step as a multiple of pi")
    p.add_argument("--count", type=int_text, required=True)
    p.add_argument("--seed", choices=("aryabhata", "two-term", "oracle"), default="aryabhata")
    p.add_argument("--kind", choices=("sine", "cosine"), default="sine")
    p.add_argument("--radians", action="store_true")

    p = add("central-diff", cmd_central_diff, "central difference quotient")
    p.add_argument("--plus", type=rational_text, default=None)
    p.add_argument("--minus", type=rational_text, default=None)
    p.add_argument("--window", type=rational_text, default=None)
    p.add_argument("--phi", type=rational_text, default=None)
    p.add_argument("--h", type=rational_text, default=None)
    p.add_argument("--radians", action="store_true")

    p = add("sqrt", cmd_sqrt, "square-root refinement traces")
    p.add_argument("--n", type=rational_text, required=True)
    p.add_argument("--seed", type=rational_text, required=True)
    p.add_argument("--method", choices=("bakshali", "heron", "compare"), default="compare")
    p.add_argument("--iters", type=int_text, default="2")

    p = add("reciprocal", cmd_reciprocal, "truncated expansion of 1/(x - d)")
    p.add_argument("--x", type=rational_text, required=True)
    p.add_argument("--d", type=rational_text, required=True)
    p.add_argument("--terms", type=int_text, required=True)

    p = add("interpolate", cmd_interpolate, "cosine interpolation coefficients")
    p.add_argument("--order", type=int_text, default="3")
    p.add_argument("--theta", type=rational_text, default=None)
    p.add_argument("--delta", type=rational_text, default=None)
    p.add_argument("--radians", action="store_true")

    p = add("expand", cmd_expand, "sine/cosine polynomial by repeated double integration", digits=False)
    p.add_argument("--kind", choices=("sine", "cosine"), required=True)
    p.add_argument("--order", type=int_text, required=True)

    p = add("verify", cmd_verify, "run a named invariant suite", digits=False)
    p.add_argument("--suite", choices=("all", *SUITES), default="all")

    return parser


def _parameters(ns: argparse.Namespace) -> dict[str, Any]:
    return {k: v for k, v in vars(ns).items() if k not in ("command", "handler") and v is not None}


def argv_from_parameters(command: str, parameters: dict[str, Any]) -> list[str]:
    """Rebuild an argument list from a record's ``parameters`` block."""
    argv = [command]
    for key, value in parameters.items():
        flag = "--" + key.replace("_", "-")
        if isinstance(value, bool):
            if value:
                argv.append(flag)
        else:
            argv += [flag, str(value)]
    return argv


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        record = ns.handler(ns)
    except (DomainError, ZeroDivisionError) as exc:
        print(f"madhava {ns.command}: error: {exc}", file=stderr)
        return EXIT_DOMAIN
    record.command = ns.command
    record.parameters = _parameters(ns)
    stdout.write(record.to_csv() if ns.format == "csv" else record.to_json())
    if ns.command == "verify" and not record.metadata["all_passed"]:
        return EXIT_FAILED_CHECKS
    return EXIT_OK


def main() -> None:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # exact fractions can run to 10^5 digits
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
