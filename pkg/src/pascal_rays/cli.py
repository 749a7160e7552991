"""Command-line front end.

Each subcommand wraps one library operation. Output is a plain listing by
default, one JSON record with ``--json``; ``--out FILE`` also appends the
record to a line-delimited log. Exit status is 0 on success, 1 when a check
fails or a sweep finds a counterexample, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import delta_poly, lattice, pf, props, rays
from .errors import DomainError, InvariantViolation, UsageError
from .records import ResultRecord, enc_frac, enc_ints

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + m.replace("_", "-") for m in missing)
        raise UsageError(f"{args.command} needs {flags}")


def _parse_values(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"--values must be comma-separated integers, got {text!r}")


def _ray(args) -> rays.RayParams:
    _need(args, "n0", "k0", "d", "delta")
    if args.d < 0 or args.delta < 0:
        if args.d < 0 and args.start:
            raise UsageError("a reversed window must start at 0")
        return rays.normalize(args.n0, args.k0, args.d, args.delta, args.len)
    return rays.RayParams(args.n0, args.k0, args.d, args.delta)


def _sequence(args, default_len=None):
    """Values from --values, or from the ray flags over [--start, --start + --len)."""
    if args.values is not None:
        values = _parse_values(args.values)
        if not values:
            raise UsageError("--values is empty")
        return values, None
    params = _ray(args)
    length = args.len
    if length is None:
        if default_len is None:
            raise UsageError(f"{args.command} needs --len or --values")
        length = default_len(params)
    return list(rays.generate(params, args.start, length).values), params


def _transversal_len(params):
    return pf.transversal_support_length(params)


# --- handlers: each returns (outcome, ok) ------------------------------------

def cmd_gen(args):
    values, params = _sequence(args)
    return {"params": list(params.as_tuple()) if params else None, "start": args.start,
            "values": enc_ints(values)}, True


def cmd_classify(args):
    values, params = _sequence(args)
    out = {"report": props.classify(values).as_dict(), "length": len(values)}
    if params is not None:
        out["params"] = list(params.as_tuple())
        out["regime"] = rays.regime(params).tag.value
    return out, True


def cmd_regime(args):
    _need(args, "d", "delta")
    params = rays.RayParams(args.n0 or 0, args.k0 or 0, args.d, args.delta)
    r = rays.regime(params)
    return {"regime": r.tag.value, "predicted": sorted(r.predicted)}, True


def cmd_mode(args):
    values, _ = _sequence(args)
    rep = props.classify(values)
    return {"unimodal": rep.is_unimodal, "modes": list(rep.modes) if rep.modes else None,
            "argmax": list(props.argmax_scan(values))}, rep.is_unimodal


def cmd_turning(args):
    if args.vertical:
        _need(args, "n0")
        m = props.predicted_turning_point_vertical(args.n0)
        length = args.len or 2 * m + 10
        values = list(rays.generate(rays.RayParams(args.n0, 0, 2, 1), 0, length).values)
        found = props.turning_point(values)
        return {"predicted": m, "observed": found, "window": length}, found == m
    values, _ = _sequence(args)
    m = props.turning_point(values)
    weak = props.weak_turning_point(values) if m is None else m
    return {"turning_point": m, "weak_turning_point": weak, "window": len(values)}, weak is not None


def cmd_tz_mode(args):
    _need(args, "n0")
    q = props.tanny_zuker_mode(args.n0)
    lo, hi = props.argmax_scan(props.shallow_diagonal(args.n0))
    return {"formula": q, "scan_least": lo, "scan_greatest": hi}, lo <= q <= hi


def cmd_delta_poly(args):
    params = _ray(args)
    P = delta_poly.build_P(params)
    d = params.d
    top, second = P.coeff(2 * d - 1), P.coeff(2 * d - 2)
    out = {"params": list(params.as_tuple()), "degree": P.degree,
           "coefficients": [enc_frac(c) for c in P.coefficients],
           "coeff_2d_minus_1": enc_frac(top), "coeff_2d_minus_2": enc_frac(second)}
    if args.len:
        deltas = [delta_poly.delta_value(params, i) for i in range(1, args.len + 1)]
        out["delta"] = enc_ints(deltas)
        out["first_positive_tail"] = delta_poly.first_positive_tail(params, args.len)
    return out, top == 0 and second == Fraction(1, 2)


def cmd_q_check(args):
    _need(args, "d", "delta")
    length = args.len or 20
    qs = [delta_poly.q_value(args.d, args.delta, i) for i in range(1, length + 1)]
    return {"q": [enc_frac(q) for q in qs], "all_nonnegative": all(q >= 0 for q in qs)}, \
        all(q >= 0 for q in qs)


def cmd_interleave(args):
    _need(args, "d", "delta")
    ok = delta_poly.interleaving_check(args.d, args.delta)
    return {"interleaves": ok}, ok


def cmd_inject(args):
    _need(args, "n0", "k0", "d", "delta")
    res = lattice.verify_injectivity(args.n0, args.k0, args.d, args.delta)
    return {"n": args.n0, "k": args.k0, "injective": res.ok, "domain_size": res.domain_size,
            "image_size": res.image_size, "codomain_size": res.codomain_size,
            "witness": [list(w) if isinstance(w, tuple) else w for w in res.witness]
            if res.witness else None}, res.ok


def cmd_pf(args):
    values, _ = _sequence(args, _transversal_len)
    rep = pf.pf_report(values)
    return rep.as_dict(), rep.is_pf


def cmd_newton(args):
    values, _ = _sequence(args, _transversal_len)
    ok = pf.newton_check(values)
    return {"newton_holds": ok}, ok


def cmd_darroch(args):
    values, _ = _sequence(args, _transversal_len)
    lo, hi = pf.darroch_bounds(values)
    modes = props.classify(values).modes
    ok = modes is not None and lo <= modes[0] and modes[1] <= hi
    return {"bounds": [lo, hi], "mean": enc_frac(pf.darroch_mean(values)),
            "modes": list(modes) if modes else None}, ok


def _grid(args):
    _need(args, "max_n0", "max_d")
    return pf.Grid(args.max_n0, args.max_d, args.max_k0, args.max_delta)


def cmd_sweep_unimodal(args):
    o = pf.sweep_conjecture_ray_unimodal(_grid(args), args.window or 50, jobs=args.jobs)
    return o.to_dict(), o.holds


def cmd_sweep_pf(args):
    o = pf.sweep_conjecture_pf(_grid(args), args.window, whole_line=not args.forward_only,
                               jobs=args.jobs)
    return o.to_dict(), o.holds


def cmd_sweep_turning(args):
    o = pf.sweep_conjecture_turning(_grid(args), args.window or 60, jobs=args.jobs)
    return o.to_dict(), o.holds


COMMANDS = {
    "gen": (cmd_gen, "generate a window of a ray"),
    "classify": (cmd_classify, "classify a window against every property"),
    "regime": (cmd_regime, "regime predicted from the differences"),
    "mode": (cmd_mode, "modes of a window"),
    "turning": (cmd_turning, "log-concave to log-convex turning point"),
    "tz-mode": (cmd_tz_mode, "closed-form mode of C(n0-i, i) against a scan"),
    "delta-poly": (cmd_delta_poly, "expand P(i) for a steep ray"),
    "q-check": (cmd_q_check, "Q(i) >= 0 for the apex ray C(i*d, i*delta)"),
    "interleave": (cmd_interleave, "fraction interleaving for a (d, delta) pair"),
    "inject": (cmd_inject, "brute-force injectivity of the path-pair map"),
    "pf": (cmd_pf, "Polya frequency report"),
    "newton": (cmd_newton, "Newton's inequalities"),
    "darroch": (cmd_darroch, "Darroch mode bounds"),
    "sweep-unimodal": (cmd_sweep_unimodal, "ray unimodality over a grid"),
    "sweep-pf": (cmd_sweep_pf, "transversal PF property over a grid"),
    "sweep-turning": (cmd_sweep_turning, "steep-ray turning pattern over a grid"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for flag in ("--n0", "--k0", "--d", "--delta", "--len", "--window",
                 "--max-n0", "--max-k0", "--max-d", "--max-delta"):
        common.add_argument(flag, type=int)
    common.add_argument("--start", type=int, default=0)
    common.add_argument("--values", help="explicit comma-separated sequence")
    common.add_argument("--json", action="store_true", help="print one JSON record")
    common.add_argument("--out", metavar="FILE", help="append the record to FILE")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--vertical", action="store_true",
                        help="turning: use the vertical ray C(n0 + 2i, i)")
    common.add_argument("--forward-only", action="store_true",
                        help="sweep-pf: only the part i >= 0 of each ray")

    parser = argparse.ArgumentParser(prog="pascal-rays", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def _render(outcome, indent="") -> list[str]:
    lines = []
    for key, val in outcome.items():
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_render(val, indent + "  "))
        elif isinstance(val, list) and len(val) > 12:
            lines.append(f"{indent}{key}: [{', '.join(map(str, val[:12]))}, ...] ({len(val)} items)")
        else:
            lines.append(f"{indent}{key}: {val}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        outcome, ok = handler(args)
    except (DomainError, UsageError) as exc:
        print(f"{parser.prog} {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"{parser.prog} {args.command}: invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAIL

    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "json", "out") and v not in (None, False)}
    record = ResultRecord(args.command, params, outcome)
    if args.json:
        print(record.to_json())
    else:
        print("\n".join(_render(outcome)))
        print(f"status: {'ok' if ok else 'FAILED'}")
    if args.out:
        record.append_to(args.out)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
