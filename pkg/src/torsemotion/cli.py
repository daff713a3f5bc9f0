"""Command-line interface.

Exit codes: 0 success, 1 negative verdict or failed operation, 2 not
kinematic, 3 needs coefficients outside the rationals, 4 no solution for the
requested cofactor, 64 malformed input, 70 internal error.  Errors are
reported on stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .demos import DEMOS
from .dq import DualQuat, DualQuatPoly, Quat, plane_trajectory
from .errors import (
    GenericityExhausted,
    InvariantViolation,
    NoSolution,
    NotKinematic,
    NotReduced,
    TorseMotionError,
    UnsupportedFieldExtension,
    ZeroVectorPart,
)
from .serialize import (
    MalformedInput,
    dq_to_json,
    dumps,
    load_json,
    parse_dq,
    parse_plane,
    parse_poly,
    to_jsonable,
)
from .synthesis import (
    compose_family,
    split_even_power,
    split_quadratic,
    synthesize_minimal,
    synthesize_with_cofactor,
    verify_trajectory,
)
from .torse import analyze, equalize_degrees

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_NOT_KINEMATIC = 2
EXIT_UNSUPPORTED = 3
EXIT_NO_SOLUTION = 4
EXIT_MALFORMED = 64
EXIT_INTERNAL = 70


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    u = parse_plane(load_json(args.input))
    out = {}
    if args.equalize:
        u, mobius = equalize_degrees(u)
        out["mobius"] = list(mobius)
        out["plane"] = u
    info = analyze(u)
    out["analysis"] = info
    diagnostic = None
    if info.unsupported_reason:
        diagnostic = info.unsupported_reason
    elif not info.kinematic:
        diagnostic = NotKinematic.code
    out["diagnostic"] = diagnostic
    _emit(out)
    if diagnostic == UnsupportedFieldExtension.code:
        return EXIT_UNSUPPORTED
    if diagnostic == NotKinematic.code:
        return EXIT_NOT_KINEMATIC
    return EXIT_OK


def cmd_synthesize(args) -> int:
    u = parse_plane(load_json(args.input))
    if args.cofactor:
        h = parse_poly(load_json(args.cofactor))
        result = synthesize_with_cofactor(u, h, seed=args.seed, auto_reduce=args.auto_reduce)
    else:
        result = synthesize_minimal(u, seed=args.seed, auto_reduce=args.auto_reduce)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(dq_to_json(result.C), fh, indent=2)
            fh.write("\n")
    out = to_jsonable(result)
    out["degree"] = result.degree
    out["transcript"] = [{"step": name, **detail} for name, detail in result.transcript]
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    C = parse_dq(load_json(args.motion))
    u = parse_plane(load_json(args.torse))
    result = verify_trajectory(C, u)
    _emit(result)
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_split(args) -> int:
    C = parse_dq(load_json(args.motion))
    f = parse_poly(load_json(args.factor))
    result = split_even_power(C, f) if args.even_power else split_quadratic(C, f)
    _emit(result)
    return EXIT_OK


def cmd_family(args) -> int:
    C = parse_dq(load_json(args.motion))
    e = [parse_poly(load_json(x)) for x in (args.e0, args.e3, args.e5, args.e6)]
    _emit(compose_family(C, *e))
    return EXIT_OK


def _parse_rect(text: str) -> tuple[Fraction, Fraction]:
    try:
        w, h = (Fraction(x) for x in text.split(","))
    except ValueError as exc:
        raise MalformedInput(f"--rect expects 'w,h', got {text!r}") from exc
    return w, h


def _parse_number(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"not a rational number: {text!r}") from exc


def _act_on_point(C: DualQuat, x: Fraction, y: Fraction, z: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    point = DualQuat(Quat(1), Quat(0, x, y, z))
    image = C.eps_conj() * point * C.conj()
    w = image.primal.w
    return tuple(c / w for c in image.dual.parts[1:])


def sample_frames(C: DualQuatPoly, start: Fraction, stop: Fraction, count: int, rect=(1, 1)) -> list[dict]:
    """Exact samples of the moving plane and of a rectangle in it.

    Parameters where the primal norm vanishes are skipped.
    """
    traj = plane_trajectory(C)
    w, h = (Fraction(x) for x in rect)
    corners = ((w, h), (-w, h), (-w, -h), (w, -h))
    if count < 1:
        raise MalformedInput("--count must be positive")
    step = (stop - start) / (count - 1) if count > 1 else Fraction(0)
    samples = []
    for n in range(count):
        t = start + n * step
        Ct = C(t)
        if Ct.primal.norm() == 0:
            continue
        u0, u1, u2, u3 = traj(t)
        pts = [_act_on_point(Ct, x, y, Fraction(0)) for x, y in corners]
        for p in pts:
            if u0 + u1 * p[0] + u2 * p[1] + u3 * p[2] != 0:
                raise InvariantViolation("sampled corner is not on the sampled plane")
        samples.append({"t": t, "plane": (u1, u2, u3, u0), "rect_corners": pts})
    return samples


def _decimal(x: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def cmd_sample(args) -> int:
    C = parse_dq(load_json(args.motion))
    samples = sample_frames(C, _parse_number(args.start), _parse_number(args.stop), args.count, _parse_rect(args.rect))
    if not args.csv:
        _emit(samples)
        return EXIT_OK
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["t", "n1", "n2", "n3", "d"]
    for c in range(1, 5):
        header += [f"p{c}x", f"p{c}y", f"p{c}z"]
    writer.writerow(header)
    for s in samples:
        values = [s["t"], *s["plane"]] + [c for p in s["rect_corners"] for c in p]
        writer.writerow([_decimal(v, args.digits) for v in values])
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_demo(args) -> int:
    report = DEMOS[args.name]()
    _emit(report)
    return EXIT_OK if report["verdict"] == "ok" else EXIT_FAIL


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="torsemotion", description="Rational motions with a prescribed plane trajectory.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="classify a plane polynomial")
    p.add_argument("--input", required=True, help="plane polynomial JSON file")
    p.add_argument("--equalize", action="store_true", help="reparametrize to equal component degrees first")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("synthesize", help="motion whose moving plane sweeps the torse")
    p.add_argument("--input", required=True)
    p.add_argument("--cofactor", help="real cofactor polynomial JSON (file or inline)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="write the motion polynomial JSON here")
    p.add_argument("--auto-reduce", action="store_true", help="divide out a common real factor instead of failing")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("verify", help="check a motion against a torse")
    p.add_argument("--motion", required=True)
    p.add_argument("--torse", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("split", help="split off a plane-fixing right factor")
    p.add_argument("--motion", required=True)
    p.add_argument("--factor", required=True, help="real polynomial JSON (file or inline)")
    p.add_argument("--even-power", action="store_true", help="split the largest power of the factor")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("family", help="multiply by a plane-fixing right factor")
    p.add_argument("--motion", required=True)
    p.add_argument("--e0", default='["1"]')
    p.add_argument("--e3", default="[]")
    p.add_argument("--e5", default="[]")
    p.add_argument("--e6", default="[]")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("sample", help="sample plane positions and a moving rectangle")
    p.add_argument("--motion", required=True)
    p.add_argument("--from", dest="start", default="0")
    p.add_argument("--to", dest="stop", default="1")
    p.add_argument("--count", type=int, default=11)
    p.add_argument("--rect", default="1,1", help="half-width and half-height of the rectangle")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--digits", type=int, default=12, help="significant digits in CSV output")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("demo", help="run a built-in example")
    p.add_argument("--name", required=True, choices=sorted(DEMOS))
    p.set_defaults(func=cmd_demo)
    return parser


def _fail(code: int, exc: BaseException) -> int:
    diag = {"error": getattr(exc, "code", type(exc).__name__), "message": str(exc)}
    if isinstance(exc, NoSolution):
        diag["reason"] = exc.reason
    sys.stderr.write(json.dumps(diag) + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except MalformedInput as exc:
        return _fail(EXIT_MALFORMED, exc)
    except NotKinematic as exc:
        return _fail(EXIT_NOT_KINEMATIC, exc)
    except UnsupportedFieldExtension as exc:
        return _fail(EXIT_UNSUPPORTED, exc)
    except NoSolution as exc:
        return _fail(EXIT_NO_SOLUTION, exc)
    except (InvariantViolation, GenericityExhausted) as exc:
        return _fail(EXIT_INTERNAL, exc)
    except (NotReduced, ZeroVectorPart) as exc:
        return _fail(EXIT_MALFORMED, exc)
    except TorseMotionError as exc:
        return _fail(EXIT_FAIL, exc)


if __name__ == "__main__":
    sys.exit(main())
