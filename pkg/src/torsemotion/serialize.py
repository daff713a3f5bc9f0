"""JSON encoding of exact values.

Rationals are canonical strings ``"p/q"`` in lowest terms (``"3"`` for
integers, never ``"-0"`` or ``"4/2"``).  Polynomials are arrays of such
strings in ascending order.  Dual quaternion polynomials are objects keyed
``"1", "i", "j", "k", "e", "ei", "ej", "ek"``; planes use ``"u0".."u3"`` and
points ``"x0".."x3"``.  Missing keys mean zero; unknown keys are rejected.
"""

from __future__ import annotations

import dataclasses
import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from .dq import DualQuat, DualQuatPoly, PlanePoly, PointPoly, Quat, QuatPoly
from .errors import TorseMotionError
from .ring import CPoly, RPoly, rpoly_lcm, ONE

DQ_KEYS = ("1", "i", "j", "k", "e", "ei", "ej", "ek")
QUAT_KEYS = DQ_KEYS[:4]
PLANE_KEYS = ("u0", "u1", "u2", "u3")
POINT_KEYS = ("x0", "x1", "x2", "x3")

_RATIONAL = re.compile(r"^-?(0|[1-9]\d*)(/[1-9]\d*)?$")


class MalformedInput(TorseMotionError, ValueError):
    code = "MALFORMED_INPUT"


# ---------------------------------------------------------------------------
# Writing
# ---------------------------------------------------------------------------


def rational_to_str(x: Fraction | int) -> str:
    return str(Fraction(x))


def poly_to_json(p: RPoly) -> list[str]:
    return [rational_to_str(c) for c in p.coeffs]


def dq_to_json(h: DualQuatPoly) -> dict[str, list[str]]:
    return {key: poly_to_json(p) for key, p in zip(DQ_KEYS, h.components())}


def quat_poly_to_json(q: QuatPoly) -> dict[str, list[str]]:
    return {key: poly_to_json(p) for key, p in zip(QUAT_KEYS, q.c)}


def plane_to_json(u: PlanePoly) -> dict[str, list[str]]:
    return {key: poly_to_json(p) for key, p in zip(PLANE_KEYS, u.components)}


def to_jsonable(obj: Any) -> Any:
    """Recursively convert library values into JSON-compatible data."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rational_to_str(obj)
    if isinstance(obj, RPoly):
        return poly_to_json(obj)
    if isinstance(obj, CPoly):
        return {"re": poly_to_json(obj.re), "im": poly_to_json(obj.im)}
    if isinstance(obj, DualQuatPoly):
        return dq_to_json(obj)
    if isinstance(obj, QuatPoly):
        return quat_poly_to_json(obj)
    if isinstance(obj, PlanePoly):
        return plane_to_json(obj)
    if isinstance(obj, PointPoly):
        return {key: poly_to_json(p) for key, p in zip(POINT_KEYS, obj.components)}
    if isinstance(obj, Quat):
        return [rational_to_str(x) for x in obj.parts]
    if isinstance(obj, DualQuat):
        return {key: rational_to_str(x) for key, x in zip(DQ_KEYS, obj.parts)}
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, tuple) and hasattr(obj, "_fields"):
        return {name: to_jsonable(v) for name, v in zip(obj._fields, obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), indent=2)


# ---------------------------------------------------------------------------
# Reading
# ---------------------------------------------------------------------------


def parse_rational(s: Any) -> Fraction:
    if not isinstance(s, str):
        raise MalformedInput(f"rational must be a string, got {s!r}")
    if not _RATIONAL.match(s) or s == "-0":
        raise MalformedInput(f"malformed rational {s!r}")
    x = Fraction(s)
    if str(x) != s:
        raise MalformedInput(f"rational {s!r} is not in lowest terms")
    return x


def parse_poly(data: Any) -> RPoly:
    if not isinstance(data, list):
        raise MalformedInput(f"polynomial must be an array of rational strings, got {data!r}")
    return RPoly(parse_rational(x) for x in data)


def _parse_keyed(data: Any, keys: tuple[str, ...], what: str) -> list[RPoly]:
    if not isinstance(data, dict):
        raise MalformedInput(f"{what} must be a JSON object")
    unknown = sorted(set(data) - set(keys))
    if unknown:
        raise MalformedInput(f"unknown {what} keys: {', '.join(unknown)}")
    return [parse_poly(data.get(k, [])) for k in keys]


def parse_dq(data: Any) -> DualQuatPoly:
    return DualQuatPoly.from_components(_parse_keyed(data, DQ_KEYS, "dual quaternion"))


def parse_point(data: Any) -> PointPoly:
    return PointPoly(*_parse_keyed(data, POINT_KEYS, "point"))


def parse_plane(data: Any) -> PlanePoly:
    """Plane polynomial; a component may also be ``{"num": [...], "den": [...]}``.

    Rational-function components are brought to a common denominator, which
    is then dropped (the torse is projectively unchanged).
    """
    if not isinstance(data, dict):
        raise MalformedInput("plane must be a JSON object")
    unknown = sorted(set(data) - set(PLANE_KEYS))
    if unknown:
        raise MalformedInput(f"unknown plane keys: {', '.join(unknown)}")
    nums, dens = [], []
    for key in PLANE_KEYS:
        value = data.get(key, [])
        if isinstance(value, dict):
            extra = sorted(set(value) - {"num", "den"})
            if extra or "num" not in value or "den" not in value:
                raise MalformedInput(f"{key}: rational components need exactly 'num' and 'den'")
            num, den = parse_poly(value["num"]), parse_poly(value["den"])
            if den.is_zero():
                raise MalformedInput(f"{key}: zero denominator")
        else:
            num, den = parse_poly(value), ONE
        nums.append(num)
        dens.append(den)
    common = ONE
    for d in dens:
        common = rpoly_lcm(common, d)
    return PlanePoly(*(n * common.exquo(d) for n, d in zip(nums, dens)))


def load_json(source: str | Path) -> Any:
    """Read JSON from a file path, or parse ``source`` directly if it looks like JSON."""
    text = str(source)
    stripped = text.lstrip()
    try:
        if stripped.startswith(("[", "{")):
            return json.loads(text)
        return json.loads(Path(text).read_text())
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc
    except OSError as exc:
        raise MalformedInput(f"cannot read {text}: {exc.strerror}") from exc
