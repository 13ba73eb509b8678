# functions.py
import copy
import json
import logging
import os
import re
from fractions import Fraction
from typing import Any, Dict, Optional

from errors import DuplicatePoint, InstanceParseError, InvalidPoint, ZeroCoefficient
from forms import Instance, ProjPoint

logger = logging.getLogger(__name__)

SETTINGS_FILE = "Identify_Settings.json"

DEFAULT_SETTINGS: Dict[str, Dict[str, Any]] = {
    "generator": {
        "coordinate_range": 20,
        "coefficient_range": 9,
        "max_attempts": 10000,
        "parameter_range": 20,
    },
    "kruskal": {
        "batch_size": 256,
        "max_workers": 1,
    },
    "bench": {
        "n_list": [0],
        "r_list": [8, 9, 10, 11],
        "trials": 5,
        "seed": 0,
        "max_workers": 1,
    },
    "pipeline": {
        "diagnostics": False,
    },
}

INSTANCE_FIELDS = ("degree", "points", "coefficients")

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def _merge(base: dict, override: dict) -> dict:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_settings(path: Optional[str] = None) -> dict:
    """Settings file merged over DEFAULT_SETTINGS; defaults when missing or unreadable"""
    path = path or SETTINGS_FILE
    try:
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
            if not isinstance(data, dict):
                raise ValueError("top level must be an object")
            return _merge(DEFAULT_SETTINGS, data)
        logger.debug(f"No settings file at {path}, using defaults")
    except (OSError, ValueError) as e:
        logger.warning(f"Error loading settings from {path}: {str(e)}; using defaults")
    return copy.deepcopy(DEFAULT_SETTINGS)


class _FloatLiteral(str):
    """Marks a JSON number written with a fraction or exponent"""


def _reject_constant(name):
    return _FloatLiteral(name)


def _integer(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        if isinstance(value, _FloatLiteral):
            raise InstanceParseError(f"Floating-point literal {value} is not allowed", field=field)
        raise InstanceParseError(f"Expected an integer, got {value!r}", field=field)
    return value


def _rational(value, field: str) -> Fraction:
    if isinstance(value, str) and not isinstance(value, _FloatLiteral):
        text = value.strip()
        if not _RATIONAL.match(text):
            raise InstanceParseError(f"Expected an integer or 'p/q', got {value!r}", field=field)
        numerator, _, denominator = text.partition("/")
        if denominator and int(denominator) == 0:
            raise InstanceParseError("Zero denominator", field=field)
        return Fraction(int(numerator), int(denominator or 1))
    return Fraction(_integer(value, field))


def parse_instance(text: str, strict: bool = False) -> Instance:
    """Instance from a document {"degree": d, "points": [[a,b,c], ...], "coefficients": [...]}.

    Coefficients are integers or "p/q" strings; floating-point literals are
    rejected. Duplicate points are always an error, zero coefficients only
    in strict mode.
    """
    try:
        data = json.loads(text, parse_float=_FloatLiteral, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise InstanceParseError(e.msg, line=e.lineno, column=e.colno) from e
    if not isinstance(data, dict):
        raise InstanceParseError("Instance document must be an object", line=1, column=1)
    for name in INSTANCE_FIELDS:
        if name not in data:
            raise InstanceParseError("Missing field", field=name)
    for name in data:
        if name not in INSTANCE_FIELDS:
            logger.warning(f"Ignoring unknown instance field '{name}'")

    degree = _integer(data["degree"], "degree")
    if degree < 0:
        raise InstanceParseError(f"Negative degree {degree}", field="degree")

    raw_points = data["points"]
    if not isinstance(raw_points, list):
        raise InstanceParseError("Expected a list of points", field="points")
    points = []
    seen = {}
    for index, raw in enumerate(raw_points):
        field = f"points[{index}]"
        if not isinstance(raw, list) or len(raw) != 3:
            raise InstanceParseError("Expected three homogeneous coordinates", field=field)
        coords = tuple(_integer(c, field) for c in raw)
        try:
            point = ProjPoint(coords)
        except InvalidPoint as e:
            raise InvalidPoint(f"Point {index}: {e}") from e
        if point in seen:
            raise DuplicatePoint(f"Point {index} {point} repeats point {seen[point]}")
        seen[point] = index
        points.append(point)

    raw_coefficients = data["coefficients"]
    if not isinstance(raw_coefficients, list):
        raise InstanceParseError("Expected a list of coefficients", field="coefficients")
    if len(raw_coefficients) != len(points):
        raise InstanceParseError(
            f"{len(points)} points but {len(raw_coefficients)} coefficients", field="coefficients"
        )
    coefficients = [_rational(a, f"coefficients[{i}]") for i, a in enumerate(raw_coefficients)]
    if strict:
        for index, a in enumerate(coefficients):
            if a == 0:
                raise ZeroCoefficient(f"Coefficient {index} is zero")

    inst = Instance(degree, tuple(points), tuple(coefficients))
    logger.debug(f"Parsed instance: degree {degree}, r={inst.r}")
    return inst


def read_instance(path: str, strict: bool = False) -> Instance:
    with open(path, "r", encoding="utf-8") as f:
        return parse_instance(f.read(), strict=strict)


def _coefficient_literal(a: Fraction):
    return a.numerator if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def serialize_instance(inst: Instance) -> str:
    return dump_document({
        "degree": inst.degree,
        "points": [list(p.coords) for p in inst.points],
        "coefficients": [_coefficient_literal(a) for a in inst.coefficients],
    })


def dump_document(document: dict, path: Optional[str] = None) -> str:
    text = json.dumps(document, indent=2)
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text + "\n")
        logger.info(f"Wrote {path}")
    return text
