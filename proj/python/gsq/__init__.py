"""Python access to the gsq library. JSON documents come back as dicts."""

import json

from ._gsq import (
    Fiber,
    ParameterError,
    ParseError,
    UnsupportedSlope,
    apply_twist,
    normalize_slope,
    reduce,
    summand_slopes,
)
from . import _gsq


def intersection_number(a, b):
    return int(_gsq.intersection_number(a, b))


def lift_report(p, q, slope):
    return json.loads(Fiber(p, q).lift_document(slope))


def derivative_report(p, q, slope):
    return json.loads(Fiber(p, q).derivative_report(slope))


def framed_link_report(p, q, slope):
    return json.loads(_gsq.framed_link_report(p, q, slope))


def slide_path(start, end=("0/1", "inf")):
    return json.loads(_gsq.slide_path(start[0], start[1], end[0], end[1]))


def trisection_diagram(p, q, slope):
    return json.loads(Fiber(p, q).trisection_diagram(slope))


def verify_diagram(diagram):
    text = diagram if isinstance(diagram, str) else json.dumps(diagram)
    return json.loads(_gsq.verify_diagram(text))


__all__ = [
    "Fiber",
    "ParameterError",
    "ParseError",
    "UnsupportedSlope",
    "apply_twist",
    "derivative_report",
    "framed_link_report",
    "intersection_number",
    "lift_report",
    "normalize_slope",
    "reduce",
    "slide_path",
    "summand_slopes",
    "trisection_diagram",
    "verify_diagram",
]
