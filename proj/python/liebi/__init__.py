"""Atiyah classes of Lie bialgebras with exact rational arithmetic.

Rational values are returned as :class:`fractions.Fraction`.
"""

import json
from fractions import Fraction

from ._core import (
    Bialgebra,
    ParseError,
    build_double as _build_double,
    c1_vanishes as _c1_vanishes,
    catalog_emit,
    catalog_get,
    catalog_names,
    center_obstruction as _center_obstruction,
    from_json,
    full_report_json as _full_report_json,
    modular_vector as _modular_vector,
    swap,
    validate,
    atiyah_vanishes as _atiyah_vanishes,
)

__all__ = [
    "Bialgebra",
    "ParseError",
    "atiyah_vanishes",
    "build_double",
    "c1_vanishes",
    "catalog_emit",
    "catalog_get",
    "catalog_names",
    "center_obstruction",
    "from_json",
    "full_report",
    "modular_vector",
    "swap",
    "validate",
]


def _fractions(value):
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, (list, tuple)):
        return [_fractions(v) for v in value]
    return value


def atiyah_vanishes(b):
    """(verdict, S) with S a list of n matrices, or None."""
    verdict, s = _atiyah_vanishes(b)
    return verdict, None if s is None else _fractions(s)


def c1_vanishes(b):
    """(verdict, v) with ad_v = ad*_kappa, or v = None."""
    verdict, v = _c1_vanishes(b)
    return verdict, None if v is None else _fractions(v)


def center_obstruction(b):
    """(x, xi, ad*_xi(x)) with x central and ad*_xi(x) not central, or None."""
    w = _center_obstruction(b)
    return None if w is None else tuple(_fractions(list(w)))


def modular_vector(b):
    return _fractions(_modular_vector(b))


def build_double(b):
    d = _build_double(b)
    d["brackets"] = [(i, j, k, Fraction(c)) for i, j, k, c in d["brackets"]]
    d["pairing"] = _fractions(d["pairing"])
    return d


def full_report(b, c1_only=False, raw=False):
    """The JSON report as a dict. Rational strings stay strings when raw=True."""
    report = json.loads(_full_report_json(b, c1_only))
    if raw:
        return report
    for key in ("kappa",):
        report[key] = _fractions(report[key])
    report["c1"]["representative"] = _fractions(report["c1"]["representative"])
    w = report["witnesses"]
    for key in ("S", "v"):
        if w[key] is not None:
            w[key] = _fractions(w[key])
    if w["center_obstruction"] is not None:
        w["center_obstruction"] = {k: _fractions(v) for k, v in w["center_obstruction"].items()}
    return report
