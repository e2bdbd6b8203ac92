"""Stable JSON value encodings shared by the CLI and the verify payloads.

Every numeric field carries an ``exact`` string form whenever the value is
exact; floats are rendered to 20 significant digits through mpmath so the
emitted bytes do not depend on platform printf quirks.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .circle import CircleExact
from .cyclotomic import CyclotomicValue

FLOAT_DIGITS = 20
EMBED_BITS = 96


def _f(x) -> str:
    with mpmath.workprec(EMBED_BITS):
        if isinstance(x, Fraction):
            x = mpmath.mpf(x.numerator) / x.denominator
        return mpmath.nstr(mpmath.mpf(x), FLOAT_DIGITS, strip_zeros=False)


def rational_json(q) -> dict:
    q = Fraction(q)
    return {"exact": str(q), "float": _f(q)}


def cyclo_json(v: CyclotomicValue) -> dict:
    emb = v.embed(EMBED_BITS)
    # exactness is decidable: suppress embedding noise in a dead component
    re = "0.0" if v.is_imaginary() else _f(emb.real)
    im = "0.0" if v.is_real() else _f(emb.imag)
    return {
        "exact": v.to_json(),
        "pretty": str(v),
        "float": {"re": re, "im": im},
    }


def value_json(v) -> dict:
    """Encode CyclotomicValue / Fraction / CircleExact / complex uniformly."""
    if isinstance(v, CyclotomicValue):
        if v.is_rational():
            return rational_json(v.as_rational())
        return cyclo_json(v)
    if isinstance(v, (Fraction, int)):
        return rational_json(v)
    if isinstance(v, CircleExact):
        c = v.to_complex()
        return {"exact": v.to_json(), "pretty": str(v),
                "float": {"re": _f(c.real), "im": _f(c.imag)}}
    c = complex(v)
    return {"float": {"re": _f(c.real), "im": _f(c.imag)}}
