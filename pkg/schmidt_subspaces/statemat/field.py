"""
Scalar fields a StateMatrix can live over.

- rational: fractions.Fraction (normalized, positive denominator)
- complex:  Python complex (double precision)
- gfp:      int in [0, p) for a prime p
"""
import numbers
from fractions import Fraction

from sympy import isprime

from schmidt_subspaces.utils.exceptions import DomainError, FieldMismatchError

RATIONAL = "rational"
COMPLEX = "complex"
GFP = "gfp"

FIELDS = (RATIONAL, COMPLEX, GFP)
EXACT_FIELDS = (RATIONAL, GFP)


def check_field(field, p=None):
    if field not in FIELDS:
        raise FieldMismatchError(f"Unknown scalar field {field}", field=field)
    if field == GFP:
        if p is None or not isprime(p):
            raise DomainError("p must be prime", p=p)
    elif p is not None:
        raise FieldMismatchError(f"p only applies to the gfp field, not {field}")


def coerce(value, field, p=None):
    if field == RATIONAL:
        return to_rational(value)
    if field == COMPLEX:
        return to_complex(value)
    return to_gfp(value, p)


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (numbers.Rational, str)):
        return Fraction(value)
    if isinstance(value, numbers.Real):
        # floats convert exactly
        return Fraction(float(value))
    raise FieldMismatchError(f"Cannot represent {value!r} as an exact rational")


def to_complex(value) -> complex:
    if isinstance(value, numbers.Complex):
        return complex(value)
    if isinstance(value, str):
        return complex(float(Fraction(value)))
    raise FieldMismatchError(f"Cannot represent {value!r} as a complex number")


def to_gfp(value, p) -> int:
    if isinstance(value, numbers.Integral):
        return int(value) % p
    if isinstance(value, (numbers.Rational, str)):
        q = Fraction(value)
        if q.denominator % p == 0:
            raise DomainError(f"{q} has no reduction mod {p}", p=p)
        return q.numerator * pow(q.denominator, -1, p) % p
    raise FieldMismatchError(f"Cannot represent {value!r} in GF({p})")


def infer_field(values):
    """
    complex when any value is a float or complex, rational otherwise
    """
    for v in values:
        if isinstance(v, (numbers.Rational, str)):
            continue
        if isinstance(v, numbers.Complex):
            return COMPLEX
    return RATIONAL


def format_scalar(value, field):
    if field == RATIONAL:
        return f"{value.numerator}/{value.denominator}"
    if field == COMPLEX:
        return [value.real, value.imag]
    return int(value)


def parse_scalar(raw, field, p=None):
    if field == RATIONAL:
        if isinstance(raw, bool) or not isinstance(raw, (str, int)):
            raise ValueError(f"rational entries are 'num/den' strings, got {raw!r}")
        return to_rational(raw)
    if field == COMPLEX:
        if isinstance(raw, (list, tuple)) and len(raw) == 2:
            return complex(float(raw[0]), float(raw[1]))
        if isinstance(raw, (int, float)) and not isinstance(raw, bool):
            return complex(raw)
        raise ValueError(f"complex entries are [re, im] pairs, got {raw!r}")

    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ValueError(f"gfp entries are integers, got {raw!r}")
    if not 0 <= raw < p:
        raise ValueError(f"gfp entry {raw} outside [0, {p})")
    return raw
