"""Exact rational scalars.

All arithmetic in the package runs over arbitrary-precision rationals that
are always reduced to lowest terms with positive denominator.  gmpy2's mpq is
used when available (the coordinate heights of point multiples grow fast and
GMP keeps the normalizations cheap); plain fractions.Fraction is a drop-in
fallback with identical semantics.
"""

from __future__ import annotations

from fractions import Fraction

try:  # pragma: no cover - exercised implicitly by the whole suite
    import gmpy2

    Rat = gmpy2.mpq
    Int = gmpy2.mpz
    igcd = gmpy2.gcd
    _MPQ = type(gmpy2.mpq())
    _MPZ = type(gmpy2.mpz())
    RAT_TYPES = (int, Fraction, _MPQ, _MPZ)
    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    import math

    Rat = Fraction
    Int = int
    igcd = math.gcd
    RAT_TYPES = (int, Fraction)
    HAVE_GMPY2 = False


def is_rat(x) -> bool:
    return isinstance(x, RAT_TYPES)


def to_fraction(q) -> Fraction:
    """stdlib Fraction view of any supported rational scalar."""
    if isinstance(q, Fraction):
        return q
    return Fraction(int(q.numerator), int(q.denominator)) if not isinstance(q, int) else Fraction(q)


def parse_rational(text: str):
    """Parse 'num/den' or an integer string exactly (never through floats)."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Rat(int(num), int(den))
    return Rat(int(text))


def rat_str(q) -> str:
    """Canonical 'num/den' or integer string."""
    return str(Rat(q))
