"""Exact rational scalars.

Every symbolic computation in this package runs over the rationals.  We use
gmpy2's mpq when available (it is markedly faster on large numerators) and
fall back to fractions.Fraction, which has the same normalized-value
semantics: positive denominator, gcd(num, den) = 1.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _mpq

    def rational(num=0, den=1):
        return _mpq(num, den)

    RATIONAL_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover
    from fractions import Fraction as _Fraction

    def rational(num=0, den=1):
        return _Fraction(num, den)

    RATIONAL_BACKEND = "fractions"

ZERO = rational(0)
ONE = rational(1)


def is_rational(x) -> bool:
    """True for exact scalar types (our rationals and plain ints)."""
    return isinstance(x, (int, type(ZERO)))


def parse_rational(text: str):
    """Parse 'num/den' or 'num' into an exact rational.

    Raises ValueError on malformed input or zero denominator.
    """
    s = text.strip()
    if "/" in s:
        num_s, den_s = s.split("/", 1)
        num, den = int(num_s), int(den_s)
        if den == 0:
            raise ValueError(f"zero denominator in rational {text!r}")
        return rational(num, den)
    return rational(int(s))


def format_rational(x) -> str:
    """Render an exact rational as 'num/den', or 'num' when integral."""
    num, den = x.numerator, x.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"
