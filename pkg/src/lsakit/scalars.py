"""Exact rational scalars.

Everything in this package computes over the rationals, exactly.  When gmpy2
is importable its GMP-backed ``mpq`` type is used (same semantics as
``fractions.Fraction``, about an order of magnitude faster in the hot loops);
otherwise we fall back to the standard library.  Set ``LSAKIT_PURE_RATIONALS``
in the environment to force the pure-Python fallback.
"""

from __future__ import annotations

import os
from fractions import Fraction

_FORCE_PURE = bool(os.environ.get("LSAKIT_PURE_RATIONALS"))

if not _FORCE_PURE:
    try:
        from gmpy2 import mpq as _mpq
    except ImportError:  # pragma: no cover - depends on environment
        _mpq = None
else:
    _mpq = None

if _mpq is not None:
    QQ = _mpq
    BACKEND = "gmpy2"
else:
    QQ = Fraction
    BACKEND = "fractions"

ZERO = QQ(0)
ONE = QQ(1)


def rat_str(x) -> str:
    """Canonical string for a rational: ``p`` or ``p/q`` with q > 1."""
    n, d = x.numerator, x.denominator
    return str(n) if d == 1 else f"{n}/{d}"


class RationalParseError(ValueError):
    pass


def parse_rat(text: str):
    """Parse ``p`` or ``p/q`` into an exact rational.  q = 0 is rejected."""
    s = text.strip()
    if "/" in s:
        num_s, _, den_s = s.partition("/")
        try:
            num, den = int(num_s), int(den_s)
        except ValueError:
            raise RationalParseError(f"malformed rational {text!r}") from None
        if den == 0:
            raise RationalParseError(f"zero denominator in {text!r}")
        return QQ(num, den)
    try:
        return QQ(int(s))
    except ValueError:
        raise RationalParseError(f"malformed rational {text!r}") from None
