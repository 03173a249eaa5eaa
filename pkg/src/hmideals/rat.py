"""Exact rational helpers on top of fractions.Fraction.

All indices, weights and thresholds in this package are Fractions; no
floating point appears anywhere.  The two epsilon-free rounding helpers
encode "round after nudging by an infinitesimal" by exact case analysis
on integrality.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction


def rat(p, q=None) -> Fraction:
    """Build a Fraction from ints, a "p/q" string, or pass one through."""
    if q is not None:
        return Fraction(p, q)
    if isinstance(p, Fraction):
        return p
    if isinstance(p, int):
        return Fraction(p)
    return Fraction(str(p))


def parse_rat(text: str) -> Fraction:
    """Parse "p/q" or "p" (q > 0 enforced by Fraction normalization)."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        d = int(den)
        if d <= 0:
            raise ValueError(f"denominator must be positive in {text!r}")
        return Fraction(int(num), d)
    return Fraction(int(text))


def fmt_rat(x: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def floor_minus_eps(x: Fraction) -> int:
    """floor(x - eps) for infinitesimal eps > 0: x-1 at integers, floor(x) else."""
    n = math.floor(x)
    return n - 1 if x == n else n


def ceil_plus_eps(x: Fraction) -> int:
    """ceil(x + eps) for infinitesimal eps > 0: x+1 at integers, ceil(x) else."""
    n = math.ceil(x)
    return n + 1 if x == n else n
