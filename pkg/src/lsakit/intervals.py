"""Certified interval arithmetic with exact rational endpoints.

Supports the handful of transcendental comparisons the bound suite needs:
pi (Machin's formula with alternating-series truncation brackets), square
roots of rationals (integer square root brackets), and exp (argument
halving + Taylor with an explicit geometric tail bound, then interval
squaring).  Endpoints are exact rationals rounded *outward* onto a dyadic
grid after each squaring step, so an interval always contains the true
value; a comparison certified against the appropriate endpoint is a proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scalars import QQ, ZERO, ONE


class PrecisionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Interval:
    lo: object
    hi: object

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    def add(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def sub(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def mul(self, other: "Interval") -> "Interval":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    def scale(self, c) -> "Interval":
        c = QQ(c)
        if c >= 0:
            return Interval(c * self.lo, c * self.hi)
        return Interval(c * self.hi, c * self.lo)

    def square(self) -> "Interval":
        return self.mul(self)

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def certainly_greater_than(self, x) -> bool:
        return self.lo > x

    def certainly_less_than(self, x) -> bool:
        return self.hi < x


def round_out(iv: Interval, bits: int) -> Interval:
    """Round outward onto the 2^-bits dyadic grid (keeps denominators small)."""
    scale = 1 << bits
    lo = QQ(math.floor(iv.lo * scale), scale)
    hi = QQ(math.ceil(iv.hi * scale), scale)
    return Interval(lo, hi)


def sqrt_interval(x, bits: int) -> Interval:
    """sqrt of a nonnegative rational, bracketed to 2^-bits."""
    x = QQ(x)
    if x < 0:
        raise ValueError("square root of a negative rational")
    if x == 0:
        return Interval(ZERO, ZERO)
    # sqrt(p/q) = sqrt(p*q)/q; bracket sqrt of the integer p*q at scale 4^bits
    p, q = x.numerator, x.denominator
    n = int(p) * int(q)
    scaled = n << (2 * bits)
    root = math.isqrt(scaled)
    lo = QQ(root, (1 << bits) * int(q))
    hi = QQ(root + 1, (1 << bits) * int(q))
    return Interval(lo, hi)


def _arctan_interval(inv_x: int, bits: int) -> Interval:
    """arctan(1/inv_x) for integer inv_x >= 2, by the alternating series
    (consecutive partial sums bracket the limit)."""
    x = QQ(1, inv_x)
    x2 = x * x
    term = x
    total = ZERO
    k = 0
    while True:
        total += term if k % 2 == 0 else -term
        next_term = term * x2 * QQ(2 * k + 1, 2 * k + 3)
        if term < QQ(1, 1 << (bits + 2)):
            # consecutive partial sums bracket the alternating limit
            nxt = total - next_term if k % 2 == 0 else total + next_term
            return Interval(min(total, nxt), max(total, nxt))
        term = next_term
        k += 1


def pi_interval(bits: int) -> Interval:
    """Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)."""
    a = _arctan_interval(5, bits + 6)
    b = _arctan_interval(239, bits + 6)
    return round_out(a.scale(16).sub(b.scale(4)), bits)


def _exp_small(x, bits: int) -> Interval:
    """exp of a rational 0 <= x <= 1/2 via Taylor with a geometric tail bound."""
    x = QQ(x)
    total = ONE
    term = ONE
    k = 0
    eps = QQ(1, 1 << (bits + 4))
    while True:
        k += 1
        term = term * x / k
        total += term
        # tail after the k-th term is < term * x/(k+1) / (1 - x/(k+1))
        ratio = x / (k + 1)
        bound = term * ratio / (1 - ratio)
        if bound < eps:
            return Interval(total, total + bound)


def exp_interval(x: Interval, bits: int) -> Interval:
    """exp over an interval of nonnegative rationals, outward rounded."""
    if x.lo < 0:
        raise ValueError("exp_interval expects nonnegative arguments")

    def exp_point(v, pick_hi: bool):
        halvings = 0
        while v > QQ(1, 2):
            v = v / 2
            halvings += 1
        iv = _exp_small(v, bits + 2 * halvings + 4)
        for _ in range(halvings):
            iv = round_out(iv.square(), bits + 2 * halvings + 4)
        return iv.hi if pick_hi else iv.lo

    return Interval(exp_point(QQ(x.lo), False), exp_point(QQ(x.hi), True))


def certify_less(value, builder, start_bits: int = 128, max_bits: int = 1024) -> bool:
    """Certify value < (the quantity bracketed by builder(bits)).

    Returns True when certified, False when the inequality is certainly
    violated; escalates precision geometrically, PrecisionError if the
    bracket never separates."""
    value = QQ(value)
    bits = start_bits
    while bits <= max_bits:
        iv = builder(bits)
        if iv.certainly_greater_than(value):
            return True
        if iv.certainly_less_than(value):
            return False
        bits *= 2
    raise PrecisionError(f"could not separate {value} at {max_bits} bits")
