"""Exact rational arithmetic and segment predicates.

Every decision in the package goes through these helpers. Coordinates are
``gmpy2.mpq`` values, which are always kept in lowest terms with a positive
denominator.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Optional, Tuple, Union

from gmpy2 import mpq

Rat = type(mpq(0))

__all__ = [
    "Rat", "Pt", "Seg", "Orientation", "Contact", "Intersection",
    "RationalParseError", "rat", "rat_str", "parse_rat", "cross", "orient", "seg_intersect",
    "on_segment",
    "angle_key",
]


class RationalParseError(ValueError):
    pass


def rat(value: Union[int, str, "Rat"], den: int = 1) -> "Rat":
    """Coerce *value* (int, ``"num/den"`` string or mpq) to a rational."""
    if isinstance(value, str):
        return parse_rat(value)
    if den == 0:
        raise RationalParseError("zero denominator")
    return mpq(value, den)


def parse_rat(text: str) -> "Rat":
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError as exc:
        raise RationalParseError(f"not a rational: {text!r}") from exc
    if d == 0:
        raise RationalParseError(f"zero denominator: {text!r}")
    return mpq(n, d)


def rat_str(q: "Rat") -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Pt(NamedTuple):
    x: "Rat"
    y: "Rat"

    @classmethod
    def of(cls, x, y) -> "Pt":
        return cls(rat(x), rat(y))

    def __sub__(self, other):  # type: ignore[override]
        return Pt(self.x - other.x, self.y - other.y)

    def __add__(self, other):  # type: ignore[override]
        return Pt(self.x + other.x, self.y + other.y)


class Seg(NamedTuple):
    a: Pt
    b: Pt


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def cross(u: Pt, v: Pt):
    return u.x * v.y - u.y * v.x


def orient(p: Pt, q: Pt, r: Pt) -> Orientation:
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if d > 0:
        return Orientation.CCW
    if d < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


class Contact(enum.Enum):
    NONE = "none"
    POINT = "point"
    SHARED_ENDPOINT = "shared_endpoint"
    OVERLAP = "overlap"


class Intersection(NamedTuple):
    kind: Contact
    point: Optional[Pt] = None


_NONE = Intersection(Contact.NONE)


def on_segment(p: Pt, s: Seg) -> bool:
    """True when *p* lies on the closed segment *s*."""
    a, b = s
    if orient(a, b, p) != Orientation.COLLINEAR:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def seg_intersect(s1: Seg, s2: Seg) -> Intersection:
    """Classify how two closed segments meet.

    ``SHARED_ENDPOINT`` is reported only when the single common point is an
    endpoint of both segments; a T-junction (endpoint of one, interior of the
    other) is a ``POINT``.
    """
    a, b = s1
    c, d = s2
    if (max(a.x, b.x) < min(c.x, d.x) or max(c.x, d.x) < min(a.x, b.x)
            or max(a.y, b.y) < min(c.y, d.y) or max(c.y, d.y) < min(a.y, b.y)):
        return _NONE
    rx, ry = b.x - a.x, b.y - a.y
    sx, sy = d.x - c.x, d.y - c.y
    o1 = _sign(rx * (c.y - a.y) - ry * (c.x - a.x))
    o2 = _sign(rx * (d.y - a.y) - ry * (d.x - a.x))
    if o1 == o2 == 0:
        return _collinear(s1, s2)
    if o1 * o2 > 0:
        return _NONE
    o3 = _sign(sx * (a.y - c.y) - sy * (a.x - c.x))
    o4 = _sign(sx * (b.y - c.y) - sy * (b.x - c.x))
    if o3 * o4 > 0:
        return _NONE
    # Non-parallel and straddling: exactly one common point.
    t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / (rx * sy - ry * sx)
    p = Pt(a.x + t * rx, a.y + t * ry)
    if p in (a, b) and p in (c, d):
        return Intersection(Contact.SHARED_ENDPOINT, p)
    return Intersection(Contact.POINT, p)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _collinear(s1: Seg, s2: Seg) -> Intersection:
    a, b = s1
    c, d = s2
    key = (lambda p: (p.x, p.y))
    lo1, hi1 = sorted((a, b), key=key)
    lo2, hi2 = sorted((c, d), key=key)
    lo = max(lo1, lo2, key=key)
    hi = min(hi1, hi2, key=key)
    if key(lo) > key(hi):
        return _NONE
    if lo == hi:
        if lo in (a, b) and lo in (c, d):
            return Intersection(Contact.SHARED_ENDPOINT, lo)
        return Intersection(Contact.POINT, lo)
    return Intersection(Contact.OVERLAP)


def angle_key(v: Pt) -> Tuple[int, "Rat"]:
    """Sort key for the counterclockwise angle of a nonzero vector from +x."""
    x, y = v
    if y == 0:
        return (0, mpq(0)) if x > 0 else (2, mpq(0))
    # the cotangent falls monotonically across each open half plane
    return (1 if y > 0 else 3, -x / y)
