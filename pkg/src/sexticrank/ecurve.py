"""Elliptic curve models c*y**2 = x**3 + a2*x**2 + a1*x + a0 with the group
law over any supported coefficient field (Q, a cyclic cubic K3, or a sextic
tower K6), the order-6 automorphism on pairs, and trace/orbit utilities.

The points use the chord-tangent law adapted to the c*y**2 model: the slope
through two points divides out c, so no coordinate change is ever needed to
handle curves written with a leading quadratic factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal

from .rationals import Rat, is_rat
from .numfield import CubicElement, SexticElement
from .polynomial import UniPoly, disc3


class CurveModel:
    """c*y^2 = x^3 + a2*x^2 + a1*x + a0 with rational coefficients, c != 0."""

    __slots__ = ("c", "a2", "a1", "a0")

    def __init__(self, c=1, a2=0, a1=0, a0=0):
        self.c = Rat(c)
        self.a2 = Rat(a2)
        self.a1 = Rat(a1)
        self.a0 = Rat(a0)
        if self.c == 0:
            raise ValueError("c must be nonzero")
        if disc3(Rat(1), self.a2, self.a1, self.a0) == 0:
            raise ValueError("singular curve: the cubic has a repeated root")

    @staticmethod
    def weierstrass(A, B) -> "CurveModel":
        return CurveModel(1, 0, A, B)

    @property
    def is_short_weierstrass(self) -> bool:
        return self.c == 1 and self.a2 == 0

    @property
    def A(self) -> Rat:
        if not self.is_short_weierstrass:
            raise ValueError("not in short Weierstrass form")
        return self.a1

    @property
    def B(self) -> Rat:
        if not self.is_short_weierstrass:
            raise ValueError("not in short Weierstrass form")
        return self.a0

    def g(self, x):
        """The cubic x^3 + a2 x^2 + a1 x + a0, over any coefficient ring."""
        return ((x + self.a2) * x + self.a1) * x + self.a0

    def g_poly(self) -> UniPoly:
        return UniPoly([self.a0, self.a1, self.a2, 1])

    def contains(self, x, y) -> bool:
        return self.c * y * y == self.g(x)

    def twist(self, delta) -> "CurveModel":
        """The quadratic twist delta*c*y^2 = g(x)."""
        return CurveModel(self.c * Rat(delta), self.a2, self.a1, self.a0)

    def point(self, x, y) -> "Point":
        P = Point(self, x, y)
        if not self.contains(x, y):
            raise ValueError(f"({x}, {y}) is not on {self}")
        return P

    def infinity(self) -> "Point":
        return Point(self, None, None, infinity=True)

    def __eq__(self, other):
        if not isinstance(other, CurveModel):
            return NotImplemented
        return (self.c, self.a2, self.a1, self.a0) == (
            other.c,
            other.a2,
            other.a1,
            other.a0,
        )

    def __hash__(self):
        return hash((self.c, self.a2, self.a1, self.a0))

    def __repr__(self):
        lhs = "y^2" if self.c == 1 else f"{self.c}*y^2"
        return f"CurveModel({lhs} = x^3 + {self.a2}*x^2 + {self.a1}*x + {self.a0})"


class Point:
    """A point on a CurveModel, either affine (x, y) or the point at infinity.

    Coordinates may be Fractions, CubicElements, or SexticElements; the group
    law is generic over the coordinate field.
    """

    __slots__ = ("curve", "x", "y", "infinity")

    def __init__(self, curve: CurveModel, x, y, infinity: bool = False):
        self.curve = curve
        self.infinity = infinity
        self.x = None if infinity else x
        self.y = None if infinity else y

    @property
    def is_infinity(self) -> bool:
        return self.infinity

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        if self.curve != other.curve:
            return False
        if self.infinity or other.infinity:
            return self.infinity and other.infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.infinity:
            return hash((self.curve, "inf"))
        return hash((self.curve, self.x, self.y))

    def __repr__(self):
        if self.infinity:
            return "Point(O)"
        return f"Point({self.x!r}, {self.y!r})"

    def __neg__(self):
        if self.infinity:
            return self
        return Point(self.curve, self.x, -self.y)

    def __add__(self, other: "Point") -> "Point":
        return add(self.curve, self, other)

    def __sub__(self, other: "Point") -> "Point":
        return add(self.curve, self, -other)

    def __rmul__(self, k: int) -> "Point":
        return mul(self.curve, k, self)


def add(E: CurveModel, P: Point, Q: Point) -> Point:
    """Chord-tangent addition on c*y^2 = g(x)."""
    if P.curve != E or Q.curve != E:
        raise ValueError("points not on the given curve")
    if P.infinity:
        return Q
    if Q.infinity:
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return E.infinity()
        # tangent: implicit differentiation gives slope g'(x) / (2 c y)
        num = (3 * P.x + 2 * E.a2) * P.x + E.a1
        lam = num / (2 * E.c * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = E.c * lam * lam - E.a2 - P.x - Q.x
    y3 = -(P.y + lam * (x3 - P.x))
    R = Point(E, x3, y3)
    assert E.contains(x3, y3), "group law left the curve"
    return R


def neg(E: CurveModel, P: Point) -> Point:
    if P.curve != E:
        raise ValueError("point not on the given curve")
    return -P


def mul(E: CurveModel, k: int, P: Point) -> Point:
    """k-fold multiple by double and add."""
    if k < 0:
        return mul(E, -k, -P)
    R = E.infinity()
    base = P
    while k:
        if k & 1:
            R = add(E, R, base)
        base = add(E, base, base)
        k >>= 1
    return R


# ---------------------------------------------------------------------------
# the order-6 automorphism on pairs and its stabilizer classes
# ---------------------------------------------------------------------------

PairPoint = tuple[Point, Point]

StabilizerClass = Literal["free", "full", "order3", "order2"]


def rho(pair: PairPoint) -> PairPoint:
    """(P, Q) -> (Q, Q - P); an order-6 automorphism of E x E."""
    P, Q = pair
    return (Q, Q - P)


def stabilizer_class(E: CurveModel, pair: PairPoint) -> StabilizerClass:
    """Classify the stabilizer of the pair under the order-6 action.

    (O, O) is fully fixed; 3-torsion pairs (T3, -T3) are fixed by the cube
    of a generator's square; 2-torsion pairs by the involution; everything
    else moves freely.
    """
    P, Q = pair
    O = E.infinity()
    if P == O and Q == O:
        return "full"
    if P != O and mul(E, 3, P) == O and Q == -P:
        return "order3"
    if mul(E, 2, P) == O and mul(E, 2, Q) == O:
        return "order2"
    return "free"


def apply_automorphism(g: Callable, P: Point) -> Point:
    """Apply a coordinatewise field automorphism to an affine point."""
    if P.infinity:
        return P
    return Point(P.curve, g(P.x), g(P.y))


def trace_under(E: CurveModel, P: Point, g: Callable, order: int) -> Point:
    """Sum of the Galois images of P under an order-k automorphism."""
    total = E.infinity()
    current = P
    for _ in range(order):
        total = add(E, total, current)
        current = apply_automorphism(g, current)
    return total


# ---------------------------------------------------------------------------
# infinite order heuristic
# ---------------------------------------------------------------------------


def _component_bits(v) -> int:
    if is_rat(v):
        q = Rat(v)
        return max(int(q.numerator).bit_length(), int(q.denominator).bit_length())
    if isinstance(v, CubicElement):
        return max(_component_bits(c) for c in v.coefficients())
    if isinstance(v, SexticElement):
        return max(_component_bits(c) for c in v.coefficients())
    raise TypeError(f"unsupported coordinate type {type(v)!r}")


def naive_height(P: Point) -> int:
    """Max bit length over the x-coordinate's rational components."""
    if P.infinity:
        return 0
    return _component_bits(P.x)


@dataclass(frozen=True)
class InfiniteOrderCertificate:
    """Record of the checks behind the infinite-order heuristic."""

    result: bool
    multiples_checked: int
    first_vanishing_multiple: int | None
    height_p: int
    height_4p: int

    def __bool__(self) -> bool:
        return self.result


def is_probably_infinite_order(
    E: CurveModel, P: Point, bound: int = 36
) -> InfiniteOrderCertificate:
    """Heuristic infinite-order certificate.

    True iff k*P != O for 1 <= k <= bound and the naive height of 4P strictly
    exceeds that of P.  The default bound 36 kills any point whose sixfold
    trace relation would force [36]P = O.  This is a heuristic, not a proof.
    """
    if P.infinity:
        return InfiniteOrderCertificate(False, 0, 0, 0, 0)
    h_p = naive_height(P)
    multiple = P
    h_4p = 0
    for k in range(2, bound + 1):
        multiple = add(E, multiple, P)
        if k == 4:
            h_4p = naive_height(multiple)
        if multiple.is_infinity:
            return InfiniteOrderCertificate(False, k, k, h_p, h_4p)
    ok = h_4p > h_p
    return InfiniteOrderCertificate(ok, bound, None, h_p, h_4p)
