"""Three parametrized families of surface points with closed-form fields.

isog3   : curves y^2 = x^3 + a(x-b)^2 (rational 3-isogeny).  The fiber of the
          surface at T = b is rational and parametrized by coprime (m, n);
          the cubic field has conductor m^2 + 3n^2 and the quadratic layer
          has square class 9 b m^2 + (4a + 27b) n^2, so the sextic conductor
          is their product up to divisors of 6ab.
e160b1  : the curve y^2 = x(x^2 - 4x - 1) of conductor 160.  The fiber at
          U = 5/4 is rational; the parametrization below is taken literally,
          and the attached fields are recomputed from first principles (the
          printed cubic for this family uses a different parameter labeling,
          so reconciliation happens at the level of field isomorphism).
e2cyclic: curves 3b y^2 = g_c(x) with g_c = x^3 - 3(3c^2+1) x - 2(3c^2+1),
          whose 2-division field is cyclic cubic; doubling the obvious
          section produces nontrivial surface points.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Literal, Optional

from .ecurve import CurveModel
from .integers import Rat, factorize, is_squarefree, squarefree_part, valuation
from .numfield import (
    ConductorEstimate,
    _fp_derivative,
    _fp_gcd,
    _fp_normalize,
    cubic_conductor_heuristic,
)
from .polynomial import UniPoly, cubic_discriminant
from .s6 import S6Point, S6Surface, intersection_cubic, surface_residual_poly
from .integers import rational_isqrt


# ---------------------------------------------------------------------------
# family 1: rational 3-isogeny, y^2 = x^3 + a(x - b)^2
# ---------------------------------------------------------------------------


def isog3_curve(a, b) -> CurveModel:
    a, b = Rat(a), Rat(b)
    if a == 0 or b == 0:
        raise ValueError("parameters a, b must be nonzero")
    return CurveModel(1, a, -2 * a * b, a * b * b)


def isog3_point(a, b, m: int, n: int) -> S6Point:
    """The T = b fiber parametrized by coprime (m, n), n != 0.

    (U, D, T) = (9 b^2 (m^2+3n^2) / (4n^2) + a b,
                 27 b^4 m (m^2+3n^2) / (4 n^3),
                 b).
    """
    a, b = Rat(a), Rat(b)
    if n == 0:
        raise ValueError("n must be nonzero")
    if gcd(m, n) != 1:
        raise ValueError("(m, n) must be coprime")
    q1 = m * m + 3 * n * n
    U = Rat(9 * q1, 4 * n * n) * b * b + a * b
    D = Rat(27 * m * q1, 4 * n**3) * b**4
    p = S6Point(U, D, b)
    if S6Surface(isog3_curve(a, b)).residual(p) != 0:
        raise AssertionError("parametrization left the surface")
    return p


def isog3_cubic(m: int, n: int) -> UniPoly:
    """Defining cubic of the T = b fiber's field; independent of (a, b).

    12 n^2 x^3 - 9 (m^2+3n^2) x^2 + 6 (m^2+3n^2) x - (m^2+3n^2), of
    discriminant 2^4 3^4 n^2 m^2 (m^2+3n^2)^2.
    """
    if n == 0 or gcd(m, n) != 1:
        raise ValueError("need coprime (m, n) with n nonzero")
    q1 = m * m + 3 * n * n
    return UniPoly([-q1, 6 * q1, -9 * q1, 12 * n * n])


@dataclass(frozen=True)
class ConductorData:
    cubic_conductor: int
    quad_disc: int
    product: int
    squarefree: bool
    ambiguous_support: frozenset[int]

    def to_json_dict(self) -> dict:
        return {
            "cubic_conductor": self.cubic_conductor,
            "quad_disc": self.quad_disc,
            "product": self.product,
            "squarefree": self.squarefree,
            "ambiguous_support": sorted(self.ambiguous_support),
        }


def isog3_conductors(a: int, b: int, m: int, n: int) -> ConductorData:
    """Closed-form conductor data for the (a, b; m, n) member.

    The cubic layer has conductor m^2 + 3n^2 and the quadratic layer
    9 b m^2 + (4a + 27b) n^2; primes dividing both divide 6ab, so the
    product is the sextic conductor away from that support.
    """
    if gcd(m, n) != 1:
        raise ValueError("(m, n) must be coprime")
    q1 = m * m + 3 * n * n
    q2 = 9 * b * m * m + (4 * a + 27 * b) * n * n
    product = q1 * q2
    support = frozenset(factorize(6 * a * b).keys()) if a * b != 0 else frozenset()
    return ConductorData(q1, q2, product, product != 0 and is_squarefree(product), support)


EisensteinVerdict = Literal["eisenstein", "reverse_eisenstein", "neither"]


def eisenstein_check(p: UniPoly, prime: int) -> EisensteinVerdict:
    """Eisenstein test at a prime, in both orientations.

    eisenstein: prime divides every non-leading coefficient, not the leading
    one, and its square misses the constant term.  reverse_eisenstein is the
    same after reversing the coefficients (certifies total ramification from
    the other end).
    """
    if prime < 2:
        raise ValueError("prime must be at least 2")
    q = p.clear_denominators()
    coeffs = [int(c) for c in q.coeffs]

    def _is_eisenstein(cs: list[int]) -> bool:
        lead, rest = cs[-1], cs[:-1]
        if lead % prime == 0:
            return False
        if any(c % prime for c in rest):
            return False
        return cs[0] % (prime * prime) != 0

    if _is_eisenstein(coeffs):
        return "eisenstein"
    if _is_eisenstein(list(reversed(coeffs))):
        return "reverse_eisenstein"
    return "neither"


# ---------------------------------------------------------------------------
# family 2: the conductor-160 curve y^2 = x(x^2 - 4x - 1)
# ---------------------------------------------------------------------------


E160B1 = CurveModel(1, -4, -1, 0)


def e160b1_point(m: int, n: int) -> S6Point:
    """The U = 5/4 fiber parametrized by coprime (m, n).

    (U, D, T) = (5/4,
                 m n (245 m^2 + 81 n^2) / (270 (3m^2+n^2)^2),
                 -(25 m^2 + 9 n^2) / (45 (3m^2+n^2))).
    """
    if (m, n) == (0, 0) or gcd(m, n) != 1:
        raise ValueError("(m, n) must be coprime and not both zero")
    s = 3 * m * m + n * n
    U = Rat(5, 4)
    D = Rat(m * n * (245 * m * m + 81 * n * n), 270 * s * s)
    T = -Rat(25 * m * m + 9 * n * n, 45 * s)
    p = S6Point(U, D, T)
    if S6Surface(E160B1).residual(p) != 0:
        raise AssertionError("parametrization left the surface")
    return p


def e160b1_fiber_cubic(m: int, n: int) -> UniPoly:
    """Monic model of the x-coordinate cubic in the (F, G) parameter labels.

    F = 3m^2 + 25n^2, G = m^2 + 9n^2:
    x^3 + 3 F (11 m^2 + 81 n^2) x^2 + 216 F^2 G^2 x + 1200 F^2 G^4.
    These labels follow the ramification analysis and differ from the labels
    of e160b1_point.
    """
    F = 3 * m * m + 25 * n * n
    G = m * m + 9 * n * n
    H = 11 * m * m + 81 * n * n
    return UniPoly([1200 * F * F * G**4, 216 * F * F * G * G, 3 * F * H, 1])


Ramification = Literal["ramified", "unramified", "undetermined"]


def e160b1_ramification(m: int, n: int, p: int) -> Ramification:
    """Ramification of p in the cubic field of the (m, n) member.

    Parameters here are the fiber-cubic labels (F = 3m^2+25n^2 side).  For
    p outside {2, 3, 5}: a prime dividing F exactly once is totally ramified
    (the cubic is reverse Eisenstein there); otherwise the reduction of the
    monic model mod p has a simple factor, which in a Galois cubic forces p
    unramified.  The excluded primes and square divisors of F stay
    undetermined.
    """
    if gcd(m, n) != 1:
        raise ValueError("(m, n) must be coprime")
    if p in (2, 3, 5):
        return "undetermined"
    F = 3 * m * m + 25 * n * n
    vF = valuation(F, p) if F % p == 0 else 0
    if vF >= 2:
        return "undetermined"
    f1 = e160b1_fiber_cubic(m, n)
    coeffs = [int(c) % p for c in f1.coeffs]
    red = _fp_normalize(coeffs, p)
    if len(red) != 4:
        return "undetermined"  # cannot happen for a monic model
    g = _fp_gcd(red, _fp_derivative(red, p), p)
    if len(g) == 3:  # triple root mod p: total ramification pattern
        return "ramified" if vF == 1 else "undetermined"
    # square-free or (2,1) pattern: a simple factor lifts, so p is unramified
    return "unramified"


# ---------------------------------------------------------------------------
# family 3: 2-division field cyclic, 3b y^2 = g_c(x)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class E2CyclicModel:
    curve: CurveModel
    section_u: UniPoly  # zero polynomial
    section_d: UniPoly  # 18 c (3c^2+1) T


def e2cyclic_model(b, c) -> E2CyclicModel:
    """Curve 3b y^2 = x^3 - 3(3c^2+1) x - 2(3c^2+1) plus its obvious section.

    The cubic has discriminant (18 c (3c^2+1))^2, a square, so the 2-division
    field is cyclic cubic; the section T -> (0, 18 c (3c^2+1) T, T) lies on
    the surface identically in T.
    """
    b, c = Rat(b), Rat(c)
    if b == 0:
        raise ValueError("b must be nonzero")
    if c == 0:
        raise ValueError("c = 0 gives a singular member")
    k = 3 * c * c + 1
    curve = CurveModel(3 * b, 0, -3 * k, -2 * k)
    section_u = UniPoly.zero()
    section_d = UniPoly([0, 18 * c * k])
    resid = surface_residual_poly(curve, section_u, section_d)
    if not resid.is_zero:
        raise AssertionError("section is not on the surface")
    return E2CyclicModel(curve, section_u, section_d)


def fiber_double_section(b, c, T0) -> Optional[S6Point]:
    """Double the obvious section inside the fiber over T0, by the group law.

    The fiber T = T0 of the surface is the genus-1 curve W^2 = C(U) with
    W = T D and C the discriminant of the intersection cubic as a cubic in
    U; its zero is the point at U = infinity.  This is the independent check
    for the closed-form doubled section.  Returns None when the double is
    the zero section.
    """
    b, c, T0 = Rat(b), Rat(c), Rat(T0)
    model = e2cyclic_model(b, c)
    E = model.curve
    if T0 == 0:
        raise ValueError("T = 0 is outside the affine chart")
    U = UniPoly.x()
    v = U / E.c
    T = T0
    C = _disc3_poly(T, E.a2 * T - v, E.a1 * T + 2 * v * T, E.a0 * T - v * T * T)
    c3 = C[3]
    # V = c3 U, Y = c3 W puts the fiber in monic form Y^2 = V^3 + ...
    fiber = CurveModel(1, C[2], C[1] * c3, C[0] * c3 * c3)
    W0 = model.section_d(T0) * T0
    P = fiber.point(Rat(0), c3 * W0)
    Q = P + P
    if Q.is_infinity:
        return None
    return S6Point(Q.x / c3, Q.y / (c3 * T0), T0)


def _disc3_poly(a, b, c, d):
    from .polynomial import disc3

    return disc3(a, b, c, d)


def e2cyclic_2P_point(b, c, T0) -> S6Point:
    """Double of the obvious section, evaluated at T = T0, in closed form.

    U is the closed-form parametrization of the doubled section times the
    square factor 9 b^2 that carries the display normalization onto this
    surface chart; D is recovered as the exact square root the surface
    equation guarantees.  fiber_double_section reproduces the same point by
    an honest group-law doubling.
    """
    b, c, T0 = Rat(b), Rat(c), Rat(T0)
    if b == 0 or c == 0:
        raise ValueError("b and c must be nonzero")
    if T0 == 0:
        raise ValueError("T = 0 is outside the affine chart")
    k = 3 * c * c + 1
    den = T0**3 - 3 * k * T0 - 2 * k
    if den == 0:
        raise ValueError("T0 is a root of the 2-division cubic (bad fiber)")
    u17 = 3 * k * T0 * (T0**2 + 2 * T0 - c * c + 1) * (T0**2 + 2 * T0 + 3 * c * c + 1) / (
        4 * b * c * c * den
    )
    U = 9 * b * b * u17
    model = e2cyclic_model(b, c)
    surf = S6Surface(model.curve)
    quotient = surf.rhs(T0, U) / T0
    if not quotient >= 0:
        raise AssertionError("surface quotient is negative; cannot be a square")
    D = rational_isqrt(quotient)  # raises if not an exact square
    p = S6Point(U, D, T0)
    if surf.residual(p) != 0:
        raise AssertionError("doubled section left the surface")
    return p


# ---------------------------------------------------------------------------
# family records
# ---------------------------------------------------------------------------


@dataclass
class FamilyRecord:
    """One family member: its surface point, pipeline output, conductor data."""

    family: str
    params: dict
    s6point: S6Point
    construction: Optional[object]  # SexticConstruction or None when degenerate
    degenerate: Optional[str]
    conductor: Optional[ConductorData]

    def to_json_dict(self) -> dict:
        out = {
            "family": self.family,
            "params": {k: str(v) for k, v in self.params.items()},
            "s6point": {
                "U": str(self.s6point.U),
                "D": str(self.s6point.D),
                "T": str(self.s6point.T),
            },
        }
        if self.construction is not None:
            out["construction"] = self.construction.to_json_dict()
        if self.degenerate is not None:
            out["degenerate"] = self.degenerate
        if self.conductor is not None:
            out["conductor"] = self.conductor.to_json_dict()
        return out


def _pipeline_conductor(construction) -> ConductorData:
    est: ConductorEstimate = construction.conductor
    delta = construction.delta
    product = est.determined * abs(delta)
    return ConductorData(
        est.determined,
        delta,
        product,
        is_squarefree(product) if product != 0 else False,
        est.ambiguous_support,
    )


def family_record(family: str, **params) -> FamilyRecord:
    """Build the full record (surface point + pipeline + conductors) for a member."""
    from .s6 import DegenerateCubic, DegenerateRational, point_to_sextic_field

    if family == "isog3":
        a, b, m, n = params["a"], params["b"], int(params["m"]), int(params["n"])
        curve = isog3_curve(a, b)
        point = isog3_point(a, b, m, n)
        conductor = isog3_conductors(int(a), int(b), m, n)
    elif family == "160b1":
        m, n = int(params["m"]), int(params["n"])
        curve = E160B1
        point = e160b1_point(m, n)
        conductor = None
    elif family == "e2cyclic":
        b, c, T0 = params["b"], params["c"], params["T"]
        model = e2cyclic_model(b, c)
        curve = model.curve
        point = e2cyclic_2P_point(b, c, T0)
        conductor = None
    else:
        raise ValueError(f"unknown family {family!r}")

    construction = None
    degenerate = None
    try:
        construction = point_to_sextic_field(curve, point)
    except DegenerateRational as exc:
        degenerate = f"rational: {exc}"
    except DegenerateCubic as exc:
        degenerate = f"cubic: {exc}"

    if construction is not None and conductor is None:
        conductor = _pipeline_conductor(construction)
    return FamilyRecord(family, params, point, construction, degenerate, conductor)
