"""The auxiliary surface S6(E) and its point-to-sextic-field pipeline.

A rational point (U, D, T) of the surface encodes a degenerate conic cutting
E in six points whose x-coordinates satisfy a cyclic cubic and whose
y-coordinates land in a quadratic extension of that cubic field.  The
pipeline rebuilds everything from the surface point and the curve model:
intersection cubic, cubic field, square class of y, sextic tower, the lifted
point and its Galois orbit, with every certificate checked exactly.

Normalization for a general model c*y^2 = g(x): the surface coordinate U is
c^2 times the line parameter, so the intersection cubic is
T*g(x) - (U/c)*(x - T)^2.  For c = 1 everything reduces to the plain
Weierstrass formulas, the square class of y is always that of U*T, and the
quadratic-twist transport acts by U -> U/delta with D and T untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .ecurve import (
    CurveModel,
    Point,
    add,
    apply_automorphism,
    is_probably_infinite_order,
    trace_under,
)
from .integers import is_square, rational_isqrt, squarefree_part
from .rationals import Rat
from .numfield import (
    ConductorEstimate,
    CyclicCubicField,
    SexticField,
    cubic_conductor_heuristic,
    monicize_integral,
    rational_cubic_roots,
)
from .polynomial import UniPoly, cubic_discriminant


class SurfaceError(Exception):
    """Base class for typed surface diagnostics."""


class NotOnSurface(SurfaceError):
    """The input triple does not satisfy the surface equation."""


class DegenerateRational(SurfaceError):
    """The intersection cubic splits over Q: the point yields no cubic field."""

    def __init__(self, msg: str, roots=None):
        super().__init__(msg)
        self.roots = roots or []


class DegenerateCubic(SurfaceError):
    """The y square class is trivial: the point lives over the cubic field."""

    def __init__(self, msg: str, field=None):
        super().__init__(msg)
        self.field = field


class ClassificationFailure(Exception):
    """No Galois generator matches the expected orbit relation."""


@dataclass(frozen=True)
class S6Point:
    U: Rat
    D: Rat
    T: Rat

    def __iter__(self):
        return iter((self.U, self.D, self.T))


def delta_formula(A, B, T, U):
    """Discriminant of the intersection cubic, in closed form.

    Generic over the coefficient ring: accepts rationals, UniPoly, MultiPoly.
    """
    return (
        4 * T * (T**3 + A * T + B) * U**3
        - T**2 * (27 * T**4 + 30 * A * T**2 - A**2 + 36 * B * T) * U**2
        - 6 * T**3 * (4 * A**2 * T - 9 * B * T**2 + 3 * A * B) * U
        - (4 * A**3 + 27 * B**2) * T**4
    )


def intersection_cubic(E: CurveModel, T, U) -> UniPoly:
    """The cubic T*g(x) - (U/c)*(x - T)^2 whose roots are the slice of E.

    For a short Weierstrass model this is literally
    T x^3 - U x^2 + T(A + 2U) x + T(B - TU).
    """
    T = Rat(T)
    U = Rat(U)
    v = U / E.c
    # T*(x^3 + a2 x^2 + a1 x + a0) - v*(x^2 - 2T x + T^2)
    return UniPoly(
        [
            E.a0 * T - v * T * T,
            E.a1 * T + 2 * v * T,
            E.a2 * T - v,
            T,
        ]
    )


def sextic_poly(A, B, T, U) -> UniPoly:
    """Degree-6 polynomial in y satisfied by the y-coordinates of the slice.

    Derived by eliminating x between the intersection cubic and y^2 = g(x);
    the derivation fixes a sign slip in the usual display of the y^4 term
    (the inner U^2 enters with a plus).
    """
    A, B, T, U = Rat(A), Rat(B), Rat(T), Rat(U)
    g_t = T**3 + A * T + B
    return UniPoly(
        [
            -(g_t**2) * U**3,
            0,
            U**2 * (3 * T**5 + 2 * U * T**3 - 6 * B * T**2 + A * (A + 2 * U) * T + 2 * B * U),
            0,
            -U * (3 * T**4 - 2 * (A + 3 * U) * T**2 + U**2),
            0,
            T**3,
        ]
    )


class S6Surface:
    """Evaluator for the affine model of S6(E) in the chart T != 0."""

    def __init__(self, E: CurveModel):
        self.curve = E

    def disc_at(self, T, U) -> Rat:
        return cubic_discriminant(intersection_cubic(self.curve, T, U))

    def rhs(self, T, U) -> Rat:
        """Right-hand side of the surface equation T*D^2 = rhs(T, U)."""
        T = Rat(T)
        if T == 0:
            raise ValueError("T = 0 is outside the affine chart")
        return self.disc_at(T, U) / T

    def residual(self, p: S6Point) -> Rat:
        """T*D^2 - rhs; zero exactly when the point is on the surface."""
        U, D, T = Rat(p.U), Rat(p.D), Rat(p.T)
        if T == 0:
            raise ValueError("T = 0 is outside the affine chart")
        return T * D * D - self.rhs(T, U)

    def contains(self, p: S6Point) -> bool:
        return self.residual(p) == 0


def s6_model(E: CurveModel) -> S6Surface:
    return S6Surface(E)


def surface_residual_poly(E: CurveModel, U_poly: UniPoly, D_poly: UniPoly) -> UniPoly:
    """The surface relation for a polynomial section, cleared by T.

    Returns T^2 * D(T)^2 - disc(T), which is T times the usual residual;
    vanishing identically certifies that T -> (U(T), D(T), T) is a section
    of the surface over the T-line.
    """
    from .polynomial import disc3

    T = UniPoly.x()
    v = U_poly / E.c
    cubic_coeffs = (
        T,
        E.a2 * T - v,
        E.a1 * T + 2 * v * T,
        E.a0 * T - v * T * T,
    )
    disc = disc3(*cubic_coeffs)
    lhs = T * D_poly * D_poly * T  # T^2 * D^2; compare against disc = T * rhs * T
    return lhs - disc


# ---------------------------------------------------------------------------
# the pipeline
# ---------------------------------------------------------------------------

CERTIFICATE_KEYS = (
    "cubic_irreducible",
    "disc_square",
    "on_curve",
    "trace_zero",
    "infinite_order_heuristic",
)


@dataclass
class SexticConstruction:
    """Everything the pipeline certifies for one surface point."""

    curve: CurveModel
    input_point: S6Point
    cubic: UniPoly  # monic integral defining polynomial of K3
    scale: Rat  # x on the curve is alpha / scale
    K3: CyclicCubicField
    delta: int
    K6: SexticField
    P: Point
    orbit: list[Point]
    certificates: dict[str, bool]
    conductor: ConductorEstimate

    def all_certified(self) -> bool:
        return all(self.certificates[k] for k in CERTIFICATE_KEYS)

    def to_json_dict(self) -> dict:
        E = self.curve
        U, D, T = self.input_point
        x = self.P.x.a  # K3 component; the b part of x is zero
        y = self.P.y
        return {
            "curve": {
                "c": str(E.c),
                "a2": str(E.a2),
                "a1": str(E.a1),
                "a0": str(E.a0),
            },
            "input_point": {"U": str(U), "D": str(D), "T": str(T)},
            "cubic": [str(c) for c in self.cubic.coeffs],
            "k3": {
                "f": [str(c) for c in self.K3.f.coeffs],
                "disc": str(self.K3.disc),
                "conductor_determined": self.conductor.determined,
                "conductor_ambiguous_support": sorted(self.conductor.ambiguous_support),
            },
            "delta": self.delta,
            "point": {
                "x": [str(c) for c in x.coefficients()],
                "y": [
                    [str(c) for c in y.a.coefficients()],
                    [str(c) for c in y.b.coefficients()],
                ],
            },
            "certificates": dict(self.certificates),
            "orbit_case": "iv",
        }


def point_to_sextic_field(E: CurveModel, p: S6Point) -> SexticConstruction:
    """Build and certify the sextic field construction attached to (U, D, T).

    Raises NotOnSurface / DegenerateRational / DegenerateCubic for inputs
    that fail the surface equation or fall into the small-field cases.
    """
    U, D, T = Rat(p.U), Rat(p.D), Rat(p.T)
    if T == 0:
        raise ValueError("T = 0 is outside the affine chart")
    if U == 0:
        raise ValueError("U = 0 gives a degenerate slice")
    surf = S6Surface(E)
    if surf.residual(p) != 0:
        raise NotOnSurface(f"residual {surf.residual(p)} != 0 at {p}")

    cubic = intersection_cubic(E, T, U)
    h, scale = monicize_integral(cubic)

    roots = rational_cubic_roots(h)
    if roots:
        raise DegenerateRational(
            "intersection cubic is reducible over Q (small-field case)",
            roots=[r / scale for r in roots],
        )

    disc = cubic_discriminant(cubic)
    disc_ok = is_square(disc)
    if not disc_ok:
        # the surface equation forces disc = (D*T/c^2)^2, so this is a bug
        raise AssertionError("surface point with non-square cubic discriminant")

    delta = squarefree_part(U * T)
    if delta == 1:
        raise DegenerateCubic(
            "y already lives in the cubic field (square class of U*T is trivial)",
            field=CyclicCubicField(h),
        )

    K3 = CyclicCubicField(h)
    K6 = SexticField(K3, delta)

    # x = alpha / scale; y = (x - T) * s * sqrt(delta) with s^2 = U/(c^2 T delta)
    x_k3 = K3.alpha * (Rat(1) / scale)
    s = rational_isqrt(U / (E.c * E.c * T * Rat(delta)))
    x6 = K6.lift(x_k3)
    y6 = K6.element(K3.zero(), (x_k3 - T) * s)
    P = Point(E, x6, y6)
    on_curve = E.contains(x6, y6)

    rho = K6.rho
    orbit = [P]
    for _ in range(5):
        orbit.append(apply_automorphism(rho, orbit[-1]))
    distinct = len({(q.x, q.y) for q in orbit}) == 6

    trace = E.infinity()
    for q in orbit:
        trace = add(E, trace, q)
    trace_zero = trace.is_infinity

    rho3_neg = orbit[3] == -P
    collinear = add(E, add(E, P, orbit[2]), orbit[4]).is_infinity
    infinite = bool(is_probably_infinite_order(E, P))

    certificates = {
        "cubic_irreducible": True,
        "disc_square": disc_ok,
        "on_curve": on_curve,
        "trace_zero": trace_zero,
        "infinite_order_heuristic": infinite,
        "orbit_distinct": distinct,
        "rho_cubed_negates": rho3_neg,
        "collinear_triple_sums_to_zero": collinear,
    }

    return SexticConstruction(
        curve=E,
        input_point=S6Point(U, D, T),
        cubic=h,
        scale=scale,
        K3=K3,
        delta=delta,
        K6=K6,
        P=P,
        orbit=orbit,
        certificates=certificates,
        conductor=cubic_conductor_heuristic(h),
    )


# ---------------------------------------------------------------------------
# orbit classification
# ---------------------------------------------------------------------------

OrbitCase = Literal["i", "ii", "iii", "iv"]


def _coords_rational(P: Point) -> bool:
    return P.x.a.is_rational and P.x.b == 0 and P.y.a.is_rational and P.y.b == 0


def _coords_in_quadratic(P: Point) -> bool:
    return all(
        part.is_rational for part in (P.x.a, P.x.b, P.y.a, P.y.b)
    )


def _coords_in_cubic(P: Point) -> bool:
    zero = P.x.a.field.zero()
    return P.x.b == zero and P.y.b == zero


def orbit_classifier(arg) -> OrbitCase:
    """Classify a sextic-tower point into the four Galois-orbit cases.

    Accepts a SexticConstruction or a (curve, K6, point) triple where the
    point has SexticElement coordinates.  Full-tower points must satisfy
    g(g(P)) = g(P) - P for one of the two order-6 generators; anything else
    is a ClassificationFailure.
    """
    if isinstance(arg, SexticConstruction):
        E, K6, P = arg.curve, arg.K6, arg.P
    else:
        E, K6, P = arg
    if P.is_infinity:
        return "i"
    if _coords_rational(P):
        return "i"
    if _coords_in_quadratic(P):
        tau = lambda e: e.conj()
        if apply_automorphism(tau, P) == -P:
            return "ii"
        raise ClassificationFailure("quadratic point with tau(P) != -P")
    if _coords_in_cubic(P):
        return "iii"
    rho = K6.rho
    rho5 = lambda e: rho(rho(rho(rho(rho(e)))))
    for gen in (rho, rho5):
        Q = apply_automorphism(gen, P)
        if apply_automorphism(gen, Q) == add(E, Q, -P):
            return "iv"
    raise ClassificationFailure("no order-6 generator satisfies g(Q) = Q - P")


# ---------------------------------------------------------------------------
# twist transport and the degree-3 cover
# ---------------------------------------------------------------------------


def twist_transport(E: CurveModel, delta, p: S6Point) -> S6Point:
    """Move a point of S6(E^delta) to S6(E) by (U, D, T) -> (U/delta, D, T).

    The input must lie on the twisted surface; the output is checked against
    S6(E) exactly and an inconsistency raises.
    """
    delta = Rat(delta)
    if delta == 0:
        raise ValueError("delta must be nonzero")
    twisted = E.twist(delta)
    if not S6Surface(twisted).contains(p):
        raise NotOnSurface("input point is not on the twisted surface")
    q = S6Point(Rat(p.U) / delta, Rat(p.D), Rat(p.T))
    if not S6Surface(E).contains(q):
        raise AssertionError("twist transport left the surface; normalization bug")
    return q


def s3_rhs(A, B, t, u):
    """Right side of the genus-1 double cover: disc of g(x) - (t x + u)^2."""
    from .polynomial import disc3

    return disc3(1, -(t * t), A - 2 * t * u, B - u * u)


def s3_cover(E: CurveModel, t, u, d) -> S6Point:
    """The degree-2 cover map (t, u, d) -> (U, D, T) = (-u t, -d u / t, -u / t).

    The input must satisfy d^2 = s3_rhs; the image is verified on S6(E).
    """
    if not E.is_short_weierstrass:
        raise ValueError("the cover is defined for short Weierstrass models")
    t, u, d = Rat(t), Rat(u), Rat(d)
    if t == 0:
        raise ValueError("t = 0 is outside the cover chart")
    if d * d != s3_rhs(E.A, E.B, t, u):
        raise NotOnSurface("input point is not on the double cover")
    T = -u / t
    if T == 0:
        raise ValueError("image has T = 0, outside the affine chart")
    p = S6Point(-u * t, -d * u / t, T)
    if not S6Surface(E).contains(p):
        raise AssertionError("cover image left the surface; identity bug")
    return p
