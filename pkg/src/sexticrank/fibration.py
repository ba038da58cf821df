"""The elliptic fibration of the surface over the T-line.

Projecting (U, D, T) -> T turns the surface into a pencil of cubics; after a
Weierstrass reduction that moves the 3-torsion section to X = 0 the fiber
over T is

    Y^2 = X^3 - 27*(p(T)*X + q(T))^2,
    p = 3T^2 + A,
    q = 4*(27AT^4 + 54BT^3 + 18A^2T^2 + 54ABT - A^3 + 27B^2).

The discriminant of that cubic factors as -2125764 * q^3 * (T^3 + A T + B)^2,
so the multiplicity profile of the singular fibers is (q/4 cubed, the curve
cubic squared), with total affine degree 18 and order 24 - 18 = 6 at
infinity for generic coefficients.  Kodaira types themselves are never
computed here; the profile is the computable shadow.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ecurve import CurveModel
from .integers import Rat, factorize, valuation
from .polynomial import UniPoly, disc3, poly_gcd, squarefree_decomposition


@dataclass(frozen=True)
class FibrationModel:
    """Y^2 = X^3 - 27*(p X + q)^2 over Q(T), for y^2 = x^3 + A x + B."""

    A: Rat
    B: Rat
    p: UniPoly
    q: UniPoly

    def x_cubic_coeffs(self) -> tuple[UniPoly, UniPoly, UniPoly]:
        """(a2, a1, a0) of the cubic in X, as polynomials in T."""
        return (-27 * self.p * self.p, -54 * self.p * self.q, -27 * self.q * self.q)

    def specialize(self, T0) -> tuple[Rat, Rat, Rat]:
        T0 = Rat(T0)
        a2, a1, a0 = self.x_cubic_coeffs()
        return a2(T0), a1(T0), a0(T0)


def build_fibration(A, B) -> FibrationModel:
    A, B = Rat(A), Rat(B)
    if 4 * A**3 + 27 * B**2 == 0:
        raise ValueError("singular curve: 4A^3 + 27B^2 = 0")
    p = UniPoly([A, 0, 3])
    q = 4 * UniPoly(
        [-(A**3) + 27 * B**2, 54 * A * B, 18 * A**2, 54 * B, 27 * A]
    )
    return FibrationModel(A, B, p, q)


# ---------------------------------------------------------------------------
# change of variables between the surface chart and the Weierstrass model
# ---------------------------------------------------------------------------


def _w_h(A, B, T):
    w = T**3 + A * T + B
    h = 3 * A * T**2 + 9 * B * T - A**2
    return w, h


def uv_to_xy(A, B, T, U, D) -> tuple[Rat, Rat]:
    """Surface coordinates (U, D) at height T to fiber coordinates (X, Y)."""
    A, B, T, U, D = map(Rat, (A, B, T, U, D))
    w, h = _w_h(A, B, T)
    if w == 0:
        raise ValueError("T is on the multiplicity-2 locus (curve cubic vanishes)")
    if T == 0:
        raise ValueError("T = 0 is outside the affine chart")
    X = 36 * U * w / T - 12 * h
    Y = 108 * D * w / T
    return X, Y


def xy_to_uv(A, B, T, X, Y) -> tuple[Rat, Rat]:
    """Inverse change of variables; roundtrips with uv_to_xy exactly."""
    A, B, T, X, Y = map(Rat, (A, B, T, X, Y))
    w, h = _w_h(A, B, T)
    if w == 0:
        raise ValueError("T is on the multiplicity-2 locus (curve cubic vanishes)")
    U = (X + 12 * h) * T / (36 * w)
    D = Y * T / (108 * w)
    return U, D


def uv_xy_change(A, B, T):
    """Both directions of the change of variables, specialized at T."""
    return (
        lambda U, D: uv_to_xy(A, B, T, U, D),
        lambda X, Y: xy_to_uv(A, B, T, X, Y),
    )


# ---------------------------------------------------------------------------
# section checks (formal squares, no root extraction)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SectionProof:
    """Outcome of an exact polynomial identity check."""

    name: str
    holds: bool
    detail: str = ""


def check_T3_torsion(A, B) -> SectionProof:
    """The point at X = 0 is 3-torsion: psi3(0) = 4*a2*a0 - a1^2 = 0.

    With a2 = -27 p^2, a1 = -54 p q, a0 = -27 q^2 the cancellation
    4*729 p^2 q^2 - 2916 p^2 q^2 = 0 is exact for every A, B; the stated
    Y-coordinate 12*sqrt(-3)*(-q/4) satisfies Y^2 = -27 q^2 formally.
    """
    fib = build_fibration(A, B)
    a2, a1, a0 = fib.x_cubic_coeffs()
    psi3_at_zero = 4 * a2 * a0 - a1 * a1
    # Y(T3)^2 = 144 * (-3) * (q/4)^2 must equal a0 = -27 q^2
    y_sq = 144 * -3 * (fib.q * Rat(1, 4)) ** 2
    ok = psi3_at_zero.is_zero and y_sq == a0
    return SectionProof("three_torsion_section", ok, "psi3(0) == 0 and Y^2 == -27 q^2")


def check_Pinf_on_curve(A, B) -> SectionProof:
    """The section X = -12 h, Y^2 = 108^2 (-4A^3 - 27B^2) w^2 lies on the model.

    Verified as a polynomial identity in T with the square of the irrational
    Y-coordinate substituted formally.
    """
    A, B = Rat(A), Rat(B)
    fib = build_fibration(A, B)
    w = UniPoly([B, A, 0, 1])
    h = UniPoly([-(A**2), 9 * B, 3 * A])
    X = -12 * h
    y_sq = 108**2 * (-4 * A**3 - 27 * B**2) * w * w
    lhs = X**3 - 27 * (fib.p * X + fib.q) ** 2 - y_sq
    return SectionProof("infinite_order_section", lhs.is_zero, "X^3 - 27(pX+q)^2 == Y^2 in Q[T]")


# ---------------------------------------------------------------------------
# singular fiber profile
# ---------------------------------------------------------------------------


@dataclass
class FiberProfile:
    """Multiplicity profile of the fibration discriminant over the T-line.

    Loci are monic polynomials in T; projective degrees count roots at
    infinity when the quartic locus drops degree.  For the generic pattern,
    3 * 4 + 2 * 3 = 18 and the fiber at infinity has order 24 - 18 = 6.
    """

    entries: list[tuple[UniPoly, int]]
    infinity_order: int
    generic: bool
    degree: int = 0

    def __post_init__(self):
        self.degree = sum(m * p.degree for p, m in self.entries)


def fiber_profile(A, B) -> FiberProfile:
    """Square-free decomposition of the discriminant of the fiber cubic."""
    fib = build_fibration(A, B)
    a2, a1, a0 = fib.x_cubic_coeffs()
    one = UniPoly.one()
    disc = disc3(one, a2, a1, a0)
    if disc.is_zero:
        raise ValueError("identically singular fibration")
    parts = squarefree_decomposition(disc)
    q_locus = fib.q.monic()
    w_locus = UniPoly([fib.B, fib.A, 0, 1])
    by_mult = {m: p for p, m in parts}
    generic = (
        sorted(by_mult) == [2, 3]
        and by_mult[3] == q_locus
        and by_mult[2] == w_locus.monic()
        and fib.q.degree == 4
        and poly_gcd(q_locus, w_locus).degree == 0
    )
    # projective convention: a degree drop of the quartic locus is a root at
    # infinity of the multiplicity-3 locus, keeping the order-6 fiber at T=inf
    entries = [(p, m) for p, m in sorted(parts, key=lambda t: -t[1])]
    affine_degree = sum(m * p.degree for p, m in entries)
    drop3 = 4 - by_mult[3].degree if 3 in by_mult else 0
    infinity_order = 24 - affine_degree - 3 * drop3
    return FiberProfile(entries, infinity_order, generic)


# ---------------------------------------------------------------------------
# isogeny consistency by point counts
# ---------------------------------------------------------------------------


def _count_points_mod_p(a2: int, a1: int, a0: int, p: int) -> int:
    """#E(F_p) for y^2 = x^3 + a2 x^2 + a1 x + a0, counting infinity."""
    # quadratic residue table
    squares = [0] * p
    for i in range(p):
        squares[i * i % p] = 1
    total = 1
    for x in range(p):
        rhs = ((x + a2) * x + a1) * x + a0
        rhs %= p
        if rhs == 0:
            total += 1
        elif squares[rhs]:
            total += 2
    return total


def _integral_cubic_model(a2: Rat, a1: Rat, a0: Rat) -> tuple[int, int, int, int]:
    """Scale (a2, a1, a0) by (l^2, l^4, l^6) to integers; returns (l, ...)."""
    from math import lcm

    l = 1
    den = lcm(
        int(Rat(a2).denominator), int(Rat(a1).denominator), int(Rat(a0).denominator)
    )
    while den != 1:
        l *= den
        a2, a1, a0 = a2 * den**2, a1 * den**4, a0 * den**6
        den = lcm(
            int(Rat(a2).denominator),
            int(Rat(a1).denominator),
            int(Rat(a0).denominator),
        )
    return l, int(a2), int(a1), int(a0)


@dataclass
class IsogenyCountReport:
    consistent: bool
    counts: dict[int, tuple[int, int]]
    skipped: list[int] = field(default_factory=list)


def isogeny_pointcount_check(A, B, T0, primes, perturb_codomain: bool = False) -> IsogenyCountReport:
    """Compare point counts of the fiber and its 3-isogenous model mod primes.

    The codomain is Y^2 = X^3 + ((3T^2 + A) X + 4 (T^3 + A T + B)^2)^2.
    Isogenous curves share point counts at good primes; bad primes in the
    list are skipped with a note.  `perturb_codomain` shifts q' by 1 and is
    the negative control.
    """
    A, B, T0 = Rat(A), Rat(B), Rat(T0)
    fib = build_fibration(A, B)
    dom = fib.specialize(T0)
    p_val = fib.p(T0)
    w = T0**3 + A * T0 + B
    qprime = 4 * w * w + (1 if perturb_codomain else 0)
    # codomain: X^3 + (p X + q')^2 = X^3 + p^2 X^2 + 2 p q' X + q'^2
    cod = (p_val * p_val, 2 * p_val * qprime, qprime * qprime)

    counts: dict[int, tuple[int, int]] = {}
    skipped: list[int] = []
    for p in primes:
        if p < 3:
            skipped.append(p)
            continue
        try:
            l1, d2, d1, d0 = _integral_cubic_model(*dom)
            l2, c2, c1, c0 = _integral_cubic_model(*cod)
        except (ValueError, ZeroDivisionError):
            skipped.append(p)
            continue
        if l1 % p == 0 or l2 % p == 0:
            skipped.append(p)
            continue
        disc_dom = disc3(1, Rat(d2), Rat(d1), Rat(d0))
        disc_cod = disc3(1, Rat(c2), Rat(c1), Rat(c0))
        if disc_dom == 0 or disc_cod == 0 or int(disc_dom) % p == 0 or int(disc_cod) % p == 0:
            skipped.append(p)
            continue
        n1 = _count_points_mod_p(d2 % p, d1 % p, d0 % p, p)
        n2 = _count_points_mod_p(c2 % p, c1 % p, c0 % p, p)
        counts[p] = (n1, n2)
    consistent = all(n1 == n2 for n1, n2 in counts.values())
    return IsogenyCountReport(consistent, counts, skipped)


def fibration_check(A, B, isogeny_T=None, primes=(5, 7, 11, 13)) -> dict:
    """Bundle of fibration verifications as a JSON-friendly record."""
    t3 = check_T3_torsion(A, B)
    pinf = check_Pinf_on_curve(A, B)
    profile = fiber_profile(A, B)
    out = {
        "A": str(Rat(A)),
        "B": str(Rat(B)),
        "psi3_zero_identity": t3.holds,
        "pinf_on_curve_identity": pinf.holds,
        "fiber_profile": {
            "entries": [
                {"locus": [str(c) for c in poly.coeffs], "multiplicity": m}
                for poly, m in profile.entries
            ],
            "affine_degree": profile.degree,
            "infinity_order": profile.infinity_order,
            "generic_pattern": profile.generic,
        },
    }
    if isogeny_T is not None:
        rep = isogeny_pointcount_check(A, B, isogeny_T, list(primes))
        out["isogeny"] = {
            "T": str(Rat(isogeny_T)),
            "consistent": rep.consistent,
            "counts": {str(p): list(v) for p, v in rep.counts.items()},
            "skipped_primes": rep.skipped,
        }
    return out
