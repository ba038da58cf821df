"""Cyclic cubic fields K3 = Q[x]/(f) and the sextic tower K6 = K3(sqrt(delta)).

A cubic field is cyclic exactly when its defining polynomial is irreducible
with square discriminant; that criterion is certified on construction.  The
cubic Galois generator comes from the classical identity
(alpha - beta)(alpha - gamma) = f'(alpha), which expresses a second root as

    sigma(alpha) = (-a2 - alpha + sqrt(disc) / f'(alpha)) / 2.

The sextic generator acts by rho(a + b*sqrt(delta)) = sigma(a) - sigma(b)*sqrt(delta),
which has order exactly 6 since delta stays a nonsquare in the odd-degree
extension K3.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .rationals import Int, Rat, igcd, is_rat

from .integers import (
    factorize,
    is_square,
    rational_isqrt,
    squarefree_part,
    valuation,
)
from .polynomial import UniPoly, cubic_discriminant, poly_xgcd


# ---------------------------------------------------------------------------
# exact rational roots of cubics
# ---------------------------------------------------------------------------


def _integer_roots_monic_cubic(c2: int, c1: int, c0: int) -> list[int]:
    """All integer roots of x^3 + c2 x^2 + c1 x + c0, found exactly.

    The derivative's real roots split the line into at most three monotone
    pieces; integer bisection on each piece finds any integer root without
    factoring the constant term.
    """

    def h(x: int) -> int:
        return ((x + c2) * x + c1) * x + c0

    bound = 1 + max(abs(c2), abs(c1), abs(c0))
    # critical points of h: roots of 3x^2 + 2 c2 x + c1
    disc = 4 * c2 * c2 - 12 * c1
    cuts: list[int] = []
    if disc >= 0:
        r = math.isqrt(disc)
        cuts = sorted({(-2 * c2 - r) // 6, (-2 * c2 - r) // 6 + 1,
                       (-2 * c2 + r) // 6, (-2 * c2 + r) // 6 + 1})
    grid = sorted({-bound, bound, *[c for c in cuts if -bound < c < bound]})
    roots: set[int] = set()
    for lo, hi in zip(grid, grid[1:]):
        a, b = h(lo), h(hi)
        if a == 0:
            roots.add(lo)
        if b == 0:
            roots.add(hi)
        if a * b >= 0:
            continue
        # h is not monotone on the piece only near a critical point already in
        # the grid, so plain bisection on the sign change is sound
        x0, x1 = lo, hi
        while x1 - x0 > 1:
            mid = (x0 + x1) // 2
            v = h(mid)
            if v == 0:
                roots.add(mid)
                break
            if (v > 0) == (a > 0):
                x0 = mid
            else:
                x1 = mid
    return sorted(roots)


def rational_cubic_roots(p: UniPoly) -> list:
    """All rational roots of a degree-3 polynomial over Q, exactly."""
    if p.degree != 3:
        raise ValueError("expected a cubic")
    q = p.clear_denominators()
    a = int(q[3])
    # z = a*x turns a x^3 + b x^2 + c x + d into monic z^3 + b z^2 + ac z + a^2 d
    zroots = _integer_roots_monic_cubic(int(q[2]), int(q[1]) * a, int(q[0]) * a * a)
    return [Rat(z, a) for z in zroots]


def monicize_integral(p: UniPoly) -> tuple[UniPoly, "Rat"]:
    """Monic integral model of a cubic: h(z) with z = scale * x.

    Clears denominators to the primitive model a x^3 + b x^2 + c x + d and
    substitutes z = a x, giving z^3 + b z^2 + ac z + a^2 d.
    Returns (h, scale) with scale = a.
    """
    q = p.clear_denominators()
    if q.degree != 3:
        raise ValueError("expected a cubic")
    a = q[3]
    h = UniPoly([q[0] * a * a, q[1] * a, q[2], 1])
    return h, a


# ---------------------------------------------------------------------------
# the cubic field
# ---------------------------------------------------------------------------


class CyclicCubicField:
    """Q[x]/(f) for f monic integral, irreducible, with square discriminant.

    Elements carry an integer numerator vector over a common denominator, so
    the reduction data alpha^3, alpha^4 must be integral; that is exactly the
    monic-integral requirement on f (scale any rational model first).
    """

    def __init__(self, f: UniPoly):
        if f.degree != 3:
            raise ValueError("defining polynomial must be cubic")
        if f.lc != 1:
            raise ValueError("defining polynomial must be monic")
        if any(c.denominator != 1 for c in f.coeffs):
            raise ValueError("defining polynomial must have integer coefficients")
        self.f = f
        self.disc = cubic_discriminant(f)
        if self.disc == 0 or not is_square(self.disc):
            raise ValueError(
                f"discriminant {self.disc} is not a nonzero rational square; "
                "the field would not be cyclic"
            )
        if rational_cubic_roots(f):
            raise ValueError("defining polynomial is reducible over Q")
        self.sqrt_disc = rational_isqrt(self.disc)
        # integer reduction vectors: alpha^3 = r3 . (1, a, a^2), alpha^4 = r4 . (...)
        a2, a1, a0 = Int(int(f[2])), Int(int(f[1])), Int(int(f[0]))
        r3 = (-a0, -a1, -a2)
        self._r3 = r3
        self._r4 = (r3[2] * r3[0], r3[0] + r3[2] * r3[1], r3[1] + r3[2] * r3[2])
        self._sigma_alpha = self._compute_sigma_alpha()
        self._sigma_alpha2 = self._sigma_alpha * self._sigma_alpha
        self._sig_mat, self._sig_den = self._automorphism_matrix(
            self._sigma_alpha, self._sigma_alpha2
        )
        self._sigma2_alpha = self.sigma(self._sigma_alpha)
        self._sigma2_alpha2 = self._sigma2_alpha * self._sigma2_alpha
        self._sig2_mat, self._sig2_den = self._automorphism_matrix(
            self._sigma2_alpha, self._sigma2_alpha2
        )
        self._validate_sigma()

    # -- element factory ---------------------------------------------------

    def element(self, c0=0, c1=0, c2=0) -> "CubicElement":
        q0, q1, q2 = Rat(c0), Rat(c1), Rat(c2)
        den = q0.denominator * q1.denominator * q2.denominator
        return CubicElement._make(
            self,
            q0.numerator * q1.denominator * q2.denominator,
            q1.numerator * q0.denominator * q2.denominator,
            q2.numerator * q0.denominator * q1.denominator,
            den,
        )

    @property
    def alpha(self) -> "CubicElement":
        return CubicElement(self, Int(0), Int(1), Int(0), Int(1))

    def zero(self) -> "CubicElement":
        return CubicElement(self, Int(0), Int(0), Int(0), Int(1))

    def one(self) -> "CubicElement":
        return CubicElement(self, Int(1), Int(0), Int(0), Int(1))

    # -- Galois action -------------------------------------------------------

    def _compute_sigma_alpha(self) -> "CubicElement":
        # sigma is not available yet, so invert f'(alpha) by extended gcd
        fp = self.f.derivative()
        g, s, _ = poly_xgcd(fp, self.f)
        if g.degree != 0:
            raise ValueError("repeated root: f' is not invertible mod f")
        s = (s / g[0]) % self.f
        inv = self.element(s[0], s[1], s[2])
        return (self.element(-self.f[2], -1, 0) + self.sqrt_disc * inv) * Rat(1, 2)

    def _automorphism_matrix(self, img_alpha, img_alpha2):
        """Integer matrix (columns: images of 1, alpha, alpha^2) over one denominator."""
        d = img_alpha.den * img_alpha2.den
        g = igcd(img_alpha.den, img_alpha2.den)
        d //= g
        s1 = d // img_alpha.den
        s2 = d // img_alpha2.den
        col1 = (img_alpha.n0 * s1, img_alpha.n1 * s1, img_alpha.n2 * s1)
        col2 = (img_alpha2.n0 * s2, img_alpha2.n1 * s2, img_alpha2.n2 * s2)
        mat = ((d, col1[0], col2[0]), (Int(0), col1[1], col2[1]), (Int(0), col1[2], col2[2]))
        return mat, d

    def _validate_sigma(self) -> None:
        s = self._sigma_alpha
        if self.f(s) != self.zero():
            raise AssertionError("sigma(alpha) is not a root of f")
        if s == self.alpha:
            raise AssertionError("sigma is the identity")
        if self.sigma(self.sigma(s)) != self.alpha:
            raise AssertionError("sigma does not have order 3")

    def sigma(self, e: "CubicElement") -> "CubicElement":
        """The chosen Galois generator, applied coefficientwise."""
        m = self._sig_mat
        return CubicElement._make(
            self,
            m[0][0] * e.n0 + m[0][1] * e.n1 + m[0][2] * e.n2,
            m[1][1] * e.n1 + m[1][2] * e.n2,
            m[2][1] * e.n1 + m[2][2] * e.n2,
            e.den * self._sig_den,
        )

    def sigma2(self, e: "CubicElement") -> "CubicElement":
        m = self._sig2_mat
        return CubicElement._make(
            self,
            m[0][0] * e.n0 + m[0][1] * e.n1 + m[0][2] * e.n2,
            m[1][1] * e.n1 + m[1][2] * e.n2,
            m[2][1] * e.n1 + m[2][2] * e.n2,
            e.den * self._sig2_den,
        )

    def __eq__(self, other):
        return isinstance(other, CyclicCubicField) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"CyclicCubicField({self.f!r})"


class CubicElement:
    """c0 + c1*alpha + c2*alpha^2, stored as integers over a common denominator.

    The invariant is den > 0 with gcd(n0, n1, n2, den) = 1, so the
    representation is canonical and equality is componentwise.
    """

    __slots__ = ("field", "n0", "n1", "n2", "den")

    def __init__(self, field: CyclicCubicField, n0, n1, n2, den):
        self.field = field
        self.n0 = n0
        self.n1 = n1
        self.n2 = n2
        self.den = den

    @staticmethod
    def _make(field, n0, n1, n2, den) -> "CubicElement":
        if den < 0:
            n0, n1, n2, den = -n0, -n1, -n2, -den
        g = igcd(igcd(n0, n1), igcd(n2, den))
        if g > 1:
            n0, n1, n2, den = n0 // g, n1 // g, n2 // g, den // g
        return CubicElement(field, n0, n1, n2, den)

    @property
    def c0(self):
        return Rat(self.n0, self.den)

    @property
    def c1(self):
        return Rat(self.n1, self.den)

    @property
    def c2(self):
        return Rat(self.n2, self.den)

    def _coerce(self, other) -> "CubicElement":
        if isinstance(other, CubicElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if is_rat(other):
            q = Rat(other)
            return CubicElement(
                self.field, Int(q.numerator), Int(0), Int(0), Int(q.denominator)
            )
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        da, db = self.den, other.den
        if da == db:
            return CubicElement._make(
                self.field, self.n0 + other.n0, self.n1 + other.n1, self.n2 + other.n2, da
            )
        return CubicElement._make(
            self.field,
            self.n0 * db + other.n0 * da,
            self.n1 * db + other.n1 * da,
            self.n2 * db + other.n2 * da,
            da * db,
        )

    __radd__ = __add__

    def __neg__(self):
        return CubicElement(self.field, -self.n0, -self.n1, -self.n2, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rat(other):
            q = Rat(other)
            return CubicElement._make(
                self.field,
                self.n0 * q.numerator,
                self.n1 * q.numerator,
                self.n2 * q.numerator,
                self.den * q.denominator,
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a0, a1, a2 = self.n0, self.n1, self.n2
        b0, b1, b2 = other.n0, other.n1, other.n2
        d0 = a0 * b0
        d1 = a0 * b1 + a1 * b0
        d2 = a0 * b2 + a1 * b1 + a2 * b0
        d3 = a1 * b2 + a2 * b1
        d4 = a2 * b2
        r3, r4 = self.field._r3, self.field._r4
        return CubicElement._make(
            self.field,
            d0 + d3 * r3[0] + d4 * r4[0],
            d1 + d3 * r3[1] + d4 * r4[1],
            d2 + d3 * r3[2] + d4 * r4[2],
            self.den * other.den,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @property
    def is_zero(self) -> bool:
        return self.n0 == 0 and self.n1 == 0 and self.n2 == 0

    def inverse(self) -> "CubicElement":
        """Inverse as the conjugate product over the norm.

        e * sigma(e) * sigma2(e) is the rational field norm, so
        e^{-1} = sigma(e) * sigma2(e) / N(e).  This matches the extended-gcd
        inverse against f but avoids its coefficient blowup.
        """
        if self.is_zero:
            raise ZeroDivisionError("inverting zero in K3")
        K = self.field
        w = K.sigma(self) * K.sigma2(self)
        n = self * w
        assert n.n1 == 0 and n.n2 == 0, "norm left the rationals"
        if n.n0 == 0:
            raise ZeroDivisionError("element not invertible (f reducible?)")
        return w * Rat(n.den, n.n0)

    def __truediv__(self, other):
        if is_rat(other):
            q = Rat(other)
            return self * Rat(q.denominator, q.numerator)
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if is_rat(other):
            q = Rat(other)
            return (
                self.n1 == 0
                and self.n2 == 0
                and self.n0 == q.numerator
                and self.den == q.denominator
            )
        if not isinstance(other, CubicElement):
            return NotImplemented
        return (
            self.field == other.field
            and (self.n0, self.n1, self.n2, self.den)
            == (other.n0, other.n1, other.n2, other.den)
        )

    def __hash__(self):
        return hash((self.c0, self.c1, self.c2))

    def __repr__(self):
        return f"({self.c0} + {self.c1}*a + {self.c2}*a^2)"

    @property
    def is_rational(self) -> bool:
        return self.n1 == 0 and self.n2 == 0

    def coefficients(self) -> tuple:
        return (self.c0, self.c1, self.c2)


def cubic_invert(e: CubicElement) -> CubicElement:
    return e.inverse()


def galois_generator(K: CyclicCubicField):
    """The order-3 automorphism of K, as a callable on elements."""
    return K.sigma


# ---------------------------------------------------------------------------
# the sextic tower
# ---------------------------------------------------------------------------


class SexticField:
    """K3(sqrt(delta)) for delta a square-free integer, delta not 0 or 1.

    [K3:Q] is odd, so delta stays a nonsquare in K3 and the tower has
    degree 6 over Q.
    """

    def __init__(self, cubic: CyclicCubicField, delta: int):
        if delta in (0, 1):
            raise ValueError("delta must not be 0 or 1")
        if squarefree_part(delta) != delta:
            raise ValueError(f"delta = {delta} is not square-free")
        self.cubic = cubic
        self.delta = delta

    def element(self, a, b=None) -> "SexticElement":
        if not isinstance(a, CubicElement):
            a = self.cubic.element(a)
        if b is None:
            b = self.cubic.zero()
        elif not isinstance(b, CubicElement):
            b = self.cubic.element(b)
        return SexticElement(self, a, b)

    def lift(self, a: CubicElement) -> "SexticElement":
        return SexticElement(self, a, self.cubic.zero())

    def sqrt_delta(self) -> "SexticElement":
        return SexticElement(self, self.cubic.zero(), self.cubic.one())

    def zero(self) -> "SexticElement":
        return self.element(0)

    def one(self) -> "SexticElement":
        return self.element(1)

    def rho(self, e: "SexticElement") -> "SexticElement":
        """Order-6 generator of Gal(K6/Q): a + b*sqrt(d) -> sigma(a) - sigma(b)*sqrt(d)."""
        s = self.cubic.sigma
        return SexticElement(self, s(e.a), -s(e.b))

    def __eq__(self, other):
        return (
            isinstance(other, SexticField)
            and self.cubic == other.cubic
            and self.delta == other.delta
        )

    def __hash__(self):
        return hash((self.cubic, self.delta))

    def __repr__(self):
        return f"SexticField({self.cubic!r}, sqrt({self.delta}))"


class SexticElement:
    """a + b*sqrt(delta) with a, b in the cubic subfield."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: SexticField, a: CubicElement, b: CubicElement):
        self.field = field
        self.a = a
        self.b = b

    def _coerce(self, other) -> "SexticElement":
        if isinstance(other, SexticElement):
            if other.field != self.field:
                raise ValueError("elements of different sextic fields")
            return other
        if is_rat(other):
            return self.field.element(Rat(other))
        if isinstance(other, CubicElement):
            return self.field.lift(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SexticElement(self.field, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return SexticElement(self.field, -self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rat(other):
            return SexticElement(self.field, self.a * other, self.b * other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # Karatsuba split: three cubic multiplications instead of four
        ac = self.a * other.a
        bd = self.b * other.b
        cross = (self.a + self.b) * (other.a + other.b) - ac - bd
        return SexticElement(self.field, ac + self.field.delta * bd, cross)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "SexticElement":
        """The quadratic conjugation sqrt(delta) -> -sqrt(delta)."""
        return SexticElement(self.field, self.a, -self.b)

    def inverse(self) -> "SexticElement":
        n = self.a * self.a - self.field.delta * (self.b * self.b)
        if n == self.field.cubic.zero():
            raise ZeroDivisionError("inverting zero in K6")
        ninv = n.inverse()
        return SexticElement(self.field, self.a * ninv, -self.b * ninv)

    def __truediv__(self, other):
        if is_rat(other):
            return self * (Rat(1) / Rat(other))
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, (int, Rat, CubicElement)):
            other = self._coerce(other)
        if not isinstance(other, SexticElement):
            return NotImplemented
        return self.field == other.field and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"({self.a!r} + {self.b!r}*sqrt({self.field.delta}))"

    def coefficients(self) -> tuple:
        return self.a.coefficients() + self.b.coefficients()


def sextic_galois_generator(K: SexticField):
    """The order-6 automorphism of K6, as a callable on elements."""
    return K.rho


# ---------------------------------------------------------------------------
# conductor heuristic and field isomorphism testing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConductorEstimate:
    """Determined ramified part of the cubic conductor plus ambiguous support.

    `determined` multiplies exactly the primes p >= 5 away from the leading
    data where reduction is a cube of a linear form (total ramification).
    Primes 2 and 3 and primes dividing the leading coefficient are never
    decided here; they land in `ambiguous_support`.
    """

    determined: int
    ambiguous_support: frozenset[int]


def _fp_normalize(coeffs: list[int], p: int) -> list[int]:
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def _fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = a[:]
    binv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        t = a[-1] * binv % p
        q[k] = t
        for i, c in enumerate(b):
            a[k + i] = (a[k + i] - t * c) % p
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fp_normalize(a, p), _fp_normalize(b, p)
    while b:
        _, r = _fp_divmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _fp_derivative(a: list[int], p: int) -> list[int]:
    return _fp_normalize([i * c % p for i, c in enumerate(a)][1:], p)


def _cube_of_linear_mod_p(coeffs: list[int], p: int) -> bool:
    """True iff the cubic is lc*(x - r)^3 mod p (p >= 5, p not dividing lc)."""
    a = _fp_normalize(coeffs, p)
    if len(a) != 4:
        return False
    g = _fp_gcd(a, _fp_derivative(a, p), p)
    return len(g) == 3  # gcd of degree 2 happens only for a triple root


def _squarefree_mod_p(coeffs: list[int], p: int) -> bool:
    a = _fp_normalize(coeffs, p)
    if len(a) != 4:
        return False
    g = _fp_gcd(a, _fp_derivative(a, p), p)
    return len(g) == 1


def cubic_conductor_heuristic(K) -> ConductorEstimate:
    """Square-free-kernel conductor estimate for a cyclic cubic field.

    Accepts a CyclicCubicField or a defining UniPoly.  Sound for p >= 5 away
    from the leading coefficient: a simple factor mod p forces p unramified
    in a Galois cubic, and an Eisenstein-style cube certifies ramification.
    """
    f = K.f if isinstance(K, CyclicCubicField) else K
    g = f.clear_denominators()
    coeffs = [int(c) for c in g.coeffs]
    lc = coeffs[-1]
    disc = cubic_discriminant(g)
    disc_primes = sorted(factorize(int(disc)).keys()) if disc != 0 else []
    determined = 1
    ambiguous: set[int] = set()
    for p in disc_primes:
        if p in (2, 3):
            ambiguous.add(p)
            continue
        if lc % p == 0:
            ambiguous.add(p)
            continue
        if _cube_of_linear_mod_p(coeffs, p):
            determined *= p
        # otherwise the reduction has a simple factor, hence p is unramified
    return ConductorEstimate(determined, frozenset(ambiguous))


def _mpf_to_fraction(x, max_den: int):
    """High-precision binary float to a bounded-denominator rational."""
    k = mpmath.mp.prec
    scaled = mpmath.nint(mpmath.ldexp(x, k))
    return Rat(Fraction(int(scaled), 1 << k).limit_denominator(max_den))


def _real_roots(p: UniPoly) -> list:
    """Real roots of an integer polynomial at working precision.

    Retries with extra precision when the solver stalls (closely spaced
    roots); callers certify everything exactly afterwards, so the numerics
    only have to propose candidates.
    """
    coeffs = [int(c) for c in reversed(p.coeffs)]
    for extra in (0, 80, 240, 600):
        try:
            with mpmath.extraprec(extra):
                roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=extra + 110)
            return sorted(r.real for r in roots)
        except mpmath.libmp.NoConvergence:
            continue
    raise ArithmeticError("root isolation did not converge")


def is_isomorphic_cubic(
    f: UniPoly, g: UniPoly, den_bound: int = 10**24
) -> Optional[CubicElement]:
    """An element of Q[x]/(monic f) that is a root of g, or None.

    Both inputs must be irreducible cubics with square discriminant (totally
    real, cyclic).  The search is numerical (root isolation well beyond 200
    bits, then rational reconstruction with denominators up to `den_bound`)
    but any candidate is certified by exact reduction before being returned.
    A None result is a proof of non-isomorphism only when the determined
    conductor parts already separate the fields; otherwise it just means no
    embedding was found within the bound.
    """
    for p in (f, g):
        if p.degree != 3:
            raise ValueError("inputs must be cubic")
        if not is_square(cubic_discriminant(p)):
            raise ValueError("inputs must have square discriminant")
        if rational_cubic_roots(p):
            raise ValueError("inputs must be irreducible")

    cf = cubic_conductor_heuristic(f)
    cg = cubic_conductor_heuristic(g)
    # a determined ramified prime on one side that the other side provably
    # avoids separates the fields
    for p in factorize(cf.determined) if cf.determined > 1 else {}:
        if cg.determined % p != 0 and p not in cg.ambiguous_support:
            return None
    for p in factorize(cg.determined) if cg.determined > 1 else {}:
        if cf.determined % p != 0 and p not in cf.ambiguous_support:
            return None

    h, _scale = monicize_integral(f)
    K = CyclicCubicField(h)

    gi = g.clear_denominators()
    bits = max(abs(int(c)).bit_length() for c in (*h.coeffs, *gi.coeffs))
    prec = max(360, 3 * bits + 160)
    with mpmath.workprec(prec):
        froots = _real_roots(h)
        groots = _real_roots(gi)
        for perm in itertools.permutations(range(3)):
            # interpolate e(alpha_i) = r_perm(i) by a quadratic in alpha
            xs = froots
            ys = [groots[perm[i]] for i in range(3)]
            # Lagrange coefficients for c0 + c1 x + c2 x^2
            denoms = [
                (xs[i] - xs[(i + 1) % 3]) * (xs[i] - xs[(i + 2) % 3]) for i in range(3)
            ]
            c2 = sum(ys[i] / denoms[i] for i in range(3))
            c1 = -sum(
                ys[i] * (xs[(i + 1) % 3] + xs[(i + 2) % 3]) / denoms[i]
                for i in range(3)
            )
            c0 = sum(
                ys[i] * xs[(i + 1) % 3] * xs[(i + 2) % 3] / denoms[i] for i in range(3)
            )
            cand = [
                _mpf_to_fraction(c0, den_bound),
                _mpf_to_fraction(c1, den_bound),
                _mpf_to_fraction(c2, den_bound),
            ]
            e = K.element(cand[0], cand[1], cand[2])
            if g(e) == K.zero():
                return e
    return None
