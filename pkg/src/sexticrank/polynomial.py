"""Dense univariate and sparse multivariate polynomials over exact rationals.

UniPoly stores coefficients lowest degree first; degrees in scope stay small
(at most 24), so dense representation and textbook algorithms are the right
tool.  MultiPoly is a sparse term map with a fixed variable tuple; equality is
syntactic after normalization, never probabilistic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .rationals import Rat, is_rat


def _rat(x):
    return x if is_rat(x) and not isinstance(x, int) else Rat(x)


class UniPoly:
    """Univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly([1])

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly([0, 1])

    @staticmethod
    def monomial(degree: int, coeff=1) -> "UniPoly":
        return UniPoly([0] * degree + [coeff])

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Rat:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Rat(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if is_rat(other):
            return self == UniPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "UniPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return "UniPoly(" + " + ".join(parts) + ")"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if is_rat(other):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if is_rat(other):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rat(other):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Rat(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = UniPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "UniPoly"):
        if is_rat(other):
            other = UniPoly([other])
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Rat(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        d, lc = other.degree, other.lc
        while len(r) - 1 >= d and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            t = r[-1] / lc
            q[k] = t
            for i, c in enumerate(other.coeffs):
                r[k + i] -= t * c
            r.pop()
        return UniPoly(q), UniPoly(r)

    def __truediv__(self, other):
        if is_rat(other):
            return self * (Rat(1) / _rat(other))
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def __mod__(self, other: "UniPoly"):
        return divmod(self, other)[1]

    # -- calculus and evaluation -------------------------------------------

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; x may live in any ring containing Q."""
        if self.is_zero:
            return 0 * x if not is_rat(x) else Rat(0)
        acc = self.coeffs[-1] if is_rat(x) else self.coeffs[-1] + 0 * x
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    # -- normal forms --------------------------------------------------------

    def monic(self) -> "UniPoly":
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        return self / self.lc

    def clear_denominators(self) -> "UniPoly":
        """Primitive integer model with positive leading coefficient."""
        if self.is_zero:
            return self
        from math import gcd, lcm

        den = lcm(*(int(c.denominator) for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        ints = [c // g for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return UniPoly(ints)

    def scale_arg(self, a) -> "UniPoly":
        """The polynomial p(a*x)."""
        a = _rat(a)
        return UniPoly([c * a**i for i, c in enumerate(self.coeffs)])

    def shift_arg(self, s) -> "UniPoly":
        """The polynomial p(x + s)."""
        out = UniPoly()
        xs = UniPoly([_rat(s), 1])
        for c in reversed(self.coeffs):
            out = out * xs + c
        return out


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q (Euclid with monic reduction each step)."""
    while not b.is_zero:
        a, b = b, a % b
        if not a.is_zero:
            a = a.monic()
    return a if a.is_zero else a.monic()


def poly_xgcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly.one(), UniPoly.zero()
    t0, t1 = UniPoly.zero(), UniPoly.one()
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    c = r0.lc
    return r0 / c, s0 / c, t0 / c


def disc3(a, b, c, d):
    """Discriminant of a*x^3 + b*x^2 + c*x + d, generic over any ring."""
    return (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b**2 * c**2
        - 4 * a * c**3
        - 27 * a**2 * d**2
    )


def cubic_discriminant(p: UniPoly) -> Rat:
    """Discriminant of a degree-3 polynomial (closed form)."""
    if p.degree != 3:
        raise ValueError(f"expected degree 3, got degree {p.degree}")
    return disc3(p[3], p[2], p[1], p[0])


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun decomposition p = lc * prod(p_i ** m_i), parts monic and coprime."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    f = p.monic()
    if f.degree == 0:
        return []
    out: list[tuple[UniPoly, int]] = []
    g = poly_gcd(f, f.derivative())
    w = f / g
    y = f.derivative() / g
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        h = poly_gcd(w, z)
        if h.degree > 0:
            out.append((h, i))
        w = w / h
        y = z / h
        z = y - w.derivative()
        i += 1
    return out


def resultant(f: UniPoly, g: UniPoly) -> Rat:
    """Resultant via Sylvester matrix (exact fraction elimination)."""
    if f.is_zero or g.is_zero:
        return Rat(0)
    m, n = f.degree, g.degree
    if m == 0:
        return f.lc**n
    if n == 0:
        return g.lc**m
    size = m + n
    mat = [[Rat(0)] * size for _ in range(size)]
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        mat[i][i : i + m + 1] = fc
    for i in range(m):
        mat[n + i][i : i + n + 1] = gc
    det = Rat(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if piv is None:
            return Rat(0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, size):
            if mat[r][col] == 0:
                continue
            factor = mat[r][col] * inv
            for cidx in range(col, size):
                mat[r][cidx] -= factor * mat[col][cidx]
    return det


class MultiPoly:
    """Sparse multivariate polynomial over Q with a fixed variable tuple."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: dict | None = None):
        self.vars = tuple(variables)
        clean: dict[tuple[int, ...], Rat] = {}
        for expo, coeff in (terms or {}).items():
            coeff = _rat(coeff)
            if coeff != 0:
                clean[tuple(expo)] = clean.get(tuple(expo), Rat(0)) + coeff
        self.terms = {e: c for e, c in clean.items() if c != 0}

    @staticmethod
    def gens(variables: Sequence[str]) -> list["MultiPoly"]:
        """One generator monomial per variable, in the given order."""
        variables = tuple(variables)
        out = []
        for i in range(len(variables)):
            expo = tuple(1 if j == i else 0 for j in range(len(variables)))
            out.append(MultiPoly(variables, {expo: 1}))
        return out

    @staticmethod
    def const(variables: Sequence[str], value) -> "MultiPoly":
        variables = tuple(variables)
        return MultiPoly(variables, {(0,) * len(variables): value})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return MultiPoly.const(self.vars, other)

    def __add__(self, other):
        if not (isinstance(other, MultiPoly) or is_rat(other)):
            return NotImplemented
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Rat(0)) + c
        return MultiPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not (isinstance(other, MultiPoly) or is_rat(other)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rat(other):
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        other = self._coerce(other)
        terms: dict[tuple[int, ...], Rat] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Rat(0)) + c1 * c2
        return MultiPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if is_rat(other):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return multipoly_equal(self, other)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        if self.is_zero:
            return "MultiPoly(0)"
        names = self.vars
        parts = []
        for expo, coeff in sorted(self.terms.items(), reverse=True):
            factors = [f"{coeff}"]
            for name, e in zip(names, expo):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return "MultiPoly(" + " + ".join(parts) + ")"

    def subs(self, values: dict[str, Rat]) -> Rat:
        """Full numeric evaluation; every variable must get a value."""
        vals = [_rat(values[v]) for v in self.vars]
        total = Rat(0)
        for expo, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, expo):
                if e:
                    term *= v**e
            total += term
        return total

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)


def multipoly_equal(p: MultiPoly, q: MultiPoly) -> bool:
    """Exact sparse equality after canonicalization.

    Variable tuples are aligned by name union, so polynomials written over
    different but compatible variable sets compare correctly.
    """
    if p.vars == q.vars:
        return p.terms == q.terms
    allvars = tuple(sorted(set(p.vars) | set(q.vars)))

    def lift(poly: MultiPoly) -> dict:
        idx = [allvars.index(v) for v in poly.vars]
        out = {}
        for expo, coeff in poly.terms.items():
            full = [0] * len(allvars)
            for pos, e in zip(idx, expo):
                full[pos] = e
            out[tuple(full)] = coeff
        return out

    return lift(p) == lift(q)
