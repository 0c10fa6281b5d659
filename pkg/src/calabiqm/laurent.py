"""Exact arithmetic in the coefficient field of Laurent-type series in ``s``.

Elements are represented as rational functions ``num/den`` in the formal
variable ``s`` with exact Gaussian-rational coefficients.  Expanding
``num/den`` in descending powers of ``s`` gives a series whose exponents are
bounded above, so every element has a well-defined top exponent (its
valuation).  All operations are exact; there is no floating-point mode.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction


class DivisionByZeroError(ZeroDivisionError):
    """Raised when inverting or dividing by the zero field element."""


NEG_INF = -math.inf


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re, im=0) -> "GaussianRational":
        return GaussianRational(_as_fraction(re), _as_fraction(im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        if not other:
            raise DivisionByZeroError("division by zero Gaussian rational")
        d = other.re * other.re + other.im * other.im
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


GR_ZERO = GaussianRational(Fraction(0), Fraction(0))
GR_ONE = GaussianRational(Fraction(1), Fraction(0))


def gr(re, im=0) -> GaussianRational:
    """Shorthand constructor accepting ints, Fractions or 'p/q' strings."""
    return GaussianRational.of(re, im)


class Poly:
    """Univariate polynomial in ``s`` over :class:`GaussianRational`.

    Coefficients are stored ascending with no trailing zeros; the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("Poly is immutable")

    @staticmethod
    def const(c: GaussianRational) -> "Poly":
        return Poly((c,))

    @staticmethod
    def monomial(exp: int, c: GaussianRational = GR_ONE) -> "Poly":
        if exp < 0:
            raise ValueError("polynomial exponents must be non-negative")
        return Poly((GR_ZERO,) * exp + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> GaussianRational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [GR_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(out)

    def scale(self, c: GaussianRational) -> "Poly":
        return Poly(tuple(a * c for a in self.coeffs))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise DivisionByZeroError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [GR_ZERO] * (dq + 1)
        lead = other.leading()
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top:
                q = top / lead
                quot[k] = q
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - q * b
        return Poly(quot), Poly(rem)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading()
        if lead == GR_ONE:
            return self
        return Poly(tuple(c / lead for c in self.coeffs))

    def gcd(self, other: "Poly") -> "Poly":
        """Gcd in canonical primitive form (integer coefficients, content 1,
        positive real leading coefficient).

        Uses pseudo-division over Gaussian integers with content stripping;
        plain Euclid with rational coefficients blows up badly.
        """
        a, b = self, other
        if a.is_zero():
            return _canonical_primitive(b)
        if b.is_zero():
            return _canonical_primitive(a)
        if a.degree == 0 or b.degree == 0:
            return POLY_ONE
        a = _strip_content(_integerize(a))
        b = _strip_content(_integerize(b))
        if a.degree < b.degree:
            a, b = b, a
        while True:
            rem = _pseudo_rem(a, b)
            if rem.is_zero():
                return _canonical_primitive(b)
            if rem.degree == 0:
                return POLY_ONE
            a, b = b, _strip_content(rem)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


POLY_ONE = Poly((GR_ONE,))


def _integerize(p: Poly) -> Poly:
    """Scale so every coefficient is a Gaussian integer."""
    lcm = 1
    for c in p.coeffs:
        for part in (c.re, c.im):
            d = part.denominator
            lcm = lcm * d // math.gcd(lcm, d)
    if lcm == 1:
        return p
    f = gr(lcm)
    return Poly(tuple(c * f for c in p.coeffs))


def _strip_content(p: Poly) -> Poly:
    """Divide a Gaussian-integer polynomial by its integer content."""
    g = 0
    for c in p.coeffs:
        g = math.gcd(g, abs(c.re.numerator))
        g = math.gcd(g, abs(c.im.numerator))
        if g == 1:
            return p
    if g <= 1:
        return p
    inv = gr(Fraction(1, g))
    return Poly(tuple(c * inv for c in p.coeffs))


def _pseudo_rem(a: Poly, b: Poly) -> Poly:
    """Remainder of lead(b)^k * a by b, staying in Gaussian integers."""
    rem = a
    lb = b.leading()
    db = b.degree
    while not rem.is_zero() and rem.degree >= db:
        shift = rem.degree - db
        top = rem.leading()
        scaled = Poly(tuple(c * lb for c in rem.coeffs))
        sub = Poly((GR_ZERO,) * shift + tuple(c * top for c in b.coeffs))
        rem = scaled - sub
    return rem


def _joint_integerize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Scale both polynomials by one rational so all coefficients are
    Gaussian integers."""
    lcm = 1
    for p in (num, den):
        for c in p.coeffs:
            for part in (c.re, c.im):
                d = part.denominator
                lcm = lcm * d // math.gcd(lcm, d)
    if lcm == 1:
        return num, den
    f = gr(lcm)
    return (
        Poly(tuple(c * f for c in num.coeffs)),
        Poly(tuple(c * f for c in den.coeffs)),
    )


def _joint_strip_content(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Divide both Gaussian-integer polynomials by their common integer
    content."""
    g = 0
    for p in (num, den):
        for c in p.coeffs:
            g = math.gcd(g, abs(c.re.numerator))
            g = math.gcd(g, abs(c.im.numerator))
            if g == 1:
                return num, den
    if g <= 1:
        return num, den
    inv = gr(Fraction(1, g))
    return (
        Poly(tuple(c * inv for c in num.coeffs)),
        Poly(tuple(c * inv for c in den.coeffs)),
    )


def _canonical_primitive(p: Poly) -> Poly:
    """Scale to integer coefficients, content 1, positive real leading
    coefficient (the canonical representative up to rational scaling)."""
    if p.is_zero():
        return p
    p = _integerize(p)
    lead = p.leading()
    if lead.im or lead.re < 0:
        conj = GaussianRational(lead.re, -lead.im)
        p = Poly(tuple(c * conj for c in p.coeffs))
    return _strip_content(p)


class FieldElement:
    """Element of the field, stored as a reduced fraction of polynomials.

    Canonical storage keeps ``num`` and ``den`` as coprime Gaussian-integer
    polynomials with joint content 1 and a positive real leading denominator
    coefficient; :meth:`monic_pair` exposes the equivalent monic-denominator
    form.  Keeping integer coefficients internally is what makes long
    operation chains (Gaussian elimination over the field) tractable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = POLY_ONE):
        if den.is_zero():
            raise DivisionByZeroError("zero denominator")
        if num.is_zero():
            num, den = Poly(), POLY_ONE
        else:
            num, den = _joint_integerize(num, den)
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
                num, den = _joint_integerize(num, den)
            lead = den.leading()
            if lead.im or lead.re < 0:
                conj = GaussianRational(lead.re, -lead.im)
                num = Poly(tuple(c * conj for c in num.coeffs))
                den = Poly(tuple(c * conj for c in den.coeffs))
            num, den = _joint_strip_content(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "FieldElement":
        return FieldElement(Poly())

    @staticmethod
    def one() -> "FieldElement":
        return FieldElement(POLY_ONE)

    @staticmethod
    def constant(c) -> "FieldElement":
        if not isinstance(c, GaussianRational):
            c = gr(c)
        return FieldElement(Poly.const(c))

    @staticmethod
    def s_power(exp: int, coeff=1) -> "FieldElement":
        """The Laurent monomial ``coeff * s**exp`` (exp may be negative)."""
        c = coeff if isinstance(coeff, GaussianRational) else gr(coeff)
        if exp >= 0:
            return FieldElement(Poly.monomial(exp, c))
        return FieldElement(Poly.const(c), Poly.monomial(-exp))

    @staticmethod
    def from_terms(terms) -> "FieldElement":
        """Build Σ coeff·s^exp from an iterable of (exp, coeff) pairs."""
        out = FieldElement.zero()
        for exp, coeff in terms:
            out = out + FieldElement.s_power(exp, coeff)
        return out

    # -- ring/field operations ----------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.num, self.den)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.invert()

    def invert(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZeroError("cannot invert zero field element")
        return FieldElement(self.den, self.num)

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.invert() ** (-n)
        out = FieldElement.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- valuation and expansion --------------------------------------

    def valuation(self):
        """Top exponent of the descending-power expansion; -inf for zero."""
        if self.is_zero():
            return NEG_INF
        return self.num.degree - self.den.degree

    def truncated_expansion(self, floor: int) -> list[tuple[int, GaussianRational]]:
        """Descending-power coefficients down to exponent ``floor``.

        Requires ``floor <= valuation`` unless the element is zero.
        """
        if self.is_zero():
            return []
        nu = self.num.degree - self.den.degree
        if floor > nu:
            raise ValueError(f"floor {floor} exceeds valuation {nu}")
        # Reverse coefficients to expand in u = 1/s: num/den =
        # s^nu * (rev num)(u) / (rev den)(u) with (rev den)(0) != 0.
        n_terms = nu - floor + 1
        rnum = list(reversed(self.num.coeffs))
        rden = list(reversed(self.den.coeffs))
        series = []
        rem = rnum + [GR_ZERO] * max(0, n_terms - len(rnum))
        lead = rden[0]
        for k in range(n_terms):
            c = rem[k] / lead
            series.append(c)
            if c:
                for j in range(1, min(len(rden), len(rem) - k)):
                    rem[k + j] = rem[k + j] - c * rden[j]
        return [(nu - k, c) for k, c in enumerate(series) if c]

    def tau(self) -> GaussianRational:
        """Coefficient of s^0 in the descending expansion."""
        if self.is_zero() or self.valuation() < 0:
            return GR_ZERO
        for exp, c in self.truncated_expansion(0):
            if exp == 0:
                return c
        return GR_ZERO

    # -- formatting and serialization ---------------------------------

    def monic_pair(self) -> tuple[Poly, Poly]:
        """The equivalent (num, den) pair with monic denominator."""
        if self.is_zero():
            return Poly(), POLY_ONE
        lead = self.den.leading()
        if lead == GR_ONE:
            return self.num, self.den
        return Poly(tuple(c / lead for c in self.num.coeffs)), self.den.monic()

    def is_laurent_monomial(self) -> bool:
        """True when the element is c*s^k for some integer k."""
        if self.is_zero():
            return False
        num_terms = sum(1 for c in self.num.coeffs if c)
        den_terms = sum(1 for c in self.den.coeffs if c)
        return num_terms == 1 and den_terms == 1

    def as_laurent_terms(self) -> list[tuple[int, GaussianRational]]:
        """Exact (exp, coeff) list when den is a monomial; raises otherwise."""
        den_terms = [(i, c) for i, c in enumerate(self.den.coeffs) if c]
        if len(den_terms) != 1:
            raise ValueError("element is not a Laurent polynomial")
        shift, dc = den_terms[0]
        return [(i - shift, c / dc) for i, c in enumerate(self.num.coeffs) if c]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        try:
            terms = self.as_laurent_terms()
        except ValueError:
            return f"({_poly_str(self.num)})/({_poly_str(self.den)})"
        return _laurent_str(terms)

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def to_json(self) -> dict:
        num, den = self.monic_pair()
        return {
            "num": [[i, str(c.re), str(c.im)] for i, c in enumerate(num.coeffs) if c],
            "den": [[i, str(c.re), str(c.im)] for i, c in enumerate(den.coeffs) if c],
        }

    @staticmethod
    def from_json(obj: dict) -> "FieldElement":
        def build(entries):
            if not entries:
                return Poly()
            top = max(int(e[0]) for e in entries)
            cs = [GR_ZERO] * (top + 1)
            for e in entries:
                exp = int(e[0])
                if exp < 0:
                    raise ValueError("polynomial exponents must be non-negative")
                cs[exp] = gr(Fraction(e[1]), Fraction(e[2]))
            return Poly(cs)

        num = build(obj.get("num", []))
        den = build(obj.get("den", []))
        if not obj.get("den"):
            den = POLY_ONE
        return FieldElement(num, den)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _poly_str(p: Poly) -> str:
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c:
            terms.append((i, c))
    return _laurent_str(terms) if terms else "0"


def _laurent_str(terms) -> str:
    terms = sorted(terms, key=lambda t: -t[0])
    parts = []
    for exp, c in terms:
        if exp == 0:
            body = str(c)
        else:
            sexp = "s" if exp == 1 else f"s^{exp}"
            if c == GR_ONE:
                body = sexp
            elif c == -GR_ONE:
                body = f"-{sexp}"
            elif c.im:
                body = f"({c})*{sexp}"
            else:
                body = f"{c}*{sexp}"
        if parts and not body.startswith("-"):
            parts.append("+ " + body)
        elif parts:
            parts.append("- " + body[1:])
        else:
            parts.append(body)
    return " ".join(parts)


def valuation(a: FieldElement):
    """Module-level alias for :meth:`FieldElement.valuation`."""
    return a.valuation()
