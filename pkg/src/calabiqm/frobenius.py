"""Graded commutative Frobenius algebras over the Laurent-type field.

An algebra is given by a finite basis of even-degree homology classes, a
structure-constant table for the deformed product, and the intersection
pairing.  On top of that sit the Euler-class construction, exact element
inversion through the regular representation, the Abrams semisimplicity
test, and the valuation-based identity spectral invariant.

The built-in tables cover the sphere, complex projective spaces, the
product of two spheres, and the one-point blow-up of the projective plane.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .laurent import (
    NEG_INF,
    FieldElement,
    GaussianRational,
    GR_ZERO,
    gr,
)


class DimensionMismatchError(ValueError):
    """Element coordinate length does not match the algebra dimension."""


class DegeneratePairingError(ValueError):
    """The Gram matrix of the pairing is singular over the field."""


class AlgebraValidationError(ValueError):
    """A structural invariant of the algebra fails."""


class UnknownNameError(KeyError):
    """No built-in algebra with the requested name."""


@dataclass(frozen=True)
class BasisClass:
    name: str
    degree: int


@dataclass(frozen=True)
class AlgebraElement:
    """Vector of field coordinates with respect to an algebra basis."""

    coords: tuple

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(tuple(-a for a in self.coords))

    def scale(self, factor) -> "AlgebraElement":
        if not isinstance(factor, FieldElement):
            factor = FieldElement.constant(factor)
        return AlgebraElement(tuple(a * factor for a in self.coords))

    def _check(self, other: "AlgebraElement"):
        if len(self.coords) != len(other.coords):
            raise DimensionMismatchError(
                f"coordinate lengths differ: {len(self.coords)} vs {len(other.coords)}"
            )


@dataclass
class SemisimplicityVerdict:
    semisimple: bool
    euler_class: AlgebraElement
    euler_inverse: AlgebraElement | None
    witness: str


class FrobeniusAlgebra:
    """Finite-dimensional graded commutative Frobenius algebra over k.

    Parameters
    ----------
    basis : list of BasisClass
    unit_index : index of the fundamental class (the unit)
    mul : mul[i][j] = tuple of FieldElement, coordinates of e_i * e_j
    pairing : pairing[i][j] = FieldElement, the intersection index e_i o e_j
    n : half-dimension of the underlying manifold
    chern : minimal Chern number N (grade degree of s is 2N)
    omega : positive rational, the symplectic area of the generator
    """

    def __init__(self, basis, unit_index, mul, pairing, n, chern, omega=Fraction(1), name=""):
        self.basis = list(basis)
        self.unit_index = unit_index
        self.mul_table = [[tuple(mul[i][j]) for j in range(len(basis))] for i in range(len(basis))]
        self.pairing = [[pairing[i][j] for j in range(len(basis))] for i in range(len(basis))]
        self.n = n
        self.chern = chern
        self.omega = Fraction(omega)
        if self.omega <= 0:
            raise AlgebraValidationError("omega must be positive")
        self.name = name
        self._index = {bc.name: i for i, bc in enumerate(self.basis)}

    # -- element constructors ------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(tuple(FieldElement.zero() for _ in self.basis))

    def unit(self) -> AlgebraElement:
        return self.basis_element(self.unit_index)

    def basis_element(self, which) -> AlgebraElement:
        idx = self._index[which] if isinstance(which, str) else which
        coords = [FieldElement.zero()] * self.dim
        coords[idx] = FieldElement.one()
        return AlgebraElement(tuple(coords))

    def element(self, mapping) -> AlgebraElement:
        """Build an element from {basis name: coefficient}."""
        coords = [FieldElement.zero()] * self.dim
        for name, coeff in mapping.items():
            if not isinstance(coeff, FieldElement):
                coeff = FieldElement.constant(coeff)
            coords[self._index[name]] = coeff
        return AlgebraElement(tuple(coords))

    def from_coords(self, coords) -> AlgebraElement:
        cs = tuple(
            c if isinstance(c, FieldElement) else FieldElement.constant(c) for c in coords
        )
        if len(cs) != self.dim:
            raise DimensionMismatchError(f"expected {self.dim} coordinates, got {len(cs)}")
        return AlgebraElement(cs)

    # -- products and pairings ------------------------------------------

    def mul(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """Bilinear extension of the structure-constant table."""
        self._check_element(a)
        self._check_element(b)
        out = [FieldElement.zero()] * self.dim
        for i, ai in enumerate(a.coords):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b.coords):
                if bj.is_zero():
                    continue
                f = ai * bj
                for l, c in enumerate(self.mul_table[i][j]):
                    if not c.is_zero():
                        out[l] = out[l] + f * c
        return AlgebraElement(tuple(out))

    def power(self, a: AlgebraElement, k: int) -> AlgebraElement:
        out = self.unit()
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def delta(self, a: AlgebraElement, b: AlgebraElement) -> FieldElement:
        """k-bilinear extension of the intersection pairing."""
        self._check_element(a)
        self._check_element(b)
        acc = FieldElement.zero()
        for i, ai in enumerate(a.coords):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b.coords):
                if bj.is_zero() or self.pairing[i][j].is_zero():
                    continue
                acc = acc + ai * bj * self.pairing[i][j]
        return acc

    def pi(self, a: AlgebraElement, b: AlgebraElement) -> GaussianRational:
        """Constant-term pairing: the s^0 coefficient of delta."""
        return self.delta(a, b).tau()

    # -- Euler class and inversion ----------------------------------------

    def euler_class(self, basis_elements=None) -> AlgebraElement:
        """Sum of e_i * e_i^# over a basis and its pairing-dual basis.

        The optional ``basis_elements`` argument computes the same class in
        a different k-basis (the result is basis independent).
        """
        if basis_elements is None:
            basis_elements = [self.basis_element(i) for i in range(self.dim)]
        gram = [
            [self.delta(fi, fj) for fj in basis_elements] for fi in basis_elements
        ]
        try:
            gram_inv = linalg.inverse(gram)
        except linalg.SingularMatrixError as exc:
            raise DegeneratePairingError(str(exc)) from exc
        total = self.zero()
        for i, fi in enumerate(basis_elements):
            dual = self.zero()
            for k, fk in enumerate(basis_elements):
                if not gram_inv[i][k].is_zero():
                    dual = dual + fk.scale(gram_inv[i][k])
            total = total + self.mul(fi, dual)
        return total

    def multiplication_matrix(self, a: AlgebraElement):
        """Matrix of x -> a*x in the basis (columns indexed by basis)."""
        cols = [self.mul(a, self.basis_element(j)) for j in range(self.dim)]
        return [[cols[j].coords[l] for j in range(self.dim)] for l in range(self.dim)]

    def invert_element(self, a: AlgebraElement) -> AlgebraElement | None:
        """Exact inverse of ``a``, or None when ``a`` is not a unit.

        Solves the regular-representation linear system and verifies the
        product with ``a`` is the unit before returning.
        """
        self._check_element(a)
        if a.is_zero():
            return None
        mat = self.multiplication_matrix(a)
        rhs = list(self.unit().coords)
        sol = linalg.solve(mat, rhs)
        if sol is None:
            return None
        inv = AlgebraElement(tuple(sol))
        if self.mul(a, inv) != self.unit():
            raise AlgebraValidationError("inverse verification failed")
        return inv

    def is_semisimple(self) -> SemisimplicityVerdict:
        """Abrams criterion: semisimple iff the Euler class is invertible."""
        euler = self.euler_class()
        inv = self.invert_element(euler)
        if inv is None:
            witness = (
                f"Euler class {self.format_element(euler)} is not invertible "
                "(regular representation is singular)"
            )
            return SemisimplicityVerdict(False, euler, None, witness)
        witness = (
            f"Euler class {self.format_element(euler)} has inverse "
            f"{self.format_element(inv)}; product with the Euler class is the unit"
        )
        return SemisimplicityVerdict(True, euler, inv, witness)

    # -- valuation machinery ----------------------------------------------

    def nu(self, a: AlgebraElement):
        """Top s-exponent over the coordinates; -inf for the zero element."""
        self._check_element(a)
        return max((c.valuation() for c in a.coords), default=NEG_INF)

    def spectral_invariant_identity(self, a: AlgebraElement):
        """Omega * nu(a); the spectral invariant of the identity element."""
        v = self.nu(a)
        if v == NEG_INF:
            return NEG_INF
        return self.omega * int(v)

    def characteristic_exponent_check(self, pair_count=1000, seed=0) -> dict:
        """Check the characteristic-exponent axioms of nu on random pairs."""
        import random

        rng = random.Random(seed)
        violations = []
        for t in range(pair_count):
            v1 = self.random_element(rng, allow_zero=True)
            v2 = self.random_element(rng, allow_zero=True)
            if self.nu(v1 + (-v1)) != NEG_INF:
                violations.append((t, "nu(v - v) must be -inf"))
            delta = GR_ZERO
            while not delta:
                delta = gr(rng.randint(-4, 4), rng.randint(-1, 1))
            scaled = v1.scale(FieldElement.constant(delta))
            if self.nu(scaled) != self.nu(v1):
                violations.append((t, "nu(delta*v) != nu(v)"))
            n1, n2, ns = self.nu(v1), self.nu(v2), self.nu(v1 + v2)
            if ns > max(n1, n2):
                violations.append((t, "nu(v1+v2) > max"))
            if n1 < n2 and ns != n2:
                violations.append((t, "strict-inequality consequence failed"))
        return {"pairs": pair_count, "violations": violations, "ok": not violations}

    def valuation_sum_bound(self, sample_count=200, seed=0) -> dict:
        """Empirical sup of nu(b) + nu(b^-1) over random invertible samples."""
        import random

        rng = random.Random(seed)
        best = NEG_INF
        running = []
        invertible = 0
        for _ in range(sample_count):
            b = self.random_element(rng)
            inv = self.invert_element(b)
            if inv is None:
                running.append(best)
                continue
            invertible += 1
            s = self.nu(b) + self.nu(inv)
            if s > best:
                best = s
            running.append(best)
        return {
            "samples": sample_count,
            "invertible": invertible,
            "max_sum": best,
            "running_max": running,
        }

    def random_element(self, rng, allow_zero=False, exp_range=(-3, 3)) -> AlgebraElement:
        """Sparse random element: Laurent-polynomial coordinates with small
        integer coefficients and exponents in ``exp_range``."""
        lo, hi = exp_range
        while True:
            coords = []
            for _ in range(self.dim):
                if rng.random() < 0.35:
                    coords.append(FieldElement.zero())
                    continue
                terms = []
                for _ in range(rng.randint(1, 2)):
                    c = 0
                    while not c:
                        c = rng.randint(-3, 3)
                    im = rng.randint(-1, 1) if rng.random() < 0.15 else 0
                    terms.append((rng.randint(lo, hi), gr(c, im)))
                coords.append(FieldElement.from_terms(terms))
            el = AlgebraElement(tuple(coords))
            if allow_zero or not el.is_zero():
                return el

    # -- validation ---------------------------------------------------------

    def validate(self) -> list[dict]:
        """Run the structural invariant suite; returns one record per check."""
        checks = []

        def record(name, ok, detail=""):
            checks.append({"check": name, "ok": bool(ok), "detail": detail})

        record("even degrees", all(bc.degree % 2 == 0 for bc in self.basis))

        unit_ok = all(
            self.mul(self.unit(), self.basis_element(i)) == self.basis_element(i)
            for i in range(self.dim)
        )
        record("unit law", unit_ok)

        comm_ok = all(
            self.mul_table[i][j] == self.mul_table[j][i]
            for i in range(self.dim)
            for j in range(i, self.dim)
        )
        record("commutativity", comm_ok)

        assoc_fail = None
        for i in range(self.dim):
            ei = self.basis_element(i)
            for j in range(self.dim):
                ej = self.basis_element(j)
                eij = self.mul(ei, ej)
                for l in range(self.dim):
                    el = self.basis_element(l)
                    lhs = self.mul(eij, el)
                    rhs = self.mul(ei, self.mul(ej, el))
                    if lhs != rhs:
                        assoc_fail = (i, j, l)
                        break
                if assoc_fail:
                    break
            if assoc_fail:
                break
        record("associativity", assoc_fail is None, str(assoc_fail or ""))

        sym_ok = all(
            self.pairing[i][j] == self.pairing[j][i]
            for i in range(self.dim)
            for j in range(self.dim)
        )
        record("pairing symmetry", sym_ok)

        try:
            linalg.inverse([[self.pairing[i][j] for j in range(self.dim)] for i in range(self.dim)])
            record("pairing non-degenerate", True)
        except linalg.SingularMatrixError:
            record("pairing non-degenerate", False)

        frob_fail = None
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = self.delta(self.basis_element(i), self.basis_element(j))
                rhs = self.delta(self.mul(self.basis_element(i), self.basis_element(j)), self.unit())
                if lhs != rhs:
                    frob_fail = (i, j)
                    break
            if frob_fail:
                break
        record("Frobenius identity", frob_fail is None, str(frob_fail or ""))

        grading_fail = None
        for i in range(self.dim):
            for j in range(self.dim):
                want = self.basis[i].degree + self.basis[j].degree - 2 * self.n
                for l, c in enumerate(self.mul_table[i][j]):
                    if c.is_zero():
                        continue
                    try:
                        terms = c.as_laurent_terms()
                    except ValueError:
                        grading_fail = (i, j, l, "non-Laurent structure constant")
                        break
                    for exp, _ in terms:
                        got = self.basis[l].degree + 2 * self.chern * exp
                        if got != want:
                            grading_fail = (i, j, l, f"term s^{exp}")
                            break
                    if grading_fail:
                        break
                if grading_fail:
                    break
            if grading_fail:
                break
        record("grading law", grading_fail is None, str(grading_fail or ""))
        return checks

    def validate_or_raise(self):
        problems = [c for c in self.validate() if not c["ok"]]
        if problems:
            raise AlgebraValidationError(
                "; ".join(f"{c['check']}: {c['detail']}" for c in problems)
            )

    def _check_element(self, a: AlgebraElement):
        if len(a.coords) != self.dim:
            raise DimensionMismatchError(
                f"element has {len(a.coords)} coordinates, algebra dimension is {self.dim}"
            )

    # -- formatting and parsing ------------------------------------------

    def format_element(self, a: AlgebraElement) -> str:
        self._check_element(a)
        parts = []
        for i, c in enumerate(a.coords):
            if c.is_zero():
                continue
            name = self.basis[i].name
            cs = str(c)
            if cs == "1":
                body = name
            elif cs == "-1":
                body = f"-{name}"
            elif c.is_laurent_monomial() or c.num.degree <= 0:
                body = f"{cs} {name}"
            else:
                body = f"({cs}) {name}"
            if parts and not body.startswith("-"):
                parts.append("+ " + body)
            elif parts:
                parts.append("- " + body[1:])
            else:
                parts.append(body)
        return " ".join(parts) if parts else "0"

    def parse_element(self, text: str) -> AlgebraElement:
        """Parse linear combinations like ``4P - A s^-1`` or ``(1/283)s^2 [M]``."""
        coords = [FieldElement.zero()] * self.dim
        for sign, body in _split_terms(text):
            coeff, idx = self._parse_term(body)
            if sign == "-":
                coeff = -coeff
            coords[idx] = coords[idx] + coeff
        return AlgebraElement(tuple(coords))

    def _parse_term(self, body: str):
        names = sorted(self._index, key=len, reverse=True)
        idx = None
        rest = body
        for nm in names:
            pos = rest.find(nm)
            if pos >= 0:
                idx = self._index[nm]
                rest = rest[:pos] + rest[pos + len(nm):]
                break
        if idx is None:
            idx = self.unit_index
        rest = rest.replace("*", " ").strip()
        coeff = FieldElement.one()
        token_re = re.compile(r"s\^(-?\d+)|s|\(\s*(-?\d+(?:/\d+)?)\s*\)|(-?\d+(?:/\d+)?)")
        pos = 0
        seen = False
        for m in token_re.finditer(rest):
            if rest[pos:m.start()].strip():
                raise ValueError(f"cannot parse term {body!r}")
            pos = m.end()
            seen = True
            if m.group(1) is not None:
                coeff = coeff * FieldElement.s_power(int(m.group(1)))
            elif m.group(0) == "s":
                coeff = coeff * FieldElement.s_power(1)
            else:
                val = m.group(2) or m.group(3)
                coeff = coeff * FieldElement.constant(Fraction(val))
        if rest[pos:].strip():
            raise ValueError(f"cannot parse term {body!r}")
        if not seen and idx is None:
            raise ValueError(f"empty term in {body!r}")
        return coeff, idx

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        mul_entries = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                entry = [
                    [l, c.to_json()]
                    for l, c in enumerate(self.mul_table[i][j])
                    if not c.is_zero()
                ]
                if entry:
                    mul_entries.append([i, j, entry])
        pairing_entries = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                p = self.pairing[i][j]
                if not p.is_zero():
                    terms = p.as_laurent_terms()
                    if len(terms) != 1 or terms[0][0] != 0 or terms[0][1].im:
                        raise ValueError("pairing entries must be rational constants")
                    pairing_entries.append([i, j, str(terms[0][1].re)])
        return {
            "name": self.name,
            "basis": [{"name": bc.name, "degree": bc.degree} for bc in self.basis],
            "unit": self.unit_index,
            "mul": mul_entries,
            "pairing": pairing_entries,
            "n": self.n,
            "N": self.chern,
            "Omega": str(self.omega),
        }

    @staticmethod
    def from_json(obj: dict) -> "FrobeniusAlgebra":
        basis = [BasisClass(b["name"], int(b["degree"])) for b in obj["basis"]]
        dim = len(basis)
        zero = FieldElement.zero()
        mul = [[None] * dim for _ in range(dim)]
        for i, j, entry in obj["mul"]:
            coords = [zero] * dim
            for l, fe in entry:
                coords[l] = FieldElement.from_json(fe)
            mul[i][j] = tuple(coords)
            mul[j][i] = tuple(coords)
        for i in range(dim):
            for j in range(dim):
                if mul[i][j] is None:
                    mul[i][j] = tuple([zero] * dim)
        pairing = [[zero] * dim for _ in range(dim)]
        for i, j, val in obj["pairing"]:
            fe = FieldElement.constant(Fraction(val))
            pairing[i][j] = fe
            pairing[j][i] = fe
        return FrobeniusAlgebra(
            basis,
            int(obj["unit"]),
            mul,
            pairing,
            int(obj["n"]),
            int(obj["N"]),
            Fraction(obj.get("Omega", "1")),
            name=obj.get("name", ""),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @staticmethod
    def loads(text: str) -> "FrobeniusAlgebra":
        return FrobeniusAlgebra.from_json(json.loads(text))


def _split_terms(text: str):
    """Split ``a + b - c`` into signed term bodies."""
    text = text.strip()
    if not text:
        raise ValueError("empty element expression")
    terms = []
    sign = "+"
    buf = []
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and buf and buf[-1] not in "^(*":
            body = "".join(buf).strip()
            if body:
                terms.append((sign, body))
            sign = ch
            buf = []
        else:
            buf.append(ch)
    body = "".join(buf).strip()
    if body:
        terms.append((sign, body))
    return terms


# -- built-in algebras --------------------------------------------------


def _fe(exp=0, coeff=1) -> FieldElement:
    return FieldElement.s_power(exp, coeff)


def _table(dim):
    zero = FieldElement.zero()
    return [[[zero] * dim for _ in range(dim)] for _ in range(dim)]


def _finish(mul):
    return [[tuple(cell) for cell in row] for row in mul]


def builtin_algebra(name: str, n: int | None = None, omega=Fraction(1)) -> FrobeniusAlgebra:
    """Construct one of the built-in quantum homology algebras.

    Names: ``S2``, ``CPn`` (requires ``n >= 1``), ``S2xS2``, ``CP2blowup``,
    plus ``nilpotent`` (the undeformed intersection product on the sphere,
    the standard non-semisimple counterexample).
    """
    omega = Fraction(omega)
    if name == "S2":
        return _build_cpn(1, omega, basis_names=["[M]", "P"], name="S2")
    if name == "CPn":
        if n is None or n < 1:
            raise UnknownNameError("CPn requires a parameter n >= 1")
        return _build_cpn(n, omega, name=f"CP{n}")
    if name == "S2xS2":
        return _build_s2xs2(omega)
    if name == "CP2blowup":
        return _build_blowup(omega)
    if name == "nilpotent":
        return _build_nilpotent(omega)
    raise UnknownNameError(f"unknown builtin algebra {name!r}")


def _build_cpn(n, omega, basis_names=None, name="CPn"):
    # k[A]/{A^(n+1) = s^-1}; basis A^0=[M], A, ..., A^n; A^n is the point.
    dim = n + 1
    if basis_names is None:
        basis_names = ["[M]", "A"] + [f"A^{k}" for k in range(2, dim)]
    basis = [BasisClass(basis_names[k], 2 * (n - k)) for k in range(dim)]
    mul = _table(dim)
    for i in range(dim):
        for j in range(dim):
            k = i + j
            if k < dim:
                mul[i][j][k] = _fe(0)
            else:
                mul[i][j][k - dim] = _fe(-1)
    pairing = [[_fe(0) if i + j == n else FieldElement.zero() for j in range(dim)] for i in range(dim)]
    return FrobeniusAlgebra(basis, 0, _finish(mul), pairing, n, n + 1, omega, name=name)


def _build_s2xs2(omega):
    # Basis [M], A, B, P with A*B = P and A^2 = B^2 = s^-1.
    names = ["[M]", "A", "B", "P"]
    degs = [4, 2, 2, 0]
    basis = [BasisClass(nm, d) for nm, d in zip(names, degs)]
    M, A, B, P = range(4)
    mul = _table(4)
    for i in range(4):
        mul[M][i][i] = _fe(0)
        mul[i][M][i] = _fe(0)
    mul[A][A][M] = _fe(-1)
    mul[B][B][M] = _fe(-1)
    mul[A][B][P] = _fe(0)
    mul[B][A][P] = _fe(0)
    mul[A][P][B] = _fe(-1)
    mul[P][A][B] = _fe(-1)
    mul[B][P][A] = _fe(-1)
    mul[P][B][A] = _fe(-1)
    mul[P][P][M] = _fe(-2)
    zero = FieldElement.zero()
    pairing = [[zero] * 4 for _ in range(4)]
    pairing[M][P] = pairing[P][M] = _fe(0)
    pairing[A][B] = pairing[B][A] = _fe(0)
    return FrobeniusAlgebra(basis, 0, _finish(mul), pairing, 2, 2, omega, name="S2xS2")


def _build_blowup(omega):
    # One-point blow-up of the projective plane; A the exceptional class,
    # B the proper transform of a line minus A.
    names = ["[M]", "P", "A", "B"]
    degs = [4, 0, 2, 2]
    basis = [BasisClass(nm, d) for nm, d in zip(names, degs)]
    M, P, A, B = range(4)
    mul = _table(4)
    for i in range(4):
        mul[M][i][i] = _fe(0)
        mul[i][M][i] = _fe(0)
    # P*P = (A+B)s^-3
    mul[P][P][A] = _fe(-3)
    mul[P][P][B] = _fe(-3)
    # A*P = B s^-2
    mul[A][P][B] = _fe(-2)
    mul[P][A][B] = _fe(-2)
    # P*B = s^-3
    mul[P][B][M] = _fe(-3)
    mul[B][P][M] = _fe(-3)
    # A*A = -P + A s^-1 + s^-2
    mul[A][A][P] = _fe(0, -1)
    mul[A][A][A] = _fe(-1)
    mul[A][A][M] = _fe(-2)
    # A*B = P - A s^-1
    mul[A][B][P] = _fe(0)
    mul[A][B][A] = _fe(-1, -1)
    mul[B][A][P] = _fe(0)
    mul[B][A][A] = _fe(-1, -1)
    # B*B = A s^-1
    mul[B][B][A] = _fe(-1)
    zero = FieldElement.zero()
    pairing = [[zero] * 4 for _ in range(4)]
    pairing[M][P] = pairing[P][M] = _fe(0)
    pairing[A][A] = _fe(0, -1)
    pairing[A][B] = pairing[B][A] = _fe(0)
    return FrobeniusAlgebra(basis, 0, _finish(mul), pairing, 2, 1, omega, name="CP2blowup")


def _build_nilpotent(omega):
    # Undeformed intersection product on the sphere: P*P = 0.
    basis = [BasisClass("[M]", 2), BasisClass("P", 0)]
    mul = _table(2)
    mul[0][0][0] = _fe(0)
    mul[0][1][1] = _fe(0)
    mul[1][0][1] = _fe(0)
    zero = FieldElement.zero()
    pairing = [[zero, _fe(0)], [_fe(0), zero]]
    return FrobeniusAlgebra(basis, 0, _finish(mul), pairing, 1, 1, omega, name="nilpotent")


BUILTIN_NAMES = ("S2", "CPn", "S2xS2", "CP2blowup", "nilpotent")
