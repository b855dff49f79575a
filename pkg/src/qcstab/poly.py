"""Dense polynomials over a FieldSpec and residues modulo x^n - 1.

Coefficients are stored ascending as integer element codes with no trailing
zeros; the zero polynomial is the empty tuple and reports degree -inf so that
degree comparisons degrade gracefully.  Vectorization of residues is always
a_0-first.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    BothZeroError,
    DegreeTooLargeError,
    DivideByZeroError,
    MixedFieldsError,
    MixedModulusError,
    NotADivisorError,
    NotMonicError,
)
from .field import FieldElement, FieldSpec

NEG_INF = float("-inf")


def _coerce_code(field: FieldSpec, value) -> int:
    if isinstance(value, FieldElement):
        if not field.same(value.spec):
            raise MixedFieldsError(f"{value.spec} coefficient in {field} polynomial")
        return value.code
    if isinstance(value, (int, np.integer)):
        return int(value) % field.p
    raise TypeError(f"cannot use {type(value).__name__} as a field coefficient")


class Poly:
    """Univariate polynomial over a fixed field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs=()):
        codes = [_coerce_code(field, c) for c in coeffs]
        while codes and codes[-1] == 0:
            codes.pop()
        self.field = field
        self.coeffs = tuple(codes)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FieldSpec, k: int, coeff=1) -> "Poly":
        c = _coerce_code(field, coeff)
        return cls.from_codes(field, (0,) * k + (c,))

    @classmethod
    def from_codes(cls, field: FieldSpec, codes) -> "Poly":
        p = cls.__new__(cls)
        codes = list(codes)
        while codes and codes[-1] == 0:
            codes.pop()
        p.field = field
        p.coeffs = tuple(codes)
        return p

    # -- basic structure -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.field.inv(self.lead)
        F = self.field
        return Poly.from_codes(F, (F.mul(c, inv) for c in self.coeffs))

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _check(self, other: "Poly"):
        if not self.field.same(other.field):
            raise MixedFieldsError(f"{self.field} vs {other.field}")

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly.from_codes(F, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        out = [F.sub(self.coeff(i), other.coeff(i))
               for i in range(max(len(self.coeffs), len(other.coeffs)))]
        return Poly.from_codes(F, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly.from_codes(F, (F.neg(c) for c in self.coeffs))

    def __mul__(self, other) -> "Poly":
        F = self.field
        if isinstance(other, (int, np.integer, FieldElement)):
            c = _coerce_code(F, other)
            return Poly.from_codes(F, (F.mul(ci, c) for ci in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly.from_codes(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field.same(other.field) and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.r, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def eval(self, point) -> FieldElement:
        F = self.field
        c = _coerce_code(F, point) if not isinstance(point, FieldElement) else point.code
        acc = 0
        for coeff in reversed(self.coeffs):
            acc = F.add(F.mul(acc, c), coeff)
        return FieldElement(F, acc)

    def reverse(self) -> "Poly":
        """x^deg * p(1/x): the plain coefficient reversal."""
        return Poly.from_codes(self.field, tuple(reversed(self.coeffs)))

    # -- text form -------------------------------------------------------------

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "Poly":
        terms = _split_terms(text)
        out = Poly.zero(field)
        for sign, term in terms:
            coeff_code, k = _parse_term(field, term)
            if sign < 0:
                coeff_code = field.neg(coeff_code)
            out = out + Poly.monomial(field, k, field.from_code(coeff_code))
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        F = self.field
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(F.format_element(c))
            elif c == 1:
                parts.append("x" if k == 1 else f"x^{k}")
            else:
                var = "x" if k == 1 else f"x^{k}"
                parts.append(f"{F.format_element(c)}*{var}")
        return "+".join(parts)

    def __repr__(self):
        return f"Poly({self.field}, {self})"


def _split_terms(text: str):
    """Split on top-level +/-; brackets may contain commas but no signs."""
    terms = []
    depth = 0
    cur = []
    sign = 1
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if depth == 0 and ch in "+-" and cur and cur[-1] != "^":
            terms.append((sign, "".join(cur).strip()))
            sign = 1 if ch == "+" else -1
            cur = []
        elif depth == 0 and ch in "+-" and not cur:
            sign = sign if ch == "+" else -sign
        else:
            cur.append(ch)
    if cur:
        terms.append((sign, "".join(cur).strip()))
    terms = [(s, t) for s, t in terms if t]
    if not terms:
        raise ValueError(f"empty polynomial literal: {text!r}")
    return terms


def _parse_term(field: FieldSpec, term: str):
    star = -1
    depth = 0
    for i, ch in enumerate(term):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "*" and depth == 0:
            star = i
            break
    if star >= 0:
        coeff = field.parse_element(term[:star]).code
        var = term[star + 1:].strip()
    elif term == "x" or term.startswith("x^"):
        coeff, var = 1, term
    else:
        coeff = field.parse_element(term).code
        var = ""
    if not var:
        k = 0
    elif var == "x":
        k = 1
    elif var.startswith("x^"):
        k = int(var[2:])
        if k < 0:
            raise ValueError(f"negative exponent in {term!r}")
    else:
        raise ValueError(f"malformed term {term!r}")
    return coeff, k


# ---------------------------------------------------------------------------
# Division, gcd, and the transforms around x^n - 1
# ---------------------------------------------------------------------------

def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with deg rem < deg b."""
    a._check(b)
    if b.is_zero():
        raise DivideByZeroError("polynomial division by zero")
    F = a.field
    if a.degree < b.degree:
        return Poly.zero(F), a
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    inv_lead = F.inv(b.lead)
    quot = [0] * (len(rem) - db)
    for top in range(len(rem) - 1, db - 1, -1):
        c = rem[top]
        if c == 0:
            continue
        factor = F.mul(c, inv_lead)
        shift = top - db
        quot[shift] = factor
        for i, bi in enumerate(b.coeffs):
            if bi:
                rem[shift + i] = F.sub(rem[shift + i], F.mul(factor, bi))
    return Poly.from_codes(F, quot), Poly.from_codes(F, rem[:db])


def divides(a: Poly, b: Poly) -> bool:
    """True when a | b; the zero polynomial divides only zero."""
    if a.is_zero():
        return b.is_zero()
    return poly_divmod(b, a)[1].is_zero()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) raises."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise BothZeroError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.field)
    g = poly_gcd(a, b)
    return ((a * b) // g).monic()


def poly_gcd_lcm(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    g = poly_gcd(a, b)
    return g, poly_lcm(a, b)


def xn1(field: FieldSpec, n: int) -> Poly:
    """x^n - 1."""
    codes = [field.neg(1)] + [0] * (n - 1) + [1]
    return Poly.from_codes(field, codes)


def check_polynomial(f: Poly, n: int) -> Poly:
    """The cofactor f' with f * f' = x^n - 1."""
    if not f.is_monic():
        raise NotMonicError(f"{f} is not monic")
    quot, rem = poly_divmod(xn1(f.field, n), f)
    if not rem.is_zero():
        raise NotADivisorError(f"{f} does not divide x^{n}-1")
    return quot


def dual_generator(f: Poly, n: int) -> Poly:
    """Monic x^(deg f') f'(1/x): generator of the dual of the f-cyclic code.

    For f = 1 this is x^n - 1, the degree-n sentinel generating the zero code.
    """
    fp = check_polynomial(f, n)
    return fp.reverse().monic()


def reciprocal_bar(h: Poly, n: int) -> "Residue":
    """Class of x^n h(1/x) mod x^n-1: h_0 + sum_{i>=1} h_i x^(n-i)."""
    if h.degree >= n:
        raise DegreeTooLargeError(f"deg {h.degree} >= n = {n}")
    codes = [0] * n
    for i, c in enumerate(h.coeffs):
        codes[(n - i) % n] = c
    return Residue(n, Poly.from_codes(h.field, codes))


def q_power_map(f: Poly, q: int) -> Poly:
    """Coefficient-wise e -> e^q for q a power of the characteristic."""
    F = f.field
    s = 0
    qq = q
    while qq > 1:
        if qq % F.p:
            raise ValueError(f"{q} is not a power of the characteristic {F.p}")
        qq //= F.p
        s += 1
    return Poly.from_codes(F, (F.frob(c, s) for c in f.coeffs))


# ---------------------------------------------------------------------------
# Residue classes in R = F_q[x]/(x^n - 1)
# ---------------------------------------------------------------------------

class Residue:
    """A class in F_q[x]/(x^n - 1), stored as its representative of degree < n."""

    __slots__ = ("n", "poly")

    def __init__(self, n: int, poly: Poly):
        if poly.degree >= n:
            poly = poly % xn1(poly.field, n)
        self.n = n
        self.poly = poly

    @property
    def field(self) -> FieldSpec:
        return self.poly.field

    @classmethod
    def of(cls, n: int, poly: Poly) -> "Residue":
        return cls(n, poly)

    def _check(self, other: "Residue"):
        if self.n != other.n:
            raise MixedModulusError(f"n = {self.n} vs n = {other.n}")
        if not self.field.same(other.field):
            raise MixedFieldsError(f"{self.field} vs {other.field}")

    def __add__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue(self.n, self.poly + other.poly)

    def __sub__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue(self.n, self.poly - other.poly)

    def __mul__(self, other) -> "Residue":
        if isinstance(other, Residue):
            self._check(other)
            return Residue(self.n, self.poly * other.poly)
        return Residue(self.n, self.poly * other)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "Residue":
        """Multiply by x^k: the k-fold coordinate rotation sigma_1^k."""
        k %= self.n
        if k == 0 or self.poly.is_zero():
            return self
        codes = [0] * self.n
        for i, c in enumerate(self.poly.coeffs):
            codes[(i + k) % self.n] = c
        return Residue(self.n, Poly.from_codes(self.field, codes))

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.n == other.n and self.poly == other.poly
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.poly))

    def __bool__(self):
        return bool(self.poly)

    def to_vector(self) -> np.ndarray:
        """(a_0, ..., a_{n-1}) as element codes."""
        out = np.zeros(self.n, dtype=np.int64)
        cc = self.poly.coeffs
        out[: len(cc)] = cc
        return out

    @classmethod
    def from_vector(cls, field: FieldSpec, vec) -> "Residue":
        vec = list(vec)
        return cls(len(vec), Poly.from_codes(field, [int(v) for v in vec]))

    def lift(self) -> Poly:
        return self.poly

    def __repr__(self):
        return f"[{self.poly}] (mod x^{self.n}-1)"


def residue_ops(a: Residue, b: Residue | None, op: str) -> Residue:
    """Named dispatch mirror of the Residue operators (add/mul/shift)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "shift":
        return a.shift()
    raise ValueError(f"unknown residue op {op!r}")


def shift_rows(res: Residue, count: int) -> np.ndarray:
    """Vectorizations of x^i * res for 0 <= i < count, as a (count, n) matrix."""
    n = res.n
    out = np.zeros((max(count, 0), n), dtype=np.int64)
    if count > 0:
        row = res.to_vector()
        out[0] = row
        for i in range(1, count):
            row = np.roll(row, 1)
            out[i] = row
    return out
