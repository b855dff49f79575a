"""Arithmetic in GF(p^r) and its extensions.

Elements are stored in the polynomial basis: the element sum(c_i * x^i) with
coordinates c_i in {0..p-1} is encoded as the integer sum(c_i * p^i).  This
keeps elements hashable, numpy-friendly and works for fields up to 2^32
without log tables; small fields can additionally expose q x q lookup tables
for the enumeration kernels.

The defining modulus of GF(p^r) is canonical: the Conway polynomial when the
embedded table has it (entries are re-verified at build time), otherwise the
lexicographically least monic irreducible of degree r over GF(p), ordered by
the ascending coefficient tuple (c_0, ..., c_{r-1}).  This makes element
encodings and the canonical primitive element reproducible across runs.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import (
    DegreeZeroError,
    FieldTooLargeError,
    InverseOfZeroError,
    MixedFieldsError,
    NotASubfieldError,
    NotCoprimeError,
    NotInSubfieldError,
    NotPrimeError,
)

MAX_FIELD_SIZE = 1 << 32
# q x q kernel tables are only built for composite fields up to this order;
# prime fields use direct modular arithmetic of any size.
TABLE_LIMIT = 1024

# Conway polynomials (ascending coefficients, monic).  Only entries that are
# widely reproduced are embedded; each is re-verified at build time.
_CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (5, 1): (3, 1),
    (7, 1): (4, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (fixture-scale n only)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Dense polynomial helpers over the prime field GF(p), used only to find and
# verify moduli.  Coefficient lists are ascending with no trailing zeros.
# ---------------------------------------------------------------------------

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    a = _ptrim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _ptrim(a)
    return a


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(m, p: int) -> bool:
    """Rabin test: x^(p^r) = x mod m, and x^(p^(r/l)) - x coprime to m."""
    r = len(m) - 1
    if r < 1:
        return False
    x = [0, 1]
    xq = _ppowmod(x, p**r, m, p)
    if _pmod([(xi - yi) % p for xi, yi in itertools.zip_longest(xq, x, fillvalue=0)], m, p):
        return False
    for ell in factorize(r):
        xs = _ppowmod(x, p ** (r // ell), m, p)
        diff = _ptrim([(a - b) % p for a, b in itertools.zip_longest(xs, x, fillvalue=0)])
        g = _pgcd(m, diff, p)
        if len(g) - 1 != 0:
            return False
    return True


def _root_is_primitive(m, p: int) -> bool:
    order = p ** (len(m) - 1) - 1
    for ell in factorize(order):
        xe = _ppowmod([0, 1], order // ell, m, p)
        if xe == [1]:
            return False
    return True


def _canonical_modulus(p: int, r: int) -> tuple[int, ...]:
    entry = _CONWAY.get((p, r))
    if entry is not None and _is_irreducible(list(entry), p) and _root_is_primitive(list(entry), p):
        return entry
    for tail in itertools.product(range(p), repeat=r):
        # cheap certain-reducibility filters (roots at 0 and 1) before Rabin
        if r > 1 and (tail[0] == 0 or (sum(tail) + 1) % p == 0):
            continue
        cand = list(tail) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible polynomial of degree {r} over GF({p})")


# ---------------------------------------------------------------------------
# Field definition
# ---------------------------------------------------------------------------

class FieldSpec:
    """GF(p^r) with a fixed defining modulus.

    Instances are immutable and cached by make_field; all arithmetic below
    operates on integer element codes.
    """

    def __init__(self, p: int, r: int, modulus: tuple[int, ...]):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = modulus
        if p == 2:
            self._mod_int = sum(c << i for i, c in enumerate(modulus))
        elif r > 1:
            # x^(r+t) mod modulus, as digit vectors, for schoolbook reduction
            red = []
            cur = [(-c) % p for c in modulus[:-1]]
            red.append(tuple(cur))
            for _ in range(r - 2):
                cur = [0] + cur
                top = cur.pop()
                if top:
                    cur = [(ci + top * mi) % p for ci, mi in zip(cur, red[0])]
                red.append(tuple(cur))
            self._red = red
        self._primitive: int | None = None
        self._kernel_tables: dict | None = None
        self._frob_tables: dict[int, np.ndarray] = {}
        self._embeddings: dict[int, "_Embedding"] = {}

    # -- identity ----------------------------------------------------------

    def same(self, other: "FieldSpec") -> bool:
        return (
            self is other
            or (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)
        )

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.r})"

    @property
    def is_prime_field(self) -> bool:
        return self.r == 1

    # -- code <-> coordinates ----------------------------------------------

    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            code, c = divmod(code, self.p)
            out.append(c)
        return tuple(out)

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.r:
            raise ValueError(f"expected at most {self.r} coordinates")
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c % self.p
        return code

    def iter_codes_lex(self):
        """All element codes in coordinate-lexicographic order."""
        for tup in itertools.product(range(self.p), repeat=self.r):
            yield self.encode(tup)

    # -- scalar arithmetic on codes ------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self.decode(a), self.decode(b)
        return self.encode((x + y) % self.p for x, y in zip(da, db))

    def sub(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self.decode(a), self.decode(b)
        return self.encode((x - y) % self.p for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a * b) % self.p
        if self.p == 2:
            res = 0
            x = a
            while b:
                if b & 1:
                    res ^= x
                x <<= 1
                b >>= 1
            mm = self._mod_int
            rr = self.r
            for i in range(res.bit_length() - 1, rr - 1, -1):
                if (res >> i) & 1:
                    res ^= mm << (i - rr)
            return res
        da, db = self.decode(a), self.decode(b)
        p, r = self.p, self.r
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for t in range(r - 2, -1, -1):
            c = prod[r + t]
            if c:
                row = self._red[t]
                for j in range(r):
                    prod[j] = (prod[j] + c * row[j]) % p
        return self.encode(prod[:r])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.r == 1:
            return pow(a, e, self.p)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise InverseOfZeroError(f"inverse of zero in {self}")
        if self.r == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def frob(self, a: int, k: int) -> int:
        """a ** (p^k)."""
        if a == 0 or k == 0:
            return a
        e = pow(self.p, k, self.q - 1)
        return self.pow(a, e)

    # -- elements ------------------------------------------------------------

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if not self.same(value.spec):
                raise MixedFieldsError(f"{value.spec} element used in {self}")
            return value
        if isinstance(value, str):
            return self.parse_element(value)
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, int(value) % self.p)
        return FieldElement(self, self.encode(value))

    def from_code(self, code: int) -> "FieldElement":
        return FieldElement(self, code)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def gen(self) -> "FieldElement":
        """The residue class of x modulo the defining polynomial."""
        if self.r == 1:
            return FieldElement(self, (-self.modulus[0]) % self.p)
        return FieldElement(self, self.p)

    def elements(self):
        for code in self.iter_codes_lex():
            yield FieldElement(self, code)

    def _has_full_order(self, code: int) -> bool:
        if code == 0:
            return False
        for ell in factorize(self.q - 1):
            if self.pow(code, (self.q - 1) // ell) == 1:
                return False
        return True

    def primitive_element(self) -> "FieldElement":
        """Least element in coordinate-lex order of multiplicative order q-1."""
        if self._primitive is None:
            if self.q == 2:
                self._primitive = 1
            else:
                for code in self.iter_codes_lex():
                    if self._has_full_order(code):
                        self._primitive = code
                        break
        return FieldElement(self, self._primitive)

    # -- text syntax ---------------------------------------------------------

    def parse_element(self, text: str) -> "FieldElement":
        s = text.strip()
        if not s:
            raise ValueError("empty field-element literal")
        if s.startswith("["):
            if not s.endswith("]"):
                raise ValueError(f"unterminated coordinate form: {text!r}")
            coords = [int(t) for t in s[1:-1].split(",")] if s[1:-1].strip() else []
            if len(coords) != self.r:
                raise ValueError(
                    f"{self} needs {self.r} coordinates, got {len(coords)}"
                )
            return FieldElement(self, self.encode(coords))
        if s == "z" or s.startswith("z^"):
            k = 1 if s == "z" else int(s[2:])
            zeta = self.primitive_element()
            return FieldElement(self, self.pow(zeta.code, k))
        return FieldElement(self, int(s, 0) % self.p)

    def format_element(self, code: int) -> str:
        if self.r == 1:
            return str(code)
        return "[" + ",".join(str(c) for c in self.decode(code)) + "]"

    # -- kernel support --------------------------------------------------------

    def kernel_tables(self) -> dict:
        """Arithmetic tables consumed by the enumeration/linalg kernels.

        Prime fields run on direct modular arithmetic (pmod > 0, dummy add/mul
        tables); composite fields up to TABLE_LIMIT get dense q x q tables.
        """
        if self._kernel_tables is not None:
            return self._kernel_tables
        if self.q > (1 << 16):
            raise FieldTooLargeError(f"{self}: kernel ops limited to q <= 2^16")
        q = self.q
        deltas = np.array(
            [self.sub((v + 1) % q, v) for v in range(q)], dtype=np.int64
        )
        if self.r == 1:
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = [pow(v, q - 2, q) for v in range(1, q)]
            dummy = np.zeros((1, 1), dtype=np.int64)
            self._kernel_tables = {
                "pmod": q, "add": dummy, "mul": dummy, "inv": inv,
                "neg": (q - np.arange(q, dtype=np.int64)) % q, "deltas": deltas,
            }
            return self._kernel_tables
        if q > TABLE_LIMIT:
            raise FieldTooLargeError(
                f"{self}: composite fields need q <= {TABLE_LIMIT} for kernel tables"
            )
        digits = np.zeros((q, self.r), dtype=np.int64)
        for code in range(q):
            digits[code] = self.decode(code)
        pows = self.p ** np.arange(self.r, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % self.p) @ pows
        neg = ((-digits) % self.p) @ pows
        gen = self.primitive_element().code
        exp_list = [1]
        for _ in range(q - 2):
            exp_list.append(self.mul(exp_list[-1], gen))
        exp = np.array(exp_list, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        mul = np.zeros((q, q), dtype=np.int64)
        idx = (log[1:, None] + log[None, 1:]) % (q - 1)
        mul[1:, 1:] = exp[idx]
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
        self._kernel_tables = {
            "pmod": 0, "add": add, "mul": mul, "inv": inv, "neg": neg,
            "deltas": deltas,
        }
        return self._kernel_tables

    def frob_table(self, k: int) -> np.ndarray:
        """code -> code array for x -> x^(p^k); q <= 2^16 only."""
        k = k % self.r if self.r > 1 else 0
        tab = self._frob_tables.get(k)
        if tab is None:
            if self.q > (1 << 16):
                raise FieldTooLargeError(f"{self}: frobenius table needs q <= 2^16")
            tab = np.array([self.frob(c, k) for c in range(self.q)], dtype=np.int64)
            self._frob_tables[k] = tab
        return tab


class FieldElement:
    """An element of a FieldSpec, wrapping its integer code."""

    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        self.spec = spec
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.decode(self.code)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if not self.spec.same(other.spec):
                raise MixedFieldsError(f"{self.spec} vs {other.spec}")
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.spec.p
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(c, self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.code, self.spec.inv(c)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec.same(other.spec) and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == int(other) % self.spec.p and self.code < self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.r, self.spec.modulus, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"{self.spec}:{self.spec.format_element(self.code)}"

    def __str__(self):
        return self.spec.format_element(self.code)


_FIELD_CACHE: dict[tuple[int, int], FieldSpec] = {}


def make_field(p: int, r: int) -> FieldSpec:
    """GF(p^r) with the canonical modulus.  Rejects p^r > 2^32."""
    if r < 1:
        raise DegreeZeroError(f"extension degree must be >= 1, got {r}")
    if not _is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p**r > MAX_FIELD_SIZE:
        raise FieldTooLargeError(f"GF({p}^{r}) exceeds the 2^32 size budget")
    key = (p, r)
    spec = _FIELD_CACHE.get(key)
    if spec is None:
        spec = FieldSpec(p, r, _canonical_modulus(p, r))
        _FIELD_CACHE[key] = spec
    return spec


def element_arithmetic(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Named dispatch mirror of the FieldElement operators."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** b if isinstance(b, int) else NotImplemented
    raise ValueError(f"unknown element op {op!r}")


def frobenius(a: FieldElement, k: int) -> FieldElement:
    """a ** (p^k): the k-fold Frobenius of a."""
    if k < 0:
        raise ValueError("frobenius power must be non-negative")
    return FieldElement(a.spec, a.spec.frob(a.code, k))


def multiplicative_order(q: int, n: int) -> int:
    """Least m >= 1 with q^m = 1 (mod n); GF(q^m) splits x^n - 1 over GF(q)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return 1
    import math

    if math.gcd(q, n) != 1:
        raise NotCoprimeError(f"gcd({q}, {n}) != 1: x^{n}-1 is not square-free")
    cur = q % n
    for m in range(1, n + 1):
        if cur == 1:
            return m
        cur = (cur * q) % n
    raise AssertionError("order scan failed")  # pragma: no cover


# ---------------------------------------------------------------------------
# Subfield embeddings
# ---------------------------------------------------------------------------

class _Embedding:
    """Canonical embedding GF(p^s) -> GF(p^t), s | t.

    The source generator maps to the coordinate-lex least root of the source
    modulus in the target; the linear behaviour over GF(p) is captured by a
    (t x s) matrix used for fast embedding and for projecting back.
    """

    def __init__(self, src: FieldSpec, tgt: FieldSpec):
        self.src = src
        self.tgt = tgt
        root = self._least_root()
        self.root = root
        cols = []
        cur = 1
        for _ in range(src.r):
            cols.append(tgt.decode(cur))
            cur = tgt.mul(cur, root)
        self.matrix = np.array(cols, dtype=np.int64).T  # (t, s)
        self._prepare_solver()

    def _least_root(self) -> int:
        src, tgt = self.src, self.tgt
        w = tgt.primitive_element().code
        step = (tgt.q - 1) // (src.q - 1)
        candidates = [0] + [tgt.pow(w, k * step) for k in range(src.q - 1)]
        roots = []
        mod_coeffs = src.modulus  # coefficients lie in GF(p): codes carry over
        for c in candidates:
            acc = 0
            for coeff in reversed(mod_coeffs):
                acc = tgt.add(tgt.mul(acc, c), coeff % tgt.p)
            if acc == 0:
                roots.append(c)
        if not roots:
            raise AssertionError("modulus has no root in the target field")
        roots.sort(key=self.tgt.decode)
        return roots[0]

    def _prepare_solver(self):
        p = self.tgt.p
        t, s = self.matrix.shape
        aug = np.concatenate(
            [self.matrix % p, np.eye(t, dtype=np.int64)], axis=1
        )
        row = 0
        pivots = []
        for col in range(s):
            sel = None
            for i in range(row, t):
                if aug[i, col] % p:
                    sel = i
                    break
            if sel is None:
                continue
            aug[[row, sel]] = aug[[sel, row]]
            aug[row] = (aug[row] * pow(int(aug[row, col]), p - 2, p)) % p
            for i in range(t):
                if i != row and aug[i, col] % p:
                    aug[i] = (aug[i] - aug[i, col] * aug[row]) % p
            pivots.append(col)
            row += 1
        self._rref = aug
        self._pivots = pivots
        self._rank = row

    def embed_code(self, code: int) -> int:
        coords = np.array(self.src.decode(code), dtype=np.int64)
        out = (self.matrix @ coords) % self.tgt.p
        return self.tgt.encode(out.tolist())

    def project_code(self, code: int) -> int:
        p = self.tgt.p
        v = np.array(self.tgt.decode(code), dtype=np.int64)
        tv = (self._rref[:, self.matrix.shape[1]:] @ v) % p
        if np.any(tv[self._rank:] % p):
            raise NotInSubfieldError(
                f"{self.tgt.format_element(code)} is not in the image of {self.src}"
            )
        sol = np.zeros(self.matrix.shape[1], dtype=np.int64)
        for k, col in enumerate(self._pivots):
            sol[col] = tv[k]
        if np.any((self.matrix @ sol - v) % p):
            raise NotInSubfieldError(
                f"{self.tgt.format_element(code)} is not in the image of {self.src}"
            )
        return self.src.encode(sol.tolist())


def get_embedding(src: FieldSpec, tgt: FieldSpec) -> _Embedding:
    if src.p != tgt.p or tgt.r % src.r != 0:
        raise NotASubfieldError(f"{src} does not embed into {tgt}")
    emb = tgt._embeddings.get(id(src))
    if emb is None:
        emb = _Embedding(src, tgt)
        tgt._embeddings[id(src)] = emb
    return emb


def subfield_embed(a: FieldElement, target: FieldSpec) -> FieldElement:
    """Image of a under the canonical embedding of its field into target."""
    if a.spec.same(target):
        return a
    emb = get_embedding(a.spec, target)
    return FieldElement(target, emb.embed_code(a.code))


def subfield_project(a: FieldElement, source: FieldSpec) -> FieldElement:
    """Preimage of a in source; raises NotInSubfieldError if a is outside."""
    if a.spec.same(source):
        return a
    emb = get_embedding(source, a.spec)
    return FieldElement(source, emb.project_code(a.code))
