"""Index-2 quasi-cyclic codes Q(f, g, h) and their duality machinery.

Q(f, g, h) is the length-2n code generated as an R-module by
([f], [h f]) and (0, [g]), where R = F_q[x]/(x^n - 1) and f, g are monic
divisors of x^n - 1 of degree < n.  This module provides:

* the generator matrix and dimension (2n - deg f - deg g);
* closed-form dual generators under the symplectic, Euclidean and Hermitian
  inner products, plus an independent orthogonality oracle that checks both
  the cross products and the containment of the dual in the code;
* the sufficient self-orthogonality divisibility chains and their
  admissibility side conditions on h;
* the four-term minimum-distance lower bounds (symplectic weight and Hamming
  distance variants) and exact small-scale certification by enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .cyclic import (
    DEFAULT_BUDGET,
    DEFAULT_MC_SAMPLES,
    INF,
    CyclicCode,
    DistanceBound,
    min_distance,
    splitting_field,
)
from .errors import (
    BudgetExceededError,
    DegreeTooLargeError,
    FieldTooLargeError,
    InadmissibleHError,
    LengthMismatchError,
    MixedFieldsError,
    NotADivisorError,
    NotCoprimeError,
    NotMonicError,
    NotOfRequiredFormError,
    OddLengthError,
    PreconditionViolatedError,
    WrongFieldForHermitianError,
)
from .field import FieldElement, FieldSpec, get_embedding, make_field, multiplicative_order
from .linalg import (
    euclidean_gram,
    frob_rows,
    hermitian_gram,
    in_rowspace,
    symplectic_gram,
)
from .poly import (
    Poly,
    Residue,
    divides,
    dual_generator,
    poly_gcd,
    poly_lcm,
    q_power_map,
    reciprocal_bar,
    shift_rows,
    xn1,
)

MAX_QC_FIELD = 1 << 16


class DualForm(str, Enum):
    SYMPLECTIC = "symplectic"
    EUCLIDEAN = "euclidean"
    HERMITIAN = "hermitian"

    def __str__(self):
        return self.value


def as_form(value) -> DualForm:
    if isinstance(value, DualForm):
        return value
    return DualForm(str(value).lower())


class QCCode:
    """The QC code of length 2n generated by ([f], [h f]) and (0, [g])."""

    def __init__(self, n: int, field: FieldSpec, f: Poly, g: Poly, h: Poly):
        self.n = n
        self.field = field
        self.f = f
        self.g = g
        self.h = h
        self._gen_matrix: np.ndarray | None = None
        self._dual_matrices: dict[DualForm, np.ndarray] = {}

    @property
    def dimension(self) -> int:
        return 2 * self.n - int(self.f.degree) - int(self.g.degree)

    def generator_matrix(self) -> np.ndarray:
        """Rows (x^i f, x^i h f) for i < n - deg f and (0, x^j g) for
        j < n - deg g, vectorized a_0-first; rank equals the dimension."""
        if self._gen_matrix is None:
            n = self.n
            kf = n - int(self.f.degree)
            kg = n - int(self.g.degree)
            hf = Residue(n, self.h * self.f)
            top = np.hstack([
                shift_rows(Residue(n, self.f), kf),
                shift_rows(hf, kf),
            ])
            bot = np.hstack([
                np.zeros((kg, n), dtype=np.int64),
                shift_rows(Residue(n, self.g), kg),
            ])
            self._gen_matrix = np.vstack([top, bot])
        return self._gen_matrix

    def __repr__(self):
        return (f"QCCode(n={self.n}, {self.field}, f={self.f}, g={self.g}, "
                f"h={self.h})")


def qc_build(n: int, field: FieldSpec, f: Poly, g: Poly, h: Poly) -> QCCode:
    """Validated Q(f, g, h); h is stored reduced mod x^n - 1."""
    if field.q > MAX_QC_FIELD:
        raise FieldTooLargeError(f"{field}: QC constructions need q <= 2^16")
    if math.gcd(n, field.q) != 1:
        raise NotCoprimeError(f"gcd({n}, {field.q}) != 1: x^{n}-1 not square-free")
    for name, poly in (("f", f), ("g", g)):
        if not field.same(poly.field):
            raise MixedFieldsError(f"{name} lives in {poly.field}, not {field}")
        if poly.is_zero() or not poly.is_monic():
            raise NotMonicError(f"{name} = {poly} must be monic")
        if poly.degree >= n:
            raise DegreeTooLargeError(f"deg {name} = {poly.degree} must be < n = {n}")
        if not divides(poly, xn1(field, n)):
            raise NotADivisorError(f"{name} = {poly} does not divide x^{n}-1")
    if not field.same(h.field):
        raise MixedFieldsError(f"h lives in {h.field}, not {field}")
    if h.degree >= n:
        h = h % xn1(field, n)
    return QCCode(n, field, f, g, h)


def qc_build_reduced(n: int, field: FieldSpec, f: Poly, g: Poly, h: Poly) -> QCCode:
    """qc_build after replacing f and g by gcd(., x^n - 1).

    As ideals of R, [g] and [gcd(g, x^n-1)] generate the same cyclic code, so
    this builds the same QC code when the given generators are not themselves
    divisors (they then carry inflated degrees).
    """
    xn = xn1(field, n)
    return qc_build(n, field, poly_gcd(f, xn), poly_gcd(g, xn), h)


def generator_matrix(Q: QCCode) -> np.ndarray:
    return Q.generator_matrix()


# ---------------------------------------------------------------------------
# Inner products and weights
# ---------------------------------------------------------------------------

def _to_codes(vec, field: FieldSpec) -> np.ndarray:
    if isinstance(vec, np.ndarray):
        return vec.astype(np.int64)
    out = []
    for v in vec:
        if isinstance(v, FieldElement):
            if not field.same(v.spec):
                raise MixedFieldsError("vector entries from a different field")
            out.append(v.code)
        else:
            out.append(int(v))
    return np.array(out, dtype=np.int64)


def inner_product(u, v, form, field: FieldSpec) -> FieldElement:
    """<u, v> under the requested form; vectors are element codes."""
    form = as_form(form)
    uc = _to_codes(u, field)
    vc = _to_codes(v, field)
    if uc.shape != vc.shape:
        raise LengthMismatchError(f"{uc.shape} vs {vc.shape}")
    if form is DualForm.SYMPLECTIC:
        if uc.size % 2:
            raise OddLengthError("symplectic form needs even length")
        n = uc.size // 2
        acc = 0
        for i in range(n):
            acc = field.add(acc, field.mul(int(uc[i]), int(vc[n + i])))
            acc = field.sub(acc, field.mul(int(uc[n + i]), int(vc[i])))
        return FieldElement(field, acc)
    if form is DualForm.HERMITIAN:
        if field.r % 2:
            raise WrongFieldForHermitianError(f"{field} is not of square order")
        s = field.r // 2
        acc = 0
        for a, b in zip(uc, vc):
            acc = field.add(acc, field.mul(field.frob(int(a), s), int(b)))
        return FieldElement(field, acc)
    acc = 0
    for a, b in zip(uc, vc):
        acc = field.add(acc, field.mul(int(a), int(b)))
    return FieldElement(field, acc)


def symplectic_weight(v) -> int:
    """Number of positions i with (v_i, v_{n+i}) != (0, 0)."""
    vec = np.asarray(v)
    if vec.size % 2:
        raise OddLengthError("symplectic weight needs even length")
    n = vec.size // 2
    return int(((vec[:n] != 0) | (vec[n:] != 0)).sum())


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------

def _hermitian_sub_power(field: FieldSpec) -> int:
    if field.r % 2:
        raise WrongFieldForHermitianError(
            f"{field} has odd degree; Hermitian duality needs GF(q^2)"
        )
    return field.p ** (field.r // 2)


def dual_generators(Q: QCCode, form) -> tuple[tuple[Residue, Residue],
                                              tuple[Residue, Residue]]:
    """The two generator pairs of the dual of Q under the form.

    symplectic: ([g^perp], [hbar g^perp])      and (0, [f^perp])
    euclidean:  ([-hbar g^perp], [g^perp])     and ([f^perp], 0)
    hermitian:  the Euclidean pattern with f, g, h conjugated coefficientwise
    """
    form = as_form(form)
    n, F = Q.n, Q.field
    if form is DualForm.HERMITIAN:
        q0 = _hermitian_sub_power(F)
        f = q_power_map(Q.f, q0)
        g = q_power_map(Q.g, q0)
        h = q_power_map(Q.h, q0)
    else:
        f, g, h = Q.f, Q.g, Q.h
    fperp = Residue(n, dual_generator(f, n))
    gperp = Residue(n, dual_generator(g, n))
    hbar_gperp = reciprocal_bar(h, n) * gperp
    zero = Residue(n, Poly.zero(F))
    if form is DualForm.SYMPLECTIC:
        return (gperp, hbar_gperp), (zero, fperp)
    neg = Residue(n, -hbar_gperp.poly)
    return (neg, gperp), (fperp, zero)


def dual_matrix(Q: QCCode, form) -> np.ndarray:
    """Basis rows of the dual code: deg g shifts of the first pair and
    deg f shifts of the second, (deg f + deg g) x 2n in total."""
    form = as_form(form)
    cached = Q._dual_matrices.get(form)
    if cached is not None:
        return cached
    (a1, b1), (a2, b2) = dual_generators(Q, form)
    k1 = int(Q.g.degree)
    k2 = int(Q.f.degree)
    top = np.hstack([shift_rows(a1, k1), shift_rows(b1, k1)])
    bot = np.hstack([shift_rows(a2, k2), shift_rows(b2, k2)])
    out = np.vstack([top, bot])
    Q._dual_matrices[form] = out
    return out


@dataclass(frozen=True)
class OrthCondition:
    """Outcome of the sufficient divisibility test (never claims necessity)."""

    holds: bool
    branch: str


def check_self_orth_condition(Q: QCCode, form) -> OrthCondition:
    """Evaluate the sufficient divisibility chain(s) for Q^perp <= Q.

    symplectic branch i : f | g^perp, g | f^perp and g | (hbar - h) g^perp
    symplectic branch ii: f | g | g^perp | f^perp
    euclidean           : f | g | g^perp | f^perp
    hermitian           : f | g | (g^[q])^perp | (f^[q])^perp

    Branch i's third test is the exact membership condition that puts
    ([g^perp], [hbar g^perp]) inside Q; testing h | hbar instead admits
    instances whose dual genuinely escapes the code (e.g. f = 1,
    g = x^2+x+1, h = x+1 at n = 9 over GF(2)).  Branch ii implies the
    membership trivially via g | g^perp.  Every branch is sufficient, never
    claimed necessary.
    """
    form = as_form(form)
    n, F = Q.n, Q.field
    f, g, h = Q.f, Q.g, Q.h
    if form is DualForm.SYMPLECTIC:
        fperp = dual_generator(f, n)
        gperp = dual_generator(g, n)
        hbar_rep = reciprocal_bar(h, n).poly
        cross_rem = ((hbar_rep - h) * gperp) % xn1(F, n)
        branch_i = (divides(f, gperp) and divides(g, fperp)
                    and divides(g, cross_rem))
        branch_ii = (divides(f, g) and divides(g, gperp)
                     and divides(gperp, fperp))
        if branch_i and branch_ii:
            return OrthCondition(True, "i+ii")
        if branch_i:
            return OrthCondition(True, "i")
        if branch_ii:
            return OrthCondition(True, "ii")
        return OrthCondition(False, "none")
    if form is DualForm.HERMITIAN:
        q0 = _hermitian_sub_power(F)
        fd = dual_generator(q_power_map(f, q0), n)
        gd = dual_generator(q_power_map(g, q0), n)
    else:
        fd = dual_generator(f, n)
        gd = dual_generator(g, n)
    ok = divides(f, g) and divides(g, gd) and divides(gd, fd)
    return OrthCondition(ok, "chain" if ok else "none")


def verify_orthogonality(Q: QCCode, form) -> bool:
    """Oracle for Q^perp <= Q: all cross inner products of the dual basis with
    Q's basis vanish AND the dual basis lies in Q's row space."""
    form = as_form(form)
    G = Q.generator_matrix()
    D = dual_matrix(Q, form)
    F = Q.field
    if D.shape[0]:
        if form is DualForm.SYMPLECTIC:
            cross = symplectic_gram(D, G, F)
        elif form is DualForm.EUCLIDEAN:
            cross = euclidean_gram(D, G, F)
        else:
            cross = hermitian_gram(D, G, F)
        if cross.any():
            return False
    return in_rowspace(D, G, F)


# ---------------------------------------------------------------------------
# Admissibility of h
# ---------------------------------------------------------------------------

_GCD_ROUTE_LIMIT = 2048


def _mul_matrix(ext: FieldSpec, gamma: int) -> np.ndarray:
    """Matrix over GF(p) of y -> gamma * y in the polynomial basis."""
    cols = [ext.decode(ext.mul(gamma, ext.p**j)) for j in range(ext.r)]
    return np.array(cols, dtype=np.int64).T


def _roots_of_unity_table(ext: FieldSpec, beta: int, n: int) -> np.ndarray:
    """Digit rows of beta^j for 0 <= j < n, built by doubling."""
    R = ext.r
    tab = np.zeros((n, R), dtype=np.int64)
    tab[0] = ext.decode(1)
    block = 1
    while block < n:
        take = min(block, n - block)
        M = _mul_matrix(ext, ext.pow(beta, block))
        tab[block:block + take] = (tab[:take] @ M.T) % ext.p
        block *= 2
    return tab


def _h_admissible_rootscan(h: Poly, n: int, field: FieldSpec) -> bool:
    ext, m, beta = splitting_field(field, n)
    p, R = ext.p, ext.r
    emb = None if m == 1 else get_embedding(field, ext)
    tab = _roots_of_unity_table(ext, beta, n)
    vals = np.zeros((n, R), dtype=np.int64)
    idx_base = np.arange(n, dtype=np.int64)
    for e, c in enumerate(h.coeffs):
        if c == 0:
            continue
        c_ext = c if emb is None else emb.embed_code(c)
        rows = tab[(idx_base * (e % n)) % n]
        vals = (vals + rows @ _mul_matrix(ext, c_ext).T) % p
    # h(lambda) must avoid GF(q) \ {0}: fixed points of Frobenius^r
    frob_cols = [ext.decode(ext.frob(p**j, field.r)) for j in range(R)]
    Fr = np.array(frob_cols, dtype=np.int64).T - np.eye(R, dtype=np.int64)
    in_sub = ((vals @ Fr.T) % p == 0).all(axis=1)
    nonzero = vals.any(axis=1)
    return not bool((in_sub & nonzero).any())


def h_admissible(h: Poly, n: int, field: FieldSpec | None = None) -> bool:
    """True iff gcd(h - beta, x^n - 1) = 1 for every nonzero beta in GF(q)."""
    field = field or h.field
    if not field.same(h.field):
        raise MixedFieldsError(f"h lives in {h.field}, not {field}")
    if math.gcd(n, field.q) != 1:
        raise NotCoprimeError(f"gcd({n}, {field.q}) != 1")
    if h.degree >= n:
        h = h % xn1(field, n)
    q = field.q

    def gcd_route():
        xn = xn1(field, n)
        for beta in range(1, q):
            shifted = h - Poly.from_codes(field, (beta,))
            if shifted.is_zero():
                return False
            if poly_gcd(shifted, xn).degree > 0:
                return False
        return True

    gcd_cost = (q - 1) * n * n
    if n <= _GCD_ROUTE_LIMIT and gcd_cost <= 1 << 27:
        return gcd_route()
    # the root scan needs the splitting field in memory (capped at 2^26
    # elements); beyond that fall back to the slow-but-exact gcd loop
    m = multiplicative_order(field.q, n)
    if field.p ** (field.r * m) <= 1 << 26:
        return _h_admissible_rootscan(h, n, field)
    if gcd_cost <= 1 << 34:
        return gcd_route()
    raise FieldTooLargeError(
        f"h_admissible at n={n}, q={q}: both the splitting-field scan and "
        f"the gcd loop are out of reach"
    )


def h_shortcut_tests(n: int, field: FieldSpec, which: str) -> bool:
    """Closed-form admissibility predictors.

    linear:        h = x + 1 is admissible iff the characteristic is 2 and
                   gcd(q - 1, n) = 1.  (In odd characteristic beta = 2 makes
                   h - beta = x - 1, which divides every x^n - 1, so x + 1 is
                   never admissible there.)
    artin-schreier: over a prime field with n = p^m - 1, h = x^p - x is
                    admissible when p does not divide m
    """
    if which == "linear":
        return field.p == 2 and math.gcd(field.q - 1, n) == 1
    if which == "artin-schreier":
        if field.r != 1:
            raise NotOfRequiredFormError("artin-schreier shortcut needs a prime field")
        p = field.p
        m = 0
        v = n + 1
        while v % p == 0:
            v //= p
            m += 1
        if v != 1 or m == 0:
            raise NotOfRequiredFormError(f"n = {n} is not of the form {p}^m - 1")
        return m % p != 0
    raise ValueError(f"unknown shortcut {which!r}")


def trace_h(p: int, r: int, m: int, s: int, n: int) -> Poly:
    """(p - s) tr_{mr/s}(x) + tr_{mr/1}(x), reduced mod x^n - 1.

    tr_{ji/i}(x) = x + x^(p^i) + ... + x^(p^((j-1)i)).  Requires 2 <= s < p,
    s | m, gcd(s, r) = 1 (s = 1 collapses to the zero polynomial and is
    rejected), and the splitting field of x^n - 1 over GF(p^r) must embed in
    GF(p^(m r)).
    """
    if s < 1 or s >= p:
        raise PreconditionViolatedError(f"need 1 <= s < p, got s={s}, p={p}")
    if s == 1:
        raise PreconditionViolatedError(
            "s = 1 degenerates: (p-1+1) tr = 0; choose s >= 2"
        )
    if m % s:
        raise PreconditionViolatedError(f"s={s} must divide m={m}")
    if math.gcd(s, r) != 1:
        raise PreconditionViolatedError(f"s={s} must be coprime with r={r}")
    field = make_field(p, r)
    ordn = multiplicative_order(field.q, n)
    if m % ordn:
        raise PreconditionViolatedError(
            f"splitting field of x^{n}-1 over {field} is GF({p}^{ordn * r}), "
            f"which does not embed in GF({p}^{m * r})"
        )
    coeffs: dict[int, int] = {}

    def accumulate(exponent: int, c: int):
        e = exponent % n
        coeffs[e] = (coeffs.get(e, 0) + c) % p

    mr = m * r
    for t in range(mr // s):
        accumulate(pow(p, s * t, n) if n > 1 else 0, p - s)
    for t in range(mr):
        accumulate(pow(p, t, n) if n > 1 else 0, 1)
    out = [0] * n
    for e, c in coeffs.items():
        out[e] = c
    return Poly.from_codes(field, out)


# ---------------------------------------------------------------------------
# Distance lower bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistanceTerm:
    label: str
    generator: str | None
    bound: DistanceBound

    def as_dict(self) -> dict:
        out = {"label": self.label, **self.bound.as_dict()}
        if self.generator is not None:
            out["generator"] = self.generator
        return out


def _term_distance(n, field, gen: Poly, budget, mc_samples, seed, workers) -> DistanceBound:
    if gen.degree == n:
        return DistanceBound(INF, INF, "zero-code")
    code = CyclicCode(n, field, gen.monic())
    return min_distance(code, "auto", budget=budget, mc_samples=mc_samples,
                        seed=seed, workers=workers)


def _bound_terms(Q: QCCode, symplectic: bool, budget, mc_samples, seed, workers):
    n, F = Q.n, Q.field
    f, g, h = Q.f, Q.g, Q.h
    q = F.q
    xn = xn1(F, n)
    memo: dict[tuple, DistanceBound] = {}

    def dist(gen: Poly) -> DistanceBound:
        key = gen.coeffs
        if key not in memo:
            memo[key] = _term_distance(n, F, gen, budget, mc_samples, seed,
                                       workers)
        return memo[key]

    terms: list[DistanceTerm] = []
    terms.append(DistanceTerm("d([g])", str(g), dist(g)))

    gcd_xh = poly_gcd(xn, h) if not h.is_zero() else xn.monic()
    t2_gen = (xn // gcd_xh).monic()
    if h.is_zero():
        # gcd(x^n-1, h) = x^n-1: the a h f = 0 case is already covered by the
        # third term (which degrades to d([f])), so this term drops out.
        terms.append(DistanceTerm("d([(x^n-1)/gcd(x^n-1,h)])", str(xn),
                                  DistanceBound(INF, INF, "zero-code")))
    else:
        terms.append(DistanceTerm("d([(x^n-1)/gcd(x^n-1,h)])", str(t2_gen),
                                  dist(t2_gen)))

    g_over = (g // poly_gcd(g, h)).monic() if not h.is_zero() else Poly.one(F)
    t3_gen = poly_lcm(f, g_over).monic()
    terms.append(DistanceTerm("d([lcm(f, g/gcd(g,h))])", str(t3_gen), dist(t3_gen)))

    # fourth term components; gcd(h f, g) uses the unreduced product h*f
    d_f = dist(f)
    hf_gcd = poly_gcd(h * f, g)
    d_hfg = dist(hf_gcd)
    comp = [DistanceTerm("d([f])", str(f), d_f),
            DistanceTerm("d([gcd(hf,g)])", str(hf_gcd), d_hfg)]
    if symplectic:
        d_fg = dist(poly_gcd(f, g))
        comp.append(DistanceTerm("d([gcd(f,g)])", str(poly_gcd(f, g)), d_fg))
        if any(t.bound.lower == INF for t in comp):
            t4_lower = INF
        else:
            num = int(d_f.lower) + int(d_hfg.lower) + (q - 1) * int(d_fg.lower)
            t4_lower = -(-num // q)  # exact ceiling of the rational bound
        label = "(d([f])+d([gcd(hf,g)])+(q-1)d([gcd(f,g)]))/q"
    else:
        if d_f.lower == INF or d_hfg.lower == INF:
            t4_lower = INF
        else:
            t4_lower = int(d_f.lower) + int(d_hfg.lower)
        label = "d([f])+d([gcd(hf,g)])"
    method = ",".join(t.bound.method for t in comp)
    terms.append(DistanceTerm(label, None,
                              DistanceBound(t4_lower, INF, f"sum({method})")))
    return terms, comp


def _combine_terms(terms) -> DistanceBound:
    lower = min(t.bound.lower for t in terms)
    method = "terms:" + ",".join(t.bound.method for t in terms)
    return DistanceBound(lower, INF, method)


def d_q_bound(Q: QCCode, budget: int = DEFAULT_BUDGET,
              mc_samples: int = DEFAULT_MC_SAMPLES, seed: int = 0,
              workers: int = 1, _with_terms: bool = False):
    """Four-term lower bound on the symplectic weight of Q (h admissible)."""
    if not h_admissible(Q.h, Q.n, Q.field):
        raise InadmissibleHError(f"h = {Q.h} is not admissible at n = {Q.n}")
    terms, _ = _bound_terms(Q, True, budget, mc_samples, seed, workers)
    bound = _combine_terms(terms)
    return (bound, terms) if _with_terms else bound


def d_qe_bound(Q: QCCode, budget: int = DEFAULT_BUDGET,
               mc_samples: int = DEFAULT_MC_SAMPLES, seed: int = 0,
               workers: int = 1, _with_terms: bool = False):
    """Four-term lower bound on the Hamming distance of Q (h admissible)."""
    if not h_admissible(Q.h, Q.n, Q.field):
        raise InadmissibleHError(f"h = {Q.h} is not admissible at n = {Q.n}")
    terms, _ = _bound_terms(Q, False, budget, mc_samples, seed, workers)
    bound = _combine_terms(terms)
    return (bound, terms) if _with_terms else bound


# ---------------------------------------------------------------------------
# Exact QC distances at enumerable scale
# ---------------------------------------------------------------------------

def _syndrome_matrix(Q: QCCode, form: DualForm) -> np.ndarray:
    """B with (m.B == 0 <=> codeword of message m lies in Q^perp_form)."""
    G = Q.generator_matrix()
    F = Q.field
    if form is DualForm.SYMPLECTIC:
        return symplectic_gram(G, G, F)
    if form is DualForm.EUCLIDEAN:
        return euclidean_gram(G, G, F)
    H = hermitian_gram(G, G, F)
    return frob_rows(H, F, F.r // 2)


def exact_qc_distance(Q: QCCode, form, budget: int = DEFAULT_BUDGET,
                      relative: bool | None = None,
                      workers: int = 1) -> DistanceBound:
    """Exact minimum weight by full message enumeration.

    symplectic: min symplectic weight over Q \\ Q^perp_s by default, or over
    Q \\ {0} with relative=False; euclidean/hermitian: min Hamming weight over
    Q \\ {0} by default, or over Q \\ Q^perp with relative=True.  Needs
    q^dim <= budget.
    """
    form = as_form(form)
    if relative is None:
        relative = form is DualForm.SYMPLECTIC
    F = Q.field
    dim = Q.dimension
    if F.q**dim > min(int(budget), 1 << 60):
        raise BudgetExceededError(
            f"{F.q}^{dim} codewords exceed budget {budget}"
        )
    G = Q.generator_matrix()
    synd = _syndrome_matrix(Q, form) if relative else None
    best, _count = kernels.min_weight_scan(
        G, synd, F.kernel_tables(), 0, F.q**dim,
        symplectic=form is DualForm.SYMPLECTIC, workers=workers,
    )
    if best is None:
        return DistanceBound(INF, INF, "exact-enumeration")
    return DistanceBound(best, best, "exact-enumeration")


def css_min_weight(outer: QCCode, inner: QCCode, budget: int = DEFAULT_BUDGET,
                   workers: int = 1):
    """Min Hamming weight over outer \\ inner (Euclidean containment assumed).

    Returns (weight or None, count of codewords considered).
    """
    F = outer.field
    dim = outer.dimension
    if F.q**dim > min(int(budget), 1 << 60):
        raise BudgetExceededError(f"{F.q}^{dim} codewords exceed budget {budget}")
    G = outer.generator_matrix()
    D_inner = dual_matrix(inner, DualForm.EUCLIDEAN)
    synd = euclidean_gram(G, D_inner, F)
    return kernels.min_weight_scan(G, synd, F.kernel_tables(), 0, F.q**dim,
                                   workers=workers)
