"""Cyclic codes: cyclotomic cosets, coset generator polynomials and a
multi-strategy minimum-distance engine.

Distance strategies
-------------------
exact          enumerate all q^dim codewords (message-space scan)
dual-exact     enumerate the q^codim dual codewords, transport the weight
               distribution through the MacWilliams identity; still exact
bch            lower bound from the longest run of consecutive root exponents
monte-carlo    upper bound from random codewords
auto           exact if it fits the budget, else dual-exact, else bch+mc

Every DistanceBound records which method produced it, so bound-only values
are never mistaken for exact distances downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    BudgetExceededError,
    IncompleteCosetError,
    MixedFieldsError,
    NotADivisorError,
    NotCoprimeError,
    NotInSubfieldError,
    NotMonicError,
)
from .field import FieldSpec, make_field, multiplicative_order, get_embedding
from .poly import (
    Poly,
    Residue,
    divides,
    dual_generator,
    poly_gcd,
    shift_rows,
    xn1,
)

INF = float("inf")
DEFAULT_BUDGET = 1 << 24
DEFAULT_MC_SAMPLES = 100_000


def cyclotomic_cosets(n: int, q: int) -> list[list[int]]:
    """Partition of {0..n-1} into orbits under multiplication by q mod n.

    Cosets are sorted ascending and listed by least element.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if math.gcd(n, q) != 1:
        raise NotCoprimeError(f"gcd({n}, {q}) != 1")
    seen = [False] * n
    out = []
    for e in range(n):
        if seen[e]:
            continue
        orbit = []
        cur = e
        while not seen[cur]:
            seen[cur] = True
            orbit.append(cur)
            cur = (cur * q) % n
        out.append(sorted(orbit))
    return out


_SPLIT_CACHE: dict[tuple[int, int, int], tuple[FieldSpec, int, int]] = {}


def splitting_field(field: FieldSpec, n: int):
    """(extension field, m, beta): GF(q^m) splits x^n-1; beta has order n."""
    key = (field.p, field.r, n)
    hit = _SPLIT_CACHE.get(key)
    if hit is None:
        m = multiplicative_order(field.q, n)
        ext = make_field(field.p, field.r * m)
        w = ext.primitive_element().code
        beta = ext.pow(w, (ext.q - 1) // n)
        hit = (ext, m, beta)
        _SPLIT_CACHE[key] = hit
    return hit


def coset_generator_poly(n: int, base: FieldSpec, cosets) -> Poly:
    """prod over the selected exponents e of (x - beta^e), projected to base.

    Each entry of cosets must be a full q-coset mod n; the product then has
    coefficients in GF(q) and divides x^n - 1.
    """
    exponents: list[int] = []
    seen: set[int] = set()
    for coset in cosets:
        cs = sorted(int(e) % n for e in coset)
        if set(cs) != {(e * base.q) % n for e in cs}:
            raise IncompleteCosetError(f"{cs} is not closed under *{base.q} mod {n}")
        if seen.intersection(cs):
            raise IncompleteCosetError(f"coset {cs} overlaps an earlier selection")
        seen.update(cs)
        exponents.extend(cs)
    ext, m, beta = splitting_field(base, n)
    coeffs = [1]
    for e in exponents:
        root = ext.pow(beta, e)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = ext.add(nxt[i + 1], c)
            nxt[i] = ext.sub(nxt[i], ext.mul(root, c))
        coeffs = nxt
    if m == 1:
        return Poly.from_codes(base, coeffs)
    emb = get_embedding(base, ext)
    try:
        down = [emb.project_code(c) for c in coeffs]
    except NotInSubfieldError as exc:
        raise IncompleteCosetError(
            "coefficients do not project into the base field"
        ) from exc
    return Poly.from_codes(base, down)


def _poly_powmod(a: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(a.field)
    base = a % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _split_equal_degree(block: Poly, d: int, rng) -> list[Poly]:
    """Cantor-Zassenhaus split of a squarefree product of degree-d factors."""
    field = block.field
    if block.degree == d:
        return [block.monic()]
    if d == 1:
        # deterministic root scan
        roots = [c for c in range(field.q) if block.eval(c).code == 0]
        return [Poly.from_codes(field, (field.neg(c), 1)) for c in sorted(roots)]
    out = []
    stack = [block.monic()]
    while stack:
        f = stack.pop()
        if f.degree == d:
            out.append(f)
            continue
        while True:
            a = Poly.from_codes(
                field, [rng.randrange(field.q) for _ in range(int(f.degree))]
            )
            if a.degree < 1:
                continue
            if field.p == 2:
                # absolute trace map splits in characteristic 2
                t = a
                acc = a
                for _ in range(d * field.r - 1):
                    t = (t * t) % f
                    acc = (acc + t) % f
                g = poly_gcd(acc, f) if not acc.is_zero() else f
            else:
                e = (field.q**d - 1) // 2
                g = _poly_powmod(a, e, f) - Poly.one(field)
                g = poly_gcd(g, f) if not g.is_zero() else f
            if 0 < g.degree < f.degree:
                stack.append(g)
                stack.append((f // g).monic())
                break
    return out


def xn1_factors(field: FieldSpec, n: int) -> list[Poly]:
    """The monic irreducible factors of x^n - 1 over GF(q), sorted by
    (degree, coefficient tuple).

    Uses the splitting field (one factor per cyclotomic coset) when it fits
    the 2^32 element budget; otherwise falls back to distinct-degree
    separation (cheap modulo x^n - 1) plus seeded equal-degree splitting.
    """
    cosets = cyclotomic_cosets(n, field.q)
    m = multiplicative_order(field.q, n)
    if field.p ** (field.r * m) <= (1 << 32):
        factors = [coset_generator_poly(n, field, [c]) for c in cosets]
        return sorted(factors, key=lambda f: (f.degree, f.coeffs))
    import random as _random

    sizes = sorted({len(c) for c in cosets})
    counts = {d: sum(1 for c in cosets if len(c) == d) for d in sizes}
    rng = _random.Random(0x5EED ^ n ^ field.q)
    remaining = xn1(field, n)
    out: list[Poly] = []
    for d in sizes:
        # product of factors of degree dividing d: gcd with x^(q^d) - x,
        # and x^(q^d) = x^(q^d mod n) modulo x^n - 1
        e = pow(field.q, d, n)
        probe = Poly.monomial(field, e) - Poly.x(field)
        block = poly_gcd(remaining, probe) if not probe.is_zero() else remaining
        block = block.monic()
        if block.degree <= 0:
            continue
        pieces = _split_equal_degree(block, d, rng)
        assert len(pieces) == counts[d]
        out.extend(pieces)
        remaining = (remaining // block).monic()
    assert remaining.degree == 0
    return sorted(out, key=lambda f: (f.degree, f.coeffs))


@dataclass(frozen=True)
class DistanceBound:
    """Certified [lower, upper] range for a minimum distance/weight."""

    lower: float
    upper: float
    method: str

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower {self.lower} > upper {self.upper}")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def as_dict(self) -> dict:
        def enc(v):
            return None if v == INF else int(v)

        return {"lower": enc(self.lower), "upper": enc(self.upper),
                "method": self.method}


class CyclicCode:
    """The ideal of F_q[x]/(x^n-1) generated by a monic divisor of x^n-1."""

    def __init__(self, n: int, field: FieldSpec, gen: Poly):
        if not field.same(gen.field):
            raise MixedFieldsError(f"generator over {gen.field}, code over {field}")
        if gen.is_zero() or not gen.is_monic():
            raise NotMonicError(f"generator must be monic, got {gen}")
        if not divides(gen, xn1(field, n)):
            raise NotADivisorError(f"{gen} does not divide x^{n}-1")
        self.n = n
        self.field = field
        self.gen = gen

    @property
    def dimension(self) -> int:
        return self.n - int(self.gen.degree)

    def generator_rows(self) -> np.ndarray:
        """Shift rows x^i * gen for i < dim, vectorized a_0-first."""
        return shift_rows(Residue(self.n, self.gen), self.dimension)

    def dual(self) -> "CyclicCode":
        return CyclicCode(self.n, self.field, dual_generator(self.gen, self.n))

    def __repr__(self):
        return f"CyclicCode(n={self.n}, {self.field}, gen={self.gen})"


def cyclic_dim(code: CyclicCode) -> int:
    return code.dimension


def root_exponents(code: CyclicCode) -> list[int]:
    """Exponents e with gen(beta^e) = 0, for the canonical n-th root beta."""
    ext, m, beta = splitting_field(code.field, code.n)
    if m == 1:
        lifted = list(code.gen.coeffs)
    else:
        emb = get_embedding(code.field, ext)
        lifted = [emb.embed_code(c) for c in code.gen.coeffs]
    out = []
    for e in range(code.n):
        pt = ext.pow(beta, e)
        acc = 0
        for c in reversed(lifted):
            acc = ext.add(ext.mul(acc, pt), c)
        if acc == 0:
            out.append(e)
    return out


def bch_lower_bound(code: CyclicCode) -> int:
    """delta with delta-1 = longest circular run of consecutive root exponents."""
    exps = root_exponents(code)
    if not exps:
        return 1
    n = code.n
    present = [False] * n
    for e in exps:
        present[e] = True
    best = run = 0
    for i in range(2 * n):
        if present[i % n]:
            run += 1
            best = max(best, min(run, n))
        else:
            run = 0
    return best + 1


def _mc_upper(rows: np.ndarray, field: FieldSpec, samples: int, seed: int,
              symplectic: bool = False):
    """Min weight over random nonzero messages; None if nothing sampled.

    Sampling always uses numpy's seeded Generator, so the result does not
    depend on the active kernel backend.
    """
    if samples <= 0 or rows.shape[0] == 0:
        return None
    tab = field.kernel_tables()
    rng = np.random.default_rng(seed)
    k = rows.shape[0]
    best = None
    remaining = samples
    while remaining > 0:
        b = min(16384, remaining)
        remaining -= b
        digits = rng.integers(0, field.q, size=(b, k), dtype=np.int64)
        digits = digits[digits.any(axis=1)]
        if digits.shape[0] == 0:
            continue
        w = kernels.batch_weights(rows, digits, tab, symplectic=symplectic)
        wmin = int(w.min())
        best = wmin if best is None else min(best, wmin)
    return best


def _macwilliams_min_distance(hist, n: int, q: int, dual_size: int) -> int:
    """Least positive weight of C from the weight distribution of its dual.

    Uses the Krawtchouk three-term recurrence and exact integer arithmetic;
    stops at the first positive coefficient.
    """
    B = [int(x) for x in hist]
    assert len(B) == n + 1 and sum(B) == dual_size
    k_prev = [1] * (n + 1)
    k_cur = [(q - 1) * (n - i) - i for i in range(n + 1)]
    for j in range(1, n + 1):
        acc = sum(b * kc for b, kc in zip(B, k_cur) if b)
        a_j, rem = divmod(acc, dual_size)
        assert rem == 0 and a_j >= 0, "MacWilliams transform must be integral"
        if a_j > 0:
            return j
        k_next = []
        for i in range(n + 1):
            num = (j + (q - 1) * (n - j) - q * i) * k_cur[i] \
                - (q - 1) * (n - j + 1) * k_prev[i]
            quot, rem = divmod(num, j + 1)
            assert rem == 0
            k_next.append(quot)
        k_prev, k_cur = k_cur, k_next
    raise AssertionError("nonzero code with no nonzero weight")  # pragma: no cover


def min_distance(code: CyclicCode, strategy: str = "auto",
                 budget: int = DEFAULT_BUDGET, mc_samples: int = DEFAULT_MC_SAMPLES,
                 seed: int = 0, workers: int = 1) -> DistanceBound:
    """Minimum Hamming distance of the cyclic code, as a certified bound."""
    n, field, gen = code.n, code.field, code.gen
    q = field.q
    if gen.degree == n:
        return DistanceBound(INF, INF, "zero-code")
    if gen.degree == 0:
        return DistanceBound(1, 1, "exact-enumeration")
    dim = code.dimension
    codim = n - dim
    budget = min(int(budget), 1 << 60)

    def run_exact() -> DistanceBound:
        rows = code.generator_rows()
        best, _ = kernels.min_weight_scan(
            rows, None, field.kernel_tables(), 0, q**dim, workers=workers
        )
        return DistanceBound(best, best, "exact-enumeration")

    def run_dual() -> DistanceBound:
        dual = code.dual()
        rows = dual.generator_rows()
        hist = kernels.weight_hist_scan(
            rows, field.kernel_tables(), 0, q**codim, workers=workers
        )
        d = _macwilliams_min_distance(hist, n, q, q**codim)
        return DistanceBound(d, d, "dual-enumeration")

    if strategy == "exact":
        if q**dim > budget:
            raise BudgetExceededError(f"{q}^{dim} codewords exceed budget {budget}")
        return run_exact()
    if strategy == "dual-exact":
        if q**codim > budget:
            raise BudgetExceededError(f"{q}^{codim} codewords exceed budget {budget}")
        return run_dual()
    if strategy == "bch":
        return DistanceBound(bch_lower_bound(code), INF, "bch")
    if strategy == "monte-carlo":
        upper = _mc_upper(code.generator_rows(), field, mc_samples, seed)
        return DistanceBound(1, INF if upper is None else upper, "monte-carlo")
    if strategy != "auto":
        raise ValueError(f"unknown strategy {strategy!r}")

    if q**dim <= budget:
        return run_exact()
    if q**codim <= budget:
        return run_dual()
    try:
        lower = bch_lower_bound(code)
    except NotCoprimeError:
        lower = 1
    upper = _mc_upper(code.generator_rows(), field, mc_samples, seed)
    return DistanceBound(lower, INF if upper is None else upper,
                         "bch+monte-carlo")
