"""Q(f,g,h) construction, duality, admissibility and distance bounds."""

import itertools

import numpy as np
import pytest

from qcstab import (
    Poly,
    check_self_orth_condition,
    coset_generator_poly,
    css_min_weight,
    cyclotomic_cosets,
    d_q_bound,
    d_qe_bound,
    dual_generators,
    dual_matrix,
    exact_qc_distance,
    h_admissible,
    h_shortcut_tests,
    inner_product,
    make_field,
    qc_build,
    symplectic_weight,
    trace_h,
    verify_orthogonality,
    xn1,
)
from qcstab.errors import (
    BudgetExceededError,
    DegreeTooLargeError,
    FieldTooLargeError,
    InadmissibleHError,
    LengthMismatchError,
    NotADivisorError,
    NotCoprimeError,
    NotMonicError,
    NotOfRequiredFormError,
    OddLengthError,
    PreconditionViolatedError,
)
from qcstab.linalg import in_rowspace, rank
from qcstab.qc import _h_admissible_rootscan

INF = float("inf")


@pytest.fixture
def steane(gf2):
    f = Poly.parse(gf2, "x^3+x+1")
    return qc_build(7, gf2, f, f, Poly.parse(gf2, "x+1"))


def bit_rank(mat):
    rows = [int("".join(str(int(b)) for b in r), 2) for r in np.asarray(mat)]
    out = 0
    for bit in range(np.asarray(mat).shape[1] - 1, -1, -1):
        piv = None
        for i, rv in enumerate(rows):
            if rv >> bit & 1:
                piv = i
                break
        if piv is None:
            continue
        pr = rows.pop(piv)
        rows = [rv ^ pr if rv >> bit & 1 else rv for rv in rows]
        out += 1
    return out


def test_qc_build_validations(gf2, gf4):
    f = Poly.parse(gf2, "x^3+x+1")
    h = Poly.parse(gf2, "x+1")
    with pytest.raises(DegreeTooLargeError):
        qc_build(7, gf2, xn1(gf2, 7), f, h)
    with pytest.raises(NotADivisorError):
        qc_build(7, gf2, Poly.parse(gf2, "x^2+1"), f, h)
    with pytest.raises(NotMonicError):
        qc_build(7, gf2, Poly.zero(gf2), f, h)
    with pytest.raises(NotCoprimeError):
        qc_build(146, gf2, Poly.one(gf2), Poly.one(gf2), h)
    with pytest.raises(FieldTooLargeError):
        big = make_field(2, 17)
        qc_build(3, big, Poly.one(big), Poly.one(big), Poly.zero(big))
    # h is stored reduced mod x^n - 1
    Q = qc_build(7, gf2, f, f, Poly.monomial(gf2, 9))
    assert Q.h == Poly.monomial(gf2, 2)


def test_generator_matrix_fixture(steane, gf2):
    G = steane.generator_matrix()
    assert G.shape == (8, 14)
    assert steane.dimension == 8
    assert bit_rank(G) == 8  # independent GF(2) oracle
    # sigma_2 row closure: blockwise rotation keeps rows in the row space
    rotated = np.hstack([np.roll(G[:, :7], 1, axis=1),
                         np.roll(G[:, 7:], 1, axis=1)])
    assert in_rowspace(rotated, G, gf2)


def test_generator_matrix_full_space(gf2):
    Q = qc_build(5, gf2, Poly.one(gf2), Poly.one(gf2), Poly.zero(gf2))
    G = Q.generator_matrix()
    assert G.shape == (10, 10) and rank(G, gf2) == 10


def test_dimension_law_random(rng):
    for p, r, n in [(2, 1, 15), (3, 1, 13), (2, 2, 15)]:
        field = make_field(p, r)
        cosets = cyclotomic_cosets(n, field.q)
        for _ in range(8):
            fsel = [c for c in cosets if rng.random() < 0.4]
            gsel = [c for c in cosets if rng.random() < 0.4]
            f = coset_generator_poly(n, field, fsel) if fsel else Poly.one(field)
            g = coset_generator_poly(n, field, gsel) if gsel else Poly.one(field)
            if f.degree == n or g.degree == n:
                continue
            h = Poly.from_codes(field, [rng.randrange(field.q)
                                        for _ in range(rng.randrange(1, n))])
            Q = qc_build(n, field, f, g, h)
            G = Q.generator_matrix()
            assert rank(G, field) == Q.dimension == 2 * n - int(f.degree) - int(g.degree)


def test_inner_product_forms(gf2, gf9, rng):
    u = np.array([1, 0, 0, 0, 0, 0, 0, 0])
    v = np.array([0, 0, 0, 0, 1, 0, 0, 0])
    assert inner_product(u, v, "symplectic", gf2).code == 1
    assert inner_product(v, u, "symplectic", gf2).code == 1  # -1 = 1 in GF(2)
    for _ in range(50):
        w = np.array([rng.randrange(3) for _ in range(10)])
        gf3 = make_field(3, 1)
        assert inner_product(w, w, "symplectic", gf3).code == 0  # alternating
    z = gf9.primitive_element()
    assert inner_product([z.code], [z.code], "hermitian", gf9) == z**4
    with pytest.raises(LengthMismatchError):
        inner_product([1, 0], [1], "euclidean", gf2)
    with pytest.raises(OddLengthError):
        inner_product([1, 0, 1], [1, 0, 1], "symplectic", gf2)


def test_symplectic_weight_and_identity(rng):
    assert symplectic_weight([0] * 10) == 0
    assert symplectic_weight([0, 1, 0, 0, 1, 0]) == 1
    with pytest.raises(OddLengthError):
        symplectic_weight([1, 0, 1])
    # q w_s(u,v) = w_H(u) + w_H(v) + sum_{a != 0} w_H(a u + v) over GF(3), n=5
    gf3 = make_field(3, 1)
    for _ in range(300):
        u = [rng.randrange(3) for _ in range(5)]
        v = [rng.randrange(3) for _ in range(5)]
        ws = symplectic_weight(np.array(u + v))
        rhs = sum(1 for x in u if x) + sum(1 for x in v if x)
        for a in (1, 2):
            rhs += sum(1 for x, y in zip(u, v) if (a * x + y) % 3)
        assert 3 * ws == rhs


def test_dual_generators_steane(steane, gf2):
    (a1, b1), (a2, b2) = dual_generators(steane, "symplectic")
    assert str(a1.poly) == "x^4+x^3+x^2+1"
    assert str(b1.poly) == "x^6+x^4+x+1"
    assert a2.poly.is_zero() and str(b2.poly) == "x^4+x^3+x^2+1"
    D = dual_matrix(steane, "symplectic")
    G = steane.generator_matrix()
    assert D.shape == (6, 14) and rank(D, gf2) == 6
    # every cross symplectic product of dual rows with code rows vanishes
    for drow in D:
        for grow in G:
            assert inner_product(drow, grow, "symplectic", gf2).code == 0


def test_dual_generators_h_zero_euclidean(gf2):
    f = Poly.parse(gf2, "x^3+x+1")
    Q = qc_build(7, gf2, f, f, Poly.zero(gf2))
    (a1, b1), (a2, b2) = dual_generators(Q, "euclidean")
    assert a1.poly.is_zero()  # hbar = 0 kills the cross term
    assert str(b1.poly) == "x^4+x^3+x^2+1"
    assert str(a2.poly) == "x^4+x^3+x^2+1" and b2.poly.is_zero()


def test_dual_dimension_complement_sweep(rng):
    for p, r, n, forms in [(2, 1, 15, ("symplectic", "euclidean")),
                           (3, 1, 13, ("symplectic", "euclidean")),
                           (3, 2, 16, ("symplectic", "euclidean", "hermitian"))]:
        field = make_field(p, r)
        cosets = cyclotomic_cosets(n, field.q)
        for _ in range(6):
            fsel = [c for c in cosets if rng.random() < 0.4]
            gsel = [c for c in cosets if rng.random() < 0.4]
            f = coset_generator_poly(n, field, fsel) if fsel else Poly.one(field)
            g = coset_generator_poly(n, field, gsel) if gsel else Poly.one(field)
            if f.degree == n or g.degree == n:
                continue
            h = Poly.from_codes(field, [rng.randrange(field.q)
                                        for _ in range(rng.randrange(1, n))])
            Q = qc_build(n, field, f, g, h)
            for form in forms:
                D = dual_matrix(Q, form)
                assert rank(D, field) == int(f.degree) + int(g.degree)
                G = Q.generator_matrix()
                from qcstab.linalg import euclidean_gram, hermitian_gram, symplectic_gram
                if form == "symplectic":
                    cross = symplectic_gram(D, G, field)
                elif form == "euclidean":
                    cross = euclidean_gram(D, G, field)
                else:
                    cross = hermitian_gram(D, G, field)
                assert not cross.any()


def test_condition_and_oracle_steane(steane):
    cond = check_self_orth_condition(steane, "symplectic")
    assert cond.holds and cond.branch == "i+ii"
    assert verify_orthogonality(steane, "symplectic")


def test_condition_trivial_f_g_one(gf2, gf9):
    for field in (gf2, gf9):
        forms = ["symplectic", "euclidean"] + (["hermitian"] if field.r % 2 == 0 else [])
        Q = qc_build(7 if field.p == 2 else 8, field, Poly.one(field),
                     Poly.one(field), Poly.zero(field))
        for form in forms:
            assert check_self_orth_condition(Q, form).holds


def test_condition_violating_instance(gf2):
    # both branches fail and the dual genuinely escapes the code
    Q = qc_build(7, gf2, Poly.parse(gf2, "x^3+x^2+1"),
                 Poly.parse(gf2, "x^3+x+1"), Poly.parse(gf2, "x+1"))
    cond = check_self_orth_condition(Q, "symplectic")
    assert not cond.holds and cond.branch == "none"
    assert not verify_orthogonality(Q, "symplectic")


def test_branch_i_only_instance(gf2):
    # f | g^perp, g | f^perp, h | hbar hold while f does not divide g
    f = Poly.parse(gf2, "x^3+x+1")
    Q = qc_build(7, gf2, f, Poly.parse(gf2, "x+1"), Poly.parse(gf2, "x+1"))
    cond = check_self_orth_condition(Q, "symplectic")
    assert cond.holds and cond.branch == "i"
    assert verify_orthogonality(Q, "symplectic")


def test_h_admissible_examples(gf2, gf4):
    assert h_admissible(Poly.parse(gf2, "x+1"), 7)
    assert not h_admissible(Poly.parse(gf4, "x+1"), 3)
    assert h_admissible(Poly.zero(gf2), 7)
    gf3 = make_field(3, 1)
    assert not h_admissible(Poly.from_codes(gf3, (1,)), 8)  # h = 1: beta = 1 fails


def test_h_admissible_rootscan_agrees_with_gcd_route(rng):
    for p, r, n in [(2, 1, 15), (3, 1, 13), (2, 2, 15), (3, 2, 16), (2, 1, 31)]:
        field = make_field(p, r)
        for _ in range(15):
            h = Poly.from_codes(field, [rng.randrange(field.q)
                                        for _ in range(rng.randrange(0, n))])
            assert _h_admissible_rootscan(h, n, field) == h_admissible(h, n, field)


def test_h_shortcut_tests(gf2, gf4):
    assert h_shortcut_tests(7, gf2, "linear")
    assert h_shortcut_tests(100, gf2, "linear")  # q = 2: gcd(1, n) = 1 always
    assert not h_shortcut_tests(3, gf4, "linear")
    gf3 = make_field(3, 1)
    assert h_shortcut_tests(80, gf3, "artin-schreier")  # m = 4, 3 does not divide 4
    assert not h_shortcut_tests(3**3 - 1, gf3, "artin-schreier")  # m = 3
    with pytest.raises(NotOfRequiredFormError):
        h_shortcut_tests(10, gf3, "artin-schreier")
    with pytest.raises(NotOfRequiredFormError):
        h_shortcut_tests(15, gf4, "artin-schreier")
    with pytest.raises(ValueError):
        h_shortcut_tests(7, gf2, "nope")


def test_artin_schreier_cross_check():
    gf3 = make_field(3, 1)
    h = (Poly.monomial(gf3, 3) - Poly.x(gf3)) % xn1(gf3, 80)
    assert h_admissible(h, 80, gf3)


def test_trace_h(gf9):
    gf3 = make_field(3, 1)
    h = trace_h(3, 1, 2, 2, 8)
    assert str(h) == "x^3+2*x"  # (3-2) tr_{2/2} + tr_{2/1} = x + (x + x^3)
    assert h_admissible(h, 8, gf3)
    h5 = trace_h(5, 1, 2, 2, 24)
    assert h_admissible(h5, 24, make_field(5, 1))
    with pytest.raises(PreconditionViolatedError):
        trace_h(3, 1, 2, 1, 8)  # s = 1 degenerates
    with pytest.raises(PreconditionViolatedError):
        trace_h(3, 1, 3, 2, 26)  # s does not divide m
    with pytest.raises(PreconditionViolatedError):
        trace_h(5, 2, 4, 2, 24)  # gcd(s, r) != 1
    with pytest.raises(PreconditionViolatedError):
        trace_h(3, 1, 2, 4, 8)  # s >= p
    with pytest.raises(PreconditionViolatedError):
        trace_h(3, 1, 2, 2, 13)  # ord_13(3) = 3 does not divide m = 2


def test_d_q_bound_steane(steane):
    bound, terms = d_q_bound(steane, _with_terms=True)
    assert [t.bound.lower for t in terms] == [3, 7, 3, 5]
    assert bound.lower == 3
    assert all(t.bound.exact for t in terms[:3])


def test_d_qe_bound_steane(steane):
    bound, terms = d_qe_bound(steane, _with_terms=True)
    assert [t.bound.lower for t in terms] == [3, 7, 3, 6]
    assert bound.lower == 3


def test_bounds_with_h_zero(gf2):
    f = Poly.parse(gf2, "x^3+x+1")
    Q = qc_build(7, gf2, f, f, Poly.zero(gf2))
    bound, terms = d_q_bound(Q, _with_terms=True)
    assert terms[1].bound.method == "zero-code" and terms[1].bound.lower == INF
    assert bound.lower == 3
    # full first block: the Hamming bound degrades towards 1
    Q2 = qc_build(7, gf2, Poly.one(gf2), f, Poly.zero(gf2))
    b2, t2 = d_qe_bound(Q2, _with_terms=True)
    assert b2.lower == 1


def test_d_q_bound_inadmissible(gf4):
    Q = qc_build(3, gf4, Poly.one(gf4), Poly.one(gf4), Poly.parse(gf4, "x+1"))
    with pytest.raises(InadmissibleHError):
        d_q_bound(Q)
    with pytest.raises(InadmissibleHError):
        d_qe_bound(Q)


def test_exact_qc_distance_steane(steane):
    ex = exact_qc_distance(steane, "symplectic")
    assert (ex.lower, ex.upper) == (3, 3)
    # Q != Q^perp_s here (dim 8 > 7), so the difference is nonempty
    assert ex.lower != INF
    full = exact_qc_distance(steane, "symplectic", relative=False)
    assert full.lower == 3
    ham = exact_qc_distance(steane, "euclidean")
    assert ham.lower == 3
    with pytest.raises(BudgetExceededError):
        exact_qc_distance(steane, "symplectic", budget=4)


def test_bound_leq_exact_on_small_instances(rng):
    checked = 0
    for p, n in [(2, 15), (3, 13)]:
        field = make_field(p, 1)
        cosets = cyclotomic_cosets(n, p)
        for _ in range(12):
            fsel = [c for c in cosets if rng.random() < 0.4]
            gsel = fsel + [c for c in cosets if c not in fsel and rng.random() < 0.4]
            f = coset_generator_poly(n, field, fsel) if fsel else Poly.one(field)
            g = coset_generator_poly(n, field, gsel) if gsel else Poly.one(field)
            if f.degree == n or g.degree == n:
                continue
            Q = qc_build(n, field, f, g, Poly.parse(field, "x+1"))
            if field.q ** Q.dimension > 1 << 20:
                continue
            if not h_admissible(Q.h, n, field):
                continue
            b = d_q_bound(Q).lower
            ex = exact_qc_distance(Q, "symplectic", relative=False).lower
            assert b <= ex
            be = d_qe_bound(Q).lower
            exe = exact_qc_distance(Q, "euclidean").lower
            assert be <= exe
            checked += 1
    assert checked >= 8


def test_css_min_weight(gf2):
    f1 = Poly.parse(gf2, "x^3+x+1")
    h = Poly.parse(gf2, "x+1")
    outer = qc_build(7, gf2, Poly.one(gf2), f1, h)
    inner = qc_build(7, gf2, f1, coset_generator_poly(7, gf2, [[1, 2, 4], [3, 5, 6]]), h)
    # inner subset of outer: check by rank, then weight of the difference
    assert in_rowspace(inner.generator_matrix(), outer.generator_matrix(), gf2)
    w, counted = css_min_weight(outer, inner)
    assert w is not None and w >= 1 and counted > 0
    # brute force the same quantity
    G_out = outer.generator_matrix()
    G_in = inner.generator_matrix()
    inner_words = set()
    for msg in itertools.product(range(2), repeat=G_in.shape[0]):
        v = (np.array(msg) @ G_in) % 2
        inner_words.add(tuple(v))
    best = None
    for msg in itertools.product(range(2), repeat=G_out.shape[0]):
        v = (np.array(msg) @ G_out) % 2
        if tuple(v) in inner_words:
            continue
        best = int((v != 0).sum()) if best is None else min(best, int((v != 0).sum()))
    assert w == best


def test_exact_relative_hermitian_matches_brute_force(gf9):
    # arbitrary small code over GF(9); checks the syndrome predicate
    # m . H^[q] = 0  <=>  codeword in Q^perp_h, against the definition
    f = Poly.parse(gf9, "x+2")  # x - 1
    g = Poly.parse(gf9, "x^2+2")  # x^2 - 1
    Q = qc_build(4, gf9, f, g, Poly.parse(gf9, "z"))
    G = Q.generator_matrix()
    from qcstab.qc import _syndrome_matrix, DualForm
    synd = _syndrome_matrix(Q, DualForm.HERMITIAN)

    def hdot(u, w):
        acc = 0
        for a, b in zip(u, w):
            acc = gf9.add(acc, gf9.mul(gf9.frob(int(a), 1), int(b)))
        return acc

    best = None
    for msg in itertools.product(range(9), repeat=G.shape[0]):
        v = [0] * 8
        s_val = [0] * synd.shape[1]
        for i, d in enumerate(msg):
            if d:
                for j in range(8):
                    v[j] = gf9.add(v[j], gf9.mul(d, int(G[i, j])))
                for j in range(synd.shape[1]):
                    s_val[j] = gf9.add(s_val[j], gf9.mul(d, int(synd[i, j])))
        in_dual = all(hdot(v, row) == 0 for row in G.tolist())
        assert in_dual == (not any(s_val)), (msg, v)
        if not in_dual:
            w = sum(1 for x in v if x)
            best = w if best is None else min(best, w)
    ex = exact_qc_distance(Q, "hermitian", relative=True)
    assert ex.lower == best
