"""Stabilizer quantum code parameters from certified QC codes.

Only parameter records are produced: [[n, k, d >= bound]]_q with the duality
form and the provenance of the distance bound.  No quantum states, error
groups or encoders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclic import DEFAULT_BUDGET, DEFAULT_MC_SAMPLES, INF
from .errors import (
    InadmissibleHError,
    NotNestedError,
    NotSelfOrthogonalError,
    WrongFieldForHermitianError,
    ZeroLogicalError,
)
from .qc import (
    DualForm,
    QCCode,
    as_form,
    check_self_orth_condition,
    d_q_bound,
    d_qe_bound,
    verify_orthogonality,
)


@dataclass(frozen=True)
class QuantumParams:
    """[[n, k, d >= d_lower]]_q parameter record.

    d_lower is None when no distance bound could be certified (inadmissible
    h); d_claim carries an externally claimed distance, which is reported but
    never asserted by the library itself.
    """

    n: int
    k: int
    d_lower: int | None
    q: int
    form: DualForm
    provenance: str
    d_claim: int | None = None

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"k = {self.k} outside [0, {self.n}]")
        if self.d_lower is not None and self.d_lower < 1:
            raise ValueError(f"d_lower = {self.d_lower} must be >= 1")

    def __str__(self):
        d = "?" if self.d_lower is None else f">={self.d_lower}"
        return f"[[{self.n},{self.k},{d}]]_{self.q}"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d_lower": self.d_lower,
            "d_claim": self.d_claim,
            "q": self.q,
            "form": str(self.form),
            "provenance": self.provenance,
        }


def derive_params(Q: QCCode, form, budget: int = DEFAULT_BUDGET,
                  mc_samples: int = DEFAULT_MC_SAMPLES, seed: int = 0,
                  workers: int = 1, d_claim: int | None = None,
                  bound=None) -> QuantumParams:
    """Apply the form's stabilizer construction to a certified Q.

    Requires both the divisibility condition and the orthogonality oracle to
    pass (belt and suspenders).  When h is inadmissible the parameters are
    still emitted with d unknown, since self-orthogonality does not depend on
    h admissibility, only the distance bounds do.  A precomputed DistanceBound
    for the form may be passed via `bound` to avoid recomputation.
    """
    form = as_form(form)
    cond = check_self_orth_condition(Q, form)
    oracle = verify_orthogonality(Q, form)
    if not cond.holds or not oracle:
        raise NotSelfOrthogonalError(
            f"{form} self-orthogonality not certified: condition branch "
            f"{cond.branch!r}, oracle {oracle}"
        )
    deg_f, deg_g = int(Q.f.degree), int(Q.g.degree)
    if form is DualForm.SYMPLECTIC:
        n_out = Q.n
        k_out = Q.n - deg_f - deg_g
        q_out = Q.field.q
        bound_fn = d_q_bound
    else:
        n_out = 2 * Q.n
        k_out = 2 * Q.n - 2 * deg_f - 2 * deg_g
        if form is DualForm.HERMITIAN:
            if Q.field.r % 2:
                raise WrongFieldForHermitianError(f"{Q.field} is not GF(q^2)")
            q_out = Q.field.p ** (Q.field.r // 2)
        else:
            q_out = Q.field.q
        bound_fn = d_qe_bound
    try:
        if bound is None:
            bound = bound_fn(Q, budget=budget, mc_samples=mc_samples,
                             seed=seed, workers=workers)
        d_lower = int(bound.lower) if bound.lower != INF else None
        provenance = bound.method
    except InadmissibleHError:
        d_lower = None
        provenance = "h-inadmissible: no distance bound"
    return QuantumParams(n=n_out, k=k_out, d_lower=d_lower, q=q_out,
                         form=form, provenance=provenance, d_claim=d_claim)


def css_generic(c1_dim: int, c2_dim: int, n: int, w1: int, w2: int, q: int,
                provenance: str = "css") -> QuantumParams:
    """Generic CSS record for certified nested codes C2 <= C1.

    w1 bounds w(C1 \\ C2), w2 bounds w(C2^perp \\ C1^perp); the caller is
    responsible for having certified the containment by rank arithmetic.
    """
    if c2_dim > c1_dim:
        raise NotNestedError(f"dim C2 = {c2_dim} > dim C1 = {c1_dim}")
    k = c1_dim - c2_dim
    if k == 0:
        raise ZeroLogicalError("C1 = C2 gives a degenerate k = 0 code")
    d = min(w1, w2)
    return QuantumParams(n=n, k=k, d_lower=int(d) if d != INF else None,
                         q=q, form=DualForm.EUCLIDEAN, provenance=provenance)
