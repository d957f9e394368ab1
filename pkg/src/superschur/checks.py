"""Defects and executable characterization checks over algebras and pairs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .bounds import commutator_bound, nayak_bound
from .core import (
    GradedSubspace,
    SuperAlgebra,
    center,
    commutator_subspace,
    is_graded_ideal,
    is_nilpotent,
    lower_central_series,
    pair_center,
)
from .homology import multiplier_dim
from .pairs import PairPresentation, UnsupportedPair, find_complement, pair_multiplier_dim


class HypothesisUnmet(ValueError):
    """The theorem being checked does not apply (e.g. the algebra is not nilpotent)."""


@dataclass
class CheckResult:
    name: str
    passed: bool
    applicable: bool = True
    detail: str = ""
    witnesses: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed


@dataclass
class BoundReport:
    subject: str
    dims: dict
    bounds: dict
    t: int
    slack: dict
    flags: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"subject": self.subject, "dims": self.dims, "bounds": self.bounds,
                "t": self.t, "slack": self.slack, "checks": self.flags}


def defect_t(A: SuperAlgebra) -> int:
    dim_M, _ = multiplier_dim(A)
    return nayak_bound(A.m, A.n) - dim_M


def defect_t_pair(p: PairPresentation) -> int:
    _, rep = pair_multiplier_dim(p)
    return rep.t


def algebra_bound_report(A: SuperAlgebra, subject: str = "L") -> BoundReport:
    dim_M, mrep = multiplier_dim(A)
    Z = center(A)
    L2 = commutator_subspace(A).dim
    nz = (A.m - Z.sdim[0], A.n - Z.sdim[1])
    bounds = {"nayak": nayak_bound(A.m, A.n), "commutator": commutator_bound(nz, 0)}
    return BoundReport(
        subject=subject,
        dims={"L": list(A.sdim), "Z": list(Z.sdim), "L2": L2, "M": dim_M},
        bounds=bounds,
        t=bounds["nayak"] - dim_M,
        slack={"nayak": bounds["nayak"] - dim_M, "commutator": bounds["commutator"] - L2},
        flags={"abelian": A.is_abelian(), "nilpotent": is_nilpotent(A),
               "heisenberg_1_0": is_heisenberg_1_0(A)},
    )


def pair_bound_report(p: PairPresentation, subject: str = "(N,L)") -> BoundReport:
    value, rep = pair_multiplier_dim(p)
    bounds = {"commutator": rep.commutator_bound,
              "multiplier_with_commutator": rep.commutator_corrected_bound,
              "multiplier": rep.multiplier_bound}
    return BoundReport(
        subject=subject,
        dims={"N": list(rep.dim_N), "L/N": list(rep.dim_L_over_N), "NL": rep.dim_NL,
              "Z(N,L)": list(rep.dim_Z_NL), "M(N,L)": value},
        bounds=bounds,
        t=rep.t,
        slack={"commutator": rep.commutator_bound - rep.dim_NL,
               "multiplier_with_commutator": rep.commutator_corrected_bound - value,
               "multiplier": rep.multiplier_bound - value},
        flags={"complement_is_ideal": rep.complement_is_ideal},
    )


def is_heisenberg_1_0(A: SuperAlgebra) -> bool:
    """Recognize the 3-dimensional Heisenberg Lie algebra: dim (3|0), L^2 = Z(L) of dim 1."""
    if A.sdim != (3, 0):
        return False
    L2 = commutator_subspace(A)
    return L2.dim == 1 and L2 == center(A)


def check_pair_defect_one(p: PairPresentation) -> CheckResult:
    """If the pair defect is 1: L non-abelian and [N,L] = 0, or dim [N,L] = 1 = [N,L] = Z(N,L)."""
    if not is_nilpotent(p.L):
        raise HypothesisUnmet("L is not nilpotent")
    t = defect_t_pair(p)
    NL = commutator_subspace(p.L, p.N, None)
    Z = pair_center(p.L, p.N)
    wit = {"t": t, "dim_NL": NL.dim, "NL": NL.describe(), "Z_NL": Z.describe()}
    if t != 1:
        return CheckResult("pair_defect_one", True, applicable=False, detail="vacuous: defect != 1", witnesses=wit)
    if p.L.is_abelian():
        return CheckResult("pair_defect_one", False, detail="defect 1 on an abelian algebra", witnesses=wit)
    if NL.is_zero():
        return CheckResult("pair_defect_one", True, detail="[N,L] = 0", witnesses=wit)
    if NL.dim == 1 and NL == Z:
        return CheckResult("pair_defect_one", True, detail="dim [N,L] = 1 and [N,L] = Z(N,L)", witnesses=wit)
    return CheckResult("pair_defect_one", False, detail="neither clause holds", witnesses=wit)


def check_defect_one_characterization(A: SuperAlgebra) -> CheckResult:
    """Defect 1 holds exactly for the 3-dimensional Heisenberg Lie algebra."""
    if not is_nilpotent(A):
        raise HypothesisUnmet("algebra is not nilpotent")
    t = defect_t(A)
    match = is_heisenberg_1_0(A)
    ok = (t == 1) == match
    return CheckResult("defect_one_characterization", ok, detail=f"defect {t}, matches H(1): {match}",
                       witnesses={"t": t, "match": match})


def basis_ideals(A: SuperAlgebra) -> list[GradedSubspace]:
    """All graded ideals spanned by subsets of the basis (including 0 and A)."""
    out = []
    idx = range(A.dim)
    for k in range(A.dim + 1):
        for sub in combinations(idx, k):
            U = GradedSubspace.span(A, [A.basis_vector(i) for i in sub])
            if is_graded_ideal(A, U):
                out.append(U)
    return out


def complemented_pairs(A: SuperAlgebra) -> list[PairPresentation]:
    """Pairs over A whose ideal is basis-aligned or a term of a natural series, with a found complement."""
    seen = []
    cands = basis_ideals(A) + lower_central_series(A) + [center(A)]
    pairs = []
    for N in cands:
        if N in seen:
            continue
        seen.append(N)
        K = find_complement(A, N)
        if K is not None:
            pairs.append(PairPresentation(A, N, K))
    return pairs


__all__ = [
    "BoundReport", "CheckResult", "HypothesisUnmet", "UnsupportedPair",
    "algebra_bound_report", "basis_ideals", "check_defect_one_characterization", "check_pair_defect_one",
    "complemented_pairs", "defect_t", "defect_t_pair", "is_heisenberg_1_0",
    "pair_bound_report",
]
