"""Pairs (N, L): complements, pair multipliers, relative central extensions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .bounds import commutator_bound, pair_multiplier_bound
from .core import (
    ActionTable,
    GradedSubspace,
    NotAnIdeal,
    SuperAlgebra,
    ValidationReport,
    bracket,
    commutator_subspace,
    is_graded_ideal,
    is_subalgebra,
    pair_center,
    quotient,
    validate_action,
)
from .exactla import RatMatrix, nullspace
from .homology import multiplier_dim


class UnsupportedPair(ValueError):
    """No complement of N in L is known, so M(N,L) is not computed."""


@dataclass(frozen=True)
class PairPresentation:
    L: SuperAlgebra
    N: GradedSubspace
    K: GradedSubspace | None = None

    def __post_init__(self):
        if self.N.algebra != self.L or (self.K is not None and self.K.algebra != self.L):
            raise ValueError("N and K must be subspaces of L")
        if not is_graded_ideal(self.L, self.N):
            raise NotAnIdeal(f"{self.N.describe()} is not a graded ideal")

    @classmethod
    def from_labels(cls, L: SuperAlgebra, ideal, complement=None) -> "PairPresentation":
        K = None if complement is None else GradedSubspace.of_labels(L, complement)
        return cls(L, GradedSubspace.of_labels(L, ideal), K)


@dataclass
class ComplementReport:
    is_subalgebra: bool
    is_ideal: bool
    trivial_intersection: bool
    spans: bool

    @property
    def ok(self) -> bool:
        return self.is_subalgebra and self.trivial_intersection and self.spans


def _complement_report(L: SuperAlgebra, N: GradedSubspace, K: GradedSubspace) -> ComplementReport:
    inter = N.intersect(K)
    total = N + K
    return ComplementReport(
        is_subalgebra=is_subalgebra(L, K),
        is_ideal=is_graded_ideal(L, K),
        trivial_intersection=inter.is_zero(),
        spans=total.sdim == L.sdim,
    )


def verify_complement(p: PairPresentation) -> tuple[bool, ComplementReport]:
    if p.K is None:
        raise ValueError("pair has no complement to verify")
    rep = _complement_report(p.L, p.N, p.K)
    return rep.ok, rep


def find_complement(L: SuperAlgebra, N: GradedSubspace) -> GradedSubspace | None:
    """First basis-subset span (lexicographic per parity block) complementing N as a subalgebra."""
    need0 = L.m - N.sdim[0]
    need1 = L.n - N.sdim[1]
    for ev in combinations(L.indices(0), need0):
        E = GradedSubspace.span(L, [L.basis_vector(i) for i in ev])
        if not (N + E).sdim[0] == L.m:
            continue
        for od in combinations(L.indices(1), need1):
            K = GradedSubspace.span(L, [L.basis_vector(i) for i in ev + od])
            if (N + K).sdim == L.sdim and is_subalgebra(L, K):
                return K
    return None


def resolve_complement(p: PairPresentation) -> GradedSubspace:
    if p.K is not None:
        ok, rep = verify_complement(p)
        if not ok:
            raise UnsupportedPair(f"given K is not a complement: {rep}")
        return p.K
    K = find_complement(p.L, p.N)
    if K is None:
        raise UnsupportedPair("no basis-aligned complement of N in L")
    return K


@dataclass(frozen=True)
class PairReport:
    dim_M_pair: int
    dim_M_L: int
    dim_M_quotient: int
    dim_N: tuple[int, int]
    dim_L_over_N: tuple[int, int]
    dim_NL: int
    dim_Z_NL: tuple[int, int]
    commutator_bound: int
    commutator_corrected_bound: int
    multiplier_bound: int
    t: int
    complement: GradedSubspace = field(compare=False)
    complement_is_ideal: bool = False

    def as_dict(self) -> dict:
        return {
            "dim_M": self.dim_M_pair,
            "dim_M_L": self.dim_M_L,
            "dim_M_quotient": self.dim_M_quotient,
            "dim_N": list(self.dim_N),
            "dim_L_over_N": list(self.dim_L_over_N),
            "dim_NL": self.dim_NL,
            "dim_Z_NL": list(self.dim_Z_NL),
            "bounds": {
                "commutator": self.commutator_bound,
                "multiplier_with_commutator": self.commutator_corrected_bound,
                "multiplier": self.multiplier_bound,
            },
            "t": self.t,
            "complement": [self.complement.algebra.format_vector(v) for v in self.complement.vectors],
            "complement_is_ideal": self.complement_is_ideal,
        }


def pair_multiplier_dim(p: PairPresentation) -> tuple[int, PairReport]:
    """dim M(N,L) = dim M(L) - dim M(L/N), valid when N has a subalgebra complement."""
    return _pair_multiplier(p)


@lru_cache(maxsize=4096)
def _pair_multiplier(p: PairPresentation) -> tuple[int, PairReport]:
    K = resolve_complement(p)
    L, N = p.L, p.N
    mL, _ = multiplier_dim(L)
    Q, _ = quotient(L, N)
    mQ, _ = multiplier_dim(Q)
    value = mL - mQ
    if value < 0:
        raise ArithmeticError(f"negative pair multiplier {value}: decomposition inconsistent")
    Z = pair_center(L, N)
    NL = commutator_subspace(L, N, None).dim
    dN = N.sdim
    dQ = Q.sdim
    nz = (dN[0] - Z.sdim[0], dN[1] - Z.sdim[1])
    bound = pair_multiplier_bound(dN, dQ, include_commutator=False)
    rep = PairReport(
        dim_M_pair=value, dim_M_L=mL, dim_M_quotient=mQ, dim_N=dN, dim_L_over_N=dQ,
        dim_NL=NL, dim_Z_NL=Z.sdim,
        commutator_bound=commutator_bound(nz, dQ),
        commutator_corrected_bound=pair_multiplier_bound(dN, dQ, NL, include_commutator=True),
        multiplier_bound=bound, t=bound - value, complement=K,
        complement_is_ideal=is_graded_ideal(L, K),
    )
    return value, rep


# ---------------------------------------------------------------------------
# relative central extensions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RelativeCentralExtension:
    """sigma: M -> L (matrix dim L x dim M) with an action of L on M, targeting the ideal N."""

    M: SuperAlgebra
    L: SuperAlgebra
    sigma: RatMatrix
    act: ActionTable
    N: GradedSubspace

    def __post_init__(self):
        if (self.sigma.rows, self.sigma.cols) != (self.L.dim, self.M.dim):
            raise ValueError("sigma has the wrong shape")
        if self.act.acting != self.L or self.act.acted != self.M:
            raise ValueError("action does not match M and L")
        if self.N.algebra != self.L:
            raise ValueError("N must be a subspace of L")

    def image(self, v):
        return self.sigma.apply(v)


def kernel(e: RelativeCentralExtension) -> GradedSubspace:
    M = e.M
    vecs = []
    for p in (0, 1):
        idx = list(M.indices(p))
        if not idx:
            continue
        cols = [e.sigma.column(j) for j in idx]
        sub = RatMatrix.from_columns(cols, e.L.dim)
        for sol in nullspace(sub):
            v = [0] * M.dim
            for a, j in zip(sol, idx):
                v[j] = a
            vecs.append(v)
    return GradedSubspace.span(M, vecs)


def action_commutator(e: RelativeCentralExtension) -> GradedSubspace:
    """[M, L] = span{ ^l m }."""
    return GradedSubspace.span(e.M, list(e.act.table.values()))


def validate_rce(e: RelativeCentralExtension) -> ValidationReport:
    rep = ValidationReport()
    M, L = e.M, e.L
    mn, ln = M.names, L.names
    for v in validate_action(e.act).violations:
        rep.violations.append(v)
    for j in range(M.dim):
        col = e.sigma.column(j)
        if any(col[k] and L.parity(k) != M.parity(j) for k in range(L.dim)):
            rep.add("sigma parity", (mn[j],), "sigma does not preserve parity")
    mb = [M.basis_vector(j) for j in range(M.dim)]
    for j in range(M.dim):
        for j2 in range(M.dim):
            lhs = e.image(M.sc_of(j, j2))
            rhs = bracket(L, e.image(mb[j]), e.image(mb[j2]))
            if lhs != rhs:
                rep.add("sigma homomorphism", (mn[j], mn[j2]), "sigma[m,m'] != [sigma m, sigma m']")
    image = GradedSubspace.span(L, [e.sigma.column(j) for j in range(M.dim)])
    if image != e.N:
        rep.add("(i) image", (), f"sigma(M) = {image.describe()} but N = {e.N.describe()}")
    lb = [L.basis_vector(i) for i in range(L.dim)]
    for i in range(L.dim):
        for j in range(M.dim):
            if e.image(e.act.of(i, j)) != bracket(L, lb[i], e.image(mb[j])):
                rep.add("(ii) equivariance", (ln[i], mn[j]), "sigma(^l m) != [l, sigma m]")
    for j2 in range(M.dim):
        s = e.image(mb[j2])
        for j in range(M.dim):
            if e.act.act(s, mb[j]) != M.sc_of(j2, j):
                rep.add("(iii) Peiffer", (mn[j2], mn[j]), "^sigma(m') m != [m', m]")
    for v in kernel(e).vectors:
        if any(any(e.act.act(l, v)) for l in lb):
            rep.add("(iv) central kernel", (M.format_vector(v),), "ker sigma not inside Z(M,L)")
    return rep


@dataclass
class CoverReport:
    kernel_dim: int
    pair_multiplier: int
    kernel_in_commutator: bool
    witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.kernel_in_commutator and self.kernel_dim == self.pair_multiplier


def is_cover_candidate(e: RelativeCentralExtension, p: PairPresentation) -> tuple[bool, CoverReport]:
    """dim ker sigma = dim M(N,L) and ker sigma inside [M,L] (exact for abelian kernels)."""
    target, _ = pair_multiplier_dim(p)
    ker = kernel(e)
    comm = action_commutator(e)
    witness = next((v for v in ker.vectors if not comm.contains_vector(v)), None)
    rep = CoverReport(ker.dim, target, witness is None, witness)
    return rep.ok, rep
