"""Degree-2 segment of the super Chevalley-Eilenberg complex, trivial coefficients.

Chains are super exterior powers: even generators anticommute, odd generators
commute, so odd factors may repeat.  A generator is a sorted index tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .core import SuperAlgebra, bracket, commutator_subspace, koszul
from .exactla import RatMatrix, rank


@dataclass(frozen=True)
class WedgeBasis:
    """Generators of a super exterior power in block order (fewest odd factors first)."""

    degree: int
    m: int
    n: int
    generators: tuple[tuple[int, ...], ...]
    position: dict = field(compare=False, repr=False)

    def __len__(self):
        return len(self.generators)

    def index(self, gen: tuple[int, ...]) -> int:
        return self.position[gen]


def wedge_basis(m: int, n: int, degree: int) -> WedgeBasis:
    ev = range(m)
    od = range(m, m + n)
    gens = []
    for k in range(degree + 1):  # k = number of odd factors
        for e in combinations(ev, degree - k):
            for o in combinations_with_replacement(od, k):
                gens.append(e + o)
    gens = tuple(gens)
    return WedgeBasis(degree, m, n, gens, {g: i for i, g in enumerate(gens)})


def wedge2_basis(m: int, n: int) -> WedgeBasis:
    return wedge_basis(m, n, 2)


def wedge3_basis(m: int, n: int) -> WedgeBasis:
    return wedge_basis(m, n, 3)


def canonicalize_wedge2(A: SuperAlgebra, x: Sequence, y: Sequence,
                        basis: WedgeBasis | None = None) -> dict[tuple[int, int], Fraction]:
    """Expand x ^ y over sorted generators, Koszul sign -(-1)^{|u||v|} per swap."""
    px, py = A.vector_parity(tuple(x)), A.vector_parity(tuple(y))
    if (px is None and any(x)) or (py is None and any(y)):
        raise ValueError("canonicalize_wedge2 needs homogeneous vectors")
    out: dict[tuple[int, int], Fraction] = {}
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            pi, pj = A.parity(i), A.parity(j)
            if i == j:
                if pi == 0:
                    continue
                key, c = (i, i), a * b
            elif i < j:
                key, c = (i, j), a * b
            else:
                key, c = (j, i), -koszul(pi, pj) * a * b
            out[key] = out.get(key, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class BoundaryMaps:
    wedge2: WedgeBasis
    wedge3: WedgeBasis
    d2: RatMatrix  # dim A rows, |wedge2| columns
    d3: RatMatrix  # |wedge2| rows, |wedge3| columns


def build_d2(A: SuperAlgebra, basis: WedgeBasis | None = None) -> RatMatrix:
    """d2(x ^ y) = [x, y]."""
    basis = basis or wedge2_basis(A.m, A.n)
    cols = [A.sc_of(i, j) for i, j in basis.generators]
    return RatMatrix.from_columns(cols, A.dim)


def build_d3(A: SuperAlgebra, w2: WedgeBasis | None = None, w3: WedgeBasis | None = None) -> RatMatrix:
    """d3(x^y^z) = [x,y]^z + (-1)^{|x|(|y|+|z|)} [y,z]^x + (-1)^{|z|(|x|+|y|)} [z,x]^y."""
    w2 = w2 or wedge2_basis(A.m, A.n)
    w3 = w3 or wedge3_basis(A.m, A.n)
    cols = []
    for i, j, k in w3.generators:
        pi, pj, pk = A.parity(i), A.parity(j), A.parity(k)
        col = [Fraction(0)] * len(w2)
        terms = (
            (1, (i, j), k),
            (koszul(pi, pj + pk), (j, k), i),
            (koszul(pk, pi + pj), (k, i), j),
        )
        for sign, (a, b), c in terms:
            v = A.sc.get((a, b))
            if v is None:
                continue
            for gen, coef in canonicalize_wedge2(A, v, A.basis_vector(c)).items():
                col[w2.index(gen)] += sign * coef
        cols.append(col)
    return RatMatrix.from_columns(cols, len(w2))


def boundary_maps(A: SuperAlgebra) -> BoundaryMaps:
    w2, w3 = wedge2_basis(A.m, A.n), wedge3_basis(A.m, A.n)
    return BoundaryMaps(w2, w3, build_d2(A, w2), build_d3(A, w2, w3))


@dataclass(frozen=True)
class MultiplierReport:
    sdim: tuple[int, int]
    dim_M: int
    wedge2_dim: int
    rank_d2: int
    rank_d3: int
    commutator_dim: int
    nayak_bound: int
    t: int

    def as_dict(self) -> dict:
        return {
            "dim": list(self.sdim),
            "dim_M": self.dim_M,
            "rank_d2": self.rank_d2,
            "rank_d3": self.rank_d3,
            "wedge2_dim": self.wedge2_dim,
            "dim_L2": self.commutator_dim,
            "bound": self.nayak_bound,
            "t": self.t,
        }


@lru_cache(maxsize=4096)
def _multiplier(A: SuperAlgebra) -> MultiplierReport:
    bm = boundary_maps(A)
    r2, r3 = rank(bm.d2), rank(bm.d3)
    size = len(bm.wedge2)
    dim_M = size - r2 - r3
    # |wedge2| is exactly ((m+n)^2 + (n-m))/2
    return MultiplierReport(A.sdim, dim_M, size, r2, r3,
                            commutator_subspace(A).dim, size, size - dim_M)


def multiplier_dim(A: SuperAlgebra) -> tuple[int, MultiplierReport]:
    """dim M(L) = dim H_2(L) = |wedge2| - rank d2 - rank d3."""
    rep = _multiplier(A)
    return rep.dim_M, rep
