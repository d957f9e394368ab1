"""Population-level regression criteria, shared by the test suite and ``selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import catalog
from .bounds import commutator_bound, nayak_bound, pair_multiplier_bound
from .checks import check_defect_one_characterization, check_pair_defect_one, complemented_pairs, defect_t, is_heisenberg_1_0
from .core import (
    GradedSubspace,
    center,
    commutator_subspace,
    is_graded_ideal,
    is_nilpotent,
    quotient,
    semidirect,
    semidirect_parts,
    validate,
    validate_action,
)
from .exactla import rank
from .homology import boundary_maps, multiplier_dim
from .pairs import PairPresentation, pair_multiplier_dim
from .randgen import random_action_triple, random_valid_algebra

N_RANDOM_ALGEBRAS = 100
N_RANDOM_ACTIONS = 50


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    checked: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" -- {self.detail}" if self.detail else ""
        return f"[{status}] criterion {self.number}: {self.title} ({self.checked} checks){extra}"


@lru_cache(maxsize=4)
def _catalog(max_dim: int):
    return tuple(catalog.enumerate_catalog(max_dim))


@lru_cache(maxsize=4)
def _pairs(max_dim: int):
    return tuple((e, p) for e in _catalog(max_dim) for p in complemented_pairs(e.algebra))


@lru_cache(maxsize=4)
def _random_algebras(seed: int, count: int = N_RANDOM_ALGEBRAS):
    rng = random.Random(seed)
    return tuple(random_valid_algebra(rng, 4, 4) for _ in range(count))


def _population(max_dim: int, seed: int):
    pop = [(e.id, e.algebra) for e in _catalog(max_dim)]
    pop += [(f"random#{k}", A) for k, A in enumerate(_random_algebras(seed))]
    return pop


def _result(number, title, failures, checked, extra=""):
    detail = "; ".join(failures[:3]) if failures else extra
    return CriterionResult(number, title, not failures, checked, detail)


def criterion_1(max_dim: int = 6, seed: int = 0) -> CriterionResult:
    fails, n = [], 0
    for m in range(0, 5):
        for k in range(0, 5 - m):
            if m + k < 1:
                continue
            got, _ = multiplier_dim(catalog.heisenberg_even(m, k))
            want = catalog.heisenberg_even_multiplier(m, k)
            n += 1
            if got != want:
                fails.append(f"Heven({m},{k}): {got} != {want}")
    return _result(1, "even-center Heisenberg multipliers, m+n <= 4", fails, n)


def criterion_2(max_dim: int = 6, seed: int = 0) -> CriterionResult:
    fails, n = [], 0
    for k in (1, 2, 3):
        got, _ = multiplier_dim(catalog.heisenberg_odd(k))
        want = 2 if k == 1 else 2 * k * k - 1
        n += 1
        if got != want:
            fails.append(f"Hodd({k}): {got} != {want}")
    return _result(2, "odd-center Heisenberg multipliers, n <= 3", fails, n)


def criterion_3(max_dim: int = 6, seed: int = 0) -> CriterionResult:
    fails, n = [], 0
    for m in range(5):
        for k in range(5):
            got, _ = multiplier_dim(catalog.abelian(m, k))
            n += 1
            if got != ((m + k) ** 2 + (k - m)) // 2:
                fails.append(f"abelian({m}|{k}): {got}")
    for e in _catalog(max_dim):
        if e.algebra.is_abelian():
            continue
        got, _ = multiplier_dim(e.algebra)
        n += 1
        if not got < nayak_bound(*e.algebra.sdim):
            fails.append(f"{e.id}: dim M = {got} reaches the bound")
    return _result(3, "abelian equality and strict bound for non-abelian entries", fails, n)


def criterion_4(max_dim: int = 6, seed: int = 0) -> CriterionResult:
    fails, n = [], 0
    lie_hits, all_hits = [], []
    for e in _catalog(max_dim):
        A = e.algebra
        if not is_nilpotent(A):
            continue
        t = defect_t(A)
        n += 1
        if t == 1:
            all_hits.append(e.id)
            if A.n == 0:
                lie_hits.append(e.id)
            if not is_heisenberg_1_0(A):
                fails.append(f"{e.id} has defect 1 but is not H(1)")
        if not check_defect_one_characterization(A).passed:
            fails.append(f"defect-1 characterization fails on {e.id}")
    if lie_hits != ["H(1)"]:
        fails.append(f"defect-1 Lie entries: {lie_hits}")
    if all_hits != ["H(1)"]:
        fails.append(f"defect-1 entries: {all_hits}")
    return _result(4, "defect 1 exactly at H(1) among nilpotent entries", fails, n,
                   f"defect-1 entries: {all_hits}")


def criterion_5(max_dim: int = 6, seed: int = 0) -> CriterionResult:
    fails, n = [], 0
    for name, A in _population(max_dim, seed):
        if not validate(A).ok:
            fails.append(f"{name} is not a valid superalgebra")
            continue
        Z = center(A)
        L2 = commutator_subspace(A).dim
        dim_M, _ = multiplier_dim(A)
        n += 2
        if L2 > commutator_bound((A.m - Z.sdim[0], A.n - Z.sdim[1]), 0):
            fails.append(f"{name}: dim L^2 = {L2} above the commutator bound")
        if dim_M > nayak_bound(A.m, A.n):
            fails.append(f"{name}: dim M = {dim_M} above the super exterior square bound")
    for e, p in _pairs(max_dim):
        value, rep = pair_multiplier_dim(p)
        n += 3
        if rep.dim_NL > rep.commutator_bound:
            fails.append(f"{e.id}: dim [N,L] above the pair commutator bound")
        if value > pair_multiplier_bound(rep.dim_N, rep.dim_L_over_N, rep.dim_NL, True):
            fails.append(f"{e.id}: M(N,L) above the commutator-corrected bound")
        if value > pair_multiplier_bound(rep.dim_N, rep.dim_L_over_N, include_commutator=False):
            fails.append(f"{e.id}: M(N,L) above the pair bound")
    return _result(5, "dimension bounds over catalog, random algebras and pairs", fails, n)


def criterion_6(max_dim: int = 6, seed: int = 0) -> CriterionResult:
    fails, n = [], 0
    for name, A in _population(max_dim, seed):
        bm = boundary_maps(A)
        n += 2
        if not (bm.d2 @ bm.d3).is_zero():
            fails.append(f"{name}: d2 d3 != 0")
        if rank(bm.d2) != commutator_subspace(A).dim:
            fails.append(f"{name}: rank d2 != dim L^2")
    return _result(6, "chain complex identities", fails, n)


def criterion_7(max_dim: int = 6, seed: int = 0) -> CriterionResult:
    fails, n = [], 0
    for e in _catalog(max_dim):
        A = e.algebra
        p = PairPresentation(A, GradedSubspace.whole(A))
        n += 1
        if pair_multiplier_dim(p)[0] != multiplier_dim(A)[0]:
            fails.append(f"{e.id}: M(L,L) != M(L)")
    for e, p in _pairs(max_dim):
        if not e.algebra.is_abelian():
            continue
        value, rep = pair_multiplier_dim(p)
        m, k = rep.dim_N
        n += 1
        if value != nayak_bound(m, k) + (m + k) * sum(rep.dim_L_over_N):
            fails.append(f"{e.id}: abelian pair equality fails for N of dim {rep.dim_N}")
    return _result(7, "pair decomposition and abelian pair equality", fails, n)


def criterion_8(max_dim: int = 6, seed: int = 0) -> CriterionResult:
    fails, n, applicable = [], 0, 0
    for e, p in _pairs(max_dim):
        if not is_nilpotent(e.algebra):
            continue
        res = check_pair_defect_one(p)
        n += 1
        applicable += res.applicable
        if not res.passed:
            fails.append(f"{e.id}, N = {p.N.describe()}: {res.detail}")
    if applicable == 0:
        fails.append("no nilpotent pair with defect 1 in the population")
    return _result(8, "defect-1 pair dichotomy", fails, n, f"{applicable} pairs with defect 1")


def criterion_9(max_dim: int = 6, seed: int = 0) -> CriterionResult:
    fails, n = [], 0
    rng = random.Random(seed + 1)
    for k in range(N_RANDOM_ACTIONS):
        L, M, act = random_action_triple(rng)
        if not validate_action(act).ok:
            fails.append(f"triple {k}: generated action is invalid")
            continue
        S = semidirect(M, L, act)
        Mi, _ = semidirect_parts(M, L, S)
        n += 1
        if not validate(S).ok:
            fails.append(f"triple {k}: semidirect product fails validation")
            continue
        if not is_graded_ideal(S, Mi):
            fails.append(f"triple {k}: M is not an ideal")
            continue
        Q, _ = quotient(S, Mi)
        if not Q.same_structure(L):
            fails.append(f"triple {k}: quotient by M differs from L")
    return _result(9, "semidirect products of random actions", fails, n)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9)


def run_all(max_dim: int = 6, seed: int = 0) -> list[CriterionResult]:
    return [c(max_dim, seed) for c in CRITERIA]
