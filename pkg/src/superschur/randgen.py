"""Random valid Lie superalgebras and actions, for property and population checks.

Nilpotent algebras are grown by central extensions along random 2-cocycles;
solvable ones come from semidirect products with random derivations.  Every
generator output is re-validated independently by the caller's tests.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from . import catalog
from .core import (
    ActionTable,
    GradedSubspace,
    SuperAlgebra,
    bracket,
    commutator_subspace,
    direct_sum,
    is_graded_ideal,
    semidirect,
    subalgebra,
    validate_action,
)
from .exactla import RatMatrix, inverse, nullspace
from .homology import build_d3, wedge2_basis, wedge3_basis

ZERO = Fraction(0)


def _small(rng: random.Random, lo: int = -2, hi: int = 2, nonzero: bool = False) -> Fraction:
    while True:
        c = rng.randint(lo, hi)
        if c or not nonzero:
            return Fraction(c)


def _combo(rng: random.Random, basis: list, length: int) -> tuple:
    out = [ZERO] * length
    for v in basis:
        c = _small(rng)
        if c:
            out = [x + c * y for x, y in zip(out, v)]
    return tuple(out)


def cocycles(A: SuperAlgebra, parity: int) -> list[dict]:
    """Basis of 2-cocycles with values in a 1-dim module of the given parity.

    Each cocycle maps the parity-``parity`` generators of the super exterior
    square (sorted index pairs) to their coefficients.
    """
    w2, w3 = wedge2_basis(A.m, A.n), wedge3_basis(A.m, A.n)
    gens = [g for g in w2.generators if (A.parity(g[0]) ^ A.parity(g[1])) == parity]
    if not gens:
        return []
    d3 = build_d3(A, w2, w3)
    rows = [[d3[w2.index(g), c] for g in gens] for c in range(d3.cols)]
    if not rows:
        rows = [[ZERO] * len(gens)]
    return [dict(zip(gens, v)) for v in nullspace(RatMatrix.from_rows(rows, cols=len(gens)))]


def _fresh(A: SuperAlgebra, stem: str) -> str:
    k = 1
    while f"{stem}{k}" in A.names:
        k += 1
    return f"{stem}{k}"


def central_extension(A: SuperAlgebra, parity: int, rng: random.Random) -> SuperAlgebra:
    """Adjoin one central element of the given parity along a random 2-cocycle."""
    basis = cocycles(A, parity)
    omega = {}
    for cyc in basis:
        c = _small(rng)
        for g, v in cyc.items():
            omega[g] = omega.get(g, ZERO) + c * v
    name = _fresh(A, "c")
    even = list(A.even_names) + ([name] if parity == 0 else [])
    odd = list(A.odd_names) + ([name] if parity == 1 else [])
    brackets = []
    for i, j, v in A.brackets():
        brackets.append((A.names[i], A.names[j], {A.names[k]: x for k, x in enumerate(v) if x}))
    old = {(a, b): val for a, b, val in brackets}
    for (i, j), w in omega.items():
        if not w:
            continue
        key = (A.names[i], A.names[j])
        val = dict(old.get(key, {}))
        val[name] = w
        old[key] = val
    return SuperAlgebra.from_brackets(even, odd, [(a, b, v) for (a, b), v in old.items()])


def random_nilpotent(rng: random.Random, max_even: int = 4, max_odd: int = 4) -> SuperAlgebra:
    if max_even + max_odd <= 0:
        return catalog.abelian(0, 0)
    while True:
        m0 = rng.randint(0, min(2, max_even))
        n0 = rng.randint(0, min(2, max_odd))
        if m0 + n0:
            break
    A = catalog.abelian(m0, n0)
    steps = rng.randint(0, (max_even - m0) + (max_odd - n0))
    for _ in range(steps):
        choices = [p for p, room in ((0, max_even - A.m), (1, max_odd - A.n)) if room > 0]
        if not choices:
            break
        A = central_extension(A, rng.choice(choices), rng)
    return A


def derivations(M: SuperAlgebra, parity: int = 0) -> list[RatMatrix]:
    """Basis of homogeneous superderivations of M (as dim M x dim M matrices)."""
    d = M.dim
    slots = [(r, c) for r in range(d) for c in range(d) if (M.parity(r) ^ M.parity(c)) == parity]
    if not slots:
        return []
    pos = {s: k for k, s in enumerate(slots)}
    rows = []
    # D[x,y] - [Dx,y] - (-1)^{|D||x|}[x,Dy] = 0 on basis pairs, coordinate k
    for x in range(d):
        sx = -1 if (parity and M.parity(x)) else 1
        for y in range(d):
            for k in range(d):
                row = [ZERO] * len(slots)
                v = M.sc_of(x, y)
                for r, a in enumerate(v):
                    if a and (k, r) in pos:
                        row[pos[(k, r)]] += a
                # [Dx, y]: Dx = sum_r D[r,x] e_r
                for r in range(d):
                    if (r, x) in pos:
                        c = M.sc_of(r, y)[k]
                        if c:
                            row[pos[(r, x)]] -= c
                    if (r, y) in pos:
                        c = M.sc_of(x, r)[k]
                        if c:
                            row[pos[(r, y)]] -= sx * c
                if any(row):
                    rows.append(row)
    sols = nullspace(RatMatrix.from_rows(rows, cols=len(slots))) if rows else [
        tuple(Fraction(int(i == j)) for j in range(len(slots))) for i in range(len(slots))]
    out = []
    for sol in sols:
        D = [[ZERO] * d for _ in range(d)]
        for (r, c), a in zip(slots, sol):
            D[r][c] = a
        out.append(RatMatrix.from_rows(D, cols=d))
    return out


def random_derivation(M: SuperAlgebra, rng: random.Random, parity: int = 0) -> RatMatrix:
    basis = derivations(M, parity)
    d = M.dim
    if not basis:
        return RatMatrix.zeros(d, d)
    flat = _combo(rng, [D.entries for D in basis], d * d)
    return RatMatrix(d, d, flat)


def random_character(L: SuperAlgebra, rng: random.Random) -> tuple:
    """A random linear functional on L vanishing on L^2 and on the odd part."""
    L2 = commutator_subspace(L)
    if L.m == 0:
        return L.zero()
    rows = [list(v[: L.m]) for v in L2.even] or [[ZERO] * L.m]
    sols = nullspace(RatMatrix.from_rows(rows, cols=L.m))
    lam = _combo(rng, [list(s) for s in sols], L.m)
    return tuple(lam) + (ZERO,) * L.n


def derivation_action(L: SuperAlgebra, M: SuperAlgebra, lam: tuple, D: RatMatrix) -> ActionTable:
    """^l m = lam(l) D(m)."""
    table = {}
    for i, a in enumerate(lam):
        if not a:
            continue
        for j in range(M.dim):
            table[(i, j)] = tuple(a * x for x in D.column(j))
    return ActionTable(L, M, table)


def random_basis_change(A: SuperAlgebra, rng: random.Random) -> SuperAlgebra:
    """Same algebra in a random parity-preserving integer basis."""
    d = A.dim
    while True:
        P = [[ZERO] * d for _ in range(d)]
        for i in range(d):
            for j in range(d):
                if A.parity(i) == A.parity(j):
                    P[i][j] = _small(rng, -1, 1)
            P[i][i] += 1
        Pm = RatMatrix.from_rows(P, cols=d) if d else RatMatrix.zeros(0, 0)
        try:
            Pinv = inverse(Pm) if d else Pm
        except ZeroDivisionError:
            continue
        break
    cols = [Pm.column(i) for i in range(d)]  # new basis vector i in old coordinates
    sc = {}
    for i in range(d):
        for j in range(d):
            v = bracket(A, cols[i], cols[j])
            if any(v):
                sc[(i, j)] = Pinv.apply(v)
    return SuperAlgebra(A.even_names, A.odd_names, sc)


def random_solvable(rng: random.Random, max_even: int = 4, max_odd: int = 4) -> SuperAlgebra:
    """abelian(1|0) acting on a random nilpotent algebra by a random even derivation."""
    M = random_nilpotent(rng, max_even - 1, max_odd)
    L = SuperAlgebra((_fresh(M, "t"),), (), {})
    D = random_derivation(M, rng, 0)
    return semidirect(M, L, derivation_action(L, M, (Fraction(1),), D))


def random_valid_algebra(rng: random.Random, max_even: int = 4, max_odd: int = 4) -> SuperAlgebra:
    kind = rng.choice(["nilpotent", "nilpotent", "solvable", "sum", "catalog"])
    if kind == "nilpotent":
        A = random_nilpotent(rng, max_even, max_odd)
    elif kind == "solvable" and max_even >= 1:
        A = random_solvable(rng, max_even, max_odd)
    elif kind == "sum":
        A = random_nilpotent(rng, min(2, max_even), min(2, max_odd))
        B = random_nilpotent(rng, max_even - A.m, max_odd - A.n)
        A = direct_sum(A, B)
    else:
        pool = [a for a in _catalog_pool() if a.m <= max_even and a.n <= max_odd]
        A = rng.choice(pool)
    if rng.random() < 0.5:
        A = random_basis_change(A, rng)
    return A


@lru_cache(maxsize=1)
def _catalog_pool() -> tuple[SuperAlgebra, ...]:
    return tuple(e.algebra for e in catalog.enumerate_catalog(6))


def _adjoint_triple(rng: random.Random):
    P = random_nilpotent(rng, 3, 3) if rng.random() < 0.6 else random_solvable(rng, 3, 3)
    names = P.names
    subsets = list(range(1, 2 ** P.dim - 1))
    rng.shuffle(subsets)
    for mask in subsets:
        idx = [k for k in range(P.dim) if mask >> k & 1]
        M = GradedSubspace.of_labels(P, [names[k] for k in idx])
        if not is_graded_ideal(P, M):
            continue
        rest = [names[k] for k in range(P.dim) if k not in idx]
        K = GradedSubspace.of_labels(P, rest)
        if not K.contains(commutator_subspace(P, K, K)):
            continue
        return ActionTable.adjoint(P, rest, [names[k] for k in idx])
    return None


def random_action_triple(rng: random.Random, max_tries: int = 50):
    """(L, M, act) with act passing validate_action."""
    for _ in range(max_tries):
        kind = rng.choice(["character", "adjoint", "odd"])
        act = None
        if kind == "character":
            L = random_valid_algebra(rng, 2, 2)
            M = random_nilpotent(rng, 3, 2)
            act = derivation_action(L, M, random_character(L, rng), random_derivation(M, rng, 0))
        elif kind == "adjoint":
            act = _adjoint_triple(rng)
        else:
            L = SuperAlgebra((), ("u",), {})
            M = random_nilpotent(rng, 3, 3)
            D = random_derivation(M, rng, 1)
            act = derivation_action(L, M, (Fraction(1),), D)
        if act is None or (not act.table and rng.random() < 0.8):
            continue
        if validate_action(act).ok:
            return act.acting, act.acted, act
    L, M = catalog.abelian(1, 0), catalog.heisenberg_odd(1)
    return L, M, ActionTable.trivial(L, M)


__all__ = [
    "central_extension", "cocycles", "derivation_action", "derivations",
    "random_action_triple", "random_basis_change", "random_character",
    "random_derivation", "random_nilpotent", "random_solvable", "random_valid_algebra",
    "subalgebra",
]
