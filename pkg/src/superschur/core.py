"""Lie superalgebras given by structure constants, and subspace constructions.

Basis convention: the even basis comes first, then the odd basis.  Index ``i``
is even iff ``i < m``.  Structure constants live in a sparse table mapping an
ordered index pair ``(i, j)`` to the coordinate vector of ``[e_i, e_j]``.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactla import RatMatrix, in_span, nullspace, reduce_mod, row_basis, to_scalar

Vector = tuple  # tuple of Fractions over the full basis
ZERO = Fraction(0)


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    def __str__(self):
        return self.name.lower()


def koszul(a: int, b: int) -> int:
    """(-1)^(a*b) for parities a, b."""
    return -1 if (a & b) else 1


class AntisymmetryConflict(ValueError):
    """Both orientations of a bracket were given and disagree."""

    def __init__(self, left, right, first, second):
        self.left, self.right = left, right
        self.first, self.second = first, second
        super().__init__(
            f"conflicting brackets [{left},{right}] given at {first} and {second}"
        )


class NotAnIdeal(ValueError):
    pass


# ---------------------------------------------------------------------------
# algebras
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuperAlgebra:
    even_names: tuple[str, ...]
    odd_names: tuple[str, ...]
    sc: Mapping[tuple[int, int], Vector] = field(default_factory=dict, compare=False)
    _key: tuple = field(init=False, repr=False, compare=True)

    def __post_init__(self):
        names = tuple(self.even_names) + tuple(self.odd_names)
        object.__setattr__(self, "even_names", tuple(self.even_names))
        object.__setattr__(self, "odd_names", tuple(self.odd_names))
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate basis labels in {names}")
        d = len(names)
        table = {}
        for (i, j), v in dict(self.sc).items():
            if not (0 <= i < d and 0 <= j < d):
                raise IndexError(f"bracket index ({i},{j}) outside a {d}-dim basis")
            v = tuple(to_scalar(x) for x in v)
            if len(v) != d:
                raise ValueError(f"structure constant vector for ({i},{j}) has length {len(v)}")
            if any(v):
                table[(i, j)] = v
        object.__setattr__(self, "sc", table)
        object.__setattr__(self, "_key", (self.even_names, self.odd_names, tuple(sorted(table.items()))))

    def __hash__(self):
        return hash(self._key)

    # -- construction -----------------------------------------------------
    @classmethod
    def from_brackets(cls, even_names: Sequence[str], odd_names: Sequence[str],
                      brackets: Iterable, where: Sequence | None = None) -> "SuperAlgebra":
        """Build an algebra from one orientation of each bracket.

        ``brackets`` is an iterable of ``(left, right, value)`` where ``left`` and
        ``right`` are labels or indices and ``value`` maps labels/indices to
        scalars.  The other orientation is filled in by super antisymmetry.
        ``where`` optionally names each entry for error messages.
        """
        names = list(even_names) + list(odd_names)
        m = len(even_names)
        pos = {nm: k for k, nm in enumerate(names)}
        d = len(names)

        def idx(x):
            if isinstance(x, int):
                if not 0 <= x < d:
                    raise IndexError(f"basis index {x} out of range")
                return x
            try:
                return pos[x]
            except KeyError:
                raise KeyError(f"unknown basis label {x!r}") from None

        given: dict[tuple[int, int], tuple[Vector, object]] = {}
        for n_entry, (left, right, value) in enumerate(brackets):
            loc = where[n_entry] if where is not None else n_entry
            i, j = idx(left), idx(right)
            v = [ZERO] * d
            for k, c in value.items():
                v[idx(k)] += to_scalar(c)
            v = tuple(v)
            pi, pj = int(i >= m), int(j >= m)
            if (i, j) in given:
                if given[(i, j)][0] != v:
                    raise AntisymmetryConflict(names[i], names[j], given[(i, j)][1], loc)
                continue
            if i == j and pi == 0 and any(v):
                raise AntisymmetryConflict(names[i], names[j], loc, loc)
            mirror = tuple(-koszul(pi, pj) * x for x in v)
            if (j, i) in given and given[(j, i)][0] != mirror:
                raise AntisymmetryConflict(names[i], names[j], given[(j, i)][1], loc)
            given[(i, j)] = (v, loc)
            given[(j, i)] = (mirror, loc)
        return cls(tuple(even_names), tuple(odd_names), {k: v for k, (v, _) in given.items()})

    # -- basic data -------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.even_names)

    @property
    def n(self) -> int:
        return len(self.odd_names)

    @property
    def dim(self) -> int:
        return self.m + self.n

    @property
    def sdim(self) -> tuple[int, int]:
        return (self.m, self.n)

    @property
    def names(self) -> tuple[str, ...]:
        return self.even_names + self.odd_names

    def parity(self, i: int) -> int:
        return 0 if i < self.m else 1

    def indices(self, parity: int) -> range:
        return range(0, self.m) if parity == 0 else range(self.m, self.dim)

    def zero(self) -> Vector:
        return (ZERO,) * self.dim

    def basis_vector(self, i) -> Vector:
        if isinstance(i, str):
            i = self.names.index(i)
        v = [ZERO] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def vector(self, coords: Mapping) -> Vector:
        """Vector from a label (or index) -> scalar mapping."""
        v = [ZERO] * self.dim
        for k, c in coords.items():
            v[self.names.index(k) if isinstance(k, str) else k] += to_scalar(c)
        return tuple(v)

    def sc_of(self, i: int, j: int) -> Vector:
        return self.sc.get((i, j)) or self.zero()

    def is_abelian(self) -> bool:
        return not self.sc

    def vector_parity(self, v: Vector) -> int | None:
        """Parity of a nonzero homogeneous vector, None otherwise (or for zero)."""
        ev = any(v[: self.m])
        od = any(v[self.m:])
        if ev and not od:
            return 0
        if od and not ev:
            return 1
        return None

    def split(self, v: Vector) -> tuple[Vector, Vector]:
        m = self.m
        return (tuple(v[:m]) + (ZERO,) * self.n, (ZERO,) * m + tuple(v[m:]))

    def format_vector(self, v: Vector) -> str:
        terms = []
        for c, nm in zip(v, self.names):
            if not c:
                continue
            if c == 1:
                terms.append(nm)
            elif c == -1:
                terms.append(f"-{nm}")
            else:
                terms.append(f"{c}*{nm}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def brackets(self) -> list[tuple[int, int, Vector]]:
        """Canonical orientation only: i < j, or i == j odd."""
        return sorted((i, j, v) for (i, j), v in self.sc.items()
                      if i < j or (i == j and i >= self.m))

    def same_structure(self, other: "SuperAlgebra") -> bool:
        """Equal dimensions and identical structure constants (labels ignored)."""
        return self.sdim == other.sdim and self.sc == other.sc

    def relabel(self, even_names, odd_names) -> "SuperAlgebra":
        return SuperAlgebra(tuple(even_names), tuple(odd_names), self.sc)

    def __repr__(self):
        return f"SuperAlgebra(dim=({self.m}|{self.n}), basis={list(self.names)}, nonzero={len(self.brackets())})"


def _check_vec(A: SuperAlgebra, v) -> Vector:
    if len(v) != A.dim:
        raise ValueError(f"vector of length {len(v)} over a {A.dim}-dim algebra")
    return tuple(x if type(x) is Fraction else to_scalar(x) for x in v)


def bracket(A: SuperAlgebra, x: Sequence, y: Sequence) -> Vector:
    return _br(A, _check_vec(A, x), _check_vec(A, y))


def _br(A: SuperAlgebra, x: Vector, y: Vector) -> Vector:
    out = [ZERO] * A.dim
    xs = [(i, a) for i, a in enumerate(x) if a]
    ys = [(j, b) for j, b in enumerate(y) if b]
    for i, a in xs:
        for j, b in ys:
            c = A.sc.get((i, j))
            if c is None:
                continue
            ab = a * b
            for k, ck in enumerate(c):
                if ck:
                    out[k] += ab * ck
    return tuple(out)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[str, ...]
    detail: str = ""

    def __str__(self):
        return f"{self.axiom} at ({', '.join(self.witness)}): {self.detail}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def add(self, axiom, witness, detail=""):
        self.violations.append(Violation(axiom, tuple(witness), detail))


def validate(A: SuperAlgebra) -> ValidationReport:
    """Check grading, super antisymmetry and the graded Jacobi identity on basis elements."""
    rep = ValidationReport()
    names = A.names
    d = A.dim
    for (i, j), v in sorted(A.sc.items()):
        p = A.parity(i) ^ A.parity(j)
        bad = [k for k in range(d) if v[k] and A.parity(k) != p]
        if bad:
            rep.add("grading", (names[i], names[j], names[bad[0]]),
                    f"[{names[i]},{names[j]}] has a component of the wrong parity")
    for i in range(d):
        for j in range(i, d):
            s = koszul(A.parity(i), A.parity(j))
            vij, vji = A.sc_of(i, j), A.sc_of(j, i)
            for k in range(d):
                if vji[k] != -s * vij[k]:
                    rep.add("antisymmetry", (names[i], names[j], names[k]),
                            f"c[{names[j]},{names[i]}]^{names[k]} = {vji[k]}, expected {-s * vij[k]}")
                    break
    basis = [A.basis_vector(i) for i in range(d)]
    par = [A.parity(i) for i in range(d)]
    for i in range(d):
        for j in range(i, d):
            for k in range(j, d):
                x, y, z = basis[i], basis[j], basis[k]
                terms = (
                    (koszul(par[i], par[k]), _br(A, x, A.sc_of(j, k))),
                    (koszul(par[j], par[i]), _br(A, y, A.sc_of(k, i))),
                    (koszul(par[k], par[j]), _br(A, z, A.sc_of(i, j))),
                )
                total = [sum(s * t[c] for s, t in terms) for c in range(d)]
                if any(total):
                    rep.add("jacobi", (names[i], names[j], names[k]),
                            f"graded Jacobi sum = {A.format_vector(total)}")
    return rep


# ---------------------------------------------------------------------------
# graded subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedSubspace:
    """A sub-superspace in canonical form: RREF rows per parity block."""

    algebra: SuperAlgebra
    even: tuple[Vector, ...]
    odd: tuple[Vector, ...]

    @classmethod
    def span(cls, A: SuperAlgebra, vectors: Iterable[Sequence]) -> "GradedSubspace":
        """Graded span of ``vectors``: each vector contributes both homogeneous components."""
        ev, od = [], []
        for v in vectors:
            v0, v1 = A.split(_check_vec(A, v))
            if any(v0):
                ev.append(v0)
            if any(v1):
                od.append(v1)
        return cls(A, tuple(row_basis(ev, A.dim)[0]), tuple(row_basis(od, A.dim)[0]))

    @classmethod
    def of_labels(cls, A: SuperAlgebra, labels: Iterable) -> "GradedSubspace":
        return cls.span(A, [A.basis_vector(x) for x in labels])

    @classmethod
    def zero(cls, A: SuperAlgebra) -> "GradedSubspace":
        return cls(A, (), ())

    @classmethod
    def whole(cls, A: SuperAlgebra) -> "GradedSubspace":
        return _whole(A)

    @property
    def basis(self) -> list[tuple[Vector, Parity]]:
        return [(v, Parity.EVEN) for v in self.even] + [(v, Parity.ODD) for v in self.odd]

    @property
    def vectors(self) -> list[Vector]:
        return list(self.even) + list(self.odd)

    @property
    def sdim(self) -> tuple[int, int]:
        return (len(self.even), len(self.odd))

    @property
    def dim(self) -> int:
        return len(self.even) + len(self.odd)

    def _pivots(self, rows):
        return [next(k for k, x in enumerate(r) if x) for r in rows]

    def contains_vector(self, v: Sequence) -> bool:
        v0, v1 = self.algebra.split(_check_vec(self.algebra, v))
        return (in_span(v0, self.even, self._pivots(self.even))
                and in_span(v1, self.odd, self._pivots(self.odd)))

    def contains(self, other: "GradedSubspace") -> bool:
        _same_algebra(self, other)
        return all(self.contains_vector(v) for v in other.vectors)

    def reduce(self, v: Sequence) -> Vector:
        """Canonical representative of ``v`` modulo this subspace."""
        v = reduce_mod(_check_vec(self.algebra, v), self.even, self._pivots(self.even))
        return reduce_mod(v, self.odd, self._pivots(self.odd))

    def pivots(self) -> list[int]:
        return self._pivots(self.even) + self._pivots(self.odd)

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        _same_algebra(self, other)
        return GradedSubspace.span(self.algebra, self.vectors + other.vectors)

    def intersect(self, other: "GradedSubspace") -> "GradedSubspace":
        _same_algebra(self, other)
        A = self.algebra
        out = []
        for mine, theirs in ((self.even, other.even), (self.odd, other.odd)):
            if not mine or not theirs:
                continue
            # a.mine = b.theirs  <=>  (a, -b) in kernel of the stacked transpose
            cols = list(mine) + [tuple(-x for x in t) for t in theirs]
            M = RatMatrix.from_columns(cols, A.dim)
            for sol in nullspace(M):
                v = [ZERO] * A.dim
                for a, r in zip(sol[: len(mine)], mine):
                    if a:
                        v = [x + a * y for x, y in zip(v, r)]
                out.append(tuple(v))
        return GradedSubspace.span(A, out)

    def is_zero(self) -> bool:
        return self.dim == 0

    def __eq__(self, other):
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return (self.algebra == other.algebra and self.even == other.even
                and self.odd == other.odd)

    def __hash__(self):
        return hash((self.even, self.odd))

    def describe(self) -> str:
        A = self.algebra
        return "span{" + ", ".join(A.format_vector(v) for v in self.vectors) + "}"

    def __repr__(self):
        return f"GradedSubspace(({len(self.even)}|{len(self.odd)}), {self.describe()})"


@lru_cache(maxsize=1024)
def _whole(A: SuperAlgebra) -> GradedSubspace:
    return GradedSubspace.span(A, [A.basis_vector(i) for i in range(A.dim)])


def _same_algebra(U, V):
    if U.algebra != V.algebra:
        raise ValueError("subspaces of different algebras")


def _as_subspace(A: SuperAlgebra, U) -> GradedSubspace:
    if U is None:
        return GradedSubspace.whole(A)
    if isinstance(U, SuperAlgebra):
        if U != A:
            raise ValueError("subspaces of different algebras")
        return GradedSubspace.whole(A)
    if U.algebra != A:
        raise ValueError("subspace belongs to a different algebra")
    return U


def commutator_subspace(A: SuperAlgebra, U=None, V=None) -> GradedSubspace:
    """[U, V]; ``None`` (or ``A`` itself) stands for the whole algebra."""
    U, V = _as_subspace(A, U), _as_subspace(A, V)
    whole = _whole(A)
    if U == whole and V == whole:
        return _derived(A)
    if V == whole:
        return GradedSubspace.span(A, [v for u in U.vectors for v in _ad_images(A, u)])
    return GradedSubspace.span(A, [_br(A, u, v) for u in U.vectors for v in V.vectors])


@lru_cache(maxsize=1024)
def _derived(A: SuperAlgebra) -> GradedSubspace:
    return GradedSubspace.span(A, list(A.sc.values()))


def _ad_images(A: SuperAlgebra, u: Vector) -> list[Vector]:
    """[u, e_j] for every basis element e_j."""
    out = []
    for j in range(A.dim):
        acc = None
        for i, a in enumerate(u):
            if not a:
                continue
            c = A.sc.get((i, j))
            if c is None:
                continue
            acc = [x + a * y for x, y in zip(acc, c)] if acc else [a * y for y in c]
        if acc and any(acc):
            out.append(tuple(acc))
    return out


def _annihilator(A: SuperAlgebra, candidates: Sequence[Vector], against: Sequence[Vector]) -> list[Vector]:
    """Combinations of ``candidates`` whose bracket with every ``against`` vanishes."""
    if not candidates:
        return []
    images = [[_br(A, c, w) for c in candidates] for w in against]
    rows = [[img[c][k] for c in range(len(candidates))]
            for img in images for k in range(A.dim)]
    if not rows:
        return list(candidates)
    out = []
    for sol in nullspace(RatMatrix.from_rows(rows, cols=len(candidates))):
        v = [ZERO] * A.dim
        for a, c in zip(sol, candidates):
            if a:
                v = [x + a * y for x, y in zip(v, c)]
        out.append(tuple(v))
    return out


@lru_cache(maxsize=1024)
def center(A: SuperAlgebra) -> GradedSubspace:
    basis = [A.basis_vector(i) for i in range(A.dim)]
    ev = _annihilator(A, [basis[i] for i in A.indices(0)], basis)
    od = _annihilator(A, [basis[i] for i in A.indices(1)], basis)
    return GradedSubspace.span(A, ev + od)


def pair_center(A: SuperAlgebra, N) -> GradedSubspace:
    """Z(N, L) = {n in N : [n, x] = 0 for all x}."""
    N = _as_subspace(A, N)
    if not is_graded_ideal(A, N):
        raise NotAnIdeal(f"{N.describe()} is not a graded ideal")
    basis = [A.basis_vector(i) for i in range(A.dim)]
    return GradedSubspace.span(
        A, _annihilator(A, list(N.even), basis) + _annihilator(A, list(N.odd), basis)
    )


def centralizer(A: SuperAlgebra, x: Sequence) -> GradedSubspace:
    """Homogeneous solutions of [x, v] = 0 (the full centralizer when x is homogeneous)."""
    x = _check_vec(A, x)
    basis = [A.basis_vector(i) for i in range(A.dim)]
    out = []
    for p in (0, 1):
        cand = [basis[i] for i in A.indices(p)]
        if not cand:
            continue
        rows = [[bracket(A, x, c)[k] for c in cand] for k in range(A.dim)]
        for sol in nullspace(RatMatrix.from_rows(rows, cols=len(cand))):
            v = [ZERO] * A.dim
            for a, i in zip(sol, A.indices(p)):
                v[i] = a
            out.append(tuple(v))
    return GradedSubspace.span(A, out)


def lower_central_series(A: SuperAlgebra) -> list[GradedSubspace]:
    """L^1 = L, L^{i+1} = [L^i, L]; ends at the zero subspace or the first repeated term."""
    terms = [GradedSubspace.whole(A)]
    while not terms[-1].is_zero():
        nxt = commutator_subspace(A, terms[-1], None)
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


@lru_cache(maxsize=1024)
def nilpotency_class(A: SuperAlgebra) -> int | None:
    """Least c with L^{c+1} = 0, or None when the series stalls at a nonzero term."""
    series = lower_central_series(A)
    if not series[-1].is_zero():
        return None
    return len(series) - 1


def is_nilpotent(A: SuperAlgebra) -> bool:
    return nilpotency_class(A) is not None


def is_subalgebra(A: SuperAlgebra, U: GradedSubspace) -> bool:
    U = _as_subspace(A, U)
    return U.contains(commutator_subspace(A, U, U))


def is_graded_ideal(A: SuperAlgebra, U: GradedSubspace) -> bool:
    U = _as_subspace(A, U)
    return all(U.contains_vector(w) for u in U.vectors for w in _ad_images(A, u))


def quotient(A: SuperAlgebra, I: GradedSubspace) -> tuple[SuperAlgebra, RatMatrix]:
    """A/I on the non-pivot coordinates of I, plus the projection matrix (dim A/I x dim A)."""
    I = _as_subspace(A, I)
    if not is_graded_ideal(A, I):
        raise NotAnIdeal(f"{I.describe()} is not a graded ideal")
    piv = set(I.pivots())
    keep = [k for k in range(A.dim) if k not in piv]
    newpos = {k: r for r, k in enumerate(keep)}

    def project(v):
        v = I.reduce(v)
        return tuple(v[k] for k in keep)

    sc = {}
    for (i, j), v in A.sc.items():
        if i in newpos and j in newpos:
            pv = project(v)
            if any(pv):
                sc[(newpos[i], newpos[j])] = pv
    even = [A.names[k] for k in keep if k < A.m]
    odd = [A.names[k] for k in keep if k >= A.m]
    Q = SuperAlgebra(tuple(even), tuple(odd), sc)
    proj = RatMatrix.from_columns([project(A.basis_vector(k)) for k in range(A.dim)], len(keep))
    return Q, proj


def subalgebra(A: SuperAlgebra, labels: Iterable) -> SuperAlgebra:
    """The subalgebra spanned by a subset of basis elements, as an algebra in its own right."""
    idx = sorted(A.names.index(x) if isinstance(x, str) else x for x in labels)
    pos = {k: r for r, k in enumerate(idx)}
    sc = {}
    for i in idx:
        for j in idx:
            v = A.sc_of(i, j)
            if any(v[k] for k in range(A.dim) if k not in pos):
                raise ValueError("basis subset is not closed under the bracket")
            w = tuple(v[k] for k in idx)
            if any(w):
                sc[(pos[i], pos[j])] = w
    return SuperAlgebra(tuple(A.names[k] for k in idx if k < A.m),
                        tuple(A.names[k] for k in idx if k >= A.m), sc)


def _unique_names(taken: set[str], names: Sequence[str]) -> list[str]:
    out = []
    for nm in names:
        new = nm
        while new in taken:
            new += "'"
        taken.add(new)
        out.append(new)
    return out


def _block_embedding(A: SuperAlgebra, B: SuperAlgebra):
    """Positions of A's and B's basis inside the concatenated (even A, even B, odd A, odd B) basis."""
    ma, mb = A.m, B.m
    pa = [k if k < ma else k + mb for k in range(A.dim)]
    pb = [k + ma if k < mb else k + A.dim for k in range(B.dim)]
    taken = set(A.names)
    b_even = _unique_names(taken, B.even_names)
    b_odd = _unique_names(taken, B.odd_names)
    even = A.even_names + tuple(b_even)
    odd = A.odd_names + tuple(b_odd)
    return pa, pb, even, odd


def _embed(v, pos, d):
    out = [ZERO] * d
    for k, c in enumerate(v):
        if c:
            out[pos[k]] = c
    return tuple(out)


def direct_sum(A: SuperAlgebra, B: SuperAlgebra) -> SuperAlgebra:
    pa, pb, even, odd = _block_embedding(A, B)
    d = A.dim + B.dim
    sc = {}
    for (i, j), v in A.sc.items():
        sc[(pa[i], pa[j])] = _embed(v, pa, d)
    for (i, j), v in B.sc.items():
        sc[(pb[i], pb[j])] = _embed(v, pb, d)
    return SuperAlgebra(even, odd, sc)


# ---------------------------------------------------------------------------
# actions and semidirect products
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ActionTable:
    """Bilinear action of ``acting`` on ``acted``: table[(l, m)] = coordinates of ^l m in ``acted``."""

    acting: SuperAlgebra
    acted: SuperAlgebra
    table: Mapping[tuple[int, int], Vector] = field(default_factory=dict)

    def __post_init__(self):
        d = self.acted.dim
        clean = {}
        for key, v in dict(self.table).items():
            v = tuple(to_scalar(x) for x in v)
            if len(v) != d:
                raise ValueError("action value has the wrong length")
            if any(v):
                clean[key] = v
        object.__setattr__(self, "table", clean)

    def __hash__(self):
        return hash((self.acting, self.acted, tuple(sorted(self.table.items()))))

    def of(self, i: int, j: int) -> Vector:
        return self.table.get((i, j)) or self.acted.zero()

    def act(self, l: Sequence, x: Sequence) -> Vector:
        out = [ZERO] * self.acted.dim
        for i, a in enumerate(l):
            if not a:
                continue
            for j, b in enumerate(x):
                if not b:
                    continue
                v = self.table.get((i, j))
                if v:
                    ab = a * b
                    out = [o + ab * c for o, c in zip(out, v)]
        return tuple(out)

    @classmethod
    def trivial(cls, L: SuperAlgebra, M: SuperAlgebra) -> "ActionTable":
        return cls(L, M, {})

    @classmethod
    def adjoint(cls, P: SuperAlgebra, acting_labels, acted_labels) -> "ActionTable":
        """Restriction of the adjoint action of P to basis-aligned pieces."""
        L = subalgebra(P, acting_labels)
        M = subalgebra(P, acted_labels)
        lp = [P.names.index(x) for x in L.names]
        mp = [P.names.index(x) for x in M.names]
        table = {}
        for i, pi in enumerate(lp):
            for j, pj in enumerate(mp):
                v = P.sc_of(pi, pj)
                if any(v[k] for k in range(P.dim) if k not in mp):
                    raise ValueError("acted span is not stable under the acting span")
                table[(i, j)] = tuple(v[k] for k in mp)
        return cls(L, M, table)


def validate_action(act: ActionTable) -> ValidationReport:
    rep = ValidationReport()
    L, M = act.acting, act.acted
    ln, mn = L.names, M.names
    lb = [L.basis_vector(i) for i in range(L.dim)]
    mb = [M.basis_vector(j) for j in range(M.dim)]
    for i in range(L.dim):
        for j in range(M.dim):
            v = act.of(i, j)
            p = L.parity(i) ^ M.parity(j)
            if any(v[k] and M.parity(k) != p for k in range(M.dim)):
                rep.add("action grading", (ln[i], mn[j]), "image has the wrong parity")
    for i in range(L.dim):
        for i2 in range(L.dim):
            s = koszul(L.parity(i), L.parity(i2))
            lhs_l = L.sc_of(i, i2)
            for j in range(M.dim):
                lhs = act.act(lhs_l, mb[j])
                r1 = act.act(lb[i], act.of(i2, j))
                r2 = act.act(lb[i2], act.of(i, j))
                rhs = tuple(a - s * b for a, b in zip(r1, r2))
                if lhs != rhs:
                    rep.add("action bracket", (ln[i], ln[i2], mn[j]),
                            "^[l,l']m != ^l(^l'm) - sign ^l'(^lm)")
    for i in range(L.dim):
        for j in range(M.dim):
            s = koszul(L.parity(i), M.parity(j))
            for j2 in range(M.dim):
                lhs = act.act(lb[i], M.sc_of(j, j2))
                r1 = bracket(M, act.of(i, j), mb[j2])
                r2 = bracket(M, mb[j], act.of(i, j2))
                rhs = tuple(a + s * b for a, b in zip(r1, r2))
                if lhs != rhs:
                    rep.add("action derivation", (ln[i], mn[j], mn[j2]),
                            "^l[m,m'] != [^lm,m'] + sign [m,^lm']")
    return rep


class InvalidAction(ValueError):
    pass


def semidirect(M: SuperAlgebra, L: SuperAlgebra, act: ActionTable) -> SuperAlgebra:
    """M x| L on the basis (even M, even L, odd M, odd L)."""
    if act.acting != L or act.acted != M:
        raise InvalidAction("action table does not match the given algebras")
    rep = validate_action(act)
    if not rep.ok:
        raise InvalidAction(f"invalid action: {rep.violations[0]}")
    pm, pl, even, odd = _block_embedding(M, L)
    d = M.dim + L.dim
    sc = {}

    def put(i, j, v):
        if any(v):
            sc[(i, j)] = v

    for (i, j), v in M.sc.items():
        put(pm[i], pm[j], _embed(v, pm, d))
    for (i, j), v in L.sc.items():
        put(pl[i], pl[j], _embed(v, pl, d))
    for li in range(L.dim):
        for mj in range(M.dim):
            v = act.of(li, mj)
            if not any(v):
                continue
            ev = _embed(v, pm, d)
            s = koszul(M.parity(mj), L.parity(li))
            put(pl[li], pm[mj], ev)
            put(pm[mj], pl[li], tuple(-s * x for x in ev))
    return SuperAlgebra(even, odd, sc)


def semidirect_parts(M: SuperAlgebra, L: SuperAlgebra, S: SuperAlgebra) -> tuple[GradedSubspace, GradedSubspace]:
    """The images of M and L inside ``S = semidirect(M, L, act)``."""
    pm, pl, _, _ = _block_embedding(M, L)
    return (GradedSubspace.span(S, [S.basis_vector(k) for k in pm]),
            GradedSubspace.span(S, [S.basis_vector(k) for k in pl]))
