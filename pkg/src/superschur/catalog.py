"""Named algebra families and the enumerated test population."""

from __future__ import annotations

from dataclasses import dataclass

from .core import SuperAlgebra, direct_sum


def abelian(m: int, n: int) -> SuperAlgebra:
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    return SuperAlgebra(tuple(f"x{i}" for i in range(1, m + 1)),
                        tuple(f"y{j}" for j in range(1, n + 1)), {})


def heisenberg_even(m: int, n: int) -> SuperAlgebra:
    """Even-center Heisenberg superalgebra of dimension (2m+1|n)."""
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError("heisenberg_even needs m, n >= 0 and m + n >= 1")
    even = [f"x{i}" for i in range(1, 2 * m + 1)] + ["z"]
    odd = [f"y{j}" for j in range(1, n + 1)]
    brackets = [(f"x{i}", f"x{m + i}", {"z": 1}) for i in range(1, m + 1)]
    brackets += [(f"y{j}", f"y{j}", {"z": 1}) for j in range(1, n + 1)]
    return SuperAlgebra.from_brackets(even, odd, brackets)


def heisenberg_lie(m: int) -> SuperAlgebra:
    if m < 1:
        raise ValueError("heisenberg_lie needs m >= 1")
    return heisenberg_even(m, 0)


def heisenberg_odd(n: int) -> SuperAlgebra:
    """Odd-center Heisenberg superalgebra of dimension (n|n+1)."""
    if n < 1:
        raise ValueError("heisenberg_odd needs n >= 1")
    even = [f"x{i}" for i in range(1, n + 1)]
    odd = [f"y{i}" for i in range(1, n + 1)] + ["z"]
    brackets = [(f"x{i}", f"y{i}", {"z": 1}) for i in range(1, n + 1)]
    return SuperAlgebra.from_brackets(even, odd, brackets)


def nonabelian_11(kind: str) -> SuperAlgebra:
    """The two non-abelian (1|1) superalgebras: [x,y] = y, or [y,y] = x."""
    if kind == "solvable":
        return SuperAlgebra.from_brackets(["x"], ["y"], [("x", "y", {"y": 1})])
    if kind == "heisenberg":
        return SuperAlgebra.from_brackets(["x"], ["y"], [("y", "y", {"x": 1})])
    raise ValueError(f"unknown (1|1) kind {kind!r}")


# -- known multiplier dimensions -------------------------------------------

def abelian_multiplier(m: int, n: int) -> int:
    return ((m + n) ** 2 + (n - m)) // 2


def heisenberg_even_multiplier(m: int, n: int) -> int:
    if m + n < 1 or m < 0 or n < 0:
        raise ValueError("out-of-family parameters")
    if (m, n) == (0, 1):
        return 0
    if (m, n) == (1, 0):
        return 2
    return 2 * m * m - m - 1 + 2 * m * n + n * (n + 1) // 2


def heisenberg_odd_multiplier(n: int) -> int:
    if n < 1:
        raise ValueError("out-of-family parameters")
    return 2 if n == 1 else 2 * n * n - 1


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    family: str
    params: tuple[int, ...]
    algebra: SuperAlgebra
    expected: int | None = None
    provenance: str | None = None

    @property
    def dim(self) -> int:
        return self.algebra.dim


def _base_entries(max_dim: int) -> list[CatalogEntry]:
    out = []
    for total in range(1, max_dim + 1):
        for m in range(total, -1, -1):
            n = total - m
            out.append(CatalogEntry(f"abelian({m}|{n})", "abelian", (m, n), abelian(m, n),
                                    abelian_multiplier(m, n), "abelian equality case of the super exterior square bound"))
    for m in range(1, (max_dim - 1) // 2 + 1):
        out.append(CatalogEntry(f"H({m})", "heisenberg_lie", (m,), heisenberg_lie(m),
                                heisenberg_even_multiplier(m, 0), "Heisenberg even-center formula, n = 0"))
    for m in range(0, (max_dim - 1) // 2 + 1):
        for n in range(1, max_dim - 2 * m):
            out.append(CatalogEntry(f"Heven({m},{n})", "heisenberg_even", (m, n), heisenberg_even(m, n),
                                    heisenberg_even_multiplier(m, n), "Heisenberg even-center formula"))
    for n in range(1, (max_dim - 1) // 2 + 1):
        out.append(CatalogEntry(f"Hodd({n})", "heisenberg_odd", (n,), heisenberg_odd(n),
                                heisenberg_odd_multiplier(n), "Heisenberg odd-center formula"))
    if max_dim >= 2:
        out.append(CatalogEntry("solvable(1|1)", "nonabelian_11", (), nonabelian_11("solvable")))
    return out


def enumerate_catalog(max_dim: int) -> list[CatalogEntry]:
    """Named family members of total dimension <= max_dim, then their pairwise direct sums.

    Sums of two abelian algebras are skipped (they are abelian family members).
    """
    if max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    base = _base_entries(max_dim)
    out = list(base)
    for a in range(len(base)):
        for b in range(a, len(base)):
            A, B = base[a], base[b]
            if A.dim + B.dim > max_dim:
                continue
            if A.family == "abelian" and B.family == "abelian":
                continue
            out.append(CatalogEntry(f"{A.id}+{B.id}", "direct_sum", A.params + B.params,
                                    direct_sum(A.algebra, B.algebra)))
    return out


FAMILIES = {
    "abelian": lambda m, n, kind: abelian(m, n),
    "heisenberg_lie": lambda m, n, kind: heisenberg_lie(m),
    "heisenberg_even": lambda m, n, kind: heisenberg_even(m, n),
    "heisenberg_odd": lambda m, n, kind: heisenberg_odd(n),
    "nonabelian_11": lambda m, n, kind: nonabelian_11(kind),
}


def build_family(family: str, m: int = 0, n: int = 0, kind: str = "heisenberg") -> SuperAlgebra:
    try:
        ctor = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return ctor(m, n, kind)
