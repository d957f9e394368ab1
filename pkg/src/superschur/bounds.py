"""Closed-form dimension bounds and Heisenberg multiplier formulas."""

from __future__ import annotations

from .catalog import heisenberg_even_multiplier, heisenberg_odd_multiplier


def _total(d) -> int:
    if isinstance(d, int):
        return d
    p, q = d
    return p + q


def nayak_bound(m: int, n: int) -> int:
    """((m+n)^2 + (n-m)) / 2; equals m(m-1)/2 when n = 0."""
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    return ((m + n) ** 2 + (n - m)) // 2


def moneyhun_bound(m: int) -> int:
    return m * (m - 1) // 2


def commutator_bound(dim_n_mod_z: tuple[int, int], dim_l_over_n) -> int:
    """Upper bound on dim [N,L] from dim N/Z(N,L) = (m|n) and dim L/N."""
    m, n = dim_n_mod_z
    return nayak_bound(m, n) + (m + n) * _total(dim_l_over_n)


def pair_multiplier_bound(dim_n: tuple[int, int], dim_l_over_n, dim_nl: int = 0,
                          include_commutator: bool = True) -> int:
    """Bound on dim M(N,L); the commutator-corrected form subtracts dim [N,L]."""
    m, n = dim_n
    value = nayak_bound(m, n) + (m + n) * _total(dim_l_over_n)
    return value - dim_nl if include_commutator else value


def heisenberg_multiplier_formula(kind: str, m: int = 0, n: int = 0) -> int:
    """Known dim M for the Heisenberg families: kind 'even' uses (m, n), kind 'odd' uses n."""
    if kind == "even":
        return heisenberg_even_multiplier(m, n)
    if kind == "odd":
        return heisenberg_odd_multiplier(n)
    raise ValueError(f"unknown Heisenberg kind {kind!r}")
