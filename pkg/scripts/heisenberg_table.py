"""Tabulate dim M for the Heisenberg families next to their closed forms."""

import argparse
from dataclasses import dataclass

from superschur import catalog
from superschur.bounds import heisenberg_multiplier_formula, nayak_bound
from superschur.homology import multiplier_dim


@dataclass
class TableConfig:
    max_even_total: int = 4   # m + n for the even-center family
    max_odd: int = 3


def even_rows(cfg: TableConfig):
    for total in range(1, cfg.max_even_total + 1):
        for m in range(total + 1):
            n = total - m
            A = catalog.heisenberg_even(m, n)
            got, rep = multiplier_dim(A)
            yield f"Heven({m},{n})", A.sdim, got, heisenberg_multiplier_formula("even", m, n), rep


def odd_rows(cfg: TableConfig):
    for n in range(1, cfg.max_odd + 1):
        A = catalog.heisenberg_odd(n)
        got, rep = multiplier_dim(A)
        yield f"Hodd({n})", A.sdim, got, heisenberg_multiplier_formula("odd", n=n), rep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-even-total", type=int, default=TableConfig.max_even_total)
    ap.add_argument("--max-odd", type=int, default=TableConfig.max_odd)
    cfg = TableConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})

    print(f"{'algebra':<12} {'dim':<7} {'dim M':>5} {'formula':>7} {'bound':>5} {'t':>3}  ranks")
    bad = 0
    for name, sd, got, want, rep in list(even_rows(cfg)) + list(odd_rows(cfg)):
        flag = "" if got == want else "  MISMATCH"
        bad += got != want
        print(f"{name:<12} ({sd[0]}|{sd[1]})".ljust(20)
              + f" {got:>5} {want:>7} {nayak_bound(*sd):>5} {rep.t:>3}  d2={rep.rank_d2} d3={rep.rank_d3}{flag}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
