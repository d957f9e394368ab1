"""Survey the defect t over the catalog and its complemented pairs.

Prints the distribution of t(L) among nilpotent entries, the entries with
small defect, and how often each dichotomy clause explains a defect-1 pair.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from superschur import catalog
from superschur.checks import check_pair_defect_one, complemented_pairs, defect_t
from superschur.core import is_nilpotent


@dataclass
class SurveyConfig:
    max_dim: int = 6
    show_up_to: int = 2     # list entries whose defect is at most this


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-dim", type=int, default=SurveyConfig.max_dim)
    ap.add_argument("--show-up-to", type=int, default=SurveyConfig.show_up_to)
    cfg = SurveyConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})

    entries = [e for e in catalog.enumerate_catalog(cfg.max_dim) if is_nilpotent(e.algebra)]
    dist = Counter()
    for e in entries:
        t = defect_t(e.algebra)
        dist[t] += 1
        if t <= cfg.show_up_to and not e.algebra.is_abelian():
            print(f"  t = {t}: {e.id}  dim ({e.algebra.m}|{e.algebra.n})")
    print(f"nilpotent entries: {len(entries)}")
    for t in sorted(dist):
        print(f"  t = {t:>2}: {dist[t]}")

    clauses, failures, total = Counter(), 0, 0
    for e in entries:
        for p in complemented_pairs(e.algebra):
            total += 1
            res = check_pair_defect_one(p)
            if res.applicable:
                clauses[res.detail] += 1
            failures += not res.passed
    print(f"complemented pairs: {total}, defect-1 pairs: {sum(clauses.values())}, failures: {failures}")
    for clause, k in clauses.most_common():
        print(f"  {clause}: {k}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
