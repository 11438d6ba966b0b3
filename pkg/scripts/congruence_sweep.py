"""Random curves: check L(T) mod p from matrices against brute-force point counts.

    python scripts/congruence_sweep.py --curves 200 --seed 1
"""

import argparse
import collections
import random
import time

from cartier.curve import random_curve
from cartier.gf import FieldContext
from cartier.invariants import a_number, is_superspecial, l_poly_mod_p, p_rank
from cartier.oracle import l_polynomial_exact, p_rank_oracle

FIELDS = {3: (3, 1), 5: (5, 1), 7: (7, 1), 9: (3, 2), 25: (5, 2), 27: (3, 3)}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--curves", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--genus", type=int, nargs="+", default=[1, 2])
    parser.add_argument("--q", type=int, nargs="+", default=sorted(FIELDS))
    args = parser.parse_args()

    rng = random.Random(args.seed)
    fields = {q: FieldContext(*FIELDS[q]) for q in args.q}
    tally = collections.Counter()
    failures = 0
    start = time.perf_counter()
    for _ in range(args.curves):
        q = rng.choice(args.q)
        X = random_curve(fields[q], rng.choice(args.genus), rng)
        ok = l_polynomial_exact(X).mod_p(X.p) == l_poly_mod_p(X) and p_rank(X) == p_rank_oracle(X)
        failures += not ok
        tally[(q, X.g, p_rank(X), a_number(X), is_superspecial(X))] += 1
    elapsed = time.perf_counter() - start

    print(f"{'q':>3} {'g':>2} {'p-rank':>6} {'a-num':>5} {'supersp':>7} {'count':>5}")
    for (q, g, r, a, ss), n in sorted(tally.items()):
        print(f"{q:>3} {g:>2} {r:>6} {a:>5} {str(ss):>7} {n:>5}")
    print(f"{args.curves} curves, {failures} disagreements, {elapsed:.1f}s")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
