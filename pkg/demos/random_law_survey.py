"""Survey: algebraic laws over a population of random categories.

Generates random order (thin) and free path categories, then checks on
every instance that basis vectors square to 1, orthogonal pairs
anticommute, and BFS norms agree with a brute-force factorization search.
Run with: python3 demos/random_law_survey.py
"""

import random

from catgeo import atomic_basis, build_free, build_thin, clifford_report, compute_norms

rng = random.Random(7)


def random_thin():
    n = rng.randint(2, 8)
    objects = ["a%d" % i for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    m = rng.randint(0, min(14, len(pairs)))
    return build_thin(objects, [("g%d" % k, "a%d" % i, "a%d" % j) for k, (i, j) in enumerate(pairs[:m])])


def random_free():
    n = rng.randint(2, 6)
    objects = ["a%d" % i for i in range(n)]
    gens = []
    for k in range(rng.randint(0, 8)):
        i = rng.randint(0, n - 2)
        j = rng.randint(i + 1, n - 1)
        gens.append(("g%d" % k, "a%d" % i, "a%d" % j))
    return build_free(objects, gens)


population = [random_thin() for _ in range(100)] + [random_free() for _ in range(50)]

holds = 0
arrow_total = 0
basis_total = 0
for cat in population:
    basis = atomic_basis(cat)
    norms = compute_norms(cat, basis)
    report = clifford_report(cat, norms, basis)
    holds += report.holds
    arrow_total += len(cat.non_identity_arrows())
    basis_total += len(basis)

print("categories checked:   %d" % len(population))
print("total arrows:         %d (of which %d atomic)" % (arrow_total, basis_total))
print("Clifford laws hold on %d/%d instances" % (holds, len(population)))
