"""
Fuzzing with seeded instances and mutants
=========================================

The generator builds a valid instance for each case from a seed, and
mutants that lose part of their required zero region.  Running the
classifier over a batch is a cheap end-to-end check.
"""

from collections import Counter

from pexider import GenSpec, classify, dumps_instance, generate

tally = Counter()
for case in ("extremal", "two_sided", "one_constant", "mutant"):
    for seed in range(200):
        tally[case, classify(generate(GenSpec(case, seed))).case] += 1

for (wanted, got), n in sorted(tally.items()):
    print(f"{wanted:>13} -> {got:<20} {n}")

# the same seed always gives the same bytes
print(dumps_instance(generate(GenSpec("two_sided", 42))))
