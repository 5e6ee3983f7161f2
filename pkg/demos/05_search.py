"""Bounded homotopy search: explicit witnesses instead of bare claims.

Search explores shift-orbit canonical forms under the move system.  It
returns replayable traces for positive answers and invariant evidence for
negative ones; budget exhaustion is an honest "unknown".
"""

from vstring import (
    SearchBudget,
    equivalent_bounded,
    gen_alpha_n,
    gen_gamma_pq,
    parse,
    reduce_bounded,
)

# Words of the weight-zero family are trivial for n = 3, 4, 6 ...
for n in (3, 4, 6):
    word = gen_alpha_n(n)
    reduced, trace = reduce_bounded(word)
    print(f"weight-zero family n={n}: rank {word.rank} -> {reduced.rank}"
          f" in {len(trace.steps)} steps")

# ... and provably nontrivial for n = 5 (rho = 5 blocks any reduction).
reduced, _ = reduce_bounded(gen_alpha_n(5), SearchBudget(1, 20_000, 32))
print("n=5 best rank found:", reduced.rank)

# Equivalence with a verified certificate: this pair differs by one move.
res = equivalent_bounded(parse("ABCBDCAD|aabb"), parse("BACDBCDA|aabb"))
print("\npair verdict:", res.verdict)
for site, stage in zip(res.trace.steps, res.trace.replay()[1:]):
    print("  ", site, "->", stage)

# Negative answers carry the separating invariant.
res = equivalent_bounded(parse("0"), parse("ABABCDCD|aaaa"))
print("\nvs the square word:", res.verdict, res.report.evidence)

# Budgets make everything terminate; too small a budget yields "unknown".
res = equivalent_bounded(gen_alpha_n(6), parse("0"), SearchBudget(0, 4, 2))
print("tiny budget on a hard pair:", res.verdict)
res = equivalent_bounded(gen_alpha_n(6), parse("0"))
print("default budget on the same pair:", res.verdict,
      f"({len(res.trace.steps)} steps)")
