"""Nanowords and their moves: a guided tour.

A nanoword is a Gauss word (every letter appears exactly twice) plus a type
assignment letter -> {a, b}.  It encodes a closed curve with marked
self-crossings; two words describe the same curve up to homotopy exactly when
the moves below connect them.
"""

from vstring import (
    MoveKind,
    MoveTrace,
    apply_move,
    canonical_relabel,
    find_sites,
    parse,
    shift,
    shift_canonical,
)

# The compact grammar: word, bar, one type per letter in alphabetical order.
w = parse("ABCABC|aba")
print("word:", w, " rank:", w.rank, " types:", w.types())

# Renaming letters does not change anything; the canonical labelling renames
# letters A, B, C, ... by first occurrence.
x = parse("X Y Z X Y Z | X=a Y=b Z=a")
print("isomorphic to", x, "->", canonical_relabel(x) == w)

# The shift move slides the base point past the first letter; the moved
# letter changes type.
print("shift:", shift(parse("ABAB|aa")))
print("shift-orbit canonical form:", shift_canonical(shift(parse("ABAB|aa"))))

# Moves rewrite the word locally.  Every applicable site can be enumerated.
print()
print("H1- sites in AABB|ab:", [str(s) for s in find_sites(parse('AABB|ab'), MoveKind.H1_DOWN)])
site = find_sites(parse("AABB|ab"), MoveKind.H1_DOWN)[0]
print("applying the first one:", apply_move(parse("AABB|ab"), site))

# The doubled trefoil word is homotopically trivial; here is an explicit
# two-step witness, replayed and checked move by move.
trefoil = parse("ABCABC|aba")
s1 = find_sites(trefoil, MoveKind.H2A_DOWN)[0]
step2_input = apply_move(trefoil, s1)
s2 = find_sites(step2_input, MoveKind.H1_DOWN)[0]
trace = MoveTrace(trefoil, (s1, s2))
print()
print("reducing", trefoil)
for site, stage in zip(trace.steps, trace.replay()[1:]):
    print("  ", site, "->", stage)
