"""Nanowords: Gauss words with two-valued letter types, and their rewriting moves.

A *Gauss word* is a finite sequence in which every letter that occurs does so
exactly twice.  A *nanoword* is a Gauss word together with a type assignment
``letter -> {a, b}``.  Nanowords encode based virtual string diagrams: the
letters are the real crossings read off along the curve, and the type records
which way the curve recrosses itself at that crossing.

Two nanowords represent the same virtual string exactly when they are related
by a finite sequence of

* isomorphisms (letter renamings),
* shift moves ``AxAy <-> xA'yA'`` (base-point slide; the moved letter changes
  type), and
* homotopy moves::

      H1:  xAAy      <-> xy          (any type)
      H2:  xAByBAz   <-> xyz         (|A| != |B|)
      H3:  xAByACzBCt <-> xBAyCAzCBt (|A| = |B| = |C|)

together with the derived moves H2a, H3a, H3b and H3c (consequences of the
three above)::

      H2a: xAByABz   <-> xyz          (|A| != |B|)
      H3a: xAByCAzBCt <-> xBAyACzCBt  (|A| = |C| != |B|)
      H3b: xAByCAzCBt <-> xBAyACzBCt  (|A| = |B| != |C|)
      H3c: xAByACzCBt <-> xBAyCAzBCt  (|B| = |C| != |A|)

Here upper-case letters stand for single letters and x, y, z, t for arbitrary
(possibly empty) subsequences.  All values in this module are immutable and
all operations are pure functions.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "TYPE_A",
    "TYPE_B",
    "NanowordError",
    "MoveError",
    "Nanoword",
    "EMPTY",
    "parse",
    "canonical_relabel",
    "isomorphic",
    "shift",
    "shift_inv",
    "shift_orbit",
    "shift_canonical",
    "shift_canonical_text",
    "shifts_to_canonical",
    "MoveKind",
    "MoveSite",
    "MoveTrace",
    "find_sites",
    "apply_move",
    "invert_steps",
    "fresh_names",
    "continuation_names",
    "relabel_disjoint",
]

TYPE_A = "a"
TYPE_B = "b"

_NAME_RE = re.compile(r"[A-Z][0-9._]*\Z")
_COMPACT_WORD_RE = re.compile(r"[A-Z]+\Z")
_TYPES_RE = re.compile(r"[ab]+\Z")


class NanowordError(ValueError):
    """Raised for malformed nanoword text or invalid constructions."""


class MoveError(ValueError):
    """Raised when a move site does not match the word it is applied to."""


def _other(t: str) -> str:
    return TYPE_B if t == TYPE_A else TYPE_A


class Nanoword:
    """An immutable Gauss word plus letter-type assignment.

    ``word`` is the tuple of letter names in traversal order; every name
    occurring in it occurs exactly twice.  ``rank`` is the number of distinct
    letters, i.e. half the word length.
    """

    __slots__ = ("word", "_tmap", "_letters", "_occ", "_hash", "_canon_text")

    def __init__(self, word: Iterable[str], types: Mapping[str, str]):
        word = tuple(word)
        occ: dict[str, list[int]] = {}
        for i, name in enumerate(word):
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise NanowordError(f"invalid letter name {name!r}")
            occ.setdefault(name, []).append(i)
        for name, positions in occ.items():
            if len(positions) != 2:
                raise NanowordError(
                    f"letter {name} occurs {len(positions)} time(s), expected 2"
                )
        tmap = dict(types)
        if set(tmap) != set(occ):
            missing = set(occ) - set(tmap)
            extra = set(tmap) - set(occ)
            raise NanowordError(
                f"type assignment does not match letters (missing={sorted(missing)},"
                f" extra={sorted(extra)})"
            )
        for name, t in tmap.items():
            if t not in (TYPE_A, TYPE_B):
                raise NanowordError(f"invalid type {t!r} for letter {name}")
        self.word = word
        self._tmap = tmap
        self._letters = tuple(sorted(occ))
        self._occ = {name: (p[0], p[1]) for name, p in occ.items()}
        self._hash: int | None = None
        self._canon_text: str | None = None

    @property
    def rank(self) -> int:
        return len(self._letters)

    @property
    def letters(self) -> tuple[str, ...]:
        """Letter names in lexicographic order."""
        return self._letters

    def type_of(self, name: str) -> str:
        return self._tmap[name]

    def types(self) -> dict[str, str]:
        """A copy of the letter -> type assignment."""
        return dict(self._tmap)

    def occurrences(self, name: str) -> tuple[int, int]:
        """Positions of the two occurrences of ``name``, in order."""
        return self._occ[name]

    def text(self) -> str:
        """Printable form; ``parse(w.text()) == w``.

        Compact (``ABCABC|aba``) when every name is a single letter, with the
        type string listing types in lexicographic letter order; extended
        (``X.1 Y X.1 Y | X.1=a Y=b``) otherwise.  The empty word prints as
        ``0``.
        """
        if not self.word:
            return "0"
        if all(len(name) == 1 for name in self._letters):
            return "".join(self.word) + "|" + "".join(
                self._tmap[name] for name in self._letters
            )
        tokens = " ".join(self.word)
        binds = " ".join(f"{name}={self._tmap[name]}" for name in self._letters)
        return f"{tokens} | {binds}"

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Nanoword({self.text()!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Nanoword):
            return NotImplemented
        return self.word == other.word and self._tmap == other._tmap

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.word, tuple(sorted(self._tmap.items()))))
        return self._hash


EMPTY = Nanoword((), {})


def parse(text: str) -> Nanoword:
    """Parse nanoword text in compact or extended form (``0`` = empty word)."""
    s = text.strip()
    if s == "0":
        return EMPTY
    if "|" not in s:
        raise NanowordError(f"missing '|' separator in {text!r}")
    left, right = s.split("|", 1)
    left, right = left.strip(), right.strip()
    if not left:
        raise NanowordError("empty word with nonempty type string")
    if " " not in left and _COMPACT_WORD_RE.match(left):
        word = tuple(left)
        letters = sorted(set(word))
        if not _TYPES_RE.match(right):
            raise NanowordError(f"invalid type string {right!r}")
        if len(right) != len(letters):
            raise NanowordError(
                f"type string length {len(right)} != rank {len(letters)}"
            )
        return Nanoword(word, dict(zip(letters, right)))
    word = tuple(left.split())
    tmap: dict[str, str] = {}
    for item in right.split():
        if "=" not in item:
            raise NanowordError(f"invalid type binding {item!r}")
        name, _, t = item.partition("=")
        if name in tmap:
            raise NanowordError(f"duplicate type binding for {name}")
        if t not in (TYPE_A, TYPE_B):
            raise NanowordError(f"invalid type {t!r} in binding {item!r}")
        tmap[name] = t
    return Nanoword(word, tmap)


def _canonical_name(i: int) -> str:
    if i < 26:
        return chr(65 + i)
    return f"{chr(65 + i % 26)}.{i // 26}"


def canonical_relabel(alpha: Nanoword) -> Nanoword:
    """Rename letters A, B, C, ... in order of first occurrence.

    Idempotent, and the result is isomorphic to the input.
    """
    mapping: dict[str, str] = {}
    for name in alpha.word:
        if name not in mapping:
            mapping[name] = _canonical_name(len(mapping))
    return Nanoword(
        (mapping[name] for name in alpha.word),
        {new: alpha.type_of(old) for old, new in mapping.items()},
    )


def isomorphic(alpha: Nanoword, beta: Nanoword) -> bool:
    """True iff the words agree after canonical relabelling."""
    return canonical_relabel(alpha) == canonical_relabel(beta)


def shift(alpha: Nanoword) -> Nanoword:
    """Move the first letter to the end, flipping its type (base-point slide)."""
    if not alpha.word:
        return alpha
    moved = alpha.word[0]
    tmap = alpha.types()
    tmap[moved] = _other(tmap[moved])
    return Nanoword(alpha.word[1:] + (moved,), tmap)


def shift_inv(alpha: Nanoword) -> Nanoword:
    """Move the last letter to the front, flipping its type; inverse of shift."""
    if not alpha.word:
        return alpha
    moved = alpha.word[-1]
    tmap = alpha.types()
    tmap[moved] = _other(tmap[moved])
    return Nanoword((moved,) + alpha.word[:-1], tmap)


def shift_orbit(alpha: Nanoword) -> list[Nanoword]:
    """All words reachable by iterated shifts, starting with ``alpha``.

    The orbit is finite (iterating the shift 2*len(word) times is the
    identity) and closed under inverse shifts.
    """
    orbit = [alpha]
    current = shift(alpha)
    while current != alpha:
        orbit.append(current)
        current = shift(current)
    return orbit


def shift_canonical(alpha: Nanoword) -> Nanoword:
    """Canonical representative of the shift orbit.

    The lexicographically least printed form among the canonical relabellings
    of all shifts of ``alpha``.  Used wherever base-point independence is
    needed (search states, tabulation keys).
    """
    return min(
        (canonical_relabel(w) for w in shift_orbit(alpha)),
        key=lambda w: w.text(),
    )


def shift_canonical_text(alpha: Nanoword) -> str:
    if alpha._canon_text is None:
        alpha._canon_text = shift_canonical(alpha).text()
    return alpha._canon_text


def shifts_to_canonical(alpha: Nanoword) -> int:
    """Least k >= 0 with canonical_relabel(shift^k(alpha)) == shift_canonical(alpha)."""
    target = shift_canonical_text(alpha)
    current = alpha
    k = 0
    while canonical_relabel(current).text() != target:
        current = shift(current)
        k += 1
    return k


# ---------------------------------------------------------------------------
# Moves


class MoveKind(enum.Enum):
    SHIFT = "shift"
    SHIFT_INV = "shift-inv"
    H1_DOWN = "H1-"
    H1_UP = "H1+"
    H2_DOWN = "H2-"
    H2_UP = "H2+"
    H2A_DOWN = "H2a-"
    H2A_UP = "H2a+"
    H3 = "H3"
    H3A = "H3a"
    H3B = "H3b"
    H3C = "H3c"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


#: Moves that do not change the rank.
RANK_PRESERVING = (MoveKind.H3, MoveKind.H3A, MoveKind.H3B, MoveKind.H3C)
#: Letter-removing directions.
RANK_DECREASING = (MoveKind.H1_DOWN, MoveKind.H2_DOWN, MoveKind.H2A_DOWN)
#: Letter-adding directions (infinite-branching under iteration; cap in search).
RANK_INCREASING = (MoveKind.H1_UP, MoveKind.H2_UP, MoveKind.H2A_UP)


@dataclass(frozen=True)
class MoveSite:
    """A concrete application site for a move.

    ``positions`` index into the word being rewritten: the letters removed or
    swapped for letter-removing and H3-family moves, insertion slots for
    letter-adding moves, and empty for shifts.  ``letters``/``types`` carry
    the names and types of letters introduced by a letter-adding move; empty
    ``letters`` means fresh names are chosen automatically.
    """

    kind: MoveKind
    positions: tuple[int, ...] = ()
    letters: tuple[str, ...] = ()
    types: tuple[str, ...] = ()

    def __str__(self) -> str:
        parts = [self.kind.value]
        if self.positions:
            parts.append("@" + ",".join(map(str, self.positions)))
        if self.letters:
            parts.append("+" + ",".join(self.letters))
        if self.types:
            parts.append("(" + ",".join(self.types) + ")")
        return "".join(parts)


# H3-family pattern tables.  A site is three disjoint adjacent letter pairs
# (u1 v1) .. (u2 v2) .. (u3 v3); each kind matches two mirror-image letter
# patterns (applying the move swaps each pair in place, which maps one
# pattern onto the other).  Each entry gives the equality structure and how
# to read off the schema roles (A, B, C).
_H3_PATTERNS: dict[MoveKind, tuple[tuple[tuple[tuple[int, int], ...], tuple[int, int, int]], ...]] = {}


def _build_h3_patterns() -> None:
    # Pair slots are numbered u1=0 v1=1 u2=2 v2=3 u3=4 v3=5.
    tables = {
        MoveKind.H3: (
            (((0, 2), (1, 4), (3, 5)), (0, 1, 3)),   # (AB)(AC)(BC)
            (((1, 3), (0, 5), (2, 4)), (1, 0, 2)),   # (BA)(CA)(CB)
        ),
        MoveKind.H3A: (
            (((0, 3), (1, 4), (2, 5)), (0, 1, 2)),   # (AB)(CA)(BC)
            (((1, 2), (0, 5), (3, 4)), (1, 0, 3)),   # (BA)(AC)(CB)
        ),
        MoveKind.H3B: (
            (((0, 3), (1, 5), (2, 4)), (0, 1, 2)),   # (AB)(CA)(CB)
            (((1, 2), (0, 4), (3, 5)), (1, 0, 3)),   # (BA)(AC)(BC)
        ),
        MoveKind.H3C: (
            (((0, 2), (1, 5), (3, 4)), (0, 1, 3)),   # (AB)(AC)(CB)
            (((1, 3), (0, 4), (2, 5)), (1, 0, 2)),   # (BA)(CA)(BC)
        ),
    }
    _H3_PATTERNS.update(tables)


_build_h3_patterns()


def _h3_type_ok(kind: MoveKind, ta: str, tb: str, tc: str) -> bool:
    if kind is MoveKind.H3:
        return ta == tb == tc
    if kind is MoveKind.H3A:
        return ta == tc != tb
    if kind is MoveKind.H3B:
        return ta == tb != tc
    return tb == tc != ta  # H3c


def _h3_roles(alpha: Nanoword, kind: MoveKind, positions: Sequence[int]) -> tuple[str, str, str] | None:
    """Schema roles (A, B, C) if the six positions match the kind, else None."""
    w = alpha.word
    slots = tuple(w[p] for p in positions)
    for equalities, (ia, ib, ic) in _H3_PATTERNS[kind]:
        if all(slots[i] == slots[j] for i, j in equalities):
            a, b, c = slots[ia], slots[ib], slots[ic]
            if len({a, b, c}) == 3 and _h3_type_ok(
                kind, alpha.type_of(a), alpha.type_of(b), alpha.type_of(c)
            ):
                return a, b, c
    return None


def _adjacent_pair_triples(n: int) -> Iterator[tuple[int, int, int]]:
    for p in range(n - 1):
        for q in range(p + 2, n - 1):
            for r in range(q + 2, n - 1):
                yield p, q, r


def find_sites(
    alpha: Nanoword, kind: MoveKind, *, max_sites: int | None = None
) -> list[MoveSite]:
    """All sites in ``alpha`` where ``kind`` applies.

    Letter-adding directions enumerate insertion slots crossed with the two
    possible type choices; pass ``max_sites`` to cap the enumeration.
    """
    w = alpha.word
    n = len(w)
    sites: list[MoveSite] = []

    def done() -> bool:
        return max_sites is not None and len(sites) >= max_sites

    if kind in (MoveKind.SHIFT, MoveKind.SHIFT_INV):
        return [MoveSite(kind)] if n else []

    if kind is MoveKind.H1_DOWN:
        for p in range(n - 1):
            if w[p] == w[p + 1]:
                sites.append(MoveSite(kind, (p, p + 1)))
                if done():
                    break

    elif kind is MoveKind.H2_DOWN:
        for p in range(n - 1):
            for q in range(p + 2, n - 1):
                if (
                    w[p] == w[q + 1]
                    and w[p + 1] == w[q]
                    and w[p] != w[p + 1]
                    and alpha.type_of(w[p]) != alpha.type_of(w[p + 1])
                ):
                    sites.append(MoveSite(kind, (p, p + 1, q, q + 1)))
                    if done():
                        return sites

    elif kind is MoveKind.H2A_DOWN:
        for p in range(n - 1):
            for q in range(p + 2, n - 1):
                if (
                    w[p] == w[q]
                    and w[p + 1] == w[q + 1]
                    and alpha.type_of(w[p]) != alpha.type_of(w[p + 1])
                ):
                    sites.append(MoveSite(kind, (p, p + 1, q, q + 1)))
                    if done():
                        return sites

    elif kind is MoveKind.H1_UP:
        for slot in range(n + 1):
            for t in (TYPE_A, TYPE_B):
                sites.append(MoveSite(kind, (slot,), types=(t,)))
                if done():
                    return sites

    elif kind in (MoveKind.H2_UP, MoveKind.H2A_UP):
        for i in range(n + 1):
            for j in range(i, n + 1):
                for ts in ((TYPE_A, TYPE_B), (TYPE_B, TYPE_A)):
                    sites.append(MoveSite(kind, (i, j), types=ts))
                    if done():
                        return sites

    elif kind in _H3_PATTERNS:
        for p, q, r in _adjacent_pair_triples(n):
            positions = (p, p + 1, q, q + 1, r, r + 1)
            if _h3_roles(alpha, kind, positions) is not None:
                sites.append(MoveSite(kind, positions))
                if done():
                    return sites

    else:  # pragma: no cover - exhaustive enum
        raise MoveError(f"unknown move kind {kind}")
    return sites


def _pick_fresh(alpha: Nanoword, site: MoveSite, count: int) -> tuple[str, ...]:
    if site.letters:
        if len(site.letters) != count:
            raise MoveError(f"{site.kind.value} needs {count} letter name(s)")
        for name in site.letters:
            if name in alpha._tmap:
                raise MoveError(f"letter {name} already occurs in the word")
        return site.letters
    return tuple(fresh_names(alpha.letters, count))


def apply_move(alpha: Nanoword, site: MoveSite) -> Nanoword:
    """Apply ``site`` to ``alpha``; raises MoveError if the site is invalid.

    The Gauss condition is re-established by construction (the Nanoword
    constructor validates every rewrite).
    """
    w = alpha.word
    n = len(w)
    kind = site.kind

    if kind is MoveKind.SHIFT:
        return shift(alpha)
    if kind is MoveKind.SHIFT_INV:
        return shift_inv(alpha)

    if kind is MoveKind.H1_DOWN:
        (p, p1) = _check_positions(site, n, 2)
        if p1 != p + 1 or w[p] != w[p + 1]:
            raise MoveError(f"no H1 pair at {site.positions}")
        tmap = alpha.types()
        del tmap[w[p]]
        return Nanoword(w[:p] + w[p + 2 :], tmap)

    if kind in (MoveKind.H2_DOWN, MoveKind.H2A_DOWN):
        p, p1, q, q1 = _check_positions(site, n, 4)
        if p1 != p + 1 or q1 != q + 1 or q < p + 2:
            raise MoveError(f"bad pair positions {site.positions}")
        if kind is MoveKind.H2_DOWN:
            ok = w[p] == w[q + 1] and w[p + 1] == w[q] and w[p] != w[p + 1]
        else:
            ok = w[p] == w[q] and w[p + 1] == w[q + 1]
        if not ok or alpha.type_of(w[p]) == alpha.type_of(w[p + 1]):
            raise MoveError(f"no {kind.value} pattern at {site.positions}")
        drop = {w[p], w[p + 1]}
        tmap = {k: v for k, v in alpha.types().items() if k not in drop}
        keep = [x for i, x in enumerate(w) if i not in (p, p + 1, q, q + 1)]
        return Nanoword(keep, tmap)

    if kind is MoveKind.H1_UP:
        (slot,) = _check_positions(site, n + 1, 1)
        (t,) = _check_types(site, 1)
        (name,) = _pick_fresh(alpha, site, 1)
        tmap = alpha.types()
        tmap[name] = t
        return Nanoword(w[:slot] + (name, name) + w[slot:], tmap)

    if kind in (MoveKind.H2_UP, MoveKind.H2A_UP):
        i, j = _check_positions(site, n + 1, 2)
        if j < i:
            raise MoveError("insertion slots out of order")
        ta, tb = _check_types(site, 2)
        if ta == tb:
            raise MoveError(f"{kind.value} letters must have different types")
        a, b = _pick_fresh(alpha, site, 2)
        second = (b, a) if kind is MoveKind.H2_UP else (a, b)
        tmap = alpha.types()
        tmap[a], tmap[b] = ta, tb
        return Nanoword(w[:i] + (a, b) + w[i:j] + second + w[j:], tmap)

    if kind in _H3_PATTERNS:
        positions = _check_positions(site, n, 6)
        p, p1, q, q1, r, r1 = positions
        if (p1, q1, r1) != (p + 1, q + 1, r + 1) or q < p + 2 or r < q + 2:
            raise MoveError(f"bad pair positions {site.positions}")
        if _h3_roles(alpha, kind, positions) is None:
            raise MoveError(f"no {kind.value} pattern at {site.positions}")
        chars = list(w)
        for start in (p, q, r):
            chars[start], chars[start + 1] = chars[start + 1], chars[start]
        return Nanoword(chars, alpha.types())

    raise MoveError(f"unknown move kind {kind}")  # pragma: no cover


def _check_positions(site: MoveSite, limit: int, count: int) -> tuple[int, ...]:
    if len(site.positions) != count:
        raise MoveError(
            f"{site.kind.value} expects {count} position(s), got {site.positions}"
        )
    for p in site.positions:
        if not 0 <= p < limit:
            raise MoveError(f"position {p} out of range for {site.kind.value}")
    return site.positions


def _check_types(site: MoveSite, count: int) -> tuple[str, ...]:
    if len(site.types) != count or any(t not in (TYPE_A, TYPE_B) for t in site.types):
        raise MoveError(f"{site.kind.value} expects {count} letter type(s)")
    return site.types


@dataclass(frozen=True)
class MoveTrace:
    """A replayable homotopy witness: a start word and a sequence of sites."""

    start: Nanoword
    steps: tuple[MoveSite, ...] = ()

    def replay(self) -> list[Nanoword]:
        """All intermediate words, starting with ``start``; validates each step."""
        words = [self.start]
        for site in self.steps:
            words.append(apply_move(words[-1], site))
        return words

    def end(self) -> Nanoword:
        return self.replay()[-1]

    def __len__(self) -> int:
        return len(self.steps)


def invert_steps(start: Nanoword, steps: Sequence[MoveSite]) -> list[MoveSite]:
    """Sites undoing ``steps``: replaying them from the end word returns to ``start``."""
    current = start
    inverted: list[MoveSite] = []
    for site in steps:
        nxt = apply_move(current, site)
        inverted.append(_invert_one(current, site))
        current = nxt
    inverted.reverse()
    return inverted


def _invert_one(before: Nanoword, site: MoveSite) -> MoveSite:
    kind = site.kind
    w = before.word
    if kind is MoveKind.SHIFT:
        return MoveSite(MoveKind.SHIFT_INV)
    if kind is MoveKind.SHIFT_INV:
        return MoveSite(MoveKind.SHIFT)
    if kind is MoveKind.H1_DOWN:
        p = site.positions[0]
        name = w[p]
        return MoveSite(
            MoveKind.H1_UP, (p,), letters=(name,), types=(before.type_of(name),)
        )
    if kind is MoveKind.H1_UP:
        return MoveSite(MoveKind.H1_DOWN, (site.positions[0], site.positions[0] + 1))
    if kind in (MoveKind.H2_DOWN, MoveKind.H2A_DOWN):
        p, _, q, _ = site.positions
        a, b = w[p], w[p + 1]
        up = MoveKind.H2_UP if kind is MoveKind.H2_DOWN else MoveKind.H2A_UP
        return MoveSite(
            up, (p, q - 2), letters=(a, b), types=(before.type_of(a), before.type_of(b))
        )
    if kind in (MoveKind.H2_UP, MoveKind.H2A_UP):
        i, j = site.positions
        down = MoveKind.H2_DOWN if kind is MoveKind.H2_UP else MoveKind.H2A_DOWN
        return MoveSite(down, (i, i + 1, j + 2, j + 3))
    if kind in _H3_PATTERNS:
        return MoveSite(kind, site.positions)
    raise MoveError(f"unknown move kind {kind}")  # pragma: no cover


# ---------------------------------------------------------------------------
# Letter name allocation


def _canonical_name_stream() -> Iterator[str]:
    i = 0
    while True:
        yield _canonical_name(i)
        i += 1


def fresh_names(used: Iterable[str], count: int) -> list[str]:
    """``count`` names not in ``used``, in canonical (A, B, ..., A.1, ...) order."""
    taken = set(used)
    out: list[str] = []
    for name in _canonical_name_stream():
        if name not in taken:
            out.append(name)
            if len(out) == count:
                return out
    raise AssertionError("unreachable")


def continuation_names(used: Iterable[str], count: int) -> list[str]:
    """Fresh names continuing the alphabet past the highest single letter in ``used``.

    After Z, dotted tokens (A.1, B.1, ...) are used.  This is the allocation
    rule for composing words: a word on A..D gets companions E, F, G, ...
    """
    taken = set(used)
    singles = [ord(u) for u in taken if len(u) == 1]
    start = max(singles) + 1 if singles else ord("A")
    out: list[str] = []
    for code in range(start, ord("Z") + 1):
        name = chr(code)
        if name not in taken:
            out.append(name)
            if len(out) == count:
                return out
    i = 26
    while len(out) < count:
        name = _canonical_name(i)
        if name not in taken:
            out.append(name)
        i += 1
    return out


def relabel_disjoint(
    beta: Nanoword, used: Iterable[str]
) -> tuple[Nanoword, dict[str, str]]:
    """Rename ``beta``'s letters with continuation names so none clashes with ``used``.

    Names are assigned in order of first occurrence.  Returns the renamed word
    and the old -> new mapping.
    """
    order: list[str] = []
    for name in beta.word:
        if name not in order:
            order.append(name)
    new = continuation_names(set(used) | set(order), len(order))
    mapping = dict(zip(order, new))
    renamed = Nanoword(
        (mapping[x] for x in beta.word),
        {mapping[x]: beta.type_of(x) for x in order},
    )
    return renamed, mapping
