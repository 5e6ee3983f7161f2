"""Homotopy invariants of nanowords.

Linking numbers and the derived letter weights n(X), the u-polynomial, head
and tail matrices, the based matrix and its reduction to a primitive based
matrix, the element-count invariant rho, based-matrix isomorphism, and the
block formulas for based matrices of composites and cables.

The based matrix of a word is a triple ``(G, s, b)``: a finite element set G
with a special element s and a skew-symmetric integer pairing b.  For a word,
G is the letter set plus s, ``b(g, s) = n(g)``, and the letter-letter block
is ``T - H + T H^t - H T^t`` in terms of the tail and head matrices.  Three
reductions (dropping an annihilating element, a core element, or a
complementary pair) lead to a primitive based matrix, unique up to
isomorphism, which is a homotopy invariant of the word.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import (
    TYPE_A,
    TYPE_B,
    Nanoword,
    canonical_relabel,
    shift_canonical_text,
)

__all__ = [
    "UPolynomial",
    "HeadTailMatrices",
    "BasedMatrix",
    "ReductionStep",
    "DistinguishReport",
    "linking_number",
    "n_values",
    "u_polynomial",
    "u_realizable",
    "head_tail_matrices",
    "th_realizable",
    "based_matrix",
    "reduce_to_primitive",
    "primitive_based_matrix",
    "rho",
    "bm_isomorphic",
    "composite_based_matrix",
    "cable_reduced_based_matrix",
    "distinguish",
]

logger = logging.getLogger(__name__)

SPECIAL = "s"


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


# ---------------------------------------------------------------------------
# u-polynomial


@dataclass(frozen=True)
class UPolynomial:
    """Sparse integer polynomial sum_{k>=1} u_k t^k, zero coefficients absent."""

    coeffs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for k, c in self.coeffs:
            if k < 1:
                raise ValueError(f"exponent {k} < 1")
            if c == 0:
                raise ValueError("zero coefficient stored")
        if list(self.coeffs) != sorted(self.coeffs):
            raise ValueError("coefficients must be sorted by exponent")

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "UPolynomial":
        return cls(tuple(sorted((k, c) for k, c in d.items() if c != 0)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "UPolynomial") -> "UPolynomial":
        d = self.as_dict()
        for k, c in other.coeffs:
            d[k] = d.get(k, 0) + c
        return UPolynomial.from_dict(d)

    def derivative_at_one(self) -> int:
        return sum(k * c for k, c in self.coeffs)

    def degree(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else 0

    def cable_transform(self, n: int) -> "UPolynomial":
        """n^2 * u(t^n): what the u-polynomial becomes under an n-cabling."""
        return UPolynomial.from_dict({n * k: n * n * c for k, c in self.coeffs})

    def pairs(self) -> list[list[int]]:
        """JSON form: [[k, u_k], ...] sorted by k."""
        return [[k, c] for k, c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in reversed(self.coeffs):
            mag = abs(c)
            term = ("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{k}")
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)


# ---------------------------------------------------------------------------
# Linking numbers


def linking_number(alpha: Nanoword, a: str, b: str) -> int:
    """Linking number of two letters: 0 unless they alternate, else +-1.

    For alternating letters the sign depends on which letter starts the
    pattern and on whether the two types agree; it is skew-symmetric and
    stable under the shift move.
    """
    if a == b:
        alpha.occurrences(a)
        return 0
    a1, a2 = alpha.occurrences(a)
    b1, b2 = alpha.occurrences(b)
    if a1 < b1 < a2 < b2:      # pattern ABAB
        first_is_a = True
    elif b1 < a1 < b2 < a2:    # pattern BABA
        first_is_a = False
    else:
        return 0
    same = alpha.type_of(a) == alpha.type_of(b)
    if first_is_a:
        return 1 if same else -1
    return -1 if same else 1


@lru_cache(maxsize=8192)
def n_values(alpha: Nanoword) -> dict[str, int]:
    """n(X) = sum of linking numbers of X with every letter; sums to zero."""
    out = {x: 0 for x in alpha.letters}
    letters = alpha.letters
    for i, x in enumerate(letters):
        for y in letters[i + 1 :]:
            l = linking_number(alpha, x, y)
            out[x] += l
            out[y] -= l
    return out


def u_polynomial(alpha: Nanoword) -> UPolynomial:
    """u_k = #{X : n(X) = k} - #{X : n(X) = -k}, collected for k >= 1."""
    counts: dict[int, int] = {}
    for v in n_values(alpha).values():
        if v > 0:
            counts[v] = counts.get(v, 0) + 1
        elif v < 0:
            counts[-v] = counts.get(-v, 0) - 1
    return UPolynomial.from_dict(counts)


def u_realizable(u: UPolynomial) -> bool:
    """Whether some virtual string has this u-polynomial: u(0) = u'(1) = 0.

    u(0) = 0 holds by construction (exponents start at 1), so the test
    reduces to sum_k k*u_k = 0.
    """
    return u.derivative_at_one() == 0


# ---------------------------------------------------------------------------
# Head and tail matrices


@dataclass(frozen=True)
class HeadTailMatrices:
    """0/1 tail and head incidence matrices over a fixed letter order.

    ``tail[i, j]`` is 1 when, scanning cyclically from the tail of letter i's
    arrow to its head, the tail of letter j's arrow is passed; ``head``
    likewise for the head of j's arrow.  Arrows run first-to-second occurrence
    for type-a letters and second-to-first for type-b letters.  The difference
    ``tail - head`` recovers the letter-letter linking numbers, so it is
    skew-symmetric for every word.
    """

    order: tuple[str, ...]
    tail: np.ndarray
    head: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "tail", _frozen(self.tail))
        object.__setattr__(self, "head", _frozen(self.head))
        k = len(self.order)
        for m in (self.tail, self.head):
            if m.shape != (k, k):
                raise ValueError("matrix shape does not match letter order")
            if np.any(np.diagonal(m)):
                raise ValueError("diagonal entries must be zero")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeadTailMatrices):
            return NotImplemented
        return (
            self.order == other.order
            and np.array_equal(self.tail, other.tail)
            and np.array_equal(self.head, other.head)
        )


def _arrow_ends(alpha: Nanoword, name: str) -> tuple[int, int]:
    """(tail position, head position) of the letter's arrow."""
    first, second = alpha.occurrences(name)
    if alpha.type_of(name) == TYPE_A:
        return first, second
    return second, first


def _cyclic_interval(start: int, stop: int, length: int) -> set[int]:
    """Positions strictly between start and stop, scanning rightwards cyclically."""
    out = set()
    i = (start + 1) % length
    while i != stop:
        out.add(i)
        i = (i + 1) % length
    return out


@lru_cache(maxsize=4096)
def head_tail_matrices(alpha: Nanoword) -> HeadTailMatrices:
    """Tail and head matrices of a word, letters in lexicographic order."""
    order = alpha.letters
    k = len(order)
    tail = np.zeros((k, k), dtype=np.int64)
    head = np.zeros((k, k), dtype=np.int64)
    length = len(alpha.word)
    ends = {x: _arrow_ends(alpha, x) for x in order}
    for i, x in enumerate(order):
        span = _cyclic_interval(ends[x][0], ends[x][1], length)
        for j, y in enumerate(order):
            if i == j:
                continue
            ty, hy = ends[y]
            if ty in span:
                tail[i, j] = 1
            if hy in span:
                head[i, j] = 1
    return HeadTailMatrices(order, tail, head)


def th_realizable(
    tail: np.ndarray, head: np.ndarray, *, cap: int = 5
) -> Nanoword | None:
    """A nanoword whose tail/head matrices equal the given pair, or None.

    Any letter-order permutation is allowed.  Exhaustive search over Gauss
    words of the matching rank, all type assignments and all orderings;
    ``cap`` bounds the rank accepted (the search is factorial).
    """
    tail = np.asarray(tail, dtype=np.int64)
    head = np.asarray(head, dtype=np.int64)
    if tail.shape != head.shape or tail.ndim != 2 or tail.shape[0] != tail.shape[1]:
        raise ValueError("tail/head must be square matrices of equal size")
    k = tail.shape[0]
    if k > cap:
        raise ValueError(f"rank {k} exceeds brute-force cap {cap}")
    for m in (tail, head):
        if np.any(np.diagonal(m)) or not np.isin(m, (0, 1)).all():
            raise ValueError("matrices must be 0/1 with zero diagonal")
    if k == 0:
        from .core import EMPTY

        return EMPTY

    target_sig = _th_signature(tail, head)
    from .enumeration import all_nanowords

    for word in all_nanowords(k):
        th = head_tail_matrices(word)
        if _th_signature(th.tail, th.head) != target_sig:
            continue
        perm = _match_permutation(th.tail, th.head, tail, head)
        if perm is not None:
            # Rename so row i of the requested matrices is the i-th letter
            # of the result in lexicographic order.
            from .core import fresh_names

            names = fresh_names((), k)
            mapping = {th.order[perm[i]]: names[i] for i in range(k)}
            return Nanoword(
                (mapping[x] for x in word.word),
                {mapping[x]: word.type_of(x) for x in word.letters},
            )
    return None


def _th_signature(tail: np.ndarray, head: np.ndarray) -> tuple:
    rows = sorted(
        (
            int(tail[i].sum()),
            int(tail[:, i].sum()),
            int(head[i].sum()),
            int(head[:, i].sum()),
        )
        for i in range(tail.shape[0])
    )
    return tuple(rows)


def _match_permutation(
    t1: np.ndarray, h1: np.ndarray, t2: np.ndarray, h2: np.ndarray
) -> list[int] | None:
    """Permutation p with t1[p][:, p] == t2 and h1[p][:, p] == h2, or None."""
    k = t1.shape[0]
    perm: list[int] = []
    used = [False] * k

    def extend() -> bool:
        i = len(perm)
        if i == k:
            return True
        for c in range(k):
            if used[c]:
                continue
            ok = t1[c, c] == t2[i, i]
            for j in range(i):
                if not ok:
                    break
                d = perm[j]
                ok = (
                    t1[c, d] == t2[i, j]
                    and t1[d, c] == t2[j, i]
                    and h1[c, d] == h2[i, j]
                    and h1[d, c] == h2[j, i]
                )
            if ok:
                perm.append(c)
                used[c] = True
                if extend():
                    return True
                perm.pop()
                used[c] = False
        return False

    return perm if extend() else None


# ---------------------------------------------------------------------------
# Based matrices


@dataclass(frozen=True)
class BasedMatrix:
    """Finite element set with special element first and a skew pairing.

    ``elements[0]`` is always the special element tag ``"s"``; the remaining
    tags name letters or synthetic elements.  ``pairing`` is the full
    skew-symmetric integer matrix over ``elements``.
    """

    elements: tuple[str, ...]
    pairing: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairing", _frozen(self.pairing))
        k = len(self.elements)
        if len(set(self.elements)) != k:
            raise ValueError("duplicate element tags")
        if not self.elements or self.elements[0] != SPECIAL:
            raise ValueError(f"first element must be the special tag {SPECIAL!r}")
        if self.pairing.shape != (k, k):
            raise ValueError("pairing shape does not match element count")
        if np.any(self.pairing.T != -self.pairing):
            raise ValueError("pairing must be skew-symmetric")

    @property
    def size(self) -> int:
        return len(self.elements)

    def b(self, g: str, h: str) -> int:
        i, j = self.elements.index(g), self.elements.index(h)
        return int(self.pairing[i, j])

    def without(self, indices: Iterable[int]) -> "BasedMatrix":
        drop = set(indices)
        if 0 in drop:
            raise ValueError("the special element cannot be removed")
        keep = [i for i in range(self.size) if i not in drop]
        return BasedMatrix(
            tuple(self.elements[i] for i in keep),
            self.pairing[np.ix_(keep, keep)],
        )

    def signature(self) -> tuple:
        """Isomorphism-invariant fingerprint: sorted per-row multiset keys."""
        rows = []
        for i in range(1, self.size):
            row = self.pairing[i]
            rows.append((int(row[0]), tuple(sorted(int(v) for v in row))))
        return (
            self.size,
            tuple(sorted(int(v) for v in self.pairing[0])),
            tuple(sorted(rows)),
        )

    def to_json(self) -> dict:
        return {
            "order": list(self.elements),
            "rows": [[int(v) for v in row] for row in self.pairing],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BasedMatrix):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(
            self.pairing, other.pairing
        )


@lru_cache(maxsize=4096)
def based_matrix(alpha: Nanoword) -> BasedMatrix:
    """Based matrix of a word: border n(g), inner block T - H + TH^t - HT^t."""
    th = head_tail_matrices(alpha)
    t, h = th.tail, th.head
    inner = t - h + t @ h.T - h @ t.T
    nv = n_values(alpha)
    border = np.array([nv[x] for x in th.order], dtype=np.int64)
    k = len(th.order)
    full = np.zeros((k + 1, k + 1), dtype=np.int64)
    full[1:, 1:] = inner
    full[1:, 0] = border
    full[0, 1:] = -border
    return BasedMatrix((SPECIAL, *th.order), full)


@dataclass(frozen=True)
class ReductionStep:
    """One reduction: which rule fired and which element tag(s) were removed."""

    kind: str  # "annihilating" | "core" | "complementary"
    removed: tuple[str, ...]


def _reduction_candidates(m: BasedMatrix) -> list[tuple[str, tuple[int, ...]]]:
    p = m.pairing
    k = m.size
    out: list[tuple[str, tuple[int, ...]]] = []
    srow = p[0]
    for i in range(1, k):
        if not p[i].any():
            out.append(("annihilating", (i,)))
    for i in range(1, k):
        if np.array_equal(p[i], srow):
            out.append(("core", (i,)))
    for i in range(1, k):
        for j in range(i + 1, k):
            if np.array_equal(p[i] + p[j], srow):
                out.append(("complementary", (i, j)))
    return out


def reduce_to_primitive(
    m: BasedMatrix, *, rng=None
) -> tuple[BasedMatrix, tuple[ReductionStep, ...]]:
    """Remove annihilating/core elements and complementary pairs until none remain.

    The deterministic strategy removes the first annihilating element, else
    the first core element, else the lexicographically first complementary
    pair; pass ``rng`` (a random.Random) to pick uniformly among all
    currently available reductions instead.  The primitive result is unique
    up to based-matrix isomorphism either way.

    Complementary pairs require two distinct elements; a self-complementary
    element (2 b(g,.) = b(s,.)) is never removed and is logged when seen.
    """
    steps: list[ReductionStep] = []
    current = m
    while True:
        candidates = _reduction_candidates(current)
        if not candidates:
            for i in range(1, current.size):
                if np.array_equal(2 * current.pairing[i], current.pairing[0]):
                    logger.info(
                        "irreducible self-complementary element %s left in place",
                        current.elements[i],
                    )
            return current, tuple(steps)
        if rng is None:
            kind, indices = candidates[0]
        else:
            kind, indices = candidates[rng.randrange(len(candidates))]
        steps.append(
            ReductionStep(kind, tuple(current.elements[i] for i in indices))
        )
        current = current.without(indices)


def primitive_based_matrix(alpha: Nanoword) -> BasedMatrix:
    return reduce_to_primitive(based_matrix(alpha))[0]


def rho(alpha: Nanoword) -> int:
    """Element count of the primitive based matrix, minus the special element."""
    return primitive_based_matrix(alpha).size - 1


def bm_isomorphic(m1: BasedMatrix, m2: BasedMatrix) -> bool:
    """Whether a bijection fixing s matches the two pairings entrywise.

    Backtracking over element assignments, pruned by the per-element key
    (b(g, s), sorted multiset of the row of g); exact at desk scale.
    """
    if m1.size != m2.size:
        return False
    k = m1.size
    if k == 1:
        return True

    def key(m: BasedMatrix, i: int) -> tuple:
        return (int(m.pairing[i, 0]), tuple(sorted(int(v) for v in m.pairing[i])))

    keys1 = [key(m1, i) for i in range(1, k)]
    keys2 = [key(m2, i) for i in range(1, k)]
    if sorted(keys1) != sorted(keys2):
        return False
    if tuple(sorted(int(v) for v in m1.pairing[0])) != tuple(
        sorted(int(v) for v in m2.pairing[0])
    ):
        return False

    candidates = [
        [j for j in range(1, k) if keys2[j - 1] == keys1[i - 1]] for i in range(1, k)
    ]
    p1, p2 = m1.pairing, m2.pairing
    assigned: list[int] = []
    used = [False] * k

    def extend() -> bool:
        i = len(assigned) + 1
        if i == k:
            return True
        for j in candidates[i - 1]:
            if used[j]:
                continue
            if p1[i, 0] != p2[j, 0]:
                continue
            ok = True
            for prev_i in range(1, i):
                prev_j = assigned[prev_i - 1]
                if p1[i, prev_i] != p2[j, prev_j]:
                    ok = False
                    break
            if ok:
                assigned.append(j)
                used[j] = True
                if extend():
                    return True
                assigned.pop()
                used[j] = False
        return False

    return extend()


def _unique_tags(base: Sequence[str], taken: set[str]) -> list[str]:
    out = []
    for tag in base:
        candidate = tag
        while candidate in taken:
            candidate += "_"
        taken.add(candidate)
        out.append(candidate)
    return out


def composite_based_matrix(
    m_alpha: BasedMatrix,
    types_alpha: Mapping[str, str],
    m_beta: BasedMatrix,
    types_beta: Mapping[str, str],
) -> BasedMatrix:
    """Based matrix of a composite word from the two component matrices.

    The result is block-diagonal in the two inner blocks with borders n_alpha
    and n_beta; the mixed block D depends only on the letter types and the
    borders::

        D[W, X] = 0                      |W| = |X| = a
                = -n_beta(X)             |W| = b, |X| = a
                = n_alpha(W)             |W| = a, |X| = b
                = n_alpha(W) - n_beta(X) |W| = |X| = b

    It equals ``based_matrix(compose(alpha, beta))`` entrywise when the
    inputs are the word-derived matrices and letter types of the components.
    Beta's tags are suffixed when they clash with alpha's.
    """
    a_tags = m_alpha.elements[1:]
    b_tags = m_beta.elements[1:]
    for tag in a_tags:
        if tag not in types_alpha:
            raise KeyError(f"missing letter type for element {tag!r}")
    for tag in b_tags:
        if tag not in types_beta:
            raise KeyError(f"missing letter type for element {tag!r}")
    ka, kb = len(a_tags), len(b_tags)
    na = m_alpha.pairing[1:, 0]
    nb = m_beta.pairing[1:, 0]
    d = np.zeros((ka, kb), dtype=np.int64)
    for i, wt in enumerate(types_alpha[t] for t in a_tags):
        for j, xt in enumerate(types_beta[t] for t in b_tags):
            if wt == TYPE_B and xt == TYPE_A:
                d[i, j] = -nb[j]
            elif wt == TYPE_A and xt == TYPE_B:
                d[i, j] = na[i]
            elif wt == TYPE_B and xt == TYPE_B:
                d[i, j] = na[i] - nb[j]
    k = 1 + ka + kb
    full = np.zeros((k, k), dtype=np.int64)
    full[1 : 1 + ka, 0] = na
    full[1 + ka :, 0] = nb
    full[0, 1:] = -full[1:, 0]
    full[1 : 1 + ka, 1 : 1 + ka] = m_alpha.pairing[1:, 1:]
    full[1 + ka :, 1 + ka :] = m_beta.pairing[1:, 1:]
    full[1 : 1 + ka, 1 + ka :] = d
    full[1 + ka :, 1 : 1 + ka] = -d.T
    taken = {SPECIAL, *a_tags}
    tags = (SPECIAL, *a_tags, *_unique_tags(b_tags, taken))
    return BasedMatrix(tags, full)


def cable_reduced_based_matrix(p: BasedMatrix, n: int) -> BasedMatrix:
    """The cable counterpart of a based matrix, built element-wise.

    Each non-special element X yields n^2 copies X.i.j and the construction
    adds n-1 join elements C.k, with::

        b(X.i.j, s)     = n * n(X)
        b(C.k, s)       = 0
        b(X.i.j, Y.k.l) = b(X, Y) + ((l-k) mod n) n(X) - ((j-i) mod n) n(Y)
        b(X.i.j, C.k)   = (n-1-k) n(X)
        b(C.i, C.j)     = 0

    When ``p`` is the primitive based matrix of a word, reducing this matrix
    to primitive gives (up to isomorphism) the primitive based matrix of the
    word's n-cable.
    """
    if n < 1:
        raise ValueError(f"cable width must be >= 1, got {n}")
    base = p.elements[1:]
    nv = {x: int(p.pairing[idx + 1, 0]) for idx, x in enumerate(base)}
    taken = {SPECIAL}
    copies: list[tuple[str, str, int, int]] = []
    tags: list[str] = [SPECIAL]
    for x in base:
        for i in range(n):
            for j in range(n):
                tag = _unique_tags([f"{x}.{i}.{j}"], taken)[0]
                tags.append(tag)
                copies.append((tag, x, i, j))
    joins: list[tuple[str, int]] = []
    for kk in range(n - 1):
        tag = _unique_tags([f"C.{kk}"], taken)[0]
        tags.append(tag)
        joins.append((tag, kk))
    size = len(tags)
    full = np.zeros((size, size), dtype=np.int64)
    nc = len(copies)

    def bxy(x: str, y: str) -> int:
        return int(
            p.pairing[p.elements.index(x), p.elements.index(y)]
        )

    for a_idx, (_, x, i, j) in enumerate(copies):
        row = 1 + a_idx
        full[row, 0] = n * nv[x]
        for b_idx in range(a_idx + 1, nc):
            _, y, kk, ll = copies[b_idx]
            v = bxy(x, y) + ((ll - kk) % n) * nv[x] - ((j - i) % n) * nv[y]
            full[row, 1 + b_idx] = v
            full[1 + b_idx, row] = -v
        for c_idx, (_, kk) in enumerate(joins):
            v = (n - 1 - kk) * nv[x]
            full[row, 1 + nc + c_idx] = v
            full[1 + nc + c_idx, row] = -v
    full[0, 1:] = -full[1:, 0]
    return BasedMatrix(tuple(tags), full)


# ---------------------------------------------------------------------------
# Distinguishing words


@dataclass(frozen=True)
class DistinguishReport:
    """Outcome of an invariant comparison between two words.

    ``verdict`` is "distinct" (some listed invariant differs),
    "same-word-class" (equal up to shifts and renaming), or "unknown".
    ``evidence`` lists (invariant name, value for the first word, value for
    the second word) pairs; entries are recorded only when the values differ.
    """

    verdict: str
    evidence: tuple[tuple[str, str, str], ...] = ()


def distinguish(alpha: Nanoword, beta: Nanoword, depth: int = 2) -> DistinguishReport:
    """Compare homotopy invariants, recursing through coverings to ``depth``.

    Checks the u-polynomial, rho and primitive based-matrix isomorphism, then
    compares every r-covering (r = 0 and 2..max rank) recursively.  The
    verdict is "distinct" as soon as any invariant differs; invariants here
    are all stable under shifts, so shift-related words are never reported
    distinct.
    """
    evidence: list[tuple[str, str, str]] = []
    ua, ub = u_polynomial(alpha), u_polynomial(beta)
    if ua != ub:
        evidence.append(("u-polynomial", str(ua), str(ub)))
    ra, rb = rho(alpha), rho(beta)
    if ra != rb:
        evidence.append(("rho", str(ra), str(rb)))
    elif not evidence:
        pa, pb = primitive_based_matrix(alpha), primitive_based_matrix(beta)
        if not bm_isomorphic(pa, pb):
            evidence.append(
                (
                    "primitive-based-matrix",
                    str(pa.to_json()["rows"]),
                    str(pb.to_json()["rows"]),
                )
            )
    if not evidence and depth > 0:
        from .ops import covering

        max_r = max(alpha.rank, beta.rank)
        for r in [0, *range(2, max_r + 1)]:
            ca, cb = covering(alpha, r), covering(beta, r)
            if ca == alpha and cb == beta:
                continue
            sub = distinguish(ca, cb, depth - 1)
            if sub.verdict == "distinct":
                name, va, vb = sub.evidence[0]
                evidence.append((f"cover[{r}] {name}", va, vb))
                break
    if evidence:
        return DistinguishReport("distinct", tuple(evidence))
    if shift_canonical_text(alpha) == shift_canonical_text(beta):
        return DistinguishReport("same-word-class")
    return DistinguishReport("unknown")


def invariant_bundle(alpha: Nanoword) -> dict:
    """JSON-ready bundle of the standard invariants of a word."""
    m = based_matrix(alpha)
    p, _ = reduce_to_primitive(m)
    nv = n_values(alpha)
    return {
        "word": alpha.text(),
        "rank": alpha.rank,
        "n_values": {x: nv[x] for x in alpha.letters},
        "u_polynomial": u_polynomial(alpha).pairs(),
        "based_matrix": m.to_json(),
        "primitive": p.to_json(),
        "rho": p.size - 1,
    }
