"""Bitmask k-sets and k-uniform families on a ground set [n] = {1, .., n}.

A set is a Python int with bit i-1 set iff element i is present.  The
ground set is capped at 62 elements so every member fits a machine word
and a pairwise intersection test is a single AND.  A Family keeps its
members as a strictly increasing tuple of masks, so families compare and
hash by value.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

MAX_GROUND = 62

#: Guard for operations that sweep all C(n, k) k-sets of [n].
COMPLETE_CAP = 10_000_000

KSet = int


def kset(elems) -> KSet:
    """Encode an iterable of 1-based elements as a bitmask."""
    m = 0
    for e in elems:
        if e < 1 or e > MAX_GROUND:
            raise ValueError(f"elements must lie in [1, {MAX_GROUND}], got {e}")
        b = 1 << (e - 1)
        if m & b:
            raise ValueError(f"duplicate element {e}")
        m |= b
    return m


def elements(mask: KSet) -> tuple[int, ...]:
    """Decode a bitmask into its ascending 1-based elements."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length())
        mask ^= b
    return tuple(out)


@dataclass(frozen=True)
class Family:
    """A k-uniform family on [n].

    members is strictly increasing, every member has popcount k, and all
    bits lie below n.  The constructor validates; use :func:`family` to
    build one from unsorted input.
    """

    n: int
    k: int
    members: tuple[KSet, ...] = ()

    def __post_init__(self):
        if not 2 <= self.n <= MAX_GROUND:
            raise ValueError(f"n must be in [2, {MAX_GROUND}], got {self.n}")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"k must be in [1, n], got k={self.k} with n={self.n}")
        full = (1 << self.n) - 1
        prev = 0
        for m in self.members:
            if m <= prev:
                raise ValueError("members must be strictly increasing and distinct")
            if m & ~full:
                raise ValueError(f"member {elements(m)} uses elements outside [{self.n}]")
            if m.bit_count() != self.k:
                raise ValueError(f"member {elements(m)} is not a {self.k}-set")
            prev = m

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def family(n: int, k: int, sets) -> Family:
    """Build a Family from masks or element iterables, sorting and deduplicating."""
    masks = set()
    for s in sets:
        masks.add(s if isinstance(s, int) else kset(s))
    return Family(n, k, tuple(sorted(masks)))


def all_ksets(n: int, k: int) -> list[KSet]:
    """All k-subsets of [n] as ascending masks (guarded by COMPLETE_CAP)."""
    if comb(n, k) > COMPLETE_CAP:
        raise ValueError(f"C({n},{k}) exceeds the {COMPLETE_CAP} member cap")
    return sorted(sum(1 << i for i in c) for c in combinations(range(n), k))


@dataclass(frozen=True)
class DegreeProfile:
    """Per-element degrees d_1..d_n with their minimum/maximum and witnesses."""

    degrees: tuple[int, ...]
    delta: int
    Delta: int
    argmin: tuple[int, ...]
    argmax: tuple[int, ...]


def degree(fam: Family, x: int) -> int:
    """Number of members containing element x (1 <= x <= n)."""
    if not 1 <= x <= fam.n:
        raise ValueError(f"element {x} out of range [1, {fam.n}]")
    b = 1 << (x - 1)
    return sum(1 for m in fam.members if m & b)


def degree_profile(fam: Family) -> DegreeProfile:
    """Degrees of all elements of [n]; the minimum ranges over all of [n],
    so elements in no member contribute degree 0."""
    degs = [0] * fam.n
    for m in fam.members:
        while m:
            b = m & -m
            degs[b.bit_length() - 1] += 1
            m ^= b
    lo, hi = min(degs), max(degs)
    return DegreeProfile(
        degrees=tuple(degs),
        delta=lo,
        Delta=hi,
        argmin=tuple(i + 1 for i, d in enumerate(degs) if d == lo),
        argmax=tuple(i + 1 for i, d in enumerate(degs) if d == hi),
    )


def _pairwise_intersecting(masks) -> bool:
    ms = list(masks)
    for i, a in enumerate(ms):
        for b in ms[i + 1 :]:
            if not a & b:
                return False
    return True


def is_intersecting(fam: Family) -> bool:
    """True iff every two members share an element (vacuously true when
    the family has fewer than two members)."""
    return _pairwise_intersecting(fam.members)


def intersection_parameter(fam: Family) -> int:
    """Minimum pairwise intersection size t; the family is t-intersecting
    but not (t+1)-intersecting.  Needs at least two members."""
    ms = fam.members
    if len(ms) < 2:
        raise ValueError("intersection parameter needs at least two members")
    t = fam.k
    for i, a in enumerate(ms):
        for b in ms[i + 1 :]:
            c = (a & b).bit_count()
            if c < t:
                t = c
                if t == 0:
                    return 0
    return t


def is_trivial(fam: Family) -> int | None:
    """Smallest element contained in every member, or None.

    The empty family reports center 1 by convention (degenerate: every
    element is vacuously common).
    """
    if not fam.members:
        return 1
    common = (1 << fam.n) - 1
    for m in fam.members:
        common &= m
        if not common:
            return None
    return (common & -common).bit_length()


def subfamily_at(fam: Family, x: int) -> Family:
    """The members containing element x."""
    if not 1 <= x <= fam.n:
        raise ValueError(f"element {x} out of range [1, {fam.n}]")
    b = 1 << (x - 1)
    return Family(fam.n, fam.k, tuple(m for m in fam.members if m & b))


def maximal_closure(fam: Family) -> Family:
    """Extend an intersecting family to a maximal intersecting one.

    Iterates F -> {G : G meets every member of F}.  When that step yields
    an intersecting family, it is the unique maximal intersecting family
    containing the input and the fixed point is returned.  Otherwise the
    input has several maximal extensions; a deterministic greedy
    completion (smallest admissible mask first) picks one.
    """
    if not is_intersecting(fam):
        raise ValueError("maximal_closure requires an intersecting family")
    universe = all_ksets(fam.n, fam.k)
    cur = list(fam.members)
    for _ in range(2):
        ext = [g for g in universe if all(g & f for f in cur)]
        if len(ext) == len(cur):
            return Family(fam.n, fam.k, tuple(ext))
        if _pairwise_intersecting(ext):
            cur = ext
        else:
            break
    chosen = set(cur)
    for g in universe:
        if g not in chosen and all(g & f for f in chosen):
            chosen.add(g)
    return Family(fam.n, fam.k, tuple(sorted(chosen)))


# --- ".fam" text format ---------------------------------------------------
#
# line 1: "n k"; every further non-empty line: k ascending 1-based elements
# separated by single spaces; member lines sorted lexicographically as
# integer tuples; '#' starts a comment line; parsing is strict.


def format_fam(fam: Family) -> str:
    lines = [f"{fam.n} {fam.k}"]
    for tup in sorted(elements(m) for m in fam.members):
        lines.append(" ".join(str(e) for e in tup))
    return "\n".join(lines) + "\n"


def parse_fam(text: str) -> Family:
    """Parse the ".fam" format; rejects wrong arity, out-of-range values,
    unsorted elements, and unsorted or duplicate member lines."""
    if "\r" in text:
        raise ValueError(".fam files use LF line endings")
    header: tuple[int, int] | None = None
    rows: list[tuple[int, ...]] = []
    for lineno, line in enumerate(text.split("\n"), 1):
        if not line or line.startswith("#"):
            continue
        tokens = line.split(" ")
        if any(not t.isdigit() for t in tokens):
            raise ValueError(f"line {lineno}: expected space-separated integers")
        values = tuple(int(t) for t in tokens)
        if header is None:
            if len(values) != 2:
                raise ValueError(f"line {lineno}: header must be 'n k'")
            header = values
            continue
        n, k = header
        if len(values) != k:
            raise ValueError(f"line {lineno}: expected {k} elements, got {len(values)}")
        if any(not 1 <= e <= n for e in values):
            raise ValueError(f"line {lineno}: element out of range [1, {n}]")
        if any(values[i] >= values[i + 1] for i in range(k - 1)):
            raise ValueError(f"line {lineno}: elements must be strictly ascending")
        if rows and values <= rows[-1]:
            raise ValueError(f"line {lineno}: member lines must be sorted and distinct")
        rows.append(values)
    if header is None:
        raise ValueError("missing 'n k' header line")
    n, k = header
    return Family(n, k, tuple(sorted(kset(r) for r in rows)))
