"""Exhaustive enumeration of maximal intersecting families and their
reduction to isomorphism classes.

Maximal intersecting k-uniform families on [n] are exactly the maximal
cliques of the intersection graph on all C(n, k) k-sets, so enumeration
is maximal-clique enumeration over that graph.  Isomorphism uses the
minimum relabeling over all permutations of [n] (exact for n <= 10).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _kernels
from .covers import cover_number
from .famcore import Family, all_ksets, degree_profile, is_trivial

EXACT_CANONICAL_MAX_N = 10


class UnsupportedRegimeError(ValueError):
    """Raised for parameter regimes the enumerator refuses (n <= 2k)."""


def intersection_adjacency(members) -> list[int]:
    """Bitmask adjacency of the intersection graph on the given masks."""
    ms = list(members)
    nv = len(ms)
    adj = [0] * nv
    for i in range(nv):
        for j in range(i + 1, nv):
            if ms[i] & ms[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def enumerate_maximal_intersecting(n: int, k: int) -> Iterator[Family]:
    """Yield every maximal intersecting k-uniform family on [n] once, in
    discovery order.  Requires n > 2k: at n = 2k every family avoiding
    both sets of a complement pair extends ambiguously and the count
    explodes, so that regime is rejected."""
    if n <= 2 * k:
        raise UnsupportedRegimeError(
            f"enumeration needs n > 2k, got n={n}, k={k}"
        )
    vertices = all_ksets(n, k)
    adj = intersection_adjacency(vertices)
    for clique in _kernels.maximal_cliques(adj, len(vertices)):
        mem = []
        c = clique
        while c:
            b = c & -c
            c ^= b
            mem.append(vertices[b.bit_length() - 1])
        yield Family(n, k, tuple(mem))


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical key of a family under ground-set relabeling.

    Exact mode (n <= 10): key is the minimum sorted member tuple over all
    permutations and `family` is the relabeled Family.  Above that the
    key degrades to an isomorphism-invariant fingerprint and coarse is
    True: equal keys then mean "possibly isomorphic" only.
    """

    key: tuple
    coarse: bool
    family: Family | None


def _certificate(fam: Family) -> tuple:
    degs = tuple(sorted(degree_profile(fam).degrees))
    ms = fam.members
    inter = sorted(
        (ms[i] & ms[j]).bit_count()
        for i in range(len(ms))
        for j in range(i + 1, len(ms))
    )
    return (fam.k, len(ms), degs, tuple(inter))


def canonical_members(fam: Family, seed=None) -> tuple[int, ...]:
    """Exact canonical encoding (minimum relabeled member tuple)."""
    enc, achieved = _kernels.canonical_min(fam.n, fam.members, seed)
    if seed is not None and not achieved:
        enc, _ = _kernels.canonical_min(fam.n, fam.members, None)
    return enc


def canonical_form(fam: Family) -> CanonicalForm:
    """Canonical form of fam; exact for n <= 10, coarse fingerprint above."""
    if fam.n > EXACT_CANONICAL_MAX_N:
        return CanonicalForm(_certificate(fam), True, None)
    enc = canonical_members(fam)
    return CanonicalForm(enc, False, Family(fam.n, fam.k, enc))


@dataclass(frozen=True)
class IsoClass:
    """One isomorphism class: canonical representative, how many labeled
    copies were seen, and its headline statistics."""

    canonical: Family
    labeled_count: int
    size: int
    delta: int
    Delta: int
    tau: int
    trivial: bool


def iso_classes(families: Iterable[Family]) -> list[IsoClass]:
    """Group families by canonical form.

    Classes are reported by size descending, then by canonical encoding.
    Canonicalization is seeded per invariant bucket: once a bucket has a
    known canonical encode, later members try to reach it first, which
    turns the common isomorphic case into a single confirming descent.
    """
    counts: dict[tuple, int] = {}
    meta: dict[tuple, Family] = {}
    buckets: dict[tuple, list[tuple]] = {}
    for fam in families:
        if fam.n > EXACT_CANONICAL_MAX_N:
            raise ValueError(
                f"iso_classes needs exact canonical mode (n <= {EXACT_CANONICAL_MAX_N})"
            )
        cert = _certificate(fam)
        reps = buckets.setdefault(cert, [])
        enc = canonical_members(fam, seed=min(reps) if reps else None)
        if enc not in counts:
            counts[enc] = 0
            meta[enc] = Family(fam.n, fam.k, enc)
            reps.append(enc)
        counts[enc] += 1
    out = []
    for enc, rep in meta.items():
        prof = degree_profile(rep)
        out.append(
            IsoClass(
                canonical=rep,
                labeled_count=counts[enc],
                size=len(rep),
                delta=prof.delta,
                Delta=prof.Delta,
                tau=cover_number(rep) if rep.members else 0,
                trivial=is_trivial(rep) is not None,
            )
        )
    out.sort(key=lambda c: (-c.size, c.canonical.members))
    return out
