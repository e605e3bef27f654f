"""Exact maximum intersecting subfamilies and EKR-property verdicts.

The largest intersecting subfamily of a host family is the maximum
clique of the host's intersection graph; the search is exact branch and
bound with greedy-coloring upper bounds, seeded with the best star.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .bounds import triple_transversal_bound
from .enumeration import intersection_adjacency
from .famcore import Family, degree_profile, is_intersecting
from .generators import ConstraintSpec, gen_constrained

DEFAULT_MEMBER_CAP = 5000


def max_star_size(host: Family) -> tuple[int, int | None]:
    """(max_x |host(x)|, smallest maximizing x); (0, None) when empty."""
    if not host.members:
        return 0, None
    prof = degree_profile(host)
    return prof.Delta, prof.argmax[0]


def max_intersecting_subfamily(
    host: Family, member_cap: int = DEFAULT_MEMBER_CAP
) -> tuple[int, Family]:
    """Exact maximum intersecting subfamily of host with a witness.

    The witness is the lexicographically least optimum (smallest sorted
    member tuple), found by fixing vertices in ascending order and
    re-solving the remainder.  Hosts above member_cap are refused; split
    the host or raise the cap explicitly.
    """
    nv = len(host.members)
    if nv > member_cap:
        raise ValueError(
            f"host has {nv} members, above the cap {member_cap}; "
            f"raise member_cap explicitly if this size is intended"
        )
    if nv == 0:
        return 0, host
    adj = intersection_adjacency(host.members)
    star, _ = max_star_size(host)
    full = (1 << nv) - 1
    omega = _kernels.max_clique_size(adj, nv, full, star)
    chosen: list[int] = []
    cand = full
    need = omega
    for v in range(nv):
        if need == 0:
            break
        if not (cand >> v) & 1:
            continue
        sub = cand & adj[v]
        if 1 + _kernels.max_clique_size(adj, nv, sub, need - 2) >= need:
            chosen.append(v)
            cand = sub
            need -= 1
    witness = Family(host.n, host.k, tuple(host.members[v] for v in chosen))
    if len(witness) != omega or not is_intersecting(witness):
        raise AssertionError("witness reconstruction failed")
    return omega, witness


@dataclass(frozen=True)
class EkrVerdict:
    """Comparison of the largest intersecting subfamily against the
    largest star of a host; holds means no intersecting subfamily beats
    every star.  Raw maxima are recorded so callers can classify the
    hypothesis side themselves."""

    holds: bool
    max_intersecting: int
    witness: Family
    max_star: int
    star_center: int | None
    gap: int


def check_ekr_property(host: Family, member_cap: int = DEFAULT_MEMBER_CAP) -> EkrVerdict:
    """Does the host have the EKR property (its largest intersecting
    subfamily is a star)?  On failure the witness is a non-trivial
    intersecting subfamily beating every star."""
    size, witness = max_intersecting_subfamily(host, member_cap)
    star, center = max_star_size(host)
    gap = size - star
    return EkrVerdict(
        holds=gap <= 0,
        max_intersecting=size,
        witness=witness,
        max_star=star,
        star_center=center,
        gap=gap,
    )


@dataclass(frozen=True)
class TripleTransversalResult:
    """Exact extremal search against the three-block transversal bound
    ell^2 * C(m-3, k-3); valid marks the hypothesis range
    (k >= 3, ell >= 4, m >= k*ell)."""

    max_size: int
    bound: int
    ok: bool
    valid: bool
    witness: Family


def triple_transversal_search(spec: ConstraintSpec, k: int) -> TripleTransversalResult:
    """Maximum intersecting family on [m] whose members meet each of three
    disjoint equal-size blocks, compared against the closed-form bound.

    spec must carry exactly three disjoint equal blocks in at-least mode
    with quotas (1, 1, 1).
    """
    if spec.mode != "atleast":
        raise ValueError("triple transversal search needs at-least mode")
    if len(spec.blocks) != 3 or spec.quotas != (1, 1, 1):
        raise ValueError("spec must have three blocks with quotas (1, 1, 1)")
    sizes = {b.bit_count() for b in spec.blocks}
    if len(sizes) != 1:
        raise ValueError("the three blocks must have equal size")
    ell = sizes.pop()
    m = spec.n
    host = gen_constrained(spec, k)
    max_size, witness = max_intersecting_subfamily(host)
    bound = triple_transversal_bound(m, k, ell)
    return TripleTransversalResult(
        max_size=max_size,
        bound=bound,
        ok=max_size <= bound,
        valid=k >= 3 and ell >= 4 and m >= k * ell,
        witness=witness,
    )


def make_triple_blocks(m: int, ell: int) -> ConstraintSpec:
    """Three disjoint ell-blocks {1..ell}, {ell+1..2ell}, {2ell+1..3ell}
    in [m], at-least quotas (1, 1, 1)."""
    if m < 3 * ell:
        raise ValueError(f"need m >= 3*ell, got m={m}, ell={ell}")
    blocks = []
    for i in range(3):
        lo = i * ell
        blocks.append(sum(1 << j for j in range(lo, lo + ell)))
    return ConstraintSpec(m, tuple(blocks), (1, 1, 1), "atleast")
