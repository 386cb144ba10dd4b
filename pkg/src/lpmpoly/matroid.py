"""Lattice path matroids: bases two ways, connectivity, and the facet constructions."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DomainError, EmptyBasisError, ResourceError
from .lattice import LatticePath, SkewRegion, outside_corners

DEFAULT_MAX_BASES = 10**6


def max_bases():
    return int(os.environ.get("LPM_MAX_BASES", DEFAULT_MAX_BASES))


def _mask(basis):
    out = 0
    for x in basis:
        out |= 1 << x
    return out


@dataclass(frozen=True)
class LatticeMatroid:
    ground: tuple
    rank: int
    bases: tuple  # sorted tuples, lexicographic
    region: SkewRegion | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.bases:
            raise EmptyBasisError("a matroid needs at least one basis")

    @cached_property
    def masks(self):
        return frozenset(_mask(b) for b in self.bases)

    def __len__(self):
        return len(self.bases)

    def to_json(self):
        return [list(b) for b in self.bases]

    def _derive(self, bases):
        return LatticeMatroid(self.ground, self.rank, tuple(sorted(bases)), self.region)


def _matroid(region, bases):
    return LatticeMatroid(region.labels, region.r, tuple(sorted(bases)), region)


def presentation(region):
    """Intervals N_i = [l_i, u_i]: i-th north step of Q and of P."""
    return list(zip(region.upper.north_positions, region.lower.north_positions))


def bases_by_paths(region):
    cap = max_bases()
    lo, hi, n = region.lower.north_counts, region.upper.north_counts, region.n
    out = []
    chosen = []

    def walk(i, h):
        if i == n:
            out.append(tuple(chosen))
            if len(out) > cap:
                raise ResourceError(f"more than {cap} bases")
            return
        if lo[i + 1] <= h <= hi[i + 1]:
            walk(i + 1, h)
        if lo[i + 1] <= h + 1 <= hi[i + 1]:
            chosen.append(i + 1)
            walk(i + 1, h + 1)
            chosen.pop()

    walk(0, 0)
    return _matroid(region, out)


def bases_by_transversals(region):
    """Transversals of the interval presentation, by backtracking over the intervals."""
    cap = max_bases()
    intervals = presentation(region)
    found = set()
    used = set()

    def assign(j):
        if j == len(intervals):
            found.add(tuple(sorted(used)))
            if len(found) > cap:
                raise ResourceError(f"more than {cap} bases")
            return
        lo, hi = intervals[j]
        for x in range(lo, hi + 1):
            if x not in used:
                used.add(x)
                assign(j + 1)
                used.remove(x)

    assign(0)
    return _matroid(region, found)


def delete_element(M, i):
    if i not in M.ground:
        raise DomainError(f"{i} is not in the ground set")
    bases = [b for b in M.bases if i not in b]
    if not bases:
        raise EmptyBasisError(f"{i} is a coloop; its deletion has no bases here")
    return LatticeMatroid(tuple(x for x in M.ground if x != i), M.rank, tuple(bases), M.region)


def contract_element(M, i):
    if i not in M.ground:
        raise DomainError(f"{i} is not in the ground set")
    bases = [b for b in M.bases if i in b]
    if not bases:
        raise EmptyBasisError(f"{i} is a loop; its contraction has no bases")
    return M._derive(bases)


def _corner_point(corner):
    return tuple(getattr(corner, "point", corner))


def direct_sum_at(M, corner, region=None):
    p, q = _corner_point(corner)
    region = region or M.region
    if region is not None and (p, q) not in {c.point for c in outside_corners(region)}:
        raise DomainError(f"{(p, q)} is not an outside corner")
    bases = [b for b in M.bases if sum(1 for x in b if x <= p + q) == q]
    if not bases:
        raise EmptyBasisError(f"no basis splits at {(p, q)}")
    return M._derive(bases)


def quadrant_regions(region, corner):
    """Lower-left and upper-right sub-regions around an outside corner."""
    p, q = _corner_point(corner)
    P, Q, r = region.lower.heights, region.upper.heights, region.r
    low = SkewRegion(
        LatticePath.from_heights([min(h, q) for h in P[:p]], q),
        LatticePath.from_heights([min(h, q) for h in Q[:p]], q),
    )
    high = SkewRegion(
        LatticePath.from_heights([max(h, q) - q for h in P[p:]], r - q),
        LatticePath.from_heights([max(h, q) - q for h in Q[p:]], r - q),
    )
    return low, high


def connected_components(M):
    parent = {x: x for x in M.ground}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    masks = M.masks
    for b in M.bases:
        bm = _mask(b)
        outside = [y for y in M.ground if y not in b]
        for x in b:
            for y in outside:
                if bm ^ (1 << x) ^ (1 << y) in masks:
                    parent[find(x)] = find(y)
    blocks = {}
    for x in M.ground:
        blocks.setdefault(find(x), []).append(x)
    return sorted(tuple(v) for v in blocks.values())


def satisfies_exchange(bases):
    masks = {_mask(b) for b in bases}
    if not masks:
        return False
    for a in masks:
        for b in masks:
            diff_a = a & ~b
            diff_b = b & ~a
            x = diff_a
            while x:
                xb = x & -x
                x ^= xb
                y = diff_b
                ok = False
                while y:
                    yb = y & -y
                    y ^= yb
                    if (a ^ xb) | yb in masks:
                        ok = True
                        break
                if not ok:
                    return False
    return True


def polytope_dimension(region):
    return region.n - region.k + 1
