from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError
from ..lattice import LatticePath, is_border_strip, outside_corners, strip_path

DELETION = "deletion"
CONTRACTION = "contraction"
DIRECT_SUM = "direct_sum"
_ORDER = {DELETION: 0, CONTRACTION: 1, DIRECT_SUM: 2}


@dataclass(frozen=True)
class FacetOperation:
    op: str
    i: int
    corner: tuple | None = None

    @classmethod
    def deletion(cls, i):
        return cls(DELETION, i)

    @classmethod
    def contraction(cls, i):
        return cls(CONTRACTION, i)

    @classmethod
    def direct_sum(cls, p, q):
        return cls(DIRECT_SUM, p + q, (p, q))

    def sort_key(self):
        return (self.i, _ORDER[self.op], self.corner or ())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.op == DIRECT_SUM:
            return f"{self.corner}-direct sum"
        return f"{self.i}-{self.op}"

    def to_json(self):
        if self.op == DIRECT_SUM:
            return {"op": self.op, "i": self.i, "p": self.corner[0], "q": self.corner[1]}
        return {"op": self.op, "i": self.i}

    @classmethod
    def from_json(cls, obj):
        if obj["op"] == DIRECT_SUM:
            return cls.direct_sum(obj["p"], obj["q"])
        return cls(obj["op"], obj["i"])

    def apply(self, M):
        from ..matroid import contract_element, delete_element, direct_sum_at
        if self.op == DELETION:
            return delete_element(M, self.i)
        if self.op == CONTRACTION:
            return contract_element(M, self.i)
        return direct_sum_at(M, self.corner)

    def keeps(self, basis):
        """Whether the vertex of ``basis`` lies on this facet."""
        if self.op == DELETION:
            return self.i not in basis
        if self.op == CONTRACTION:
            return self.i in basis
        p, q = self.corner
        return sum(1 for x in basis if x <= self.i) == q


def contained_strip_paths(region):
    """R(P', Q') for every border strip from (0,0) to (m,r) lying inside the region."""
    n, m, r = region.n, region.m, region.r
    if n == 2:
        return [LatticePath("NN")]
    lo, hi = region.lower.north_counts, region.upper.north_counts
    out = []
    inner = []

    # the strip E w N / N w E with w running from (1,0) to (m, r-1)
    def walk(i, h):
        # i: steps of the strip's lower path taken so far, h: its north count
        if i == n - 1:
            if h == r - 1:
                w = "".join(inner)
                out.append(LatticePath(w[0] + w + w[-1]))
            return
        for ch, nh in (("E", h), ("N", h + 1)):
            if lo[i + 1] <= nh and nh + 1 <= hi[i + 1]:
                inner.append(ch)
                walk(i + 1, nh)
                inner.pop()

    if m >= 1 and r >= 1 and lo[1] == 0 and hi[1] == 1:
        walk(1, 0)
    return out


def facet_operations(region):
    if not region.is_connected:
        raise DomainError("facet operations need a connected region; split disconnected ones by direct sum")
    if is_border_strip(region):
        strips = [strip_path(region)]
    else:
        strips = contained_strip_paths(region)
    dels, cons = set(), set()
    for R in strips:
        for i, ch in enumerate(R.word, 1):
            (dels if ch == "E" else cons).add(i)
    ops = [FacetOperation.deletion(i) for i in dels]
    ops += [FacetOperation.contraction(i) for i in cons]
    ops += [FacetOperation.direct_sum(*c.point) for c in outside_corners(region)]
    return sorted(ops)
