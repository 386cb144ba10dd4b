"""Blocks, block-tiled bands and their lowest family members (bottoms).

A band is a pair of paths lambda <= nu inside [P, Q] whose region has no
2x2 square, tiled by border strips. Without squares the boxes of each
connected piece of the band form a chain, so a tiling is just a way of
cutting each chain into consecutive runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from ..errors import DomainError, LPMError, ResourceError
from ..lattice import (LatticePath, SkewRegion, area_between, has_square, l_prime,
                       outside_corners)


@dataclass(frozen=True)
class Block:
    start: tuple  # lower-left corner of the smallest labelled box
    shape: str  # E/N moves from one box to the next, in label order

    @cached_property
    def boxes(self):
        x, y = self.start
        out = [(x, y)]
        for ch in self.shape:
            x, y = (x + 1, y) if ch == "E" else (x, y + 1)
            out.append((x, y))
        return tuple(out)

    @property
    def first_label(self):
        return self.start[0] + self.start[1] + 1

    @property
    def labels(self):
        return tuple(range(self.first_label, self.first_label + len(self.shape) + 1))

    @property
    def end(self):
        x, y = self.boxes[-1]
        return (x + 1, y + 1)

    @property
    def tableau(self):
        """What clones share: shape and labels, not position."""
        return (self.shape, self.first_label)

    def is_clone(self, other):
        return self.tableau == other.tableau

    def to_json(self):
        return {"start": list(self.start), "shape": self.shape}

    @classmethod
    def from_boxes(cls, boxes):
        boxes = sorted(boxes, key=lambda b: b[0] + b[1])
        moves = "".join("E" if b[0] > a[0] else "N" for a, b in zip(boxes, boxes[1:]))
        return cls(boxes[0], moves)


def _maximal_runs(lam, nu):
    """Maximal runs of consecutive shared points of two paths, as tuples of points."""
    runs, cur = [], []
    for i, (a, b) in enumerate(zip(lam.north_counts, nu.north_counts)):
        if a == b:
            cur.append(lam.points[i])
        elif cur:
            runs.append(tuple(cur))
            cur = []
    if cur:
        runs.append(tuple(cur))
    return tuple(runs)


def _band_chains(lam, nu):
    """Boxes of [lam, nu] grouped into edge-connected pieces, each in label order."""
    region = SkewRegion(lam, nu)
    pieces = []
    idx = region.intersection_indices
    for a, b in zip(idx, idx[1:]):
        if b - a < 2:
            continue
        boxes = sorted((box for box in region.boxes if a <= box[0] + box[1] + 1 <= b - 1),
                       key=lambda bx: bx[0] + bx[1])
        pieces.append(boxes)
    return pieces


@dataclass(frozen=True)
class BlockTiledBottom:
    lower: LatticePath
    upper: LatticePath
    blocks: tuple  # Blocks sorted by first label

    @property
    def n(self):
        return len(self.blocks)

    @cached_property
    def runs(self):
        return _maximal_runs(self.lower, self.upper)

    @cached_property
    def family_key(self):
        return (self.runs, tuple(sorted(b.tableau for b in self.blocks)))

    def canonical(self):
        return (self.lower.word, tuple(sorted((b.start, b.shape) for b in self.blocks)))

    def to_json(self):
        return {"lambda": self.lower.word,
                "blocks": [b.to_json() for b in sorted(self.blocks, key=lambda b: (b.start, b.shape))]}

    def __lt__(self, other):
        return self.canonical() < other.canonical()


def _anchor_points(region):
    pts = {c.point for c in outside_corners(region)}
    pts.add((0, 0))
    pts.add((region.m, region.r))
    return pts


def is_band_pair(region, lam, nu, anchors=None):
    """Whether [lam, nu] can carry a block tiling at all (condition on runs, no squares)."""
    if anchors is None:
        anchors = _anchor_points(region)
    if any(a > b for a, b in zip(lam.north_counts, nu.north_counts)):
        return False
    if has_square(SkewRegion(lam, nu).boxes):
        return False
    return all(any(p in anchors for p in run) for run in _maximal_runs(lam, nu))


def _tilings(chains):
    """Every way of cutting each chain into consecutive runs of boxes."""
    options = []
    for chain in chains:
        opts = []
        for cuts in product((False, True), repeat=len(chain) - 1):
            blocks, cur = [], [chain[0]]
            for cut, box in zip(cuts, chain[1:]):
                if cut:
                    blocks.append(Block.from_boxes(cur))
                    cur = []
                cur.append(box)
            blocks.append(Block.from_boxes(cur))
            opts.append(blocks)
        options.append(opts)
    for combo in product(*options):
        yield tuple(sorted((b for part in combo for b in part), key=lambda b: b.first_label))


def iter_bands(region, n=None):
    """All block-tiled bands inside the region, optionally only those with n blocks."""
    paths = list(region.paths())
    anchors = _anchor_points(region)
    for lam in paths:
        for nu in paths:
            if not is_band_pair(region, lam, nu, anchors):
                continue
            chains = _band_chains(lam, nu)
            size = sum(len(c) for c in chains)
            if n is not None and not len(chains) <= n <= size:
                continue
            for blocks in _tilings(chains):
                if n is None or len(blocks) == n:
                    yield BlockTiledBottom(lam, nu, blocks)


def _below(a, b):
    return all(x <= y for x, y in zip(a.lower.north_counts, b.lower.north_counts)) and all(
        x <= y for x, y in zip(a.upper.north_counts, b.upper.north_counts))


def families(region, n=None):
    """Bands grouped by family key."""
    out = {}
    for band in iter_bands(region, n):
        out.setdefault(band.family_key, []).append(band)
    return out


def lowest_member(members):
    low = [a for a in members if all(_below(a, b) for b in members)]
    if len(low) != 1:
        raise LPMError("family has no unique lowest member")
    return low[0]


def enumerate_bottoms(region, n):
    if not region.is_connected:
        raise DomainError("bottoms are defined for connected regions")
    if not 0 <= n <= region.n - 1:
        raise DomainError(f"n must lie in [0, {region.n - 1}]")
    if n == 0:
        return sorted(BlockTiledBottom(L, L, ()) for L in region.paths())
    return sorted(lowest_member(ms) for ms in families(region, n).values())


def bottoms_by_dimension(region):
    """All bottoms in one pass over the bands: list indexed by block count."""
    if not region.is_connected:
        raise DomainError("bottoms are defined for connected regions")
    out = [[] for _ in range(region.n)]
    out[0] = enumerate_bottoms(region, 0)
    grouped = families(region)
    for key, members in grouped.items():
        low = lowest_member(members)
        if low.n:
            out[low.n].append(low)
    return [sorted(level) for level in out]


def family_members(region, bottom):
    key = bottom.family_key
    return [b for b in iter_bands(region, bottom.n) if b.family_key == key]


@dataclass(frozen=True)
class TiledRegion:
    lower: LatticePath
    upper: LatticePath
    blocks: tuple

    def to_json(self):
        return {"lambda": self.lower.word, "mu": self.upper.word,
                "blocks": [b.to_json() for b in self.blocks]}


def _maximal_region(bottom, members):
    top = [a for a in members if all(_below(b, a) for b in members)]
    if len(top) != 1:
        raise LPMError("family has no unique highest member")
    blocks = sorted({b for m in members for b in m.blocks}, key=lambda b: (b.first_label, b.start))
    covered = [x for b in blocks for x in b.boxes]
    boxes = SkewRegion(bottom.lower, top[0].upper).boxes
    if len(covered) != len(set(covered)) or set(covered) != boxes:
        raise LPMError("clones of the family do not tile a skew region")
    return TiledRegion(bottom.lower, top[0].upper, tuple(blocks))


def bottom_to_maximal_region(region, bottom):
    """Insert every clone the family allows; the result is [lambda, mu] tiled by all of them."""
    if bottom.n == 0:
        return TiledRegion(bottom.lower, bottom.upper, ())
    return _maximal_region(bottom, family_members(region, bottom))


def _splits_no_block(path, blocks):
    h = path.heights
    return all(len({y < h[x] for x, y in b.boxes}) == 1 for b in blocks)


def region_vertices(tiled):
    """Paths of a tiled region that run along block boundaries, as N-position sets."""
    span = SkewRegion(tiled.lower, tiled.upper)
    return tuple(sorted(L.north_positions for L in span.paths() if _splits_no_block(L, tiled.blocks)))


def face_vertices(region, bottom):
    """Vertices (bases) of the face a bottom stands for."""
    return list(region_vertices(bottom_to_maximal_region(region, bottom)))


class FaceCatalog:
    """Every bottom of a connected region together with its maximal region and vertices."""

    def __init__(self, region):
        if not region.is_connected:
            raise DomainError("bottoms are defined for connected regions")
        self.region = region
        levels = [{} for _ in range(region.n)]
        for L in region.paths():
            levels[0][BlockTiledBottom(L, L, ())] = (TiledRegion(L, L, ()), (L.north_positions,))
        for members in families(region).values():
            b = lowest_member(members)
            if b.n:
                tiled = _maximal_region(b, members)
                levels[b.n][b] = (tiled, region_vertices(tiled))
        self.levels = [dict(sorted(level.items())) for level in levels]

    def bottoms(self, n):
        return list(self.levels[n])

    def vertices(self, bottom):
        return self.levels[bottom.n][bottom][1]

    def maximal_region(self, bottom):
        return self.levels[bottom.n][bottom][0]

    def covered_by(self, bottom):
        """Bottoms one block smaller whose faces lie in this one."""
        if bottom.n == 0:
            return []
        mine = set(self.vertices(bottom))
        return [b for b, (_, vs) in self.levels[bottom.n - 1].items() if mine.issuperset(vs)]


def covering_subfaces(region, bottom, catalog=None):
    if bottom.n < 1:
        raise DomainError("a vertex has no proper nonempty subfaces")
    catalog = catalog or FaceCatalog(region)
    if bottom not in catalog.levels[bottom.n]:
        raise DomainError("not a block-tiled bottom of this region")
    return catalog.covered_by(bottom)


@dataclass
class FacePoset:
    nodes: list  # bottoms, grouped by rank
    rank: list
    covers: list  # (lower id, upper id)

    @property
    def ranks(self):
        out = [0] * (max(self.rank) + 1)
        for k in self.rank:
            out[k] += 1
        return out

    def to_json(self):
        return {"ranks": self.ranks, "covers": [list(c) for c in self.covers]}


def top_bottom(region):
    """The full polytope: one single-box block for each inner point of P, sitting
    with its lower-right corner on that point."""
    P = region.lower
    cells = [(x - 1, y) for x, y in P.points[1:-1]]
    heights = list(P.heights)
    for x, y in cells:
        heights[x] = max(heights[x], y + 1)
    nu = LatticePath.from_heights(heights, region.r)
    blocks = tuple(sorted((Block(c, "") for c in cells), key=lambda b: b.first_label))
    return BlockTiledBottom(P, nu, blocks)


MAX_POSET_STEPS = 10


def face_poset(region, max_steps=MAX_POSET_STEPS):
    """Graded poset of faces, generated downward from the top face by covering subfaces."""
    if region.n > max_steps:
        raise ResourceError(f"face poset capped at m+r <= {max_steps}")
    catalog = FaceCatalog(region)
    tops = catalog.bottoms(region.n - 1)
    if tops != [top_bottom(region)]:
        raise LPMError("top face is not the single-box strip above P")
    ids = {}
    nodes, rank, covers = [], [], []
    frontier = tops
    for b in tops:
        ids[b] = 0
        nodes.append(b)
        rank.append(b.n)
    while frontier:
        nxt = []
        for b in frontier:
            for s in catalog.covered_by(b):
                if s not in ids:
                    ids[s] = len(nodes)
                    nodes.append(s)
                    rank.append(s.n)
                    nxt.append(s)
                covers.append((ids[s], ids[b]))
        frontier = nxt
    return FacePoset(nodes, rank, sorted(covers))


def edge_count_by_area(region):
    """Edges counted as the total area between each path L and L'."""
    P = region.lower
    return sum(area_between(l_prime(P, L), L) for L in region.paths())
