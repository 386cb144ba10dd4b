"""Lattice paths over {E, N}, skew regions between two paths, border strips.

Plane coordinates are 0-based; step (element) labels are 1-based, so the
step that starts at (i, j) carries label i + j + 1, and so does the unit
box whose lower-left corner is (i, j).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
import re

from .errors import DomainError, OrderingError, ParseError, ShapeError


class Step(str, Enum):
    E = "E"
    N = "N"


@dataclass(frozen=True)
class LatticePath:
    word: str

    def __post_init__(self):
        for pos, ch in enumerate(self.word, 1):
            if ch not in "EN":
                raise ParseError(f"invalid step {ch!r} at position {pos}", pos)

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return self.word

    @property
    def steps(self):
        return tuple(Step(ch) for ch in self.word)

    @cached_property
    def endpoint(self):
        e = self.word.count("E")
        return (e, len(self.word) - e)

    @cached_property
    def north_counts(self):
        """N(W, i) for i = 0..n."""
        out = [0]
        for ch in self.word:
            out.append(out[-1] + (ch == "N"))
        return tuple(out)

    def north(self, i):
        return self.north_counts[i]

    @cached_property
    def points(self):
        return tuple((i - h, h) for i, h in enumerate(self.north_counts))

    @cached_property
    def heights(self):
        """Height of the east step in each column 0..m-1."""
        return tuple(h for ch, h in zip(self.word, self.north_counts) if ch == "E")

    @cached_property
    def north_positions(self):
        return tuple(i for i, ch in enumerate(self.word, 1) if ch == "N")

    @classmethod
    def from_heights(cls, heights, r):
        parts = []
        prev = 0
        for h in heights:
            if h < prev or h > r:
                raise ShapeError(f"heights {tuple(heights)} do not describe a path to height {r}")
            parts.append("N" * (h - prev) + "E")
            prev = h
        parts.append("N" * (r - prev))
        return cls("".join(parts))

    @classmethod
    def from_basis(cls, basis, n):
        s = set(basis)
        return cls("".join("N" if i in s else "E" for i in range(1, n + 1)))


def parse_path(word):
    if not word:
        raise ParseError("empty path word", 0)
    return LatticePath(word)


_TOKEN = re.compile(r"([EN])(?:\^(\d+))?")


def expand_word(text):
    """Expand exponent shorthand such as ``E^3N^2E`` into ``EEENNE``."""
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"invalid step {text[pos]!r} at position {pos + 1}", pos + 1)
        out.append(m.group(1) * int(m.group(2) or 1))
        pos = m.end()
    return parse_path("".join(out))


@dataclass(frozen=True)
class OutsideCorner:
    point: tuple
    side: str  # "P" for an NE corner of the lower path, "Q" for an EN corner of the upper path

    @property
    def index(self):
        return self.point[0] + self.point[1]


@dataclass(frozen=True)
class SkewRegion:
    lower: LatticePath
    upper: LatticePath

    def __post_init__(self):
        P, Q = self.lower, self.upper
        if len(P) != len(Q) or P.endpoint != Q.endpoint:
            raise ShapeError(f"paths {P} and {Q} do not share length and endpoint")
        for i, (a, b) in enumerate(zip(P.north_counts, Q.north_counts)):
            if a > b:
                raise OrderingError(f"lower path {P} goes above upper path {Q} after step {i}")

    @property
    def m(self):
        return self.lower.endpoint[0]

    @property
    def r(self):
        return self.lower.endpoint[1]

    @property
    def n(self):
        return len(self.lower)

    @property
    def labels(self):
        return tuple(range(1, self.n + 1))

    @cached_property
    def intersection_indices(self):
        P, Q = self.lower.north_counts, self.upper.north_counts
        return tuple(i for i in range(self.n + 1) if P[i] == Q[i])

    @cached_property
    def intersection_points(self):
        return tuple(self.lower.points[i] for i in self.intersection_indices)

    @property
    def k(self):
        return len(self.intersection_indices)

    @property
    def is_connected(self):
        return self.k == 2 and self.n >= 2

    @cached_property
    def boxes(self):
        """Unit boxes (lower-left corners) between the two paths, by column."""
        return frozenset(
            (c, y)
            for c, (lo, hi) in enumerate(zip(self.lower.heights, self.upper.heights))
            for y in range(lo, hi)
        )

    def contains_path(self, L):
        return len(L) == self.n and all(
            a <= h <= b
            for a, h, b in zip(self.lower.north_counts, L.north_counts, self.upper.north_counts)
        )

    def paths(self):
        """All lattice paths inside the region, in lexicographic word order (E < N)."""
        lo, hi, n = self.lower.north_counts, self.upper.north_counts, self.n
        word = []

        def walk(i, h):
            if i == n:
                yield LatticePath("".join(word))
                return
            for ch, nh in (("E", h), ("N", h + 1)):
                if lo[i + 1] <= nh <= hi[i + 1]:
                    word.append(ch)
                    yield from walk(i + 1, nh)
                    word.pop()

        yield from walk(0, 0)


def make_region(lower, upper):
    if isinstance(lower, str):
        lower = parse_path(lower)
    if isinstance(upper, str):
        upper = parse_path(upper)
    return SkewRegion(lower, upper)


def box_label(box):
    return box[0] + box[1] + 1


def has_square(boxes):
    return any(
        (x + 1, y) in boxes and (x, y + 1) in boxes and (x + 1, y + 1) in boxes
        for x, y in boxes
    )


def is_border_strip(region):
    return region.is_connected and bool(region.boxes) and not has_square(region.boxes)


def strip_path(region):
    if not is_border_strip(region):
        raise DomainError("R(P,Q) is defined only for border strips")
    n = region.n
    if n == 2:
        return LatticePath("NN")
    p = region.lower.word
    inner = p[1:-1]
    return LatticePath(inner[0] + inner + inner[-1])


def outside_corners(region):
    P, Q = region.lower, region.upper
    out = []
    for i in range(1, region.n):
        if P.word[i - 1] == "N" and P.word[i] == "E":
            out.append(OutsideCorner(P.points[i], "P"))
        if Q.word[i - 1] == "E" and Q.word[i] == "N":
            out.append(OutsideCorner(Q.points[i], "Q"))
    out.sort(key=lambda c: (c.index, c.point))
    return out


def l_prime(base, path):
    """L'(P, L): keep the contact points with P, replace each bubble by E^a N^b."""
    if len(base) != len(path) or base.endpoint != path.endpoint:
        raise DomainError("paths must share length and endpoint")
    P, L = base.north_counts, path.north_counts
    if any(a > b for a, b in zip(P, L)):
        raise DomainError(f"{path} is not weakly above {base}")
    out = []
    i, n = 0, len(base)
    while i < n:
        if P[i + 1] == L[i + 1] and P[i] == L[i]:
            out.append(path.word[i])
            i += 1
            continue
        j = i + 1
        while P[j] != L[j]:
            j += 1
        b = L[j] - L[i]
        out.append("E" * (j - i - b) + "N" * b)
        i = j
    return LatticePath("".join(out))


def area_between(lower, upper):
    if lower.endpoint != upper.endpoint:
        raise DomainError("paths must share endpoint")
    return sum(b - a for a, b in zip(lower.heights, upper.heights))


def iter_regions(n, connected=False):
    """Every region [P, Q] with paths of length n, lower word first then upper."""
    from itertools import combinations
    for r in range(n + 1):
        paths = [LatticePath.from_basis(b, n) for b in combinations(range(1, n + 1), r)]
        for P in paths:
            for Q in paths:
                if any(a > b for a, b in zip(P.north_counts, Q.north_counts)):
                    continue
                region = SkewRegion(P, Q)
                if connected and not region.is_connected:
                    continue
                yield region
