"""Faces of border-strip polytopes as subsets of deletions, contractions and direct sums."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError
from ..lattice import LatticePath, is_border_strip, outside_corners, strip_path
from .operations import CONTRACTION, DELETION, FacetOperation


@dataclass(frozen=True)
class SegmentDecomposition:
    R: LatticePath
    positions: tuple  # direct sum positions s_1 < ... < s_d
    segments: tuple  # S_1 .. S_{d+1}, frozensets of FacetOperation
    sums: tuple  # the direct sum operations, aligned with positions

    @property
    def d(self):
        return len(self.positions)

    def segment(self, k):
        return self.segments[k - 1]

    def left(self, k):
        """S_k^L: S_k plus the (k-1)-th direct sum."""
        if k == 1:
            return self.segments[0]
        return self.segments[k - 1] | {self.sums[k - 2]}

    def right(self, k):
        """S_k^R: S_k plus the k-th direct sum."""
        if k == self.d + 1:
            return self.segments[k - 1]
        return self.segments[k - 1] | {self.sums[k - 1]}

    @property
    def last_trimmed(self):
        """S_{d+1} without the operation on the final element."""
        n = len(self.R)
        return frozenset(op for op in self.segments[-1] if op.i != n)

    @property
    def operations(self):
        out = set(self.sums)
        for s in self.segments:
            out |= s
        return sorted(out)


def _element_op(ch, i):
    return FacetOperation(DELETION if ch == "E" else CONTRACTION, i)


def segment_decomposition(R, region=None):
    """Cut R at every direct sum position.

    Direct sums are attached to their outside corner when ``region`` is
    given; otherwise the corner is read off R itself.
    """
    word = R.word if isinstance(R, LatticePath) else R
    R = LatticePath(word)
    n = len(word)
    positions = tuple(i for i in range(1, n) if word[i - 1] != word[i])
    if region is not None:
        by_index = {c.index: c.point for c in outside_corners(region)}
        sums = tuple(FacetOperation.direct_sum(*by_index[i]) for i in positions)
    else:
        sums = tuple(FacetOperation.direct_sum(*_corner_from_R(word, i)) for i in positions)
    cuts = (0,) + positions + (n,)
    segments = tuple(
        frozenset(_element_op(word[i - 1], i) for i in range(a + 1, b + 1))
        for a, b in zip(cuts, cuts[1:])
    )
    return SegmentDecomposition(R, positions, segments, sums)


def _corner_from_R(word, i):
    # R agrees with the strip's lower path on steps 2..n-1; the lower path starts with E
    lower = "E" + word[1:i]
    p = lower.count("E")
    q = i - p
    if word[i - 1] == "E":
        # E then N: the corner sits on the upper path, one step up and one step left
        return (p - 1, q + 1)
    return (p, q)


def check_conditions(T, dec, strict_c3=False):
    """(C1) no S_k^R inside T for k >= 2; (C2) a maximal run S_k^L, S_{k+1}, ..., S_j
    inside T has an even number of segments.

    A run that reaches through the trimmed last segment ends at the final
    element, which has no further neighbour to force, so its parity is free.
    ``strict_c3=True`` demands even parity there too; that variant undercounts
    faces and is kept only for comparison.
    """
    T = set(T)
    d = dec.d
    for k in range(2, d + 2):
        if dec.right(k) <= T:
            return False
    for k in range(1, d + 1):
        if not dec.left(k) <= T:
            continue
        j = k
        while j < d and dec.segment(j + 1) <= T:
            j += 1
        runs = j - k + 1
        if j == d and dec.last_trimmed <= T:
            if not strict_c3:
                continue
            runs += 1
        if runs % 2:
            return False
    return True


def face_subsets(dec, t, strict_c3=False):
    """Valid t-subsets for a decomposition, built segment by segment left to right."""
    ops = dec.operations
    if t > len(ops):
        return []
    seg_of = {}
    for k, seg in enumerate(dec.segments, 1):
        for op in seg:
            seg_of[op] = k
    for k, op in enumerate(dec.sums, 1):
        seg_of[op] = k  # a direct sum closes segment k
    out = []
    chosen = []

    def closes_right(k):
        return dec.right(k) <= set(chosen)

    def rec(idx):
        if len(chosen) == t:
            if check_conditions(chosen, dec, strict_c3):
                out.append(frozenset(chosen))
            return
        if len(ops) - idx < t - len(chosen):
            return
        op = ops[idx]
        chosen.append(op)
        k = seg_of[op]
        prune = op in dec.sums and k >= 2 and closes_right(k)
        if not prune:
            rec(idx + 1)
        chosen.pop()
        rec(idx + 1)

    rec(0)
    return sorted(out, key=lambda s: sorted(o.sort_key() for o in s))


def enumerate_face_subsets(region, t, strict_c3=False):
    if not is_border_strip(region):
        raise DomainError("face subsets are defined for border strips")
    if not 0 <= t <= region.n - 1:
        raise DomainError(f"t must lie in [0, {region.n - 1}]")
    return face_subsets(segment_decomposition(strip_path(region), region), t, strict_c3)


def face_of_subset(M, T):
    """Bases of the face cut out by the operations in T."""
    return [b for b in M.bases if all(op.keeps(b) for op in T)]
