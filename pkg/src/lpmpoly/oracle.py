"""Exact polytope geometry for 0/1 point sets: hull facets and face lattices.

Everything is integer arithmetic. The polytope is first projected onto a set
of coordinates that is injective on its affine hull; facets are then found by
the double description method on the homogenized cone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd

from .errors import DomainError, ResourceError

MAX_VERTICES = 5000
MAX_FACES = 200000


def vertices(M):
    n = len(M.region.labels) if M.region is not None else max(M.ground)
    pts = set()
    for b in M.bases:
        v = [0] * n
        for x in b:
            v[x - 1] = 1
        pts.add(tuple(v))
    return sorted(pts)


def _reduce(row):
    g = 0
    for x in row:
        g = gcd(g, x)
    if g > 1:
        row = [x // g for x in row]
    return row


def _echelon(rows):
    """Integer row echelon form; returns (pivot columns, reduced rows)."""
    rows = [list(r) for r in rows if any(r)]
    pivots = []
    basis = []
    for r in rows:
        r = list(r)
        for pc, br in zip(pivots, basis):
            if r[pc]:
                a, b = br[pc], r[pc]
                r = [a * x - b * y for x, y in zip(r, br)]
        if any(r):
            r = _reduce(r)
            pc = next(i for i, x in enumerate(r) if x)
            pivots.append(pc)
            basis.append(r)
    return pivots, basis


def rank(rows):
    return len(_echelon(rows)[0])


def affine_dimension(V):
    if not V:
        raise DomainError("empty vertex set")
    v0 = V[0]
    return rank([[a - b for a, b in zip(v, v0)] for v in V[1:]])


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple
    offset: int

    def value(self, x):
        return sum(a * b for a, b in zip(self.normal, x))

    def contains(self, x):
        return self.value(x) == self.offset


def _affine_coords(V):
    v0 = V[0]
    pivots, _ = _echelon([[a - b for a, b in zip(v, v0)] for v in V[1:]])
    return sorted(pivots)


def _solve_rays(rows):
    """Columns of the inverse of a square nonsingular integer matrix, scaled to integers."""
    d = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(d)]
           for i, row in enumerate(rows)]
    for c in range(d):
        p = next(i for i in range(c, d) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(d):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    inv = [row[d:] for row in aug]
    rays = []
    for j in range(d):
        col = [inv[i][j] for i in range(d)]
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        rays.append(_reduce([int(x * den) for x in col]))
    return rays


def _double_description(A):
    """Extreme rays of the pointed cone {z : A z >= 0}; A has full column rank."""
    d = len(A[0])
    pivots, _ = _echelon([[A[j][i] for j in range(len(A))] for i in range(d)])
    # pivots are row indices of A that are linearly independent (columns of A^T)
    start = pivots
    rays = _solve_rays([A[i] for i in start])
    done = list(start)
    bit = {row: k for k, row in enumerate(done)}

    def zeros(ray):
        z = 0
        for row, k in bit.items():
            if sum(a * b for a, b in zip(A[row], ray)) == 0:
                z |= 1 << k
        return z

    entries = [(ray, zeros(ray)) for ray in rays]
    for row in range(len(A)):
        if row in bit:
            continue
        a = A[row]
        pos, neg, zero = [], [], []
        for ray, z in entries:
            s = sum(x * y for x, y in zip(a, ray))
            (pos if s > 0 else neg if s < 0 else zero).append((ray, z, s))
        k = len(bit)
        bit[row] = k
        new = [(ray, z) for ray, z, _ in pos] + [(ray, z | (1 << k)) for ray, z, _ in zero]
        if neg and pos:
            all_z = [z for _, z in entries]
            for rp, zp, sp in pos:
                for rn, zn, sn in neg:
                    common = zp & zn
                    if bin(common).count("1") < d - 2:
                        continue
                    if any(z & common == common and z != zp and z != zn for z in all_z):
                        continue
                    ray = _reduce([sp * y - sn * x for x, y in zip(rp, rn)])
                    new.append((ray, common | (1 << k)))
        entries = new
    return [ray for ray, _ in entries]


def facets_exact(V, cap=MAX_VERTICES):
    if len(V) > cap:
        raise ResourceError(f"{len(V)} vertices exceeds the cap of {cap}")
    dim = affine_dimension(V)
    if dim < 1:
        raise DomainError("facets need a polytope of dimension at least 1")
    coords = _affine_coords(V)
    n = len(V[0])
    # rows (1, -y): b - a.y >= 0
    A = [[1] + [-v[c] for c in coords] for v in V]
    out = []
    for ray in _double_description(A):
        b, a = ray[0], ray[1:]
        normal = [0] * n
        for c, x in zip(coords, a):
            normal[c] = x
        out.append(Hyperplane(tuple(normal), b))
    return sorted(out, key=lambda h: (h.normal, h.offset))


@dataclass
class FaceLatticeGeom:
    """Faces as vertex bitmasks; ``dims[k]`` is the dimension of ``faces[k]`` (-1 for the empty face)."""

    points: list
    faces: list
    dims: list
    dim: int
    facet_masks: list = field(default_factory=list)

    @cached_property
    def index(self):
        return {f: k for k, f in enumerate(self.faces)}

    def by_dim(self, d):
        return [f for f, fd in zip(self.faces, self.dims) if fd == d]

    @property
    def f_vector(self):
        """(f_0, ..., f_dim), the last entry being the polytope itself."""
        return tuple(len(self.by_dim(d)) for d in range(self.dim + 1))

    def vertex_set(self, face):
        return [self.points[i] for i in range(len(self.points)) if face >> i & 1]

    @cached_property
    def covers(self):
        """Pairs (lower, upper) of face indices with upper covering lower."""
        out = []
        layers = {}
        for k, d in enumerate(self.dims):
            layers.setdefault(d, []).append(k)
        for d in range(0, self.dim + 1):
            for hi in layers.get(d, []):
                fh = self.faces[hi]
                for lo in layers.get(d - 1, []):
                    if self.faces[lo] & ~fh == 0:
                        out.append((lo, hi))
        return out


def _mask_of(points, pred):
    m = 0
    for i, p in enumerate(points):
        if pred(p):
            m |= 1 << i
    return m


def face_lattice(V, facets=None, cap=MAX_FACES):
    V = list(V)
    full = (1 << len(V)) - 1
    dim = affine_dimension(V)
    if dim == 0:
        return FaceLatticeGeom(V, [0, full], [-1, 0], 0, [0])
    if facets is None:
        facets = facets_exact(V)
    fmasks = sorted({_mask_of(V, h.contains) for h in facets})
    seen = {full}
    stack = [full]
    while stack:
        f = stack.pop()
        for g in fmasks:
            h = f & g
            if h not in seen:
                seen.add(h)
                stack.append(h)
                if len(seen) > cap:
                    raise ResourceError(f"more than {cap} faces")
    faces = sorted(seen, key=lambda f: (bin(f).count("1"), f))
    dims = [-1 if f == 0 else affine_dimension([V[i] for i in range(len(V)) if f >> i & 1])
            for f in faces]
    return FaceLatticeGeom(V, faces, dims, dim, fmasks)


def hull_lattice(points):
    """Face lattice of conv(points) straight from a point list."""
    return face_lattice(sorted(set(map(tuple, points))))


def check_edge_directions(L, V=None):
    pts = L.points if V is None else list(V)
    for f in L.by_dim(1):
        idx = [i for i in range(len(pts)) if f >> i & 1]
        if len(idx) != 2:
            return False
        diff = [a - b for a, b in zip(pts[idx[0]], pts[idx[1]])]
        nz = sorted(x for x in diff if x)
        if nz != [-1, 1]:
            return False
    return True


def is_graded(L):
    return all(L.dims[hi] - L.dims[lo] == 1 for lo, hi in L.covers) and all(
        any(lo == k for lo, _ in L.covers) for k, d in enumerate(L.dims) if d < L.dim
    )


def is_eulerian(L):
    """Every interval of length two has exactly four elements."""
    faces, dims = L.faces, L.dims
    for lo, (fl, dl) in enumerate(zip(faces, dims)):
        for hi, (fh, dh) in enumerate(zip(faces, dims)):
            if dh == dl + 2 and fl & ~fh == 0:
                between = sum(1 for f, d in zip(faces, dims)
                              if d == dl + 1 and fl & ~f == 0 and f & ~fh == 0)
                if between != 2:
                    return False
    return True


def flag_vector(L):
    """Map from rank sets S (sorted tuples of face dimensions) to chain counts f_S."""
    layers = {}
    for f, d in zip(L.faces, L.dims):
        if d >= 0:
            layers.setdefault(d, []).append(f)
    for d in range(L.dim + 1):
        if d not in layers:
            raise DomainError(f"face lattice has no faces of dimension {d}")
    below = {}
    out = {(): 1}
    for size in range(1, L.dim + 1):
        for S in combinations(range(L.dim), size):
            counts = {f: 1 for f in layers[S[0]]}
            for a, b in zip(S, S[1:]):
                key = (a, b)
                if key not in below:
                    below[key] = {g: [f for f in layers[a] if f & ~g == 0] for g in layers[b]}
                counts = {g: sum(counts[f] for f in below[key][g]) for g in layers[b]}
            out[S] = sum(counts.values())
    return out
