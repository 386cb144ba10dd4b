"""cd-index of Eulerian face lattices and the rank-2 lattice path matroid identity."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DomainError, EulerianError
from .lattice import make_region
from .matroid import bases_by_paths
from .oracle import FaceLatticeGeom, face_lattice, flag_vector, vertices


class CdPolynomial(dict):
    """Noncommutative polynomial in c (degree 1) and d (degree 2): word -> integer coefficient."""

    def __init__(self, data=()):
        super().__init__()
        for w, c in dict(data).items():
            if c:
                self[w] = self.get(w, 0) + c
        for w in [w for w, c in self.items() if c == 0]:
            del self[w]

    @classmethod
    def one(cls):
        return cls({"": 1})

    @staticmethod
    def word_degree(word):
        return sum(1 if ch == "c" else 2 for ch in word)

    @property
    def degree(self):
        degs = {self.word_degree(w) for w in self}
        if len(degs) > 1:
            raise DomainError("inhomogeneous cd-polynomial")
        return degs.pop() if degs else 0

    def __add__(self, other):
        out = dict(self)
        for w, c in other.items():
            out[w] = out.get(w, 0) + c
        return CdPolynomial(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        return CdPolynomial({w: k * c for w, c in self.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out = {}
        for w1, c1 in self.items():
            for w2, c2 in other.items():
                out[w1 + w2] = out.get(w1 + w2, 0) + c1 * c2
        return CdPolynomial(out)

    __rmul__ = scale

    def to_json(self):
        return {w: self[w] for w in sorted(self)}

    def __repr__(self):
        if not self:
            return "0"
        terms = []
        for w in sorted(self):
            c = self[w]
            terms.append(f"{c}*{w or '1'}" if c != 1 else (w or "1"))
        return " + ".join(terms)


C = CdPolynomial({"c": 1})
D = CdPolynomial({"d": 1})


def cd_words(deg):
    if deg == 0:
        return [""]
    if deg < 0:
        return []
    return ["c" + w for w in cd_words(deg - 1)] + ["d" + w for w in cd_words(deg - 2)]


def ab_expand(word):
    """ab-polynomial of a cd-word with c = a + b, d = ab + ba."""
    out = {"": 1}
    for ch in word:
        parts = ("a", "b") if ch == "c" else ("ab", "ba")
        out = {w + p: c for w, c in out.items() for p in parts}
    return out


def ab_index(L):
    """Flag h-vector as an ab-polynomial: position i is b iff dimension i is in S."""
    f = flag_vector(L)
    n = L.dim
    out = {}
    for size in range(n + 1):
        for S in combinations(range(n), size):
            h = sum((-1) ** (len(S) - len(T)) * f[T]
                    for k in range(len(S) + 1) for T in combinations(S, k))
            if h:
                out["".join("b" if i in S else "a" for i in range(n))] = h
    return out


def ab_to_cd(ab, deg):
    """Solve for the cd-coefficients exactly; inconsistency means the poset is not Eulerian."""
    words = cd_words(deg)
    columns = [ab_expand(w) for w in words]
    rows = sorted(set(ab) | {u for col in columns for u in col})
    A = [[Fraction(col.get(u, 0)) for col in columns] + [Fraction(ab.get(u, 0))] for u in rows]
    ncol = len(words)
    piv_cols = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pv = A[r][c]
        A[r] = [x / pv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    if any(A[i][ncol] != 0 for i in range(r, len(A))):
        raise EulerianError("ab-index is not expressible in c and d")
    coeffs = {}
    for i, c in enumerate(piv_cols):
        v = A[i][ncol]
        if v.denominator != 1:
            raise EulerianError(f"non-integral cd coefficient {v}")
        coeffs[words[c]] = int(v)
    return CdPolynomial(coeffs)


def cd_index(L):
    return ab_to_cd(ab_index(L), L.dim)


def simplex_product_lattice(i, j):
    """Face lattice of Delta_i x Delta_j (simplices with i and j vertices), built combinatorially."""
    if i < 1 or j < 1:
        raise DomainError("simplex sizes must be at least 1")
    points = [tuple([int(a == x) for x in range(i)] + [int(b == y) for y in range(j)])
              for a in range(i) for b in range(j)]
    faces, dims = [0], [-1]
    for A in range(1, 1 << i):
        for B in range(1, 1 << j):
            mask = 0
            for a in range(i):
                if A >> a & 1:
                    for b in range(j):
                        if B >> b & 1:
                            mask |= 1 << (a * j + b)
            faces.append(mask)
            dims.append(bin(A).count("1") + bin(B).count("1") - 2)
    order = sorted(range(len(faces)), key=lambda k: (dims[k], faces[k]))
    return FaceLatticeGeom(points, [faces[k] for k in order], [dims[k] for k in order], i + j - 2)


def simplex_product_cd(i, j):
    return cd_index(simplex_product_lattice(i, j))


def region_cd(lower, upper):
    M = bases_by_paths(make_region(lower, upper))
    return cd_index(face_lattice(vertices(M)))


def rank2_region(alpha, beta, gamma):
    return ("E" * (alpha + beta) + "N" + "E" * gamma + "N",
            "N" + "E" * alpha + "N" + "E" * (beta + gamma))


def rank2_cd_lhs(alpha, beta, gamma):
    return region_cd(*rank2_region(alpha, beta, gamma))


def rank2_cd_rhs(alpha, beta, gamma):
    if alpha < 0 or gamma < 0 or beta < 1:
        raise DomainError("need alpha, gamma >= 0 and beta >= 1")
    m = alpha + beta + gamma
    total = CdPolynomial()
    for i in range(alpha + 1, alpha + beta + 1):
        total = total + region_cd("E" * i + "N" + "E" * (m - i) + "N",
                                  "N" + "E" * (i - 1) + "N" + "E" * (m - i + 1))
    corr = CdPolynomial()
    for i in range(alpha + 2, alpha + beta + 1):
        corr = corr + simplex_product_cd(i, m - i + 2)
    total = total - corr * C
    for i in range(alpha + 1):
        for j in range(gamma + 1):
            if (i, j) == (0, 0):
                continue
            inner = CdPolynomial()
            for k in range(2, beta - 1):
                inner = inner + simplex_product_cd(alpha - i + k, beta - j + gamma - k + 2)
            if inner:
                term = inner * D * simplex_product_cd(i + j, 1)
                total = total - term.scale(comb(alpha + 1, i) * comb(gamma + 1, j))
    return total
