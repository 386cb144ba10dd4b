"""Cross-checks of every combinatorial description against the hull oracle."""

from __future__ import annotations

import logging

from .faces.bottoms import FaceCatalog, edge_count_by_area, face_poset
from .faces.operations import facet_operations
from .faces.strips import enumerate_face_subsets, face_of_subset
from .lattice import is_border_strip, iter_regions
from .matroid import bases_by_paths, bases_by_transversals, connected_components, polytope_dimension
from .oracle import affine_dimension, check_edge_directions, face_lattice, is_eulerian, vertices

log = logging.getLogger(__name__)


def _vertex_sets(L):
    out = {}
    for mask, d in zip(L.faces, L.dims):
        if d >= 0:
            vs = frozenset(tuple(j + 1 for j, x in enumerate(L.points[i]) if x)
                           for i in range(len(L.points)) if mask >> i & 1)
            out.setdefault(d, set()).add(vs)
    return out


def check_region(region, faces=True):
    """Names of the checks this region fails (empty when everything agrees)."""
    bad = []
    M = bases_by_paths(region)
    if M.bases != bases_by_transversals(region).bases:
        bad.append("bases")
    V = vertices(M)
    dim = affine_dimension(V)
    if not dim == polytope_dimension(region) == region.n - len(connected_components(M)):
        bad.append("dimension")
    if not region.is_connected or not faces:
        return bad
    L = face_lattice(V)
    f = L.f_vector
    if f[0] != len(M.bases):
        bad.append("f0")
    if not check_edge_directions(L):
        bad.append("edge directions")
    if not is_eulerian(L):
        bad.append("eulerian")
    if sum((-1) ** i * x for i, x in enumerate(f[:-1])) != 1 - (-1) ** dim:
        bad.append("euler relation")
    ops = facet_operations(region)
    facet_sets = {frozenset(b for b in M.bases if op.keeps(b)) for op in ops}
    if len(ops) != f[-2] or facet_sets != _vertex_sets(L)[dim - 1]:
        bad.append("facets")
    if is_border_strip(region):
        for t in range(region.n):
            subs = enumerate_face_subsets(region, t)
            if len(subs) != f[dim - t] or len({tuple(face_of_subset(M, T)) for T in subs}) != len(subs):
                bad.append(f"face subsets t={t}")
    catalog = FaceCatalog(region)
    want = _vertex_sets(L)
    for n in range(region.n):
        got = {frozenset(catalog.vertices(b)) for b in catalog.bottoms(n)}
        if got != want[n]:
            bad.append(f"bottoms n={n}")
    if edge_count_by_area(region) != f[1]:
        bad.append("area edges")
    if face_poset(region).ranks != list(f):
        bad.append("face poset")
    return bad


def verify_all(max_steps, faces=True):
    """Run check_region over every region of length 2..max_steps; returns (checked, failures)."""
    checked, failures = 0, []
    for n in range(2, max_steps + 1):
        for region in iter_regions(n):
            checked += 1
            bad = check_region(region, faces=faces)
            if bad:
                log.warning("%s %s: %s", region.lower, region.upper, ", ".join(bad))
                failures.append({"lower": region.lower.word, "upper": region.upper.word, "failed": bad})
        log.info("length %d done, %d regions so far", n, checked)
    return checked, failures
