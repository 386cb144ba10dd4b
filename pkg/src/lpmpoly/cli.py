"""Command line front end. JSON goes to stdout, logs to stderr."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .cdindex import cd_index, rank2_cd_lhs, rank2_cd_rhs, rank2_region
from .errors import DomainError, LPMError, ResourceError
from .faces.bottoms import bottoms_by_dimension, edge_count_by_area, enumerate_bottoms
from .faces.operations import facet_operations
from .faces.strips import enumerate_face_subsets
from .lattice import expand_word, is_border_strip, make_region
from .matroid import bases_by_paths, polytope_dimension
from .oracle import face_lattice, vertices
from .verify import verify_all

log = logging.getLogger("lpmpoly")

EXIT_INPUT, EXIT_RESOURCE, EXIT_VERIFY = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _region(args):
    if args.lower is None or args.upper is None:
        raise DomainError("--lower and --upper are required")
    return make_region(expand_word(args.lower), expand_word(args.upper))


def _oracle_f(region):
    return list(face_lattice(vertices(bases_by_paths(region))).f_vector)


def _combinatorial_f(region):
    if not region.is_connected:
        raise DomainError("combinatorial f-vector needs a connected region")
    if is_border_strip(region):
        n = region.n
        return [len(enumerate_face_subsets(region, n - 1 - d)) for d in range(n)]
    return [len(level) for level in bottoms_by_dimension(region)]


def cmd_bases(args):
    M = bases_by_paths(_region(args))
    return {"bases": M.to_json(), "count": len(M)}


def cmd_dim(args):
    region = _region(args)
    return {"m": region.m, "r": region.r, "k": region.k, "dim": polytope_dimension(region)}


def cmd_facets(args):
    ops = facet_operations(_region(args))
    return {"facets": [op.to_json() for op in ops], "count": len(ops)}


def cmd_faces(args):
    region = _region(args)
    if (args.t is None) == (args.n is None):
        raise DomainError("give exactly one of --t or --n")
    if args.t is not None:
        subs = enumerate_face_subsets(region, args.t)
        return {"t": args.t, "subsets": [[op.to_json() for op in sorted(T)] for T in subs],
                "count": len(subs)}
    bottoms = enumerate_bottoms(region, args.n)
    return {"n": args.n, "bottoms": [b.to_json() for b in bottoms], "count": len(bottoms)}


def cmd_fvector(args):
    region = _region(args)
    f = _oracle_f(region) if args.method == "oracle" else _combinatorial_f(region)
    return {"method": args.method, "f_vector": f}


def cmd_edges(args):
    region = _region(args)
    if args.method == "area":
        count = edge_count_by_area(region)
    elif args.method == "bottoms":
        count = len(enumerate_bottoms(region, 1))
    else:
        f = _oracle_f(region)
        count = f[1] if len(f) > 1 else 0
    return {"method": args.method, "edges": count}


def cmd_cdindex(args):
    if args.rank2 is not None:
        a, b, g = args.rank2
        lhs, rhs = rank2_cd_lhs(a, b, g), rank2_cd_rhs(a, b, g)
        lower, upper = rank2_region(a, b, g)
        return {"lower": lower, "upper": upper, "lhs": lhs.to_json(), "rhs": rhs.to_json(),
                "equal": lhs == rhs}
    region = _region(args)
    return {"cd_index": cd_index(face_lattice(vertices(bases_by_paths(region)))).to_json()}


def cmd_verify(args):
    checked, failures = verify_all(args.max_steps)
    return {"max_steps": args.max_steps, "regions": checked, "failures": failures}


def build_parser():
    p = _Parser(prog="lpmpoly", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def region_cmd(name, func, required=True):
        s = sub.add_parser(name)
        s.add_argument("--lower", required=required)
        s.add_argument("--upper", required=required)
        s.set_defaults(func=func)
        return s

    region_cmd("bases", cmd_bases)
    region_cmd("dim", cmd_dim)
    region_cmd("facets", cmd_facets)
    s = region_cmd("faces", cmd_faces)
    s.add_argument("--t", type=int)
    s.add_argument("--n", type=int)
    s = region_cmd("fvector", cmd_fvector)
    s.add_argument("--method", choices=["combinatorial", "oracle"], default="combinatorial")
    s = region_cmd("edges", cmd_edges)
    s.add_argument("--method", choices=["area", "bottoms", "oracle"], default="area")
    s = region_cmd("cdindex", cmd_cdindex, required=False)
    s.add_argument("--rank2", type=int, nargs=3, metavar=("A", "B", "G"))
    s = sub.add_parser("verify")
    s.add_argument("--max-steps", type=int, default=6)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    start = time.perf_counter()
    try:
        out = args.func(args)
    except ResourceError as e:
        log.error("%s", e)
        return EXIT_RESOURCE
    except (LPMError, ValueError) as e:
        log.error("%s", e)
        return EXIT_INPUT
    log.info("%s finished in %.3fs", args.command, time.perf_counter() - start)
    json.dump(out, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    if args.command == "verify" and out["failures"]:
        return EXIT_VERIFY
    if args.command == "cdindex" and args.rank2 is not None and not out["equal"]:
        return EXIT_VERIFY
    return 0


if __name__ == "__main__":
    sys.exit(main())
