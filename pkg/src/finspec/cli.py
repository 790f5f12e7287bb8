"""Command-line interface.

Subcommands: validate, distance, morphism, decompose, example, compare.
All input and output is JSON; every report carries a top-level "pass" flag
and the exit status is 0 iff all requested checks pass.  Usage errors exit
with 2, failed checks with 1, I/O problems with 3.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

from . import category, geometry, metric, triple as triple_mod
from .algebra import state_from_json
from .errors import ToolkitError


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise _IOFailure(str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise _UsageFailure(f"malformed JSON in {path}: {exc}") from exc


def _load_triple(path: str):
    """Read a triple, unwrapping the {'triple': ...} envelope that the
    example subcommand emits."""
    doc = _load_json(path)
    if isinstance(doc, dict) and "triple" in doc and "algebra" not in doc:
        doc = doc["triple"]
    return triple_mod.triple_from_json(doc)


class _UsageFailure(Exception):
    pass


class _IOFailure(Exception):
    pass


def _emit(payload, out_path):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out_path:
        try:
            with open(out_path, "w") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise _IOFailure(str(exc)) from exc
    else:
        print(text)


def cmd_validate(args) -> int:
    t = _load_triple(args.triple)
    tol = args.tol if args.tol is not None else 1e-9
    report = triple_mod.validate_triple(t, tol=tol)
    payload = {"validation": report.to_json()}
    ok = report.passed
    if t.real_structure is not None:
        real = triple_mod.check_real_structure(t, tol=tol)
        payload["real"] = real.to_json()
        payload["ko_dimension"] = sorted(triple_mod.ko_dimension(real.signs))
        ok = ok and real.passed
    payload["pass"] = ok
    _emit(payload, args.out)
    return 0 if ok else 1


def cmd_distance(args) -> int:
    t = _load_triple(args.triple)
    if args.states is not None:
        i, j = args.states
        w1 = t.algebra.pure_state(i - 1)
        w2 = t.algebra.pure_state(j - 1)
        d = metric.connes_distance(t, w1, w2, seed=args.seed)
        payload = {"pass": True, "distance": d.to_json()}
        if args.complex_search and t.algebra.k <= 4:
            real_lb = metric.brute_force_distance(t, w1, w2, box=4.0, grid=21)
            cplx_lb = metric.brute_force_distance(
                t, w1, w2, box=4.0, grid=21, complex_phases=4
            )
            payload["crosscheck"] = {
                "real_grid_lower_bound": real_lb,
                "complex_grid_lower_bound": cplx_lb,
            }
        _emit(payload, args.out)
        return 0
    dm = metric.distance_matrix(t, seed=args.seed)
    _emit({"pass": True, **dm.to_json()}, args.out)
    return 0


def cmd_morphism(args) -> int:
    t1 = _load_triple(args.triple1)
    t2 = _load_triple(args.triple2)
    m = category.morphism_from_json(t1, t2, _load_json(args.morphism))
    tol = args.tol
    if isinstance(m, category.MetricMorphism):
        report = category.check_metric_morphism(
            t1, t2, m.hom, tol=tol if tol is not None else 1e-6, seed=args.seed
        )
        payload = report.to_json()
    else:
        report = category.check_sf_morphism(
            t1, t2, m, tol=tol if tol is not None else 1e-8
        )
        payload = report.to_json()
        if m.isometric and report.passed:
            contraction = category.check_pullback_contraction(
                t1, t2, m, seed=args.seed
            )
            payload["contraction"] = contraction.to_json()
            payload["pass"] = payload["pass"] and contraction.passed
    _emit(payload, args.out)
    return 0 if payload["pass"] else 1


def cmd_decompose(args) -> int:
    t = _load_triple(args.triple)
    components = triple_mod.decompose(t)
    prefix = args.out or "component"
    paths = []
    for idx, comp in enumerate(components, start=1):
        path = f"{prefix}_{idx}.json"
        try:
            with open(path, "w") as fh:
                json.dump(triple_mod.triple_to_json(comp), fh, indent=2)
        except OSError as exc:
            raise _IOFailure(str(exc)) from exc
        paths.append(path)
    print(json.dumps({
        "pass": True,
        "components": len(components),
        "character_counts": [c.algebra.k for c in components],
        "files": paths,
    }, indent=2))
    return 0


_EXAMPLE_RE = re.compile(r"^(circle|interval)_(\d+)$")


def build_example(name: str, length: float = 1.0, radius: float = 1.0):
    """The built-in gallery: two_point, circle_N, interval_N, disjoint_circles."""
    if name == "two_point":
        return geometry.two_point_geometry(length)
    m = _EXAMPLE_RE.match(name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "circle":
            return geometry.lattice_circle(n, radius)
        return geometry.lattice_interval(n, length)
    if name == "disjoint_circles":
        g1, _ = geometry.lattice_circle(3, radius)
        g2, _ = geometry.lattice_circle(3, radius)
        g = geometry.disjoint_union(g1, g2)
        even = geometry.graph_triple(g)
        odd = triple_mod.SpectralTriple(even.algebra, even.dirac, None,
                                        even.real_structure, "odd")
        return g, odd
    raise _UsageFailure(f"unknown example '{name}'")


def cmd_example(args) -> int:
    g, t = build_example(args.name, length=args.length, radius=args.radius)
    _emit({
        "pass": True,
        "geometry": geometry.geometry_to_json(g),
        "triple": triple_mod.triple_to_json(t),
    }, args.out)
    return 0


def cmd_compare(args) -> int:
    g = geometry.geometry_from_json(_load_json(args.geometry))
    t = geometry.graph_triple(g)
    report = geometry.compare_metrics(g, t, seed=args.seed)
    _emit(report.to_json(), args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finspec",
        description="finite spectral-triple toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--out", default=None)

    p = sub.add_parser("validate", help="axiom checks, real structure, KO signs")
    p.add_argument("triple")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("distance", help="distance matrix or a single pair")
    p.add_argument("triple")
    p.add_argument("--states", nargs=2, type=int, metavar=("I", "J"))
    p.add_argument("--complex-search", action="store_true")
    common(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("morphism", help="check a morphism between two triples")
    p.add_argument("triple1")
    p.add_argument("triple2")
    p.add_argument("morphism")
    common(p)
    p.set_defaults(func=cmd_morphism)

    p = sub.add_parser("decompose", help="split into irreducible components")
    p.add_argument("triple")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("example", help="emit a built-in geometry and triple")
    p.add_argument("name")
    p.add_argument("--length", type=float, default=1.0)
    p.add_argument("--radius", type=float, default=1.0)
    common(p)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("compare", help="spectral vs geodesic distance report")
    p.add_argument("geometry")
    common(p)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except _UsageFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _IOFailure as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3
    except (ToolkitError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
