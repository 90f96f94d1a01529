"""Command-line front end.

Exit status: 0 on success or a true verdict, 1 when a checked property fails
(the witness goes to stdout), 2 on invalid input (one line on stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import crossed, cyclic, delta, presheaf, reedy, segal
from .errors import CyclicatError

OK, FAILED, INVALID = 0, 1, 2


class InputError(CyclicatError):
    pass


def _emit(obj: Any, fmt: str = "json") -> None:
    if fmt == "tsv" and isinstance(obj, dict):
        for key, val in obj.items():
            print(f"{key}\t{json.dumps(val, sort_keys=True) if isinstance(val, (dict, list)) else val}")
        return
    if fmt == "tsv" and isinstance(obj, list):
        for row in obj:
            print("\t".join(str(v) for v in row) if isinstance(row, (list, tuple)) else row)
        return
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _load(text: str) -> Any:
    """Parse a JSON literal, or read it from a file path (``-`` for stdin)."""
    if text == "-":
        return json.load(sys.stdin)
    if os.path.exists(text):
        with open(text) as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not JSON and not a file: {text[:40]!r}") from exc


def _morphism(obj: dict):
    cat = obj.get("cat")
    if cat == "lambda":
        return cyclic.from_json(obj)
    if cat == "delta":
        if set(obj) != {"cat", "src", "tgt", "images"}:
            raise InputError("delta morphism needs exactly cat, src, tgt, images")
        return delta.make_ordinal_map(int(obj["src"]), int(obj["tgt"]), obj["images"])
    if cat == "nabla":
        return delta.make_endpoint_map(int(obj["src"]), int(obj["tgt"]), obj["images"])
    raise InputError(f"unknown category {cat!r}")


def _presheaf(path: str):
    return presheaf.from_json(_load(path))


# ---------------------------------------------------------------------------
# subcommands


def cmd_hom(args) -> int:
    n, m = args.src, args.tgt
    if n < 0 or m < 0:
        raise InputError("degrees must be non-negative")
    if args.cat == "lambda":
        count, lister = cyclic.count_hom(n, m), cyclic.enumerate_hom
    elif args.cat == "delta":
        count, lister = delta.count_monotone(n, m), delta.enumerate_monotone
    else:
        lister = delta.enumerate_endpoint
        count = len(delta.enumerate_endpoint(n, m))
    if args.list:
        items = lister(n, m)
        if args.format == "tsv":
            _emit([getattr(f, "window", getattr(f, "images", None)) for f in items], "tsv")
        else:
            _emit([f.to_json() for f in items])
    else:
        print(count)
    return OK


def cmd_compose(args) -> int:
    g, f = _morphism(_load(args.g)), _morphism(_load(args.f))
    if isinstance(g, cyclic.CyclicMap) or isinstance(f, cyclic.CyclicMap):
        g = cyclic.iota(g) if isinstance(g, delta.OrdinalMap) else g
        f = cyclic.iota(f) if isinstance(f, delta.OrdinalMap) else f
        _emit(cyclic.compose_cyclic(g, f).to_json())
    elif isinstance(g, delta.EndpointMap):
        _emit(delta.compose_endpoint(g, f).to_json())
    else:
        _emit(delta.compose_ordinal(g, f).to_json())
    return OK


def cmd_factor(args) -> int:
    phi = _morphism(_load(args.morphism))
    if isinstance(phi, cyclic.CyclicMap):
        out = cyclic.canonical_factor(phi).to_json()
        plus, minus = reedy.reedy_factor(phi)
        out["reedy"] = {"plus": plus.to_json(), "minus": minus.to_json(), "class": reedy.classify(phi).value}
        _emit(out)
    elif isinstance(phi, delta.OrdinalMap):
        _emit({"generators": [[k, n, i] for k, n, i in delta.decompose_generators(phi)]})
    else:
        raise InputError("factor takes a delta or lambda morphism")
    return OK


def cmd_dual(args) -> int:
    phi = _morphism(_load(args.morphism))
    if isinstance(phi, cyclic.CyclicMap):
        _emit(cyclic.dual(phi).to_json())
    elif isinstance(phi, delta.OrdinalMap):
        _emit(delta.interval_dual(phi).to_json())
    else:
        _emit(delta.interval_dual_inv(phi).to_json())
    return OK


def _emit_inclusion(inc, as_map: bool) -> int:
    _emit(inc.to_json(embed=True) if as_map else inc.source.to_json())
    return OK


def cmd_representable(args) -> int:
    if args.cat == "lambda":
        X = presheaf.representable_cyclic(args.n, args.trunc)
    else:
        X = presheaf.representable_simplicial(args.n, args.trunc)
    _emit(X.to_json())
    return OK


def cmd_boundary(args) -> int:
    return _emit_inclusion(presheaf.boundary_faces(args.n, args.trunc, args.flavor), args.map)


def cmd_horn(args) -> int:
    return _emit_inclusion(presheaf.cyclic_horn(args.n, args.k, args.trunc, args.flavor), args.map)


def cmd_spine(args) -> int:
    G, to_n = presheaf.spine(args.n, args.trunc)
    return _emit_inclusion(to_n, args.map)


def cmd_triangulate(args) -> int:
    tris = segal.parse_triangles(args.triangles)
    n = args.n if args.n is not None else max((max(t) for t in tris), default=0)
    T = segal.make_triangulation(n, tris)
    _, inc = presheaf.triangulation_object(T, args.flavor, args.trunc)
    return _emit_inclusion(inc, args.map)


def cmd_nerve(args) -> int:
    table = presheaf.cyclic_group_table(args.order)
    if args.cyclic:
        _emit(presheaf.cyclic_nerve(table, args.trunc).to_json())
    else:
        _emit(presheaf.nerve(table, args.trunc).to_json())
    return OK


def cmd_segal(args) -> int:
    X = _presheaf(args.input)
    if X.cyclic and args.routes:
        rep = segal.cyclic_segal_check(X, args.max_n)
    else:
        rep = segal.segal_report(X, args.max_n)
    _emit(rep.to_json())
    return OK if rep.ok else FAILED


def cmd_two_segal(args) -> int:
    X = _presheaf(args.input)
    rep = segal.two_segal_report(X, args.max_n)
    _emit(rep.to_json())
    return OK if rep.ok else FAILED


def _need_cyclic(X):
    if not X.cyclic:
        raise InputError("this command needs a cyclic set")
    return X


def cmd_latching(args) -> int:
    L = reedy.latching(_need_cyclic(_presheaf(args.input)), args.n)
    _emit({"latching": L.gset.to_json(), "comparison": list(L.comparison.table), "equivariant": L.comparison.equivariant})
    return OK if L.comparison.equivariant else FAILED


def cmd_matching(args) -> int:
    M = reedy.matching(_need_cyclic(_presheaf(args.input)), args.n)
    _emit({"matching": M.gset.to_json(), "comparison": list(M.comparison.table), "equivariant": M.comparison.equivariant})
    return OK if M.comparison.equivariant else FAILED


def cmd_rlp(args) -> int:
    from . import lifting

    i = presheaf.map_from_json(_load(args.i))
    p = presheaf.map_from_json(_load(args.p))
    v = lifting.has_rlp(p, i)
    _emit(v.to_json())
    return OK if v.holds else FAILED


def _suite(name: str, N: int) -> dict:
    checks: dict[str, Any] = {}
    if name == "simplicial":
        checks["identities"] = delta.check_simplicial_identities(N)
        checks["decompose_roundtrip"] = all(
            delta.recompose(delta.decompose_generators(f), f.src) == f
            for n in range(N + 1) for m in range(N + 1) for f in delta.iter_monotone(n, m))
        checks["counts"] = all(len(delta.enumerate_monotone(n, m)) == delta.count_monotone(n, m)
                               for n in range(N + 1) for m in range(N + 1))
        checks["interval_dual_roundtrip"] = all(
            delta.interval_dual_inv(delta.interval_dual(f)) == f
            for n in range(N + 1) for m in range(N + 1) for f in delta.iter_monotone(n, m))
    elif name == "cyclic":
        checks["identities"] = cyclic.check_cyclic_identities(N)
        homs = {(n, m): cyclic.enumerate_hom(n, m) for n in range(N + 1) for m in range(N + 1)}
        checks["counts"] = all(len(h) == cyclic.count_hom(n, m) for (n, m), h in homs.items())
        checks["canonical_roundtrip"] = all(cyclic.from_canonical(cyclic.canonical_factor(f)) == f
                                            for h in homs.values() for f in h)
        checks["dual_involutive"] = all(cyclic.dual(cyclic.dual(f)) == f for h in homs.values() for f in h)
    elif name == "crossed":
        checks["lambda"] = crossed.verify_csg_axioms(crossed.lambda_oracle(), N).to_json()
        checks["delta_sym"] = crossed.verify_csg_axioms(crossed.sym_oracle(), min(N, 3)).to_json()
    elif name == "reedy":
        checks["reedy"] = reedy.verify_generalized_reedy(N).to_json()
    else:
        raise InputError(f"unknown suite {name!r}")
    passed = all((v == [] if isinstance(v, list) else v.get("passed") if isinstance(v, dict) else v)
                 for v in checks.values())
    return {"suite": name, "max_degree": N, "passed": bool(passed), "checks": checks}


def cmd_verify(args) -> int:
    rep = _suite(args.suite, args.max_degree)
    _emit(rep, args.format)
    return OK if rep["passed"] else FAILED


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclicat", description="Exact computations in the simplex and cyclic categories.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv"], default="json")
    sub = p.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    s = sub.add_parser("hom", help="count or list morphisms")
    s.add_argument("--cat", choices=["delta", "lambda", "nabla"], required=True)
    s.add_argument("--src", type=int, required=True)
    s.add_argument("--tgt", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("compose", help="compose g after f")
    s.add_argument("g")
    s.add_argument("f")
    s.set_defaults(func=cmd_compose)

    for name, func, helptext in (("factor", cmd_factor, "canonical factorization"),
                                 ("dual", cmd_dual, "duality")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("morphism")
        s.set_defaults(func=func)

    def presheaf_opts(s, flavor=True):
        s.add_argument("--trunc", type=int, default=3)
        if flavor:
            s.add_argument("--flavor", choices=["cyclic", "simplicial"], default="cyclic")
        s.add_argument("--map", action="store_true", help="emit the inclusion map instead of the object")

    s = sub.add_parser("representable")
    s.add_argument("--cat", choices=["delta", "lambda"], default="lambda")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trunc", type=int, default=3)
    s.set_defaults(func=cmd_representable)

    s = sub.add_parser("boundary")
    s.add_argument("--n", type=int, required=True)
    presheaf_opts(s)
    s.set_defaults(func=cmd_boundary)

    s = sub.add_parser("horn")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    presheaf_opts(s)
    s.set_defaults(func=cmd_horn)

    s = sub.add_parser("spine")
    s.add_argument("--n", type=int, required=True)
    presheaf_opts(s, flavor=False)
    s.set_defaults(func=cmd_spine)

    s = sub.add_parser("triangulate")
    s.add_argument("--triangles", required=True, help='e.g. "0,1,2;0,2,3"')
    s.add_argument("--n", type=int)
    presheaf_opts(s)
    s.set_defaults(func=cmd_triangulate, flavor="simplicial")

    s = sub.add_parser("nerve", help="nerve of a cyclic group")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--cyclic", action="store_true", help="cyclic bar construction instead")
    s.add_argument("--trunc", type=int, default=3)
    s.set_defaults(func=cmd_nerve)

    s = sub.add_parser("segal-check")
    s.add_argument("--input", required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--routes", action="store_true", help="also count maps out of representables and spines")
    s.set_defaults(func=cmd_segal)

    s = sub.add_parser("two-segal-check")
    s.add_argument("--input", required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.set_defaults(func=cmd_two_segal)

    for name, func in (("latching", cmd_latching), ("matching", cmd_matching)):
        s = sub.add_parser(name)
        s.add_argument("--input", required=True)
        s.add_argument("--n", type=int, required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("rlp", help="does p lift against i?")
    s.add_argument("--i", required=True)
    s.add_argument("--p", required=True)
    s.set_defaults(func=cmd_rlp)

    s = sub.add_parser("verify")
    s.add_argument("--suite", choices=["simplicial", "cyclic", "crossed", "reedy"], required=True)
    s.add_argument("--max-degree", type=int, required=True)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CyclicatError as exc:
        print(f"error: {exc.kind}: {exc}", file=sys.stderr)
        return INVALID
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
