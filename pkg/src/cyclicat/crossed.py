"""Crossed simplicial groups, checked by enumeration.

A category is described by a :class:`CrossedCategoryOracle`: a hom-set
enumerator, composition, identities and an embedding of the simplex category.
Nothing else is assumed, so the same checker runs on the cyclic category, the
symmetric crossed simplicial group and the simplex category itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial
from typing import Any, Callable, Hashable

from . import cyclic, delta
from .delta import OrdinalMap
from .errors import AxiomFailure, DegreeMismatch, check_limit


@dataclass
class CrossedCategoryOracle:
    name: str
    hom: Callable[[int, int], list]
    compose: Callable[[Any, Any], Any]
    identity: Callable[[int], Any]
    embed: Callable[[OrdinalMap], Any]
    automorphisms: Callable[[int], list] | None = None

    def aut(self, n: int) -> list:
        if self.automorphisms is not None:
            return list(self.automorphisms(n))
        # generic fallback: invertible endomorphisms
        ends = self.hom(n, n)
        ident = self.identity(n)
        return [a for a in ends if any(self.compose(a, b) == ident and self.compose(b, a) == ident for b in ends)]


def lambda_oracle() -> CrossedCategoryOracle:
    return CrossedCategoryOracle(
        "lambda", cyclic.enumerate_hom, cyclic.compose_cyclic, cyclic.identity, cyclic.iota, cyclic.automorphisms
    )


def delta_oracle() -> CrossedCategoryOracle:
    return CrossedCategoryOracle(
        "delta", delta.enumerate_monotone, delta.compose_ordinal, delta.identity, lambda f: f, lambda n: [delta.identity(n)]
    )


# ---------------------------------------------------------------------------
# symmetric crossed simplicial group


@dataclass(frozen=True, order=True)
class SymMap:
    """A set map ``[src] -> [tgt]`` with a linear order on every fiber.

    ``fibers[j]`` lists the preimage of ``j`` in its chosen order.
    """

    src: int
    tgt: int
    fibers: tuple[tuple[int, ...], ...]

    @property
    def set_map(self) -> tuple[int, ...]:
        out = [0] * (self.src + 1)
        for j, fib in enumerate(self.fibers):
            for i in fib:
                out[i] = j
        return tuple(out)


def make_sym_map(n: int, m: int, fibers) -> SymMap:
    fibers = tuple(tuple(int(i) for i in fib) for fib in fibers)
    if len(fibers) != m + 1:
        raise ValueError(f"expected {m + 1} fibers")
    flat = sorted(i for fib in fibers for i in fib)
    if flat != list(range(n + 1)):
        raise ValueError("fibers must partition the source")
    return SymMap(n, m, fibers)


def compose_sym(g: SymMap, f: SymMap) -> SymMap:
    """``g o f``: along g's order of each fiber, concatenate f's ordered fibers."""
    if f.tgt != g.src:
        raise DegreeMismatch(f"cannot compose [{g.src}]->[{g.tgt}] after [{f.src}]->[{f.tgt}]")
    return SymMap(f.src, g.tgt, tuple(tuple(i for j in gfib for i in f.fibers[j]) for gfib in g.fibers))


def sym_identity(n: int) -> SymMap:
    return SymMap(n, n, tuple((i,) for i in range(n + 1)))


def sym_embed(f: OrdinalMap) -> SymMap:
    fibers = [[] for _ in range(f.tgt + 1)]
    for i, v in enumerate(f.images):
        fibers[v].append(i)
    return SymMap(f.src, f.tgt, tuple(tuple(fib) for fib in fibers))


def count_sym(n: int, m: int) -> int:
    # rising factorial (m+1)(m+2)...(m+n+1)
    return factorial(m + n + 1) // factorial(m)


def enumerate_sym(n: int, m: int, limit: int | None = None) -> list[SymMap]:
    check_limit(count_sym(n, m), limit, f"DeltaS([{n}],[{m}])")
    out = []
    for smap in product(range(m + 1), repeat=n + 1):
        fibers = [[i for i in range(n + 1) if smap[i] == j] for j in range(m + 1)]
        for orders in product(*(permutations(fib) for fib in fibers)):
            out.append(SymMap(n, m, tuple(orders)))
    out.sort()
    return out


def sym_automorphisms(n: int) -> list[SymMap]:
    return sorted(SymMap(n, n, tuple((p,) for p in perm)) for perm in permutations(range(n + 1)))


def sym_oracle() -> CrossedCategoryOracle:
    return CrossedCategoryOracle("delta-sym", enumerate_sym, compose_sym, sym_identity, sym_embed, sym_automorphisms)


# ---------------------------------------------------------------------------
# axiom checks


@dataclass
class AxiomReport:
    oracle: str
    max_degree: int
    checks: dict[str, bool] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "oracle": self.oracle,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "checks": dict(sorted(self.checks.items())),
            "counterexamples": self.counterexamples,
        }


def _show(x: Any) -> Any:
    return x.to_json() if hasattr(x, "to_json") else repr(x)


def verify_csg_axioms(oracle: CrossedCategoryOracle, N: int, law_degree: int = 2,
                      limit: int | None = None) -> AxiomReport:
    """Check unique (simplex part, automorphism) factorization for degrees <= N.

    Category laws (identities, associativity, functoriality of the embedding)
    are checked exhaustively up to ``min(N, law_degree)``.
    """
    report = AxiomReport(oracle.name, N)
    bad: list[dict] = report.counterexamples
    homs = {}
    for n in range(N + 1):
        for m in range(N + 1):
            homs[n, m] = oracle.hom(n, m)
            check_limit(len(homs[n, m]), limit, f"{oracle.name} hom")
    auts = {n: oracle.aut(n) for n in range(N + 1)}

    for n in range(N + 1):
        ident = oracle.identity(n)
        ok = all(
            any(oracle.compose(a, b) == ident and oracle.compose(b, a) == ident for b in auts[n]) for a in auts[n]
        )
        report.checks[f"aut_invertible[{n}]"] = ok
        report.checks[f"embed_objects[{n}]"] = oracle.embed(delta.identity(n)) == ident

    for (n, m), hom in homs.items():
        hits: dict[Hashable, list] = {phi: [] for phi in hom}
        stray = 0
        for psi in delta.iter_monotone(n, m):
            e = oracle.embed(psi)
            for g in auts[n]:
                res = oracle.compose(e, g)
                if res in hits:
                    hits[res].append((psi, g))
                else:
                    stray += 1
        ok = stray == 0
        for phi, pairs in hits.items():
            if len(pairs) != 1:
                ok = False
                if len(bad) < 20:
                    bad.append({
                        "axiom": "unique_factorization",
                        "morphism": _show(phi),
                        "factorizations": [[_show(p), _show(g)] for p, g in pairs[:4]],
                    })
        report.checks[f"factorization[{n},{m}]"] = ok

    L = min(N, law_degree)
    unit_ok = assoc_ok = func_ok = True
    for n, m in product(range(L + 1), repeat=2):
        for f in homs[n, m]:
            if oracle.compose(oracle.identity(m), f) != f or oracle.compose(f, oracle.identity(n)) != f:
                unit_ok = False
                if len(bad) < 20:
                    bad.append({"axiom": "unit", "morphism": _show(f)})
    for n, m, k, r in product(range(L + 1), repeat=4):
        for f in homs[n, m]:
            for g in homs[m, k]:
                gf = oracle.compose(g, f)
                for h in homs[k, r]:
                    if oracle.compose(h, gf) != oracle.compose(oracle.compose(h, g), f):
                        assoc_ok = False
                        if len(bad) < 20:
                            bad.append({"axiom": "associativity", "morphisms": [_show(h), _show(g), _show(f)]})
    for n, m, k in product(range(L + 1), repeat=3):
        for f in delta.iter_monotone(n, m):
            for g in delta.iter_monotone(m, k):
                if oracle.embed(delta.compose_ordinal(g, f)) != oracle.compose(oracle.embed(g), oracle.embed(f)):
                    func_ok = False
    report.checks["unit"] = unit_ok
    report.checks["associativity"] = assoc_ok
    report.checks["embedding_functorial"] = func_ok
    return report


def crossed_action(oracle: CrossedCategoryOracle, phi: OrdinalMap, g: Any,
                   auts: dict[int, list] | None = None) -> tuple[OrdinalMap, Any]:
    """Complete ``g o phi = psi o g'`` by search; returns ``(psi, g')``."""
    target = oracle.compose(g, oracle.embed(phi))
    candidates = auts[phi.src] if auts is not None else oracle.aut(phi.src)
    found = None
    for psi in delta.iter_monotone(phi.src, phi.tgt):
        e = oracle.embed(psi)
        for h in candidates:
            if oracle.compose(e, h) == target:
                if found is not None:
                    raise AxiomFailure(f"non-unique factorization of {_show(target)}")
                found = (psi, h)
    if found is None:
        raise AxiomFailure(f"no factorization of {_show(target)}")
    return found


def build_G_star(oracle: CrossedCategoryOracle, N: int, check: bool = True):
    """The simplicial set of automorphism groups, truncated at ``N``.

    Level ``n`` lists ``aut(n)`` in the oracle's order; faces and degeneracies
    act by completing squares against the canonical factorization.  Degrees up
    to ``N + 1`` are needed for the degeneracies out of level ``N``; with
    ``check`` the factorization axiom is verified there first.
    """
    from .presheaf import FinSimplicialSet

    if check:
        rep = verify_csg_axioms(oracle, N + 1, law_degree=1)
        if not rep.passed:
            raise AxiomFailure(f"{oracle.name} fails crossed simplicial group axioms up to degree {N + 1}")
    auts = {n: oracle.aut(n) for n in range(N + 2)}
    index = {n: {g: k for k, g in enumerate(auts[n])} for n in auts}
    d: list[list[tuple[int, ...]]] = [[] for _ in range(N + 1)]
    s: list[list[tuple[int, ...]]] = [[] for _ in range(N + 1)]
    for n in range(1, N + 1):
        for i in range(n + 1):
            fc = delta.face(n, i)
            d[n].append(tuple(index[n - 1][crossed_action(oracle, fc, g, auts)[1]] for g in auts[n]))
    for n in range(N):
        for i in range(n + 1):
            dg = delta.degeneracy(n, i)
            s[n].append(tuple(index[n + 1][crossed_action(oracle, dg, g, auts)[1]] for g in auts[n]))
    X = FinSimplicialSet([len(auts[n]) for n in range(N + 1)], d, s, labels=[list(auts[n]) for n in range(N + 1)])
    problems = X.validate()
    if problems:
        raise AxiomFailure("induced operators violate simplicial identities: " + problems[0])
    return X
